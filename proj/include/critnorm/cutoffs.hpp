#pragma once

#include <cmath>

namespace critnorm {

/// Radial Littlewood-Paley profiles.  chi is a smooth even bump equal to 1
/// on |tau| <= 3/4 and supported in |tau| <= 4/3; phi(tau) = chi(tau/2) -
/// chi(tau) is supported in 3/4 <= |tau| <= 8/3.  Built from the C-infinity
/// ramp r(x) = h(x)/(h(x)+h(1-x)), h(x) = exp(-1/x) for x > 0, so the
/// dyadic partition identities hold by telescoping:
///   sum_{j in Z} phi(2^-j tau) = 1 for tau > 0,
///   chi(tau) + sum_{j >= 0} phi(2^-j tau) = 1.
struct CutoffPair {
    static double bump(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }
    static double ramp(double x) {
        const double a = bump(x), b = bump(1.0 - x);
        return a / (a + b);
    }

    double chi(double tau) const {
        const double t = std::abs(tau);
        if (t <= 0.75) return 1.0;
        if (t >= 4.0 / 3.0) return 0.0;
        const double v = 1.0 - ramp((t - 0.75) / (4.0 / 3.0 - 0.75));
        return std::min(1.0, std::max(0.0, v));
    }

    double phi(double tau) const { return chi(tau / 2.0) - chi(tau); }

    /// Truncated partition sum chi(tau) + sum_{0 <= j <= jmax} phi(2^-j tau).
    double partition_low(double tau, int jmax) const {
        double s = chi(tau);
        for (int j = 0; j <= jmax; ++j) s += phi(std::ldexp(tau, -j));
        return s;
    }
};

CutoffPair make_cutoffs();

} // namespace critnorm
