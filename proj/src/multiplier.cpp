#include "critnorm/multiplier.hpp"

#include <cmath>

namespace critnorm {

complexd MultiplierSpec::eval(const Grid& g, int i1, int i2, int i3) const {
    complexd v(1.0, 0.0);
    for (const auto& f : factors_) {
        switch (f.kind) {
            case MultiplierFactor::Kind::AbsK: {
                const double k2 = g.k_sq(i1, i2, i3);
                if (k2 == 0.0) return {0.0, 0.0}; // homogeneous convention
                v *= std::pow(k2, 0.5 * f.s);
                break;
            }
            case MultiplierFactor::Kind::AbsKh: {
                const double kh2 = g.kh_sq(i1, i2);
                if (kh2 == 0.0) return {0.0, 0.0};
                v *= std::pow(kh2, 0.5 * f.s);
                break;
            }
            case MultiplierFactor::Kind::AbsK3: {
                const double k3 = std::abs(g.k(2, i3));
                if (k3 == 0.0) return {0.0, 0.0};
                v *= std::pow(k3, f.s);
                break;
            }
            case MultiplierFactor::Kind::Partial: {
                const int idx[3] = {i1, i2, i3};
                v *= complexd(0.0, g.k_deriv(f.axis, idx[f.axis]));
                break;
            }
            case MultiplierFactor::Kind::InvLap: {
                const double k2 = g.k_sq(i1, i2, i3);
                if (k2 == 0.0) return {0.0, 0.0};
                v *= -1.0 / k2;
                break;
            }
            case MultiplierFactor::Kind::InvLapH: {
                const double kh2 = g.kh_sq(i1, i2);
                if (kh2 == 0.0) return {0.0, 0.0};
                v *= -1.0 / kh2;
                break;
            }
            case MultiplierFactor::Kind::D33InvLap: {
                const double k2 = g.k_sq(i1, i2, i3);
                if (k2 == 0.0) return {0.0, 0.0};
                const double k3 = g.k(2, i3);
                v *= k3 * k3 / k2;
                break;
            }
            case MultiplierFactor::Kind::HeatKernel: {
                v *= std::exp(-f.s * g.k_sq(i1, i2, i3));
                break;
            }
        }
    }
    return v;
}

SpectralField apply_multiplier(const SpectralField& f, const MultiplierSpec& m) {
    const Grid& g = f.grid();
    SpectralField out(f.grid_ptr());
    for (int i1 = 0; i1 < g.n(0); ++i1)
        for (int i2 = 0; i2 < g.n(1); ++i2)
            for (int i3 = 0; i3 < g.n(2); ++i3) {
                const std::int64_t i = g.index(i1, i2, i3);
                out.coeffs()[i] = f.coeffs()[i] * m.eval(g, i1, i2, i3);
            }
    return out;
}

SpectralField derivative(const SpectralField& f, int axis) {
    const Grid& g = f.grid();
    SpectralField out(f.grid_ptr());
    for (int i1 = 0; i1 < g.n(0); ++i1)
        for (int i2 = 0; i2 < g.n(1); ++i2)
            for (int i3 = 0; i3 < g.n(2); ++i3) {
                const int idx[3] = {i1, i2, i3};
                const std::int64_t i = g.index(i1, i2, i3);
                out.coeffs()[i] = f.coeffs()[i] * complexd(0.0, g.k_deriv(axis, idx[axis]));
            }
    return out;
}

SpectralField laplacian(const SpectralField& f) {
    const Grid& g = f.grid();
    SpectralField out(f.grid_ptr());
    for (int i1 = 0; i1 < g.n(0); ++i1)
        for (int i2 = 0; i2 < g.n(1); ++i2)
            for (int i3 = 0; i3 < g.n(2); ++i3) {
                const std::int64_t i = g.index(i1, i2, i3);
                out.coeffs()[i] = -g.k_sq(i1, i2, i3) * f.coeffs()[i];
            }
    return out;
}

} // namespace critnorm
