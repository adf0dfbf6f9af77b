#include "critnorm/cutoffs.hpp"

#include <stdexcept>

namespace critnorm {

CutoffPair make_cutoffs() {
    CutoffPair c;
    // Spot-check the construction invariants once per call; they hold by
    // construction but a broken build of chi would silently corrupt every
    // norm downstream.
    for (double tau : {1e-3, 0.5, 0.9, 1.0, 1.7, 2.5, 5.0, 37.0, 900.0}) {
        double s = c.phi(tau);
        for (int j = 1; j < 64; ++j) s += c.phi(std::ldexp(tau, -j)) + c.phi(std::ldexp(tau, j));
        if (std::abs(s - 1.0) > 1e-12)
            throw std::logic_error("cutoffs: dyadic partition of unity failed");
        if (std::abs(c.partition_low(tau, 64) - 1.0) > 1e-12)
            throw std::logic_error("cutoffs: low-frequency partition failed");
    }
    return c;
}

} // namespace critnorm
