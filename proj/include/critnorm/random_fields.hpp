#pragma once

#include <cstdint>
#include <random>

#include "critnorm/velocity.hpp"

namespace critnorm {

/// Deterministic Gaussian stream: mt19937_64 (fully specified by the
/// standard) plus an explicit Box-Muller, so identical seeds are
/// bit-identical across standard libraries.
class GaussianRng {
  public:
    explicit GaussianRng(std::uint64_t seed) : eng_(seed) {}

    double uniform() {
        // in (0,1]; avoids log(0) in Box-Muller
        return (double(eng_() >> 11) + 1.0) * (1.0 / 9007199254740992.0);
    }
    double gaussian() {
        if (have_) {
            have_ = false;
            return spare_;
        }
        const double u1 = uniform(), u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * M_PI * u2);
        have_ = true;
        return r * std::cos(2.0 * M_PI * u2);
    }

    /// Stable per-sample substream: mixes (seed, tag, index) with splitmix64.
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
        std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (tag + 1) + 0xBF58476D1CE4E5B9ull * (index + 1);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

  private:
    std::mt19937_64 eng_;
    bool have_ = false;
    double spare_ = 0.0;
};

struct BandSpec {
    double r_min = 0.0; // inclusive lower bound on the localized radius
    double r_max = 0.0; // inclusive upper bound
};

/// Mean-zero random real scalar field with Gaussian coefficients of
/// amplitude |k|^{-slope} restricted to 0 < |k| <= band (in integer-mode
/// units times 2*pi/L); Hermitian-symmetrized.  When exclude_axis_planes is
/// set, modes with k_h = 0 or k3 = 0 are skipped (needed by the anisotropic
/// Sobolev families, which do not see those planes).
SpectralField random_scalar(GridPtr grid, std::uint64_t seed, double band, double slope = 1.0,
                            bool exclude_axis_planes = false);

/// Random scalar supported in a horizontal and/or vertical band:
/// h.r_min <= |k_h| <= h.r_max and v.r_min <= |k3| <= v.r_max
/// (a zero-width spec {0,inf} leaves that direction unconstrained).
SpectralField random_anisotropic(GridPtr grid, std::uint64_t seed, BandSpec h, BandSpec v,
                                 double slope = 0.0);

/// Single Fourier mode exp(i k.x) + c.c. with integer mode index m.
SpectralField single_mode(GridPtr grid, int m1, int m2, int m3, complexd amplitude = {1.0, 0.0});

/// Random divergence-free, mean-zero vector field: three random scalars,
/// Leray-projected.  zero_horizontal_mean additionally removes the k_h = 0
/// modes of the horizontal components (the shear residual).
VelocityState random_solenoidal(GridPtr grid, std::uint64_t seed, double band, double slope = 1.0,
                                bool zero_horizontal_mean = false, double amplitude = 1.0);

/// Initial-data library for simulations.
VelocityState taylor_green(GridPtr grid, double amplitude = 1.0);
VelocityState perturbed_taylor_green(GridPtr grid, std::uint64_t seed, double amplitude,
                                     double epsilon, double band, double slope = 2.0);

} // namespace critnorm
