#include "critnorm/random_fields.hpp"

namespace critnorm {

namespace {

/// Integer mode of spectral index i.
int mode_of(const Grid& g, int axis, int i) { return (i <= g.n(axis) / 2) ? i : i - g.n(axis); }

double u01_from_bits(std::uint64_t z) { return (double(z >> 11) + 1.0) * 0x1p-53; }

/// Gaussian coefficient attached to an integer mode.  Counter-based, so a
/// field regenerated on a finer grid carries the identical coefficients on
/// the shared modes; Hermitian by construction (conjugate pair shares one
/// draw through the canonical representative).
complexd mode_gaussian(std::uint64_t seed, int m1, int m2, int m3) {
    const bool flip = (m1 < 0) || (m1 == 0 && (m2 < 0 || (m2 == 0 && m3 < 0)));
    const int c1 = flip ? -m1 : m1, c2 = flip ? -m2 : m2, c3 = flip ? -m3 : m3;
    const std::uint64_t key = (std::uint64_t(c1 + 1024) << 40) |
                              (std::uint64_t(c2 + 1024) << 20) | std::uint64_t(c3 + 1024);
    const double u1 = u01_from_bits(GaussianRng::mix(seed, 0x6d0de5u, key));
    const double u2 = u01_from_bits(GaussianRng::mix(seed, 0x9a71e3u, key));
    const double r = std::sqrt(-2.0 * std::log(u1));
    const complexd z(r * std::cos(2.0 * M_PI * u2), r * std::sin(2.0 * M_PI * u2));
    return flip ? std::conj(z) : z;
}

} // namespace

SpectralField random_scalar(GridPtr grid, std::uint64_t seed, double band, double slope,
                            bool exclude_axis_planes) {
    const Grid& g = *grid;
    SpectralField f(grid);
    for (int i1 = 0; i1 < g.n(0); ++i1)
        for (int i2 = 0; i2 < g.n(1); ++i2)
            for (int i3 = 0; i3 < g.n(2); ++i3) {
                const int m1 = mode_of(g, 0, i1), m2 = mode_of(g, 1, i2), m3 = mode_of(g, 2, i3);
                const double rr = std::sqrt(double(m1) * m1 + double(m2) * m2 + double(m3) * m3);
                if (rr == 0.0 || rr > band) continue;
                if (exclude_axis_planes && (m3 == 0 || (m1 == 0 && m2 == 0))) continue;
                const double amp = std::pow(rr, -slope);
                f.coeffs()[g.index(i1, i2, i3)] = amp * mode_gaussian(seed, m1, m2, m3);
            }
    f.symmetrize();
    return f;
}

SpectralField random_anisotropic(GridPtr grid, std::uint64_t seed, BandSpec h, BandSpec v,
                                 double slope) {
    const Grid& g = *grid;
    SpectralField f(grid);
    for (int i1 = 0; i1 < g.n(0); ++i1)
        for (int i2 = 0; i2 < g.n(1); ++i2)
            for (int i3 = 0; i3 < g.n(2); ++i3) {
                const int m1 = mode_of(g, 0, i1), m2 = mode_of(g, 1, i2), m3 = mode_of(g, 2, i3);
                const double rh = std::sqrt(double(m1) * m1 + double(m2) * m2);
                const double rv = std::abs(double(m3));
                const double rr = std::sqrt(rh * rh + rv * rv);
                if (rr == 0.0) continue;
                if (rh < h.r_min || rh > h.r_max) continue;
                if (rv < v.r_min || rv > v.r_max) continue;
                const double amp = slope == 0.0 ? 1.0 : std::pow(rr, -slope);
                f.coeffs()[g.index(i1, i2, i3)] = amp * mode_gaussian(seed, m1, m2, m3);
            }
    f.symmetrize();
    return f;
}

SpectralField single_mode(GridPtr grid, int m1, int m2, int m3, complexd amplitude) {
    const Grid& g = *grid;
    auto wrap = [&](int axis, int m) { return (m % g.n(axis) + g.n(axis)) % g.n(axis); };
    SpectralField f(grid);
    f.coeffs()[g.index(wrap(0, m1), wrap(1, m2), wrap(2, m3))] = amplitude;
    f.coeffs()[g.index(wrap(0, -m1), wrap(1, -m2), wrap(2, -m3))] = std::conj(amplitude);
    return f;
}

VelocityState random_solenoidal(GridPtr grid, std::uint64_t seed, double band, double slope,
                                bool zero_horizontal_mean, double amplitude) {
    std::array<SpectralField, 3> w{
        random_scalar(grid, GaussianRng::mix(seed, 11, 0), band, slope),
        random_scalar(grid, GaussianRng::mix(seed, 11, 1), band, slope),
        random_scalar(grid, GaussianRng::mix(seed, 11, 2), band, slope)};
    VelocityState v = leray_project(w);
    if (zero_horizontal_mean) {
        const Grid& g = *grid;
        for (int i3 = 0; i3 < g.n(2); ++i3) {
            const std::int64_t i = g.index(0, 0, i3);
            v.v[0].coeffs()[i] = 0.0;
            v.v[1].coeffs()[i] = 0.0;
            v.v[2].coeffs()[i] = 0.0;
        }
    }
    for (int a = 0; a < 3; ++a) v.v[a].coeffs() *= amplitude;
    return v;
}

VelocityState taylor_green(GridPtr grid, double amplitude) {
    // v = A (sin x1 cos x2 cos x3, -cos x1 sin x2 cos x3, 0); built from
    // collocation values, exact for these modes.
    const Grid& g = *grid;
    PhysicalField p1(grid), p2(grid);
    for (int i1 = 0; i1 < g.n(0); ++i1)
        for (int i2 = 0; i2 < g.n(1); ++i2)
            for (int i3 = 0; i3 < g.n(2); ++i3) {
                const auto x = g.x(i1, i2, i3);
                const std::int64_t i = g.index(i1, i2, i3);
                p1.values()[i] = amplitude * std::sin(x[0]) * std::cos(x[1]) * std::cos(x[2]);
                p2.values()[i] = -amplitude * std::cos(x[0]) * std::sin(x[1]) * std::cos(x[2]);
            }
    return VelocityState({to_spectral(p1), to_spectral(p2), SpectralField(grid)}, 0.0);
}

VelocityState perturbed_taylor_green(GridPtr grid, std::uint64_t seed, double amplitude,
                                     double epsilon, double band, double slope) {
    VelocityState tg = taylor_green(grid, amplitude);
    VelocityState pert = random_solenoidal(grid, seed, band, slope, false, epsilon);
    std::array<SpectralField, 3> sum{tg.v[0] + pert.v[0], tg.v[1] + pert.v[1],
                                     tg.v[2] + pert.v[2]};
    return leray_project(sum, 0.0);
}

} // namespace critnorm
