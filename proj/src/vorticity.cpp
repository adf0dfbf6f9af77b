#include "critnorm/vorticity.hpp"

namespace critnorm {

std::array<SpectralField, 3> curl(const std::array<SpectralField, 3>& w) {
    return {derivative(w[2], 1) - derivative(w[1], 2),
            derivative(w[0], 2) - derivative(w[2], 0),
            derivative(w[1], 0) - derivative(w[0], 1)};
}

VorticityState compute_vorticity(const VelocityState& v) {
    VorticityState out;
    out.Omega = curl(v.v);
    out.omega_h = out.Omega[2];
    out.d3v3 = derivative(v.v[2], 2);
    out.time = v.time;
    return out;
}

HorizontalSplit horizontal_split(const VelocityState& v) {
    const Grid& g = v.grid();
    const GridPtr grid = v.grid_ptr();
    SpectralField omega = derivative(v.v[1], 0) - derivative(v.v[0], 1);
    SpectralField d3v3 = derivative(v.v[2], 2);
    SpectralField psi = apply_multiplier(omega, MultiplierSpec::inv_laplacian_h());
    SpectralField phi = apply_multiplier(d3v3, MultiplierSpec::inv_laplacian_h());

    HorizontalSplit out{{SpectralField(grid), SpectralField(grid)},
                        {SpectralField(grid), SpectralField(grid)},
                        {SpectralField(grid), SpectralField(grid)}};
    // grad_h^perp = (-d2, d1)
    out.v_curl[0] = -derivative(psi, 1);
    out.v_curl[1] = derivative(psi, 0);
    out.v_div[0] = -derivative(phi, 0);
    out.v_div[1] = -derivative(phi, 1);
    for (int i1 = 0; i1 < g.n(0); ++i1)
        for (int i2 = 0; i2 < g.n(1); ++i2) {
            if (g.kh_sq(i1, i2) != 0.0) continue;
            for (int i3 = 0; i3 < g.n(2); ++i3) {
                const std::int64_t i = g.index(i1, i2, i3);
                out.shear_residual[0].coeffs()[i] = v.v[0].coeffs()[i];
                out.shear_residual[1].coeffs()[i] = v.v[1].coeffs()[i];
            }
        }
    return out;
}

VelocityState velocity_from_vorticity(const std::array<SpectralField, 3>& Omega, double time,
                                      double tol) {
    require_same_grid(Omega[0].grid(), Omega[1].grid(), "velocity_from_vorticity");
    require_same_grid(Omega[0].grid(), Omega[2].grid(), "velocity_from_vorticity");
    const Grid& g = Omega[0].grid();

    double div_max = 0.0, scale = 0.0;
    for (int i1 = 0; i1 < g.n(0); ++i1)
        for (int i2 = 0; i2 < g.n(1); ++i2)
            for (int i3 = 0; i3 < g.n(2); ++i3) {
                const std::int64_t i = g.index(i1, i2, i3);
                const complexd d = g.k_deriv(0, i1) * Omega[0].coeffs()[i] +
                                   g.k_deriv(1, i2) * Omega[1].coeffs()[i] +
                                   g.k_deriv(2, i3) * Omega[2].coeffs()[i];
                div_max = std::max(div_max, std::abs(d));
                const double kk = std::sqrt(g.k_sq(i1, i2, i3));
                scale = std::max({scale, kk * std::abs(Omega[0].coeffs()[i]),
                                  kk * std::abs(Omega[1].coeffs()[i]),
                                  kk * std::abs(Omega[2].coeffs()[i])});
            }
    if (div_max > tol * (scale > 0.0 ? scale : 1.0))
        throw ValidationError("velocity_from_vorticity: input vorticity is not solenoidal");

    VelocityState v(Omega[0].grid_ptr(), time);
    for (int i1 = 0; i1 < g.n(0); ++i1)
        for (int i2 = 0; i2 < g.n(1); ++i2)
            for (int i3 = 0; i3 < g.n(2); ++i3) {
                const std::int64_t i = g.index(i1, i2, i3);
                const double k[3] = {g.k_deriv(0, i1), g.k_deriv(1, i2), g.k_deriv(2, i3)};
                const double k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
                if (k2 == 0.0) continue;
                const complexd w[3] = {Omega[0].coeffs()[i], Omega[1].coeffs()[i],
                                       Omega[2].coeffs()[i]};
                const complexd iu(0.0, 1.0);
                v.v[0].coeffs()[i] = iu * (k[1] * w[2] - k[2] * w[1]) / k2;
                v.v[1].coeffs()[i] = iu * (k[2] * w[0] - k[0] * w[2]) / k2;
                v.v[2].coeffs()[i] = iu * (k[0] * w[1] - k[1] * w[0]) / k2;
            }
    return v;
}

} // namespace critnorm
