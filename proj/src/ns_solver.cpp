#include "critnorm/ns_solver.hpp"

#include <cmath>

#include "critnorm/besov.hpp"

namespace critnorm {

namespace {

using Fields3 = std::array<SpectralField, 3>;

Fields3 axpy(const Fields3& a, double s, const Fields3& b) {
    return {a[0] + s * b[0], a[1] + s * b[1], a[2] + s * b[2]};
}

/// coeffs *= exp(-nu |k|^2 t) on all three components.
void apply_decay(Fields3& f, double nu, double t) {
    const Grid& g = f[0].grid();
    for (int i1 = 0; i1 < g.n(0); ++i1)
        for (int i2 = 0; i2 < g.n(1); ++i2)
            for (int i3 = 0; i3 < g.n(2); ++i3) {
                const double e = std::exp(-nu * g.k_sq(i1, i2, i3) * t);
                const std::int64_t i = g.index(i1, i2, i3);
                for (int a = 0; a < 3; ++a) f[a].coeffs()[i] *= e;
            }
}

} // namespace

std::array<SpectralField, 3> nonlinear_term(const VelocityState& v, double* max_speed) {
    const GridPtr grid = v.grid_ptr();
    Fields3 Om = curl(v.v);
    PhysicalField vp[3] = {to_physical(v.v[0]), to_physical(v.v[1]), to_physical(v.v[2])};
    PhysicalField op[3] = {to_physical(Om[0]), to_physical(Om[1]), to_physical(Om[2])};
    if (max_speed) {
        RealArray sp = (vp[0].values().square() + vp[1].values().square() +
                        vp[2].values().square()).sqrt();
        *max_speed = sp.size() ? sp.maxCoeff() : 0.0;
    }
    PhysicalField w1(grid, vp[1].values() * op[2].values() - vp[2].values() * op[1].values());
    PhysicalField w2(grid, vp[2].values() * op[0].values() - vp[0].values() * op[2].values());
    PhysicalField w3(grid, vp[0].values() * op[1].values() - vp[1].values() * op[0].values());
    Fields3 w{to_spectral(w1), to_spectral(w2), to_spectral(w3)};
    for (auto& f : w) dealias_inplace(f);
    VelocityState projected = leray_project(w, v.time);
    return {projected.v[0], projected.v[1], projected.v[2]};
}

std::array<SpectralField, 3> ns_tendency(const VelocityState& v, double nu) {
    Fields3 n = nonlinear_term(v);
    return {nu * laplacian(v.v[0]) + n[0], nu * laplacian(v.v[1]) + n[1],
            nu * laplacian(v.v[2]) + n[2]};
}

SpectralField pressure(const VelocityState& v) {
    const GridPtr grid = v.grid_ptr();
    // sum_{l,m} d_l v^m d_m v^l, every product dealiased
    SpectralField sum(grid);
    PhysicalField dv[3][3];
    for (int m = 0; m < 3; ++m)
        for (int l = 0; l < 3; ++l) dv[m][l] = to_physical(derivative(v.v[m], l));
    for (int l = 0; l < 3; ++l)
        for (int m = 0; m < 3; ++m) sum = sum + product(dv[m][l], dv[l][m]);
    // Pi_hat = sum_hat / |k|^2 (zero mean by the homogeneous convention)
    const Grid& g = *grid;
    SpectralField pi(grid);
    for (int i1 = 0; i1 < g.n(0); ++i1)
        for (int i2 = 0; i2 < g.n(1); ++i2)
            for (int i3 = 0; i3 < g.n(2); ++i3) {
                const double k2 = g.k_sq(i1, i2, i3);
                if (k2 == 0.0) continue;
                const std::int64_t i = g.index(i1, i2, i3);
                pi.coeffs()[i] = sum.coeffs()[i] / k2;
            }
    return pi;
}

VelocityState step(const VelocityState& state, const SolverConfig& cfg, StepInfo* info) {
    if (!(cfg.dt > 0.0)) throw ParameterError("step: dt must be positive");
    const double h = cfg.dt;
    double speed = 0.0;

    Fields3 u{state.v[0], state.v[1], state.v[2]};
    VelocityState tmp(state.grid_ptr(), state.time);

    Fields3 k1 = nonlinear_term(state, &speed);
    if (info) {
        info->max_speed = speed;
        info->cfl_ok = speed <= 0.0 || h <= 0.5 * state.grid().dx_min() / speed;
    }

    Fields3 s2 = axpy(u, 0.5 * h, k1);
    apply_decay(s2, cfg.nu, 0.5 * h);
    tmp.v = s2;
    Fields3 k2 = nonlinear_term(tmp);

    Fields3 uh = u;
    apply_decay(uh, cfg.nu, 0.5 * h);
    Fields3 s3 = axpy(uh, 0.5 * h, k2);
    tmp.v = s3;
    Fields3 k3 = nonlinear_term(tmp);

    Fields3 uf = u;
    apply_decay(uf, cfg.nu, h);
    Fields3 k3e = k3;
    apply_decay(k3e, cfg.nu, 0.5 * h);
    Fields3 s4 = axpy(uf, h, k3e);
    tmp.v = s4;
    Fields3 k4 = nonlinear_term(tmp);

    Fields3 k1e = k1;
    apply_decay(k1e, cfg.nu, h);
    Fields3 k23 = {k2[0] + k3[0], k2[1] + k3[1], k2[2] + k3[2]};
    apply_decay(k23, cfg.nu, 0.5 * h);

    VelocityState out(state.grid_ptr(), state.time + h);
    for (int a = 0; a < 3; ++a)
        out.v[a] = uf[a] + (h / 6.0) * (k1e[a] + 2.0 * k23[a] + k4[a]);

    if (!out.is_finite()) throw BlowupSuspected(state, state.time);
    return out;
}

TildeNsResidual tilde_ns_residual(const VelocityState& state, const Fields3& dvdt, double nu) {
    const GridPtr grid = state.grid_ptr();
    PhysicalField vp[3] = {to_physical(state.v[0]), to_physical(state.v[1]),
                           to_physical(state.v[2])};

    SpectralField omega = derivative(state.v[1], 0) - derivative(state.v[0], 1);
    SpectralField g3 = derivative(state.v[2], 2);

    double scale_o = 0.0, scale_g = 0.0;
    auto piece = [](double& scale, const SpectralField& f) {
        scale = std::max(scale, max_abs_coeff(f));
        return f;
    };
    auto transport = [&](const SpectralField& a) {
        SpectralField t(grid);
        for (int m = 0; m < 3; ++m) t = t + product(vp[m], to_physical(derivative(a, m)));
        return t;
    };

    PhysicalField dv3[3] = {to_physical(derivative(state.v[2], 0)),
                            to_physical(derivative(state.v[2], 1)),
                            to_physical(derivative(state.v[2], 2))};
    PhysicalField d3v[3] = {to_physical(derivative(state.v[0], 2)),
                            to_physical(derivative(state.v[1], 2)), dv3[2]};

    // omega equation; the relative scale is the largest individual term so
    // that cancellation between sides cannot hide in the denominator.
    SpectralField lhs_o = piece(scale_o, derivative(dvdt[1], 0) - derivative(dvdt[0], 1)) +
                          piece(scale_o, transport(omega)) -
                          piece(scale_o, nu * laplacian(omega));
    SpectralField rhs_o = piece(scale_o, product(dv3[2], to_physical(omega))) +
                          piece(scale_o, product(dv3[1], d3v[0])) -
                          piece(scale_o, product(dv3[0], d3v[1]));
    SpectralField r_omega = lhs_o - rhs_o;

    // d3v3 equation
    SpectralField stretch(grid);
    for (int l = 0; l < 3; ++l) stretch = stretch + product(d3v[l], dv3[l]);
    SpectralField lhs_g = piece(scale_g, derivative(dvdt[2], 2)) +
                          piece(scale_g, transport(g3)) -
                          piece(scale_g, nu * laplacian(g3)) + piece(scale_g, stretch);

    SpectralField sum(grid);
    for (int l = 0; l < 3; ++l)
        for (int m = 0; m < 3; ++m)
            sum = sum + product(to_physical(derivative(state.v[m], l)),
                                to_physical(derivative(state.v[l], m)));
    SpectralField rhs_g =
        piece(scale_g, apply_multiplier(sum, MultiplierSpec::d33_inv_laplacian()));
    SpectralField r_d3v3 = lhs_g - rhs_g;

    TildeNsResidual out{r_omega, r_d3v3, 0.0, 0.0};
    out.rel_omega = scale_o > 0.0 ? max_abs_coeff(r_omega) / scale_o : 0.0;
    out.rel_d3v3 = scale_g > 0.0 ? max_abs_coeff(r_d3v3) / scale_g : 0.0;
    return out;
}

FTerms f_terms(const VelocityState& v) {
    HorizontalSplit split = horizontal_split(v);
    SpectralField omega = derivative(v.v[1], 0) - derivative(v.v[0], 1);
    PhysicalField om = to_physical(omega);
    PhysicalField om12 = signed_power(om, 0.5);
    PhysicalField g3 = to_physical(derivative(v.v[2], 2));
    PhysicalField d2v3 = to_physical(derivative(v.v[2], 1));
    PhysicalField d1v3 = to_physical(derivative(v.v[2], 0));

    auto d3 = [](const SpectralField& f) { return to_physical(derivative(f, 2)); };

    FTerms out;
    {
        PhysicalField om32(om.grid_ptr(), om.values().abs().pow(1.5));
        out.F1 = integral_product(g3, om32);
    }
    {
        PhysicalField a = d3(split.v_curl[0]), b = d3(split.v_curl[1]);
        PhysicalField integrand(om.grid_ptr(),
                                (d2v3.values() * a.values() - d1v3.values() * b.values()) *
                                    om12.values());
        out.F2 = integral(integrand);
    }
    {
        PhysicalField a = d3(split.v_div[0] + split.shear_residual[0]);
        PhysicalField b = d3(split.v_div[1] + split.shear_residual[1]);
        PhysicalField integrand(om.grid_ptr(),
                                (d2v3.values() * a.values() - d1v3.values() * b.values()) *
                                    om12.values());
        out.F3 = integral(integrand);
    }
    {
        PhysicalField a = d3(v.v[0]), b = d3(v.v[1]);
        PhysicalField F(om.grid_ptr(), g3.values() * om.values() +
                                           d2v3.values() * a.values() -
                                           d1v3.values() * b.values());
        out.full = integral_product(F, om12);
    }
    return out;
}

QTerms q_terms(const VelocityState& v, double theta) {
    if (!(theta > 0.0 && theta < 0.5)) throw ParameterError("q_terms: theta must lie in (0,1/2)");
    const GridPtr grid = v.grid_ptr();
    SpectralField g = derivative(v.v[2], 2);
    PhysicalField gp = to_physical(g);

    // Q3 = v . grad g
    SpectralField Q3(grid);
    for (int m = 0; m < 3; ++m)
        Q3 = Q3 + product(to_physical(v.v[m]), to_physical(derivative(g, m)));

    // Q1 = (Id - R)(g^2) - R(sum_{l,m<=2} d_l v^m d_m v^l),
    // Q2 = (Id - 2R)(sum_{l<=2} d_3 v^l d_l v^3),
    // with R the bounded multiplier k3^2/|k|^2 (the trace of the pressure).
    const MultiplierSpec R = MultiplierSpec::d33_inv_laplacian();
    SpectralField gg = product(gp, gp);
    SpectralField S2(grid);
    for (int l = 0; l < 2; ++l)
        for (int m = 0; m < 2; ++m)
            S2 = S2 + product(to_physical(derivative(v.v[m], l)),
                              to_physical(derivative(v.v[l], m)));
    SpectralField T2(grid);
    for (int l = 0; l < 2; ++l)
        T2 = T2 + product(to_physical(derivative(v.v[l], 2)),
                          to_physical(derivative(v.v[2], l)));

    SpectralField Q1 = gg - apply_multiplier(gg, R) - apply_multiplier(S2, R);
    SpectralField Q2 = T2 - 2.0 * apply_multiplier(T2, R);

    QTerms out;
    out.Q1 = htheta_pairing(Q1, g, theta);
    out.Q2 = htheta_pairing(Q2, g, theta);
    out.Q3 = htheta_pairing(Q3, g, theta);
    return out;
}

double energy_half_l2sq(const VelocityState& v) {
    double acc = 0.0;
    for (int a = 0; a < 3; ++a) acc += parseval_l2_sq(v.v[a]);
    return 0.5 * acc;
}

double enstrophy_gradsq(const VelocityState& v) {
    const Grid& g = v.grid();
    double acc = 0.0;
    for (int i1 = 0; i1 < g.n(0); ++i1)
        for (int i2 = 0; i2 < g.n(1); ++i2)
            for (int i3 = 0; i3 < g.n(2); ++i3) {
                const double k2 = g.k_sq(i1, i2, i3);
                if (k2 == 0.0) continue;
                const std::int64_t i = g.index(i1, i2, i3);
                acc += k2 * (std::norm(v.v[0].coeffs()[i]) + std::norm(v.v[1].coeffs()[i]) +
                             std::norm(v.v[2].coeffs()[i]));
            }
    return acc * g.volume();
}

double Trajectory::dissipation_integral(std::size_t upto) const {
    if (upto >= step_times.size()) upto = step_times.size() - 1;
    if (step_times.size() < 2 || upto < 1) return 0.0;
    // Composite Simpson over equispaced per-step samples; a trailing odd
    // interval uses the three-point right-end rule, both O(dt^4).
    const double h = step_times[1] - step_times[0];
    double acc = 0.0;
    std::size_t i = 0;
    while (i + 2 <= upto) {
        acc += h / 3.0 * (dissipation[i] + 4.0 * dissipation[i + 1] + dissipation[i + 2]);
        i += 2;
    }
    if (i < upto) { // one interval left
        if (i > 0)
            acc += h / 12.0 * (5.0 * dissipation[i + 1] + 8.0 * dissipation[i] -
                               dissipation[i - 1]);
        else
            acc += h / 2.0 * (dissipation[0] + dissipation[1]);
    }
    return acc;
}

double Trajectory::energy_identity_residual() const {
    if (energy.empty()) return 0.0;
    const double e0 = energy.front();
    if (e0 <= 0.0) return 0.0;
    double worst = 0.0;
    for (std::size_t n = 1; n < energy.size(); ++n) {
        const double integ = dissipation_integral(n);
        worst = std::max(worst, std::abs(energy[n] + config.nu * integ - e0) / e0);
    }
    return worst;
}

Trajectory integrate(const VelocityState& initial, const SolverConfig& cfg,
                     const std::function<void(const VelocityState&)>& on_snapshot) {
    if (!(cfg.t_end >= initial.time)) throw ParameterError("integrate: t_end before start time");
    Trajectory traj;
    traj.config = cfg;

    VelocityState state = initial;
    for (auto& f : state.v) dealias_inplace(f);

    auto record_step = [&](const VelocityState& s) {
        traj.step_times.push_back(s.time);
        traj.energy.push_back(energy_half_l2sq(s));
        traj.dissipation.push_back(enstrophy_gradsq(s));
    };
    auto snapshot = [&](const VelocityState& s) {
        traj.snapshots.push_back(s);
        if (on_snapshot) on_snapshot(s);
    };

    record_step(state);
    snapshot(state);

    const long nsteps = std::lround((cfg.t_end - initial.time) / cfg.dt);
    StepInfo info;
    for (long n = 1; n <= nsteps; ++n) {
        state = step(state, cfg, &info);
        if (!info.cfl_ok) ++traj.cfl_warnings;
        record_step(state);
        const int cadence = std::max(1, cfg.snapshot_cadence);
        if (n % cadence == 0 || n == nsteps) snapshot(state);
    }
    return traj;
}

} // namespace critnorm
