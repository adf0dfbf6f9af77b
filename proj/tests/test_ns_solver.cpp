#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "critnorm/besov.hpp"
#include "critnorm/ns_solver.hpp"
#include "test_support.hpp"

using namespace critnorm;
using namespace critnorm::test;

namespace {

VelocityState shear_x2(GridPtr grid, double amp = 1.0) {
    return VelocityState(
        {sampled_spectral(grid, [amp](double, double y, double) { return amp * std::sin(y); }),
         SpectralField(grid), SpectralField(grid)},
        0.0);
}

/// Convective-form nonlinearity -P[dealias((v.grad)v)], the independent
/// route against the rotational form.
std::array<SpectralField, 3> convective_nonlinear(const VelocityState& v) {
    const GridPtr grid = v.grid_ptr();
    PhysicalField vp[3] = {to_physical(v.v[0]), to_physical(v.v[1]), to_physical(v.v[2])};
    std::array<SpectralField, 3> adv{SpectralField(grid), SpectralField(grid),
                                     SpectralField(grid)};
    for (int i = 0; i < 3; ++i)
        for (int m = 0; m < 3; ++m)
            adv[i] = adv[i] + product(vp[m], to_physical(derivative(v.v[i], m)));
    VelocityState proj = leray_project({-1.0 * adv[0], -1.0 * adv[1], -1.0 * adv[2]});
    return {proj.v[0], proj.v[1], proj.v[2]};
}

} // namespace

TEST_CASE("nonlinear_term: zero and unidirectional shear vanish") {
    auto grid = grid_2pi(16);
    auto z = nonlinear_term(VelocityState(grid));
    for (int a = 0; a < 3; ++a) CHECK(max_abs_coeff(z[a]) == 0.0);

    auto n = nonlinear_term(shear_x2(grid));
    for (int a = 0; a < 3; ++a) CHECK(max_abs_coeff(n[a]) < 1e-14);
}

TEST_CASE("nonlinear_term: rotational and convective forms agree after projection") {
    auto grid = grid_2pi(32);
    for (const VelocityState& v :
         {taylor_green(grid), random_solenoidal(grid, 5, 9.0)}) {
        auto rot = nonlinear_term(v);
        auto conv = convective_nonlinear(v);
        const double scale = std::max(
            {max_abs_coeff(rot[0]), max_abs_coeff(rot[1]), max_abs_coeff(rot[2]), 1e-30});
        for (int a = 0; a < 3; ++a) CHECK(linf_coeff_diff(rot[a], conv[a]) < 1e-8 * scale);
    }
}

TEST_CASE("pressure: zero and shear give zero") {
    auto grid = grid_2pi(16);
    CHECK(max_abs_coeff(pressure(VelocityState(grid))) == 0.0);
    CHECK(max_abs_coeff(pressure(shear_x2(grid))) < 1e-14);
}

TEST_CASE("pressure: Taylor-Green closed form") {
    auto grid = grid_2pi(32);
    SpectralField pi = pressure(taylor_green(grid));
    SpectralField want = sampled_spectral(grid, [](double x, double y, double z) {
        return (std::cos(2 * x) + std::cos(2 * y)) * (2.0 + std::cos(2 * z)) / 16.0;
    });
    want.coeffs()[0] = 0.0; // compare up to the mean
    CHECK(linf_coeff_diff(pi, want) < 1e-12);
    // divergence consistency: div((v.grad)v) + lap Pi = 0 on the kept band
    VelocityState v = taylor_green(grid);
    PhysicalField vp[3] = {to_physical(v.v[0]), to_physical(v.v[1]), to_physical(v.v[2])};
    std::array<SpectralField, 3> adv{SpectralField(grid), SpectralField(grid),
                                     SpectralField(grid)};
    for (int i = 0; i < 3; ++i)
        for (int m = 0; m < 3; ++m)
            adv[i] = adv[i] + product(vp[m], to_physical(derivative(v.v[i], m)));
    SpectralField resid = divergence(adv) + laplacian(pi);
    const double scale = max_abs_coeff(laplacian(pi));
    CHECK(max_abs_coeff(resid) < 1e-8 * scale);
}

TEST_CASE("step: zero stays zero; exact viscous decay of an eigen-flow") {
    auto grid = grid_2pi(16);
    SolverConfig cfg;
    cfg.dt = 0.1;
    VelocityState z = step(VelocityState(grid), cfg);
    for (int a = 0; a < 3; ++a) CHECK(max_abs_coeff(z.v[a]) == 0.0);

    VelocityState sh = shear_x2(grid, 2.0);
    VelocityState after = step(sh, cfg);
    SpectralField want = std::exp(-0.1) * sh.v[0];
    CHECK(linf_coeff_diff(after.v[0], want) < 1e-12 * max_abs_coeff(want));
    CHECK(after.time == doctest::Approx(0.1));
}

TEST_CASE("step: blow-up signal on non-finite state") {
    auto grid = grid_2pi(16);
    VelocityState v = shear_x2(grid);
    v.v[0].coeffs()[3] = complexd(std::numeric_limits<double>::infinity(), 0.0);
    SolverConfig cfg;
    CHECK_THROWS_AS(step(v, cfg), BlowupSuspected);
}

TEST_CASE("integrate: Taylor-Green energy identity at 64^3") {
    auto grid = grid_2pi(64);
    SolverConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_end = 0.1; // 100 steps at the reference-run scale
    cfg.snapshot_cadence = 20;
    Trajectory traj = integrate(taylor_green(grid), cfg);
    CHECK(traj.energy_identity_residual() < 1e-6);
    for (const auto& snap : traj.snapshots) CHECK(snap.is_divergence_free(1e-12));
    CHECK(traj.cfl_warnings == 0);
}

TEST_CASE("integrate: CFL advisory fires for oversized steps") {
    auto grid = grid_2pi(16);
    SolverConfig cfg;
    cfg.dt = 0.5; // dx/2 / max|v| is ~0.2 for unit-amplitude shear
    cfg.t_end = 0.5;
    Trajectory traj = integrate(shear_x2(grid), cfg);
    CHECK(traj.cfl_warnings > 0);
}

TEST_CASE("tilde_ns_residual: zero, shear, Taylor-Green, random snapshot") {
    auto grid = grid_2pi(32);
    {
        VelocityState z(grid);
        auto r = tilde_ns_residual(z, ns_tendency(z));
        CHECK(r.rel_omega == 0.0);
        CHECK(r.rel_d3v3 == 0.0);
    }
    {
        VelocityState sh = shear_x2(grid);
        auto r = tilde_ns_residual(sh, ns_tendency(sh));
        CHECK(r.rel_omega < 1e-12);
        CHECK(r.rel_d3v3 < 1e-12);
    }
    for (const VelocityState& v : {taylor_green(grid), random_solenoidal(grid, 12, 9.0)}) {
        auto r = tilde_ns_residual(v, ns_tendency(v));
        CHECK(r.rel_omega < 1e-8);
        CHECK(r.rel_d3v3 < 1e-8);
    }
    // and along a short trajectory
    SolverConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_end = 0.02;
    cfg.snapshot_cadence = 5;
    Trajectory traj = integrate(random_solenoidal(grid, 13, 9.0), cfg);
    for (const auto& snap : traj.snapshots) {
        auto r = tilde_ns_residual(snap, ns_tendency(snap));
        CHECK(r.rel_omega < 1e-8);
        CHECK(r.rel_d3v3 < 1e-8);
    }
}

TEST_CASE("f_terms: zero, 2-D flow, and sum consistency") {
    auto grid = grid_2pi(32);
    {
        FTerms f = f_terms(VelocityState(grid));
        CHECK(f.F1 == 0.0);
        CHECK(f.F2 == 0.0);
        CHECK(f.F3 == 0.0);
    }
    {
        // v3 = 0 kills every term
        SpectralField psi = sampled_spectral(
            grid, [](double x, double y, double) { return std::sin(x) * std::sin(y); });
        VelocityState v({-1.0 * derivative(psi, 1), derivative(psi, 0), SpectralField(grid)}, 0.0);
        FTerms f = f_terms(v);
        CHECK(std::abs(f.F1) < 1e-13);
        CHECK(std::abs(f.F2) < 1e-13);
        CHECK(std::abs(f.F3) < 1e-13);
    }
    for (std::uint64_t seed : {3u, 4u}) {
        VelocityState v = random_solenoidal(grid, seed, 9.0);
        FTerms f = f_terms(v);
        const double scale = std::abs(f.F1) + std::abs(f.F2) + std::abs(f.F3) + 1e-30;
        CHECK(std::abs(f.sum() - f.full) < 1e-6 * scale);
    }
}

TEST_CASE("q_terms: zero and shear vanish; hypothesis check") {
    auto grid = grid_2pi(16);
    QTerms z = q_terms(VelocityState(grid), 0.125);
    CHECK(z.Q1 == 0.0);
    CHECK(z.Q2 == 0.0);
    CHECK(z.Q3 == 0.0);
    QTerms s = q_terms(shear_x2(grid), 0.125);
    CHECK(std::abs(s.Q1) < 1e-14);
    CHECK(std::abs(s.Q2) < 1e-14);
    CHECK(std::abs(s.Q3) < 1e-14);
    CHECK_THROWS_AS(q_terms(VelocityState(grid), 0.7), ParameterError);
}

TEST_CASE("q_terms: balance against a centered finite difference") {
    // d/dt (1/2)||d3v3||^2_{H_theta} + nu ||grad d3v3||^2_{H_theta}
    //   = -(Q1 + Q2 + Q3), finite differences on the snapshot cadence.
    auto grid = grid_2pi(32);
    const double theta = 0.125;
    SolverConfig cfg;
    cfg.dt = 2.5e-4;
    cfg.t_end = 0.06;
    cfg.snapshot_cadence = 1;
    VelocityState v0 = random_solenoidal(grid, 99, 6.0, 3.0);
    Trajectory traj = integrate(v0, cfg);
    const NormSpec hth = NormSpec::htheta(theta);

    auto half_norm_sq = [&](const VelocityState& s) {
        const double n = norm(derivative(s.v[2], 2), hth);
        return 0.5 * n * n;
    };
    // probe a few interior snapshots after the stiff initial transient
    const std::size_t n = traj.snapshots.size();
    REQUIRE(n > 120);
    for (std::size_t i : {n - 60, n - 30, n - 5}) {
        const VelocityState& s = traj.snapshots[i];
        const double dt2 = traj.snapshots[i + 1].time - traj.snapshots[i - 1].time;
        const double dfd =
            (half_norm_sq(traj.snapshots[i + 1]) - half_norm_sq(traj.snapshots[i - 1])) / dt2;
        const double gn = grad_norm(derivative(s.v[2], 2), hth);
        QTerms q = q_terms(s, theta);
        const double lhs = dfd + cfg.nu * gn * gn;
        const double scale = std::abs(dfd) + gn * gn + std::abs(q.sum());
        CHECK(std::abs(lhs + q.sum()) < 1e-4 * scale);
    }
}
