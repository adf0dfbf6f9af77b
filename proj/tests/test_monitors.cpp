#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "critnorm/monitors.hpp"
#include "test_support.hpp"

using namespace critnorm;
using namespace critnorm::test;

namespace {

// int |cos x2|^{3/2} over [0,2pi]^3, frozen from the 1-D quadrature oracle.
constexpr double kAbsCos32BoxIntegral = 138.01957748133923;

VelocityState shear_x2(GridPtr grid) {
    return VelocityState({sampled_spectral(grid, [](double, double y, double) { return std::sin(y); }),
                          SpectralField(grid), SpectralField(grid)},
                         0.0);
}

} // namespace

TEST_CASE("monitor spec: parse, validate, round trip") {
    MonitorSpec m = MonitorSpec::parse("criterion:p=5,e=0,0,1");
    CHECK(m.kind == MonitorSpec::Kind::CriterionIntegral);
    CHECK(m.p == 5.0);
    CHECK(MonitorSpec::parse("vorticity-l32").kind == MonitorSpec::Kind::VorticityL32);
    CHECK(MonitorSpec::parse("htheta:theta=0.125").theta == 0.125);
    CHECK(MonitorSpec::parse("gronwall:C=2,p=4.5").C == 2.0);
    CHECK_THROWS_AS(MonitorSpec::parse("criterion:p=7"), ParameterError);
    CHECK_THROWS_AS(MonitorSpec::parse("criterion:p=5,e=0,0,2"), ParameterError);
    CHECK_THROWS_AS(MonitorSpec::parse("htheta:theta=0.2"), ParameterError);
    CHECK_THROWS_AS(MonitorSpec::parse("nonsense"), ParameterError);
    CHECK(MonitorSpec::parse(m.str()).str() == m.str());
    CHECK(MonitorSpec::parse("bkm-sup").kind == MonitorSpec::Kind::BKMSupNorm);
    CHECK(MonitorSpec::parse("omega34-energy").kind == MonitorSpec::Kind::Omega34Energy);
    CHECK(MonitorSpec::parse("d3sq-htheta:theta=0.125").kind == MonitorSpec::Kind::D3sqHTheta);
}

TEST_CASE("auxiliary monitors: BKM sup norm and squared budgets") {
    auto grid = grid_2pi(24);
    VelocityState sh = shear_x2(grid); // Omega = (0,0,-cos x2): sup = 1
    auto bkm = evaluate_monitor(MonitorSpec::parse("bkm-sup"), sh);
    CHECK(rel_err(bkm[0], 1.0) < 1e-12);
    auto o34 = evaluate_monitor(MonitorSpec::parse("omega34-energy"), sh);
    auto vm = vorticity_monitors(sh);
    CHECK(o34[0] == doctest::Approx(vm[2] * vm[2]));
    CHECK(o34[1] == doctest::Approx(vm[1] * vm[1]));
    VelocityState v = random_solenoidal(grid, 8, 6.0);
    auto d3sq = evaluate_monitor(MonitorSpec::parse("d3sq-htheta:theta=0.125"), v);
    const double h2 = htheta_monitors(v, 0.125)[2];
    CHECK(d3sq[0] == doctest::Approx(h2 * h2));
}

TEST_CASE("criterion_integrand: zero field and single-mode closed form") {
    auto grid = grid_2pi(16);
    CHECK(criterion_integrand(VelocityState(grid), {0, 0, 1}, 5.0) == 0.0);

    // v3 = 2 cos(2 x2): |k| = 2, divergence-free with v1 = v2 = 0
    VelocityState v(grid);
    v.v[2] = single_mode(grid, 0, 2, 0);
    REQUIRE(v.is_divergence_free(1e-12));
    const double p = 5.0;
    const double l2 = lp_norm(v.v[2], 2.0);
    const double want = std::pow(std::pow(2.0, 0.5 + 2.0 / p) * l2, p);
    CHECK(rel_err(criterion_integrand(v, {0, 0, 1}, p), want) < 1e-12);
}

TEST_CASE("vorticity_monitors: zero, shear oracle, definitional identity") {
    auto grid = grid_2pi(32);
    auto z = vorticity_monitors(VelocityState(grid));
    CHECK(z[0] == 0.0);
    CHECK(z[1] == 0.0);
    CHECK(z[2] == 0.0);

    auto m = vorticity_monitors(shear_x2(grid));
    const double oracle =
        4.0 * M_PI * M_PI * quad_1d_2pi([](double t) { return std::pow(std::abs(std::cos(t)), 1.5); });
    CHECK(rel_err(oracle, kAbsCos32BoxIntegral) < 1e-9);
    CHECK(rel_err(m[1] * m[1], kAbsCos32BoxIntegral) < 5e-4);

    for (std::uint64_t seed : {3u, 4u}) {
        VelocityState v = random_solenoidal(grid, seed, 8.0);
        VorticityState w = compute_vorticity(v);
        auto mm = vorticity_monitors(v);
        CHECK(rel_err(mm[1], std::pow(lp_norm(w.omega_h, 1.5), 0.75)) < 1e-10);
    }
}

TEST_CASE("htheta_monitors: support case, closed form, corpus bound") {
    auto grid = grid_2pi(32);
    {
        auto m = htheta_monitors(shear_x2(grid), 0.125); // v3 = 0
        CHECK(m[0] == 0.0);
        CHECK(m[1] == 0.0);
        CHECK(m[2] == 0.0);
    }
    {
        // v3 = mode (2,0,4): d3v3 multiplies the mass by |k3| = 4
        VelocityState v(grid);
        v.v[2] = single_mode(grid, 2, 0, 4);
        auto m = htheta_monitors(v, 0.125);
        const double mass = std::sqrt(2.0 * std::pow(2.0 * M_PI, 3));
        const double want = 4.0 * std::pow(2.0, -0.375) * std::pow(4.0, -0.125) * mass;
        CHECK(rel_err(m[0], want) < 1e-12);
    }
    {
        // empirical constant of the divergence-free bound stays modest
        double cemp = 0.0;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            VelocityState w = random_solenoidal(grid, 500 + seed, 8.0);
            const double lhs = htheta_monitors(w, 0.125)[0];
            cemp = std::max(cemp, lhs / norm(w, NormSpec::sobolev_iso(0.5)));
        }
        CHECK(cemp > 0.0);
        CHECK(cemp < 10.0);
    }
}

TEST_CASE("endpoint_bp: zero field, closed form, inclusion ratio") {
    auto grid = grid_2pi(32);
    std::array<std::array<double, 3>, 3> pm;
    for (auto& row : pm) row = {5.0, 5.0, 5.0};
    auto z = endpoint_bp(VelocityState(grid), pm);
    for (auto& row : z)
        for (double x : row) CHECK(x == 0.0);

    // v1 = 2 cos(3 x2): d2 v1 has amplitude |k| = 3; sampled-sup oracle
    VelocityState v(grid);
    v.v[0] = single_mode(grid, 0, 3, 0);
    REQUIRE(v.is_divergence_free(1e-12));
    auto m = endpoint_bp(v, pm);
    const double sigma = 2.0 - 2.0 / 5.0;
    const int m_max = int(std::ceil(std::log2(grid->k_max()))) + 2;
    double want = 0.0;
    for (int mm = -2; mm <= m_max; ++mm) {
        const double t = std::pow(4.0, -mm);
        want = std::max(want, std::pow(t, sigma / 2) * 3.0 * 2.0 * std::exp(-t * 9.0));
    }
    CHECK(rel_err(m[0][1], want) < 1e-10);
    CHECK_THROWS_AS(endpoint_bp(v, {{{1.0, 5.0, 5.0}, {5.0, 5.0, 5.0}, {5.0, 5.0, 5.0}}}),
                    ParameterError);

    // ||d_l v||_{B_p} <= C ||v||_{L^q}, 2/p + 3/q = 1 (p = q = 5)
    double cemp = 0.0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        VelocityState w = random_solenoidal(grid, 700 + seed, 8.0);
        auto bp = endpoint_bp(w, pm);
        double mx = 0.0;
        for (auto& row : bp)
            for (double x : row) mx = std::max(mx, x);
        const double lq = norm(w, NormSpec::lebesgue(5.0));
        CHECK(std::isfinite(mx / lq));
        cemp = std::max(cemp, mx / lq);
    }
    CHECK(cemp < 10.0);
}

TEST_CASE("monitor series: trapezoid oracle and ordering guard") {
    MonitorSeries s;
    s.spec = MonitorSpec::parse("energy");
    s.append(0.0, {2.0, 1.0});
    s.append(0.5, {1.0, 1.0});
    s.append(1.0, {4.0, 1.0});
    CHECK_THROWS_AS(s.append(0.9, {0.0, 0.0}), ParameterError);
    double acc = 0.0;
    for (std::size_t i = 1; i < s.times.size(); ++i)
        acc += 0.5 * (s.times[i] - s.times[i - 1]) * (s.values[i][0] + s.values[i - 1][0]);
    CHECK(s.running_integral.back() == acc);
    for (std::size_t i = 1; i < s.times.size(); ++i)
        CHECK(s.running_integral[i] >= s.running_integral[i - 1]);
}

TEST_CASE("monitors along a decaying run: Cauchy convergence of the integral") {
    auto grid = grid_2pi(24);
    SolverConfig cfg;
    cfg.dt = 2e-3;
    cfg.t_end = 0.4;
    cfg.snapshot_cadence = 10;
    MonitorSeries crit;
    crit.spec = MonitorSpec::parse("criterion:p=5");
    integrate(perturbed_taylor_green(grid, 5, 1.0, 0.2, 4.0), cfg, [&](const VelocityState& s) {
        crit.append(s.time, evaluate_monitor(crit.spec, s));
    });
    const std::size_t n = crit.times.size();
    REQUIRE(n >= 8);
    const double first_quarter = crit.running_integral[n / 4] - crit.running_integral[0];
    const double last_quarter =
        crit.running_integral[n - 1] - crit.running_integral[3 * (n - 1) / 4];
    CHECK(last_quarter < 0.25 * first_quarter);
}

TEST_CASE("scaling invariance of the monitored quantities") {
    auto grid = grid_2pi(32);
    VelocityState v = random_solenoidal(grid, 17, 8.0, 1.5);
    VelocityState fine = rescale_refine(v, 2);
    auto c = vorticity_monitors(v);
    auto f = vorticity_monitors(fine);
    CHECK(rel_err(f[0], c[0]) < 0.02); // ||Omega||_{L^{3/2}}
    CHECK(rel_err(f[1], c[1]) < 0.02); // ||omega_{3/4}||_{L^2}
    const double hc = htheta_monitors(v, 0.125)[0];
    const double hf = htheta_monitors(fine, 0.125)[0];
    CHECK(rel_err(hf, hc) < 0.02);
}

TEST_CASE("gronwall envelope: decaying flow stays inside; E(t) nondecreasing") {
    auto grid = grid_2pi(24);
    SolverConfig cfg;
    cfg.dt = 2e-3;
    cfg.t_end = 0.2;
    cfg.snapshot_cadence = 10;
    MonitorSeries cr;
    cr.spec = MonitorSpec::parse("criterion:p=5");
    std::vector<double> om34, hth, ghth;
    VelocityState init = perturbed_taylor_green(grid, 7, 1.0, 0.1, 4.0);
    const double om0 = vorticity_monitors(init)[0];
    integrate(init, cfg, [&](const VelocityState& s) {
        cr.append(s.time, evaluate_monitor(cr.spec, s));
        om34.push_back(vorticity_monitors(s)[1]);
        auto h = htheta_monitors(s, 0.125);
        hth.push_back(h[0]);
        ghth.push_back(h[1]);
    });
    GronwallReport rep = gronwall_envelope(cr, om34, om0, 1.0, 5.0, hth, ghth);
    CHECK(rep.within_envelope);
    CHECK(rep.envelope_htheta.size() == rep.envelope.size());
    for (std::size_t i = 1; i < rep.envelope.size(); ++i) {
        CHECK(rep.envelope[i] >= rep.envelope[i - 1]);
        CHECK(rep.measured_htheta[i] <= rep.envelope_htheta[i]);
    }
    for (double m : rep.margin) CHECK(m <= 1.0);
    CHECK_THROWS_AS(gronwall_envelope(cr, om34, om0, -1.0, 5.0), ParameterError);
    CHECK_THROWS_AS(gronwall_envelope(cr, om34, om0, 1.0, 5.0, hth, {}), ParameterError);
}

TEST_CASE("time-integral scaling invariance of the criterion along runs") {
    // lambda v(lambda^2 t, lambda x) realized by rerunning the co-refined
    // data with dt/4; the criterion integral is invariant.
    auto grid = grid_2pi(24);
    VelocityState init = perturbed_taylor_green(grid, 11, 1.0, 0.3, 4.0);

    SolverConfig coarse;
    coarse.dt = 2e-3;
    coarse.t_end = 0.08;
    coarse.snapshot_cadence = 4;
    MonitorSeries mc;
    mc.spec = MonitorSpec::parse("criterion:p=5");
    integrate(init, coarse, [&](const VelocityState& s) {
        mc.append(s.time, evaluate_monitor(mc.spec, s));
    });

    SolverConfig fine = coarse;
    fine.dt = coarse.dt / 4.0;
    fine.t_end = coarse.t_end / 4.0;
    MonitorSeries mf;
    mf.spec = mc.spec;
    integrate(rescale_refine(init, 2), fine, [&](const VelocityState& s) {
        mf.append(s.time, evaluate_monitor(mf.spec, s));
    });

    CHECK(rel_err(mf.final_integral(), mc.final_integral()) < 0.02);
}
