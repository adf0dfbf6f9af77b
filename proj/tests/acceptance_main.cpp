// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion.  Exit code 0 iff all pass.
//
// Sizes follow the criteria: cutoff checks on 1e4 samples, field checks at
// 32^3 (50 samples), the energy/klips run at 64^3 over t in [0, 0.5], the
// verification suites at 32^3 -> 64^3 with 200/25 samples on 4 threads.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "critnorm/inequality_lab.hpp"
#include "critnorm/run_config.hpp"

using namespace critnorm;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail) {
    std::printf("[%2d] %-34s %s (%s)\n", index, name.c_str(), ok ? "PASS" : "FAIL",
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

std::string fmt(const char* f, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

double now_seconds() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

// 1. partition of unity and support conditions
void criterion1() {
    CutoffPair c = make_cutoffs();
    GaussianRng rng(2024);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double tau = 1e-6 + (1000.0 - 1e-6) * rng.uniform();
        worst = std::max(worst, std::abs(c.partition_low(tau, 64) - 1.0));
    }
    bool support_ok = true;
    for (int i = 0; i <= 4000; ++i) {
        const double tau = 4.0 * i / 4000.0;
        if (std::abs(tau) >= 4.0 / 3.0 && c.chi(tau) != 0.0) support_ok = false;
        if ((std::abs(tau) <= 0.75 || std::abs(tau) >= 8.0 / 3.0) && c.phi(tau) != 0.0)
            support_ok = false;
        if (std::abs(tau) <= 0.75 && c.chi(tau) != 1.0) support_ok = false;
    }
    report(1, "partition of unity", worst <= 1e-12 && support_ok,
           fmt("max |sum-1| = %.2e over 1e4 samples", worst));
}

// 2. dyadic reconstruction in all three modes
void criterion2() {
    GridPtr grid = Grid::make(32, 2.0 * M_PI);
    double worst = 0.0;
    for (int s = 0; s < 50; ++s) {
        SpectralField f = random_scalar(grid, 4000 + s, 10.0);
        for (BlockMode mode : {BlockMode::Iso, BlockMode::Horizontal, BlockMode::Vertical}) {
            SpectralField want = remove_zero_radius_modes(f, mode);
            SpectralField got = reconstruct(f, mode);
            worst = std::max(worst, (got.coeffs() - want.coeffs()).abs().maxCoeff() /
                                        max_abs_coeff(want));
        }
    }
    report(2, "dyadic reconstruction", worst < 1e-10,
           fmt("max rel defect %.2e, 50 fields x 3 modes", worst));
}

// 3. Biot-Savart and horizontal-split round trips
void criterion3() {
    GridPtr grid = Grid::make(32, 2.0 * M_PI);
    double worst_bs = 0.0, worst_split = 0.0;
    for (int s = 0; s < 50; ++s) {
        VelocityState v = random_solenoidal(grid, 5000 + s, 10.0, 1.0,
                                            /*zero_horizontal_mean=*/true);
        const double scale =
            std::max({max_abs_coeff(v.v[0]), max_abs_coeff(v.v[1]), max_abs_coeff(v.v[2])});
        VelocityState back = velocity_from_vorticity(compute_vorticity(v).Omega, v.time);
        for (int a = 0; a < 3; ++a)
            worst_bs = std::max(
                worst_bs, (back.v[a].coeffs() - v.v[a].coeffs()).abs().maxCoeff() / scale);
        HorizontalSplit split = horizontal_split(v);
        for (int a = 0; a < 2; ++a) {
            SpectralField rec = split.v_curl[a] + split.v_div[a] + split.shear_residual[a];
            worst_split = std::max(
                worst_split, (rec.coeffs() - v.v[a].coeffs()).abs().maxCoeff() / scale);
        }
    }
    report(3, "Biot-Savart round trips", worst_bs < 1e-10 && worst_split < 1e-10,
           fmt("velocity<->vorticity %.2e, split %.2e", worst_bs, worst_split));
}

// 4 + 5 + part of 6: the Taylor-Green reference run at 64^3
void criteria_4_5_6tg(Trajectory& tg_out) {
    const double t0 = now_seconds();
    GridPtr grid = Grid::make(64, 2.0 * M_PI);
    SolverConfig cfg;
    cfg.nu = 1.0;
    cfg.dt = 1e-3;
    cfg.t_end = 0.5;
    cfg.snapshot_cadence = 5;

    // klips budget terms accumulated on the snapshot cadence
    MonitorSeries klips;
    klips.spec = MonitorSpec::parse("klips");
    Trajectory traj = integrate(taylor_green(grid), cfg, [&](const VelocityState& s) {
        klips.append(s.time, evaluate_monitor(klips.spec, s));
    });
    const double elapsed = now_seconds() - t0;

    const double eres = traj.energy_identity_residual();
    report(4, "energy identity (TG 64^3)", eres < 1e-6 && elapsed < 600.0,
           fmt("residual %.2e, %.0f s single-threaded", eres, elapsed));

    // (2/3) sum34(t) + (8/9) int sumgrad dt' = (2/3) sum34(0) + int force dt'
    double worst = 0.0;
    double grad_integral = 0.0, force_integral = 0.0;
    const double lhs0 = (2.0 / 3.0) * klips.values[0][0];
    const double scale = std::abs(lhs0);
    for (std::size_t i = 1; i < klips.times.size(); ++i) {
        const double dt = klips.times[i] - klips.times[i - 1];
        grad_integral += 0.5 * dt * (klips.values[i][1] + klips.values[i - 1][1]);
        force_integral += 0.5 * dt * (klips.values[i][2] + klips.values[i - 1][2]);
        const double lhs = (2.0 / 3.0) * klips.values[i][0] + (8.0 / 9.0) * grad_integral;
        const double rhs = lhs0 + force_integral;
        worst = std::max(worst, std::abs(lhs - rhs) / scale);
    }
    report(5, "L^{3/2} vorticity identity", worst < 1e-3,
           fmt("max rel residual %.2e (budget 1e-3)", worst));
    tg_out = std::move(traj);
}

// 6. the two-unknown reformulation holds on every snapshot
void criterion6(const Trajectory& tg) {
    double worst_tilde = 0.0, worst_f = 0.0, worst_q = 0.0;
    // Taylor-Green snapshots (subsampled: the algebra is identical on each)
    for (std::size_t i = 0; i < tg.snapshots.size(); i += 10) {
        const VelocityState& s = tg.snapshots[i];
        auto r = tilde_ns_residual(s, ns_tendency(s, tg.config.nu), tg.config.nu);
        worst_tilde = std::max({worst_tilde, r.rel_omega, r.rel_d3v3});
    }

    // a generic flow with nonzero v3 for the F- and Q-decompositions
    GridPtr grid = Grid::make(32, 2.0 * M_PI);
    SolverConfig cfg;
    cfg.dt = 2.5e-4;
    cfg.t_end = 0.06;
    cfg.snapshot_cadence = 1;
    VelocityState init = random_solenoidal(grid, 6100, 6.0, 3.0);
    Trajectory traj = integrate(init, cfg);
    const double theta = 0.125;
    const NormSpec hth = NormSpec::htheta(theta);
    for (std::size_t i = 0; i < traj.snapshots.size(); i += 24) {
        const VelocityState& s = traj.snapshots[i];
        auto r = tilde_ns_residual(s, ns_tendency(s), 1.0);
        worst_tilde = std::max({worst_tilde, r.rel_omega, r.rel_d3v3});
        FTerms f = f_terms(s);
        const double fscale = std::abs(f.F1) + std::abs(f.F2) + std::abs(f.F3) + 1e-30;
        worst_f = std::max(worst_f, std::abs(f.sum() - f.full) / fscale);
    }
    auto half_norm_sq = [&](const VelocityState& s) {
        const double n = norm(derivative(s.v[2], 2), hth);
        return 0.5 * n * n;
    };
    const std::size_t n = traj.snapshots.size();
    for (std::size_t i : {n - 120, n - 60, n - 5}) {
        const VelocityState& s = traj.snapshots[i];
        const double dt2 = traj.snapshots[i + 1].time - traj.snapshots[i - 1].time;
        const double dfd =
            (half_norm_sq(traj.snapshots[i + 1]) - half_norm_sq(traj.snapshots[i - 1])) / dt2;
        const double gn = grad_norm(derivative(s.v[2], 2), hth);
        QTerms q = q_terms(s, theta);
        const double qscale = std::abs(dfd) + gn * gn + std::abs(q.sum());
        worst_q = std::max(worst_q, std::abs(dfd + gn * gn + q.sum()) / qscale);
    }
    report(6, "reformulation residuals", worst_tilde < 1e-8 && worst_f < 1e-6 && worst_q < 1e-4,
           fmt("tilde %.2e, F-sum %.2e", worst_tilde, worst_f) +
               fmt(", Q-balance %.2e", worst_q));
}

// 7. scaling invariance of the monitored quantities under co-refinement
void criterion7() {
    GridPtr grid = Grid::make(32, 2.0 * M_PI);
    VelocityState init = perturbed_taylor_green(grid, 7100, 1.0, 0.3, 6.0);

    SolverConfig coarse;
    coarse.dt = 1e-3;
    coarse.t_end = 0.1;
    coarse.snapshot_cadence = 5;

    struct Series {
        MonitorSeries crit, bp;
        std::vector<double> om_l32, htheta;
    };
    auto run = [&](const VelocityState& v0, const SolverConfig& sc) {
        Series s;
        s.crit.spec = MonitorSpec::parse("criterion:p=5");
        s.bp.spec = MonitorSpec::parse("endpoint-bp:p=5");
        integrate(v0, sc, [&](const VelocityState& snap) {
            s.crit.append(snap.time, evaluate_monitor(s.crit.spec, snap));
            s.bp.append(snap.time, evaluate_monitor(s.bp.spec, snap));
            s.om_l32.push_back(vorticity_monitors(snap)[0]);
            s.htheta.push_back(htheta_monitors(snap, 0.125)[0]);
        });
        return s;
    };
    Series c = run(init, coarse);
    SolverConfig fine = coarse;
    fine.dt = coarse.dt / 4.0;
    fine.t_end = coarse.t_end / 4.0;
    Series f = run(rescale_refine(init, 2), fine);

    // time integrals: the lambda^2 of each |d v|^p_{B_p} value cancels the
    // dt/lambda^2 of the rescaled clock, as for the criterion integral
    const double dc = std::abs(f.crit.final_integral() / c.crit.final_integral() - 1.0);
    const double dbp = std::abs(f.bp.final_integral() / c.bp.final_integral() - 1.0);
    // pointwise-in-time invariants at the final matched snapshot
    const double dom = std::abs(f.om_l32.back() / c.om_l32.back() - 1.0);
    const double dht = std::abs(f.htheta.back() / c.htheta.back() - 1.0);
    const double worst = std::max({dc, dbp, dom, dht});
    report(7, "scaling invariance (lambda=2)", worst < 0.02,
           fmt("criterion %.2e, B_p %.2e", dc, dbp) +
               fmt(", |Omega| %.2e, H_theta %.2e", dom, dht));
}

// 8. the verification suites pass deterministically inside the budget
void criterion8(const std::string& out_dir) {
    const double t0 = now_seconds();
    LabConfig cfg;
    cfg.seed = 1;
    cfg.threads = 4;
    fs::create_directories(out_dir);
    bool all_passed = true;
    int hard_violations = 0;
    double worst_margin = 0.0;
    for (const auto& id : lab_suite_ids()) {
        InequalityReport rep = run_suite(id, cfg);
        std::ofstream os(fs::path(out_dir) / (id + ".json"));
        os << rep.to_json() << "\n";
        all_passed = all_passed && rep.passed();
        for (const auto& c : rep.checks) {
            hard_violations += c.hard_violations + c.violations;
            if (!c.hard) worst_margin = std::max(worst_margin, c.refinement_margin);
        }
    }
    const double elapsed = now_seconds() - t0;
    // determinism: rerunning a suite reproduces the report byte for byte
    InequalityReport again = run_suite("lemma4.2-bernstein", cfg);
    const bool deterministic =
        again.to_json() + "\n" == slurp((fs::path(out_dir) / "lemma4.2-bernstein.json").string());
    report(8, "inequality suites (verify all)",
           all_passed && hard_violations == 0 && deterministic && elapsed < 900.0,
           fmt("worst margin %.3f, %.0f s on 4 threads", worst_margin, elapsed) +
               (deterministic ? ", deterministic" : ", NON-DETERMINISTIC"));
}

// 9. the divergence-free H_theta bound is finite and refinement-stable
void criterion9() {
    const NormSpec hth = NormSpec::htheta(0.125);
    const NormSpec h12 = NormSpec::sobolev_iso(0.5);
    auto sup_ratio = [&](int n) {
        GridPtr grid = Grid::make(n, 2.0 * M_PI);
        double sup = 0.0;
        for (int s = 0; s < 200; ++s) {
            VelocityState w = random_solenoidal(grid, 9000 + s, 9.0);
            const double lhs = norm(derivative(w.v[2], 2), hth);
            const double rhs = norm(w, h12);
            if (rhs > 0.0) sup = std::max(sup, lhs / rhs);
        }
        return sup;
    };
    const double s32 = sup_ratio(32);
    const double s64 = sup_ratio(64);
    const double drift = std::abs(s64 / s32 - 1.0);
    report(9, "divergence-free H_theta bound", std::isfinite(s32) && s32 > 0.0 && drift <= 0.10,
           fmt("sup ratio %.4f, refinement drift %.2e", s32, drift));
}

// 10. byte-identical outputs for identical seed/config
void criterion10() {
    const std::string text = "grid.n = 32\n"
                             "init.kind = perturbed-taylor-green\n"
                             "init.seed = 7\n"
                             "init.band = 6\n"
                             "solver.dt = 0.002\n"
                             "solver.t_end = 0.02\n"
                             "solver.cadence = 2\n"
                             "monitors = criterion:p=5, vorticity-l32, htheta:theta=0.125\n";
    RunConfig cfg = RunConfig::parse_text(text);
    const fs::path d1 = fs::temp_directory_path() / "critnorm_acc_det1";
    const fs::path d2 = fs::temp_directory_path() / "critnorm_acc_det2";
    fs::remove_all(d1);
    fs::remove_all(d2);
    simulate_run(cfg, d1.string());
    simulate_run(cfg, d2.string());
    bool identical = true;
    int files = 0;
    for (const auto& e : fs::directory_iterator(d1)) {
        const std::string name = e.path().filename().string();
        std::string a = slurp(e.path().string());
        std::string b = slurp((d2 / name).string());
        if (name == "run.json") {
            // the wall-time field is informational and excluded
            auto strip = [](std::string s) {
                std::istringstream is(s);
                std::ostringstream os;
                std::string line;
                while (std::getline(is, line))
                    if (line.find("wall_time_seconds") == std::string::npos) os << line << "\n";
                return os.str();
            };
            a = strip(a);
            b = strip(b);
        }
        identical = identical && (a == b);
        ++files;
    }
    report(10, "byte-identical determinism", identical && files > 3,
           fmt("%g files compared", double(files)));
}

} // namespace

int main() {
    std::printf("acceptance suite (tolerances pinned per criterion)\n");
    criterion1();
    criterion2();
    criterion3();
    Trajectory tg;
    criteria_4_5_6tg(tg);
    criterion6(tg);
    criterion7();
    criterion8((fs::temp_directory_path() / "critnorm_acc_reports").string());
    criterion9();
    criterion10();
    std::printf("%s\n", g_failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED");
    return g_failures == 0 ? 0 : 1;
}
