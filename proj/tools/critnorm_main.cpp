// critnorm: simulate 3-D periodic Navier-Stokes flows pseudo-spectrally,
// evaluate scaling-critical norms on stored snapshots, recompute blow-up
// monitors, and run the inequality verification suites.
//
// Exit codes: 0 success, 2 user/config error, 3 blow-up suspected,
// 4 internal invariant violation.

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "critnorm/parallel.hpp"
#include "critnorm/run_config.hpp"

namespace fs = std::filesystem;
using namespace critnorm;

namespace {

int cmd_simulate(const std::string& config_path, const std::string& out_override, int threads,
                 std::uint64_t seed_override, bool has_seed) {
    RunConfig cfg = RunConfig::parse_file(config_path);
    if (threads > 0) cfg.threads = threads;
    if (has_seed) cfg.seed = seed_override;
    const std::string out = out_override.empty() ? cfg.output_dir : out_override;
    RunResult res = simulate_run(cfg, out);
    std::printf("manifest: %s\n", res.manifest_path.c_str());
    std::printf("status: %s\n", res.status.c_str());
    std::printf("energy_balance_residual: %.3e\n", res.energy_residual);
    return res.status == "complete" ? 0 : 3;
}

int cmd_norms(const std::string& snapshot_path, const std::vector<std::string>& spec_strings) {
    Snapshot snap = read_snapshot(snapshot_path);
    for (const auto& text : spec_strings) {
        const NormSpec spec = NormSpec::parse(text);
        double value = 0.0;
        if (snap.components.size() == 3) {
            value = norm(as_velocity(snap), spec);
        } else {
            double acc = 0.0;
            for (const auto& c : snap.components) {
                const double n = norm(c, spec);
                acc += n * n;
            }
            value = snap.components.size() == 1 ? norm(snap.components[0], spec) : std::sqrt(acc);
        }
        std::printf("%s %.12g\n", text.c_str(), value);
    }
    return 0;
}

int cmd_monitor(const std::string& manifest_path, const std::vector<std::string>& spec_strings,
                const std::string& out_dir, int threads) {
    std::ifstream is(manifest_path);
    if (!is) throw ConfigError("monitor: cannot open manifest '" + manifest_path + "'");
    std::vector<std::string> files;
    try {
        nlohmann::json manifest = nlohmann::json::parse(is);
        const fs::path dir = fs::path(manifest_path).parent_path();
        for (const auto& f : manifest.at("files"))
            files.push_back((dir / f.get<std::string>()).string());
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("monitor: malformed manifest: ") + e.what());
    }
    if (files.empty()) throw ConfigError("monitor: manifest lists no snapshots");

    std::vector<MonitorSpec> specs;
    for (const auto& s : spec_strings) specs.push_back(MonitorSpec::parse(s));
    auto series = recompute_monitors(files, specs, threads);

    fs::create_directories(out_dir);
    for (auto& s : series) {
        std::string name = s.spec.str();
        for (char& c : name)
            if (c == ':' || c == ',' || c == '=' || c == '.') c = '_';
        const std::string path = (fs::path(out_dir) / (name + ".csv")).string();
        s.write_csv(path);
        std::printf("%s -> %s (final integral %.12g)\n", s.spec.str().c_str(), path.c_str(),
                    s.final_integral());
    }
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& out_dir,
               int threads, const std::string& sizes) {
    LabConfig cfg;
    cfg.seed = seed;
    cfg.threads = resolve_threads(threads);
    if (!sizes.empty()) {
        const auto comma = sizes.find(',');
        if (comma == std::string::npos)
            throw ConfigError("verify: --sizes expects 'base,refined'");
        try {
            cfg.base_n = std::stoi(sizes.substr(0, comma));
            cfg.refined_n = std::stoi(sizes.substr(comma + 1));
        } catch (const std::exception&) {
            throw ConfigError("verify: bad --sizes value '" + sizes + "'");
        }
    }
    std::vector<std::string> ids;
    if (suite == "all") {
        ids = lab_suite_ids();
    } else {
        const auto& known = lab_suite_ids();
        if (std::find(known.begin(), known.end(), suite) == known.end())
            throw ConfigError("verify: unknown suite id '" + suite + "'");
        ids = {suite};
    }
    fs::create_directories(out_dir);
    bool all_passed = true;
    for (const auto& id : ids) {
        InequalityReport rep = run_suite(id, cfg);
        const std::string path = (fs::path(out_dir) / (id + ".json")).string();
        std::ofstream os(path, std::ios::trunc);
        os << rep.to_json() << "\n";
        std::printf("%-28s %s\n", id.c_str(), rep.passed() ? "PASS" : "FAIL");
        all_passed = all_passed && rep.passed();
    }
    return all_passed ? 0 : 4;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"scaling-critical norm toolkit for 3-D periodic Navier-Stokes"};
    app.require_subcommand(1);

    std::string config_path, out_dir, snapshot_path, manifest_path, suite = "all", sizes;
    std::vector<std::string> specs;
    int threads = 0;
    std::uint64_t seed = 1;
    bool seed_given = false;

    auto* sim = app.add_subcommand("simulate", "advance a flow and record monitors");
    sim->add_option("--config", config_path, "run configuration file")->required();
    sim->add_option("--out", out_dir, "output directory (overrides output.dir)");
    sim->add_option("--threads", threads, "worker threads (CRITNORM_THREADS fallback)");
    sim->add_option("--seed", seed, "override init.seed")->each([&](const std::string&) {
        seed_given = true;
    });

    auto* nrm = app.add_subcommand("norms", "evaluate norms on a stored snapshot");
    nrm->add_option("snapshot", snapshot_path, "snapshot file (CNF1)")->required();
    nrm->add_option("--spec,spec", specs, "norm specs, e.g. besov:s=0.9,p=2,q=2");

    auto* mon = app.add_subcommand("monitor", "recompute monitors from stored snapshots");
    mon->add_option("--manifest", manifest_path, "run manifest (run.json)")->required();
    mon->add_option("--spec", specs, "monitor specs (repeatable)")->required();
    mon->add_option("--out", out_dir, "output directory")->required();
    mon->add_option("--threads", threads, "worker threads");

    auto* ver = app.add_subcommand("verify", "run inequality suites");
    ver->add_option("suite", suite, "suite id or 'all'");
    ver->add_option("--seed", seed, "corpus seed");
    ver->add_option("--out", out_dir, "report directory")->required();
    ver->add_option("--threads", threads, "worker threads");
    ver->add_option("--sizes", sizes, "base,refined grid sizes (default 32,64)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sim->parsed()) return cmd_simulate(config_path, out_dir, threads, seed, seed_given);
        if (nrm->parsed()) return cmd_norms(snapshot_path, specs);
        if (mon->parsed()) return cmd_monitor(manifest_path, specs, out_dir, threads);
        if (ver->parsed()) return cmd_verify(suite, seed, out_dir, threads, sizes);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const ParameterError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const BlowupSuspected& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 4;
    }
    return 2;
}
