#include "critnorm/run_config.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "critnorm/parallel.hpp"

namespace critnorm {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

double num(const std::string& v, const std::string& key) {
    try {
        size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("config: bad number '" + v + "' for key '" + key + "'");
    }
}

int integer(const std::string& v, const std::string& key) {
    const double x = num(v, key);
    if (x != std::floor(x)) throw ConfigError("config: key '" + key + "' must be an integer");
    return int(x);
}

bool boolean(const std::string& v, const std::string& key) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw ConfigError("config: key '" + key + "' must be true or false");
}

} // namespace

RunConfig RunConfig::parse_text(const std::string& text) {
    RunConfig cfg;
    std::istringstream is(text);
    std::string line;
    std::map<std::string, std::string> kv;
    while (std::getline(is, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (!kv.emplace(key, val).second)
            throw ConfigError("config: duplicate key '" + key + "'");
    }

    for (auto& [key, val] : kv) {
        if (key == "grid.n") cfg.n1 = cfg.n2 = cfg.n3 = integer(val, key);
        else if (key == "grid.n1") cfg.n1 = integer(val, key);
        else if (key == "grid.n2") cfg.n2 = integer(val, key);
        else if (key == "grid.n3") cfg.n3 = integer(val, key);
        else if (key == "grid.L") cfg.L1 = cfg.L2 = cfg.L3 = num(val, key);
        else if (key == "grid.L1") cfg.L1 = num(val, key);
        else if (key == "grid.L2") cfg.L2 = num(val, key);
        else if (key == "grid.L3") cfg.L3 = num(val, key);
        else if (key == "init.kind") cfg.init_kind = val;
        else if (key == "init.seed") cfg.seed = std::uint64_t(num(val, key));
        else if (key == "init.amplitude") cfg.amplitude = num(val, key);
        else if (key == "init.band") cfg.band = num(val, key);
        else if (key == "init.slope") cfg.slope = num(val, key);
        else if (key == "init.epsilon") cfg.epsilon = num(val, key);
        else if (key == "solver.nu") cfg.solver.nu = num(val, key);
        else if (key == "solver.dt") cfg.solver.dt = num(val, key);
        else if (key == "solver.t_end") cfg.solver.t_end = num(val, key);
        else if (key == "solver.cadence") cfg.solver.snapshot_cadence = integer(val, key);
        else if (key == "output.dir") cfg.output_dir = val;
        else if (key == "output.snapshots") cfg.write_snapshots = boolean(val, key);
        else if (key == "threads") cfg.threads = integer(val, key);
        else if (key == "monitors") {
            std::stringstream ms(val);
            std::string item;
            std::string pending;
            // monitor specs may contain commas inside e=0,0,1; re-join and
            // split on monitor names instead
            std::vector<std::string> raw;
            while (std::getline(ms, item, ',')) raw.push_back(trim(item));
            std::vector<std::string> specs;
            for (auto& tok : raw) {
                const bool starts_new = tok.find(':') != std::string::npos ||
                                        tok == "vorticity-l32" || tok == "energy" ||
                                        tok == "klips" || tok == "criterion" ||
                                        tok == "htheta" || tok == "endpoint-bp" ||
                                        tok == "gronwall" || tok == "bkm-sup" ||
                                        tok == "omega34-energy" || tok == "d3sq-htheta";
                if (starts_new || specs.empty())
                    specs.push_back(tok);
                else
                    specs.back() += "," + tok;
            }
            try {
                for (auto& s : specs)
                    if (!s.empty()) cfg.monitors.push_back(MonitorSpec::parse(s));
            } catch (const ParameterError& e) {
                throw ConfigError(e.what());
            }
        } else {
            throw ConfigError("config: unknown key '" + key + "'");
        }
    }

    if (!(cfg.solver.dt > 0.0)) throw ConfigError("config: solver.dt must be positive");
    if (!(cfg.solver.t_end >= 0.0)) throw ConfigError("config: solver.t_end must be nonnegative");
    if (cfg.solver.snapshot_cadence < 1)
        throw ConfigError("config: solver.cadence must be >= 1");
    const std::vector<std::string> kinds = {"taylor-green", "random-solenoidal",
                                            "perturbed-taylor-green", "zero"};
    if (std::find(kinds.begin(), kinds.end(), cfg.init_kind) == kinds.end())
        throw ConfigError("config: unknown init.kind '" + cfg.init_kind + "'");
    try {
        (void)cfg.make_grid();
    } catch (const ParameterError& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

RunConfig RunConfig::parse_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("config: cannot open '" + path + "'");
    std::stringstream ss;
    ss << is.rdbuf();
    return parse_text(ss.str());
}

GridPtr RunConfig::make_grid() const { return Grid::make(n1, n2, n3, L1, L2, L3); }

VelocityState RunConfig::make_initial() const {
    GridPtr grid = make_grid();
    if (init_kind == "taylor-green") return taylor_green(grid, amplitude);
    if (init_kind == "random-solenoidal")
        return random_solenoidal(grid, seed, band, slope, false, amplitude);
    if (init_kind == "perturbed-taylor-green")
        return perturbed_taylor_green(grid, seed, amplitude, epsilon, band, slope);
    if (init_kind == "zero") return VelocityState(grid);
    throw ConfigError("config: unknown init.kind '" + init_kind + "'");
}

namespace {

std::string monitor_filename(const MonitorSpec& spec) {
    std::string s = spec.str();
    for (char& c : s)
        if (c == ':' || c == ',' || c == '=' || c == '.') c = '_';
    return s + ".csv";
}

json config_json(const RunConfig& cfg) {
    json j;
    j["grid"] = {{"n", {cfg.n1, cfg.n2, cfg.n3}}, {"L", {cfg.L1, cfg.L2, cfg.L3}}};
    j["init"] = {{"kind", cfg.init_kind}, {"seed", cfg.seed},   {"amplitude", cfg.amplitude},
                 {"band", cfg.band},      {"slope", cfg.slope}, {"epsilon", cfg.epsilon}};
    j["solver"] = {{"nu", cfg.solver.nu},
                   {"dt", cfg.solver.dt},
                   {"t_end", cfg.solver.t_end},
                   {"cadence", cfg.solver.snapshot_cadence}};
    json ms = json::array();
    for (const auto& m : cfg.monitors) ms.push_back(m.str());
    j["monitors"] = ms;
    return j;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream os(path, std::ios::trunc);
    os << text;
    }

} // namespace

RunResult simulate_run(const RunConfig& cfg, const std::string& out_dir) {
    fs::create_directories(out_dir);
    const std::string manifest_path = (fs::path(out_dir) / "run.json").string();

    json manifest;
    manifest["schema"] = "critnorm-run-1";
    manifest["status"] = "incomplete";
    manifest["config"] = config_json(cfg);
    write_text(manifest_path, manifest.dump(2) + "\n");

    RunResult result;
    result.manifest_path = manifest_path;
    const int threads = resolve_threads(cfg.threads);

    std::vector<MonitorSeries> series(cfg.monitors.size());
    for (std::size_t m = 0; m < cfg.monitors.size(); ++m) series[m].spec = cfg.monitors[m];
    const MonitorSpec* gronwall_spec = nullptr;
    for (const auto& m : cfg.monitors)
        if (m.kind == MonitorSpec::Kind::GronwallEnvelope) gronwall_spec = &m;
    std::vector<double> omega34_track, htheta_track, grad_htheta_track;

    VelocityState initial = cfg.make_initial();
    const double omega0_l32 = gronwall_spec ? vorticity_monitors(initial)[0] : 0.0;
    int snap_index = 0;
    auto on_snapshot = [&](const VelocityState& s) {
        if (cfg.write_snapshots) {
            char name[32];
            std::snprintf(name, sizeof name, "snap_%05d.cnf", snap_index);
            const std::string path = (fs::path(out_dir) / name).string();
            write_snapshot(path, s);
            result.snapshot_files.push_back(path);
        }
        ++snap_index;
        // monitors evaluate concurrently on the immutable snapshot; the
        // ordered append keeps series deterministic
        std::vector<std::vector<double>> rows(series.size());
        parallel_for(std::int64_t(series.size()), threads, [&](std::int64_t m) {
            rows[m] = evaluate_monitor(series[m].spec, s);
        });
        for (std::size_t m = 0; m < series.size(); ++m)
            series[m].append(s.time, std::move(rows[m]));
        if (gronwall_spec) {
            omega34_track.push_back(vorticity_monitors(s)[1]);
            auto h = htheta_monitors(s, gronwall_spec->theta);
            htheta_track.push_back(h[0]);
            grad_htheta_track.push_back(h[1]);
        }
    };

    std::string status = "complete";
    Trajectory traj;
    try {
        traj = integrate(initial, cfg.solver, on_snapshot);
        result.energy_residual = traj.energy_identity_residual();
        result.cfl_warnings = traj.cfl_warnings;
    } catch (const BlowupSuspected&) {
        status = "blowup-suspected";
    }

    json files = json::array();
    for (const auto& f : result.snapshot_files) files.push_back(fs::path(f).filename().string());
    manifest["files"] = files;
    json mons = json::array();
    for (auto& s : series) {
        const std::string fname = monitor_filename(s.spec);
        s.write_csv((fs::path(out_dir) / fname).string());
        json jm;
        jm["spec"] = s.spec.str();
        jm["csv"] = fname;
        jm["final_integral"] = s.final_integral();
        mons.push_back(jm);
    }
    manifest["monitors"] = mons;
    if (gronwall_spec && status == "complete") {
        for (const auto& s : series)
            if (s.spec.kind == MonitorSpec::Kind::GronwallEnvelope) {
                GronwallReport rep =
                    gronwall_envelope(s, omega34_track, omega0_l32, gronwall_spec->C,
                                      gronwall_spec->p, htheta_track, grad_htheta_track);
                double max_margin = 0.0;
                for (double m : rep.margin) max_margin = std::max(max_margin, m);
                json jg;
                jg["C"] = rep.C;
                jg["p"] = rep.p;
                jg["within_envelope"] = rep.within_envelope;
                jg["max_margin"] = max_margin;
                manifest["gronwall"] = jg;
            }
    }
    manifest["energy_balance_residual"] = result.energy_residual;
    manifest["cfl_warnings"] = result.cfl_warnings;
    manifest["status"] = status;
    // wall time is informational and excluded from determinism comparisons
    manifest["wall_time_seconds"] = 0.0;
    write_text(manifest_path, manifest.dump(2) + "\n");

    result.series = std::move(series);
    result.status = status;
    return result;
}

std::vector<MonitorSeries> recompute_monitors(const std::vector<std::string>& snapshot_paths,
                                              const std::vector<MonitorSpec>& specs,
                                              int threads) {
    std::vector<MonitorSeries> series(specs.size());
    for (std::size_t m = 0; m < specs.size(); ++m) series[m].spec = specs[m];
    std::vector<Snapshot> snaps(snapshot_paths.size());
    for (std::size_t i = 0; i < snapshot_paths.size(); ++i)
        snaps[i] = read_snapshot(snapshot_paths[i]);
    std::sort(snaps.begin(), snaps.end(),
              [](const Snapshot& a, const Snapshot& b) { return a.time < b.time; });
    for (const auto& snap : snaps) {
        VelocityState v = as_velocity(snap);
        std::vector<std::vector<double>> rows(series.size());
        parallel_for(std::int64_t(series.size()), resolve_threads(threads),
                     [&](std::int64_t m) { rows[m] = evaluate_monitor(specs[m], v); });
        for (std::size_t m = 0; m < series.size(); ++m)
            series[m].append(snap.time, std::move(rows[m]));
    }
    return series;
}

} // namespace critnorm
