#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "critnorm/inequality_lab.hpp"
#include "critnorm/monitors.hpp"
#include "critnorm/snapshot_io.hpp"

namespace critnorm {

/// Raised on malformed configs / CLI input; maps to exit code 2.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Declarative run description, parsed from "key = value" text.  Unknown
/// keys are rejected.  Schema (defaults in parentheses):
///   grid.n = 64            modes per axis, or grid.n1/n2/n3
///   grid.L = 6.2831853     box side, or grid.L1/L2/L3 (2 pi)
///   init.kind = taylor-green | random-solenoidal | perturbed-taylor-green | zero
///   init.seed = 1          init.amplitude = 1.0
///   init.band = 8          init.slope = 2.0     init.epsilon = 0.1
///   solver.nu = 1.0        solver.dt = 0.001    solver.t_end = 0.5
///   solver.cadence = 5
///   output.dir = out       output.snapshots = true
///   monitors = criterion:p=5, vorticity-l32, energy   (optional list)
///   threads = 4
struct RunConfig {
    int n1 = 64, n2 = 64, n3 = 64;
    double L1 = 2.0 * M_PI, L2 = 2.0 * M_PI, L3 = 2.0 * M_PI;
    std::string init_kind = "taylor-green";
    std::uint64_t seed = 1;
    double amplitude = 1.0;
    double band = 8.0;
    double slope = 2.0;
    double epsilon = 0.1;
    SolverConfig solver;
    std::string output_dir = "out";
    bool write_snapshots = true;
    std::vector<MonitorSpec> monitors;
    int threads = 0;

    static RunConfig parse_file(const std::string& path);
    static RunConfig parse_text(const std::string& text);

    GridPtr make_grid() const;
    VelocityState make_initial() const;
};

struct RunResult {
    std::string manifest_path;
    std::vector<std::string> snapshot_files;
    std::vector<MonitorSeries> series;
    double energy_residual = 0.0;
    int cfl_warnings = 0;
    std::string status; // "complete" | "blowup-suspected"
};

/// Executes a run: snapshots, monitor CSVs and a JSON manifest under
/// out_dir.  On a blow-up signal the partial output is kept and the
/// manifest records the status; the caller decides the exit code.
RunResult simulate_run(const RunConfig& cfg, const std::string& out_dir);

/// Recomputes monitors from stored snapshots (the `monitor` subcommand).
std::vector<MonitorSeries> recompute_monitors(const std::vector<std::string>& snapshot_paths,
                                              const std::vector<MonitorSpec>& specs, int threads);

} // namespace critnorm
