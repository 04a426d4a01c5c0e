#include "digm/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <vector>

#include "digm/output.hpp"
#include "digm/simulation.hpp"

namespace digm {

namespace {

namespace fs = std::filesystem;

struct ResolvedRun {
  Scenario scenario;
  int elements = 0;
  int steps = 0;
  double time_horizon = 0.0;
  double alpha = 1.0;
  SimulationOptions options;
};

// Shared validation; throws ConfigError with a user-facing message.
ResolvedRun resolve(const RunConfig& config, bool need_steps) {
  ResolvedRun run;
  try {
    run.scenario = scenario_by_name(config.scenario);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  run.time_horizon = config.time_horizon.value_or(run.scenario.default_time_horizon);
  run.alpha = config.alpha.value_or(run.scenario.default_alpha);
  if (!(run.time_horizon > 0.0)) throw ConfigError("T must be positive");
  if (!(run.alpha > 0.0 && run.alpha <= 1.0)) throw ConfigError("alpha must be in (0, 1]");
  if (need_steps) {
    if (!config.elements) throw ConfigError("J is required (config key or --J)");
    if (!config.steps) throw ConfigError("N is required (config key or --N)");
    run.elements = *config.elements;
    run.steps = *config.steps;
    if (run.elements < 2) throw ConfigError("J must be at least 2");
    if (run.steps < 1) throw ConfigError("N must be at least 1");
  }
  run.options.project_endpoints = config.project_endpoints;
  run.options.normalize_tangent = config.normalize_tangent;
  return run;
}

std::vector<double> resolve_snapshots(const RunConfig& config, double time_horizon) {
  std::vector<double> times;
  if (config.snapshots) {
    times = *config.snapshots;
  } else {
    for (int k = 0; k <= 5; ++k) times.push_back(time_horizon * k / 5.0);
  }
  for (const double t : times) {
    if (t < 0.0 || t > time_horizon * (1.0 + 1e-12)) {
      throw ConfigError("snapshot time " + format_double(t) + " outside [0, T]");
    }
  }
  std::sort(times.begin(), times.end());
  return times;
}

fs::path prepare_out_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory '" + dir + "': " + ec.message());
  return fs::path(dir);
}

std::string snapshot_file_name(double t) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "snapshot_%g.csv", t);
  return buf;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace

int cmd_run(RunConfig config, std::ostream& log, std::ostream& err) {
  try {
    const ResolvedRun run = resolve(config, /*need_steps=*/true);
    const std::vector<double> snapshot_times = resolve_snapshots(config, run.time_horizon);
    const fs::path out_dir = prepare_out_dir(config.out_dir);

    // Map each requested time to its nearest time level.
    const double dt = run.time_horizon / run.steps;
    std::vector<int> levels(snapshot_times.size());
    for (std::size_t k = 0; k < snapshot_times.size(); ++k) {
      levels[k] = std::clamp(static_cast<int>(std::lround(snapshot_times[k] / dt)), 0,
                             run.steps);
    }

    std::vector<Snapshot> snapshots;
    run_simulation(run.scenario, run.elements, run.steps, run.time_horizon, run.alpha,
                   run.options,
                   [&](int n, double, const NodalVectorField& x, const NodalScalarField& w) {
                     for (std::size_t k = 0; k < levels.size(); ++k) {
                       if (levels[k] == n) {
                         snapshots.push_back({snapshot_times[k], x, w});
                       }
                     }
                   });

    for (const Snapshot& snap : snapshots) {
      std::ofstream out(out_dir / snapshot_file_name(snap.time));
      if (!out) throw std::runtime_error("cannot write snapshot file");
      write_snapshot_csv(out, snap.curve, snap.solute);
    }
    {
      std::ofstream out(out_dir / "interface.svg");
      write_interface_svg(out, snapshots, run.scenario.plot_walls);
    }
    {
      std::ofstream out(out_dir / "solute.svg");
      write_solute_svg(out, snapshots);
    }
    log << "wrote " << snapshots.size() << " snapshots, interface.svg, solute.svg to "
        << out_dir.string() << "\n";
    return 0;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "solver error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_eoc(RunConfig config, std::ostream& log, std::ostream& err) {
  try {
    const ResolvedRun run = resolve(config, /*need_steps=*/false);
    if (!run.scenario.exact) {
      throw ConfigError("scenario '" + run.scenario.name +
                        "' has no closed-form solution for an order study");
    }
    if (config.levels.size() < 2) {
      throw ConfigError("eoc needs at least two levels (config key 'levels = J:N,J:N,...')");
    }
    for (std::size_t k = 0; k < config.levels.size(); ++k) {
      if (config.levels[k].elements < 2 || config.levels[k].steps < 1) {
        throw ConfigError("eoc level " + std::to_string(k + 1) + " is not runnable");
      }
      if (k > 0 && config.levels[k].elements <= config.levels[k - 1].elements) {
        throw ConfigError("eoc levels must refine the mesh strictly");
      }
    }
    const fs::path out_dir = prepare_out_dir(config.out_dir);

    const EocTable table =
        eoc_study(run.scenario, config.levels, run.time_horizon, run.alpha, run.options);
    const std::string text = format_eoc_table(table);
    write_file(out_dir / "eoc.txt", text);
    write_file(out_dir / "eoc.csv", eoc_table_csv(table));
    log << text;
    return 0;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "solver error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace digm
