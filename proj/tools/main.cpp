// Command-line front end: time-stepping runs and mesh-refinement order
// studies for the coupled interface/solute solver.
//
//   digm run --config run.cfg [--J 128 --N 2000 --T 2.5 --alpha 1
//                              --scenario example2 --out out_dir --snapshots 0,1,2.5]
//   digm eoc --config eoc.cfg [--T 0.4 --alpha 0.1 --scenario example1 --out out_dir
//                              --levels 10:80,20:320]
//
// Flags override config file values.  Exit codes: 0 success, 1 configuration
// error, 2 solver failure.
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "digm/commands.hpp"

namespace {

struct Overrides {
  std::optional<std::string> config_path;
  std::optional<int> elements, steps;
  std::optional<double> time_horizon, alpha;
  std::optional<std::string> scenario, out_dir, snapshots, levels;
};

void add_common_options(CLI::App& cmd, Overrides& ov) {
  cmd.add_option("--config", ov.config_path, "key=value config file");
  cmd.add_option("--J", ov.elements, "number of elements");
  cmd.add_option("--N", ov.steps, "number of time steps");
  cmd.add_option("--T", ov.time_horizon, "time horizon");
  cmd.add_option("--alpha", ov.alpha, "tangential grading parameter in (0, 1]");
  cmd.add_option("--scenario", ov.scenario, "scenario name (example1|example2|example3)");
  cmd.add_option("--out", ov.out_dir, "output directory");
  cmd.add_option("--snapshots", ov.snapshots, "comma-separated snapshot times (run)");
  cmd.add_option("--levels", ov.levels, "comma-separated J:N refinement pairs (eoc)");
}

int load_and_dispatch(const Overrides& ov, int (*command)(digm::RunConfig, std::ostream&,
                                                          std::ostream&)) {
  digm::RunConfig config;
  try {
    if (ov.config_path) config = digm::parse_config_file(*ov.config_path);
    if (ov.snapshots) digm::apply_config_entry(config, "snapshots", *ov.snapshots);
    if (ov.levels) digm::apply_config_entry(config, "levels", *ov.levels);
  } catch (const digm::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  }
  if (ov.elements) config.elements = *ov.elements;
  if (ov.steps) config.steps = *ov.steps;
  if (ov.time_horizon) config.time_horizon = *ov.time_horizon;
  if (ov.alpha) config.alpha = *ov.alpha;
  if (ov.scenario) config.scenario = *ov.scenario;
  if (ov.out_dir) config.out_dir = *ov.out_dir;
  return command(std::move(config), std::cout, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interface evolution with solute transport: runs and order studies"};
  app.require_subcommand(1);

  Overrides run_ov, eoc_ov;
  CLI::App* run_cmd = app.add_subcommand("run", "time-stepping run with snapshot output");
  add_common_options(*run_cmd, run_ov);
  CLI::App* eoc_cmd = app.add_subcommand("eoc", "mesh-refinement order study");
  add_common_options(*eoc_cmd, eoc_ov);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (run_cmd->parsed()) return load_and_dispatch(run_ov, digm::cmd_run);
  return load_and_dispatch(eoc_ov, digm::cmd_eoc);
}
