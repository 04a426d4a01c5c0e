// Flat key=value run configuration with command-line overrides.
//
// Recognized keys:
//   scenario            example1 | example2 | example3
//   J                   element count (>= 2)
//   N                   time step count (>= 1)
//   T                   time horizon (> 0; defaults to the scenario's)
//   alpha               in (0, 1]; defaults to the scenario's
//   out                 output directory
//   snapshots           comma-separated times in [0, T]   (run command)
//   levels              comma-separated J:N pairs          (eoc command)
//   project_endpoints   true | false
//   normalize_tangent   true | false
//
// '#' starts a comment; blank lines are ignored; unknown keys are errors.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "digm/eoc.hpp"

namespace digm {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string scenario = "example1";
  std::optional<int> elements;
  std::optional<int> steps;
  std::optional<double> time_horizon;
  std::optional<double> alpha;
  std::string out_dir = "digm_out";
  std::optional<std::vector<double>> snapshots;
  std::vector<EocLevel> levels;
  bool project_endpoints = false;
  bool normalize_tangent = true;
};

// Parse a config file (throws ConfigError for unreadable files, malformed
// lines, unknown keys, or unparsable values).
RunConfig parse_config_file(const std::string& path);

// Apply one "key=value" override on top of an existing config.
void apply_config_entry(RunConfig& config, const std::string& key, const std::string& value);

}  // namespace digm
