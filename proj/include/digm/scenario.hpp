// Problem setups bundling initial data, forcing terms, walls, and (when one
// exists) the closed-form solution used for convergence measurement.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "digm/boundary.hpp"
#include "digm/forcing.hpp"
#include "digm/vec2.hpp"

namespace digm {

struct ExactSolution {
  std::function<Vec2(double rho, double t)> x;
  std::function<double(double rho, double t)> w;
};

// Polylines tracing the walls inside a plot window, for figure output.
using WallSampler = std::function<std::vector<std::vector<Vec2>>(
    double xmin, double xmax, double ymin, double ymax)>;

struct Scenario {
  std::string name;
  std::function<Vec2(double rho)> x0;
  std::function<double(double rho)> w0;
  double w_b = 0.0;
  ForcingF f;
  ForcingG g;
  EndpointBoundaries boundaries;
  std::optional<ExactSolution> exact;
  double default_time_horizon = 1.0;
  double default_alpha = 1.0;
  WallSampler plot_walls;   // may be empty
};

// Shrinking half circle over the horizontal axis with a closed-form pair
// (x, w); the forcing terms are built so that pair solves the system exactly.
// Runs on t in [0, 0.4].
Scenario example1();

// Grain boundary in the strip |p0| <= 1: straight segment flooded with
// solute from the walls, f = w^2, g = v w.  Develops a travelling wave.
Scenario example2();

// Same physics between cosine-rippled channel walls; the initial segment
// spans (-0.55, 0) to (1, 0) so both ends start on their walls.
Scenario example3();

// Lookup by name ("example1", ...); throws std::invalid_argument.
Scenario scenario_by_name(const std::string& name);
std::vector<std::string> scenario_names();

// Endpoint compatibility: x0 ends on the walls (within 1e-12).  The solute
// initial trace is NOT required to match w_b; the flooding setups start
// incompatible on purpose.  Throws std::invalid_argument.
void validate_scenario(const Scenario& s);

}  // namespace digm
