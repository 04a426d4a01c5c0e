// Convergence measurement against a closed-form solution, and the order
// table built from a ladder of refinement levels.
//
// With E^n = interpolant of x(., t_n) minus the computed curve and Z^n the
// same for the solute, a run accumulates
//
//   er1 = max_n  |E^n|_H1^2          er2 = sum_n dt |(E^n - E^{n-1})/dt|_L2^2
//   er3 = max_n  |Z^n|_L2^2          er4 = sum_n dt |Z^n|_H1^2
//
// over the states entering each step, n = 0..N-1 (a record-then-advance
// loop), with |.|_H1 the seminorm.  The experimental order between two
// levels is ln(er_coarse/er_fine) / ln(h_coarse/h_fine).
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "digm/scenario.hpp"
#include "digm/simulation.hpp"

namespace digm {

struct ErrorAccumulators {
  double er1 = 0.0, er2 = 0.0, er3 = 0.0, er4 = 0.0;
  std::array<double, 4> as_array() const { return {er1, er2, er3, er4}; }
};

// Requires scenario.exact.  steps = 0 reports all-zero accumulators.
ErrorAccumulators run_with_errors(const Scenario& scenario, int elements, int steps,
                                  double time_horizon, double alpha,
                                  const SimulationOptions& options = {});

struct EocLevel {
  int elements = 0;
  int steps = 0;
};

struct EocRow {
  int elements = 0;
  int steps = 0;
  std::array<double, 4> errors{};
  std::array<std::optional<double>, 4> eoc{};   // empty on the coarsest level
};

struct EocTable {
  std::string scenario;
  double alpha = 1.0;
  double time_horizon = 0.0;
  std::vector<EocRow> rows;
};

// Levels must refine strictly (increasing element counts, at least two
// levels).  Levels are independent runs and execute concurrently.
EocTable eoc_study(const Scenario& scenario, const std::vector<EocLevel>& levels,
                   double time_horizon, double alpha, const SimulationOptions& options = {});

// Order estimates for an error sequence on meshes with the given element
// counts; entry k relates level k to level k-1.
std::vector<double> eoc_from_errors(const std::vector<int>& element_counts,
                                    const std::vector<double>& errors);

// Fixed-width human-readable table / machine-readable CSV.
std::string format_eoc_table(const EocTable& table);
std::string eoc_table_csv(const EocTable& table);

}  // namespace digm
