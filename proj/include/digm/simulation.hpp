// Time loop driving the two step solvers, with an observer hook for error
// accumulation and snapshot capture.
#pragma once

#include <functional>
#include <stdexcept>

#include "digm/fields.hpp"
#include "digm/scenario.hpp"

namespace digm {

struct SimulationOptions {
  bool project_endpoints = false;
  bool normalize_tangent = true;
};

// A step solver threw; carries which solver and at which time level.
class SolverFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Called at every time level n = 0..N with t = n*dt and the current fields.
using StepObserver =
    std::function<void(int n, double t, const NodalVectorField& x, const NodalScalarField& w)>;

// Runs scenario dynamics on a uniform mesh with J elements and N uniform
// steps of size T/N.  N = 0 only reports the initial data.  Throws
// std::invalid_argument for bad parameters and SolverFailure when a step
// solver fails.
void run_simulation(const Scenario& scenario, int elements, int steps, double time_horizon,
                    double alpha, const SimulationOptions& options,
                    const StepObserver& observe);

}  // namespace digm
