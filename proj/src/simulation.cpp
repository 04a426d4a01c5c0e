#include "digm/simulation.hpp"

#include <string>
#include <utility>

#include "digm/curve_step.hpp"
#include "digm/solute_step.hpp"

namespace digm {

void run_simulation(const Scenario& scenario, int elements, int steps, double time_horizon,
                    double alpha, const SimulationOptions& options,
                    const StepObserver& observe) {
  validate_scenario(scenario);
  if (elements < 2) throw std::invalid_argument("simulation needs at least 2 elements");
  if (steps < 0) throw std::invalid_argument("simulation needs a nonnegative step count");
  if (!(time_horizon > 0.0)) throw std::invalid_argument("simulation needs T > 0");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must be in (0, 1]");

  const MeshPtr mesh = make_uniform_mesh(elements);
  NodalVectorField x = interpolate_vector(scenario.x0, mesh);
  NodalScalarField w = interpolate_scalar(scenario.w0, mesh);
  if (observe) observe(0, 0.0, x, w);
  if (steps == 0) return;

  const double dt = time_horizon / steps;
  for (int n = 1; n <= steps; ++n) {
    const double t_prev = (n - 1) * dt;
    NodalVectorField x_new = [&] {
      try {
        return curve_step({x, w, dt, alpha, t_prev, scenario.boundaries, scenario.f,
                           options.project_endpoints, options.normalize_tangent});
      } catch (const std::exception& e) {
        throw SolverFailure("curve step failed at time level " + std::to_string(n) + " (t = " +
                            std::to_string(n * dt) + "): " + e.what());
      }
    }();
    NodalScalarField w_new = [&] {
      try {
        return solute_step({x_new, x, w, dt, t_prev, scenario.w_b, scenario.g});
      } catch (const std::exception& e) {
        throw SolverFailure("solute step failed at time level " + std::to_string(n) + " (t = " +
                            std::to_string(n * dt) + "): " + e.what());
      }
    }();
    x = std::move(x_new);
    w = std::move(w_new);
    if (observe) observe(n, n * dt, x, w);
  }
}

}  // namespace digm
