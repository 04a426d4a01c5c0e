#include "digm/solute_step.hpp"

#include <stdexcept>

#include "digm/geometry.hpp"

namespace digm {

namespace {

void validate(const SoluteStepInputs& in) {
  if (!(in.dt > 0.0)) throw std::invalid_argument("solute step needs dt > 0");
  if (!in.x_new.mesh().same_nodes_as(in.x_prev.mesh()) ||
      !in.x_new.mesh().same_nodes_as(in.w_prev.mesh())) {
    throw std::invalid_argument("solute step: fields live on different meshes");
  }
}

}  // namespace

SoluteSystem assemble_solute_system(const SoluteStepInputs& in) {
  validate(in);
  const Mesh& mesh = in.x_new.mesh();
  const int ne = mesh.element_count();
  if (ne < 2) throw std::invalid_argument("solute step needs at least 2 elements");

  const ElementGeometry geom_new = element_geometry(in.x_new);
  const ElementGeometry geom_prev = element_geometry(in.x_prev);
  const ElementVelocities vel = element_velocities(in.x_new, in.x_prev, in.dt);

  const int n = ne - 1;  // interior unknowns
  SoluteSystem sys;
  sys.matrix.sub.assign(n, 0.0);
  sys.matrix.diag.assign(n, 0.0);
  sys.matrix.super.assign(n, 0.0);
  sys.rhs.assign(n, 0.0);

  for (int i = 1; i <= n; ++i) {
    const int k = i - 1;              // matrix row of node i
    const int el = i - 1, er = i;     // elements left and right of node i
    const double hl = mesh.element_length(el);
    const double hr = mesh.element_length(er);

    // Lumped moving mass, new and previous.
    const double mass_new = 0.5 * (hl * geom_new.speed[el] + hr * geom_new.speed[er]);
    const double mass_prev = 0.5 * (hl * geom_prev.speed[el] + hr * geom_prev.speed[er]);
    sys.matrix.diag[k] += mass_new / in.dt;
    sys.rhs[k] += mass_prev * in.w_prev[i] / in.dt;

    // Exact diffusion on the new curve.
    const double bl = 1.0 / (hl * geom_new.speed[el]);
    const double br = 1.0 / (hr * geom_new.speed[er]);
    sys.matrix.sub[k] += -bl;
    sys.matrix.diag[k] += bl + br;
    sys.matrix.super[k] += -br;

    // Implicit advection tested against the hat gradient: the left element
    // contributes with weight +1/2, the right one with -1/2.
    sys.matrix.sub[k] += 0.5 * vel.psi_left[el];
    sys.matrix.diag[k] += 0.5 * (vel.psi_right[el] - vel.psi_left[er]);
    sys.matrix.super[k] += -0.5 * vel.psi_right[er];

    // Lumped source with element-local normal velocity, lagged solute.
    const double rho = mesh.node(i);
    sys.rhs[k] += 0.5 * hl * geom_new.speed[el] *
                  in.g(vel.v_right[el], in.w_prev[i], rho, in.t_prev);
    sys.rhs[k] += 0.5 * hr * geom_new.speed[er] *
                  in.g(vel.v_left[er], in.w_prev[i], rho, in.t_prev);
  }

  // Dirichlet lifting: move the known endpoint couplings to the rhs.
  sys.rhs[0] -= sys.matrix.sub[0] * in.w_b;
  sys.rhs[n - 1] -= sys.matrix.super[n - 1] * in.w_b;
  sys.matrix.sub[0] = 0.0;
  sys.matrix.super[n - 1] = 0.0;

  return sys;
}

NodalScalarField solute_step(const SoluteStepInputs& in) {
  const SoluteSystem sys = assemble_solute_system(in);
  const std::vector<double> interior = solve_tridiag(sys.matrix, sys.rhs);

  std::vector<double> w(in.w_prev.node_count());
  w.front() = in.w_b;
  for (std::size_t i = 0; i < interior.size(); ++i) w[i + 1] = interior[i];
  w.back() = in.w_b;
  return NodalScalarField(in.w_prev.mesh_ptr(), std::move(w));
}

}  // namespace digm
