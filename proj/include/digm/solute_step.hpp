// One linearly implicit time step of the solute update on the moving curve.
//
// With M_j = sum over elements at node j of (h/2)|X_rho| (the lumped moving
// mass) the interior equations for the new values W are
//
//   ( M W - Mprev Wprev )/dt                   backward difference in time
//   + exact diffusion with weights 1/|X_rho|   per element of the new curve
//   + implicit advection (Psi W, eta_rho)      Psi = element-local tangential
//                                              velocity of the step
//   = lumped source |X_rho| g(V, Wprev)        V = element-local normal
//                                              velocity, source lagged in W.
//
// Endpoint values are eliminated exactly: the returned field carries w_b at
// both ends bit for bit, and the tridiagonal solve runs on interior nodes
// only with the Dirichlet coupling moved to the right-hand side.
#pragma once

#include "digm/fields.hpp"
#include "digm/forcing.hpp"
#include "digm/linalg.hpp"

namespace digm {

struct SoluteStepInputs {
  const NodalVectorField& x_new;    // curve after the position update
  const NodalVectorField& x_prev;
  const NodalScalarField& w_prev;
  double dt = 0.0;
  double t_prev = 0.0;
  double w_b = 0.0;                 // endpoint Dirichlet value
  const ForcingG& g;
};

// Interior system (node 1 .. J-1) with Dirichlet lifting applied.
struct SoluteSystem {
  Tridiag matrix;
  std::vector<double> rhs;
};

SoluteSystem assemble_solute_system(const SoluteStepInputs& in);

// Throws std::invalid_argument for inconsistent inputs, DegenerateMeshError,
// SingularSystemError.
NodalScalarField solute_step(const SoluteStepInputs& in);

}  // namespace digm
