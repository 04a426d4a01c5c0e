// One linearly implicit time step of the curve update.
//
// Unknowns are the new nodal positions.  The variational form combines a
// mass-lumped weighted velocity term (weights and frames taken from the
// previous curve), the exact stiffness of the new positions, and a lumped
// normal forcing term evaluated at the previous solute values:
//
//   sum_sigma (h/2) q [ d^T A dX/dt ]  +  (X_rho, xi_rho)  =
//   sum_sigma (h/2) q f(W, rho, t) (N . xi),
//   q = |Xprev_rho|^2,  A = alpha I + (1 - alpha) N N^T   per element.
//
// Endpoint nodes may only move along the wall tangent through their previous
// position: X_0 = Xprev_0 + delta * d with d = perp(grad F)/|grad F|.  That
// single scalar unknown replaces the endpoint's two Cartesian ones, and the
// endpoint test function is the hat function times d, which annihilates the
// wall-normal boundary term.  The no-penetration condition
// <X_0 - Xprev_0, grad F(Xprev_0)> = 0 then holds by construction.
//
// The assembled system is block tridiagonal (scalar endpoint rows, 2x2
// interior rows), symmetric positive definite, and solved directly.
#pragma once

#include "digm/boundary.hpp"
#include "digm/fields.hpp"
#include "digm/forcing.hpp"
#include "digm/linalg.hpp"

namespace digm {

struct CurveStepInputs {
  const NodalVectorField& x_prev;
  const NodalScalarField& w_prev;
  double dt = 0.0;
  double alpha = 1.0;           // grading of the tangential velocity penalty, in (0, 1]
  double t_prev = 0.0;          // time of the step's linearization point
  const EndpointBoundaries& boundaries;
  const ForcingF& f;
  bool project_endpoints = false;   // re-project endpoints onto the wall after the solve
  bool normalize_tangent = true;    // use unit wall tangents for the endpoint frame
  double projection_tol = 1e-12;
};

// Assembled system plus the endpoint frames needed to reconstruct positions.
struct CurveSystem {
  BlockTridiag matrix;
  std::vector<Vec2> rhs;
  Vec2 dir_left, dir_right;   // endpoint displacement directions
};

CurveSystem assemble_curve_system(const CurveStepInputs& in);

// Solves the assembled system and returns the new curve.  Throws
// std::invalid_argument for inconsistent inputs, DegenerateMeshError,
// SingularBoundaryError, SingularSystemError, ProjectionFailedError.
NodalVectorField curve_step(const CurveStepInputs& in);

}  // namespace digm
