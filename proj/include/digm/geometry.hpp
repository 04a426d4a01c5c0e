// Per-element geometry of a polygonal plane curve and its discrete velocity.
//
// A nodal vector field X defines one straight element per mesh element.  Each
// element carries a constant parametric speed |X_rho|, unit tangent T and unit
// normal N = perp(T).  The discrete velocity field (X - Xprev)/dt is resolved
// per element into tangential and normal parts at the element's two nodes;
// because T and N jump across nodes these values are element local.
#pragma once

#include <vector>

#include "digm/fields.hpp"
#include "digm/vec2.hpp"

namespace digm {

struct ElementGeometry {
  std::vector<double> speed;   // |X_rho| per element
  std::vector<Vec2> tangent;   // unit chord direction per element
  std::vector<Vec2> normal;    // perp(tangent) per element
  int element_count() const { return static_cast<int>(speed.size()); }
};

// Chord length below this threshold makes an element degenerate.
inline constexpr double kDegenerateChordLength = 1e-14;

// Throws DegenerateMeshError if an element's chord collapses.
ElementGeometry element_geometry(const NodalVectorField& x);

struct ElementVelocities {
  // Tangential (psi) and normal (v) parts of (X - Xprev)/dt at the left and
  // right node of each element, against that element's own frame.
  std::vector<double> psi_left, psi_right;
  std::vector<double> v_left, v_right;
  int element_count() const { return static_cast<int>(psi_left.size()); }
};

// Frames come from the newer curve x; the difference quotient uses both.
ElementVelocities element_velocities(const NodalVectorField& x,
                                     const NodalVectorField& x_prev, double dt);

}  // namespace digm
