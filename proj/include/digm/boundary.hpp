// Walls as level sets.  A wall is the zero set of a scalar map F with its
// gradient; curve endpoints slide along the wall tangent perp(grad F).
//
// The gradient need not have unit length: tangent_direction normalizes it,
// and the Newton projection divides by |grad F|^2, so only a vanishing
// gradient is fatal (SingularBoundaryError).
#pragma once

#include <functional>
#include <string>

#include "digm/vec2.hpp"

namespace digm {

struct BoundaryMap {
  std::function<double(Vec2)> value;    // F
  std::function<Vec2(Vec2)> gradient;   // grad F
  std::string label;
};

// Wall maps for the curve's two parameter ends (rho = 0 and rho = 1).
struct EndpointBoundaries {
  BoundaryMap left;    // at rho = 0
  BoundaryMap right;   // at rho = 1
};

// Unit tangent of the wall through p: perp(grad F)/|perp(grad F)|.
// With normalize = false the perp of the raw gradient is returned.
Vec2 tangent_direction(const BoundaryMap& map, Vec2 p, bool normalize = true);

// Newton iteration q <- q - F(q) grad F(q) / |grad F(q)|^2 until |F(q)| <= tol.
// Throws ProjectionFailedError after 50 iterations without convergence.
Vec2 project_to_boundary(const BoundaryMap& map, Vec2 p, double tol = 1e-12);

// The horizontal axis as lower wall of the upper half plane: F(p) = p1.
BoundaryMap half_plane();

// Pair of vertical walls at p0 = +-1: F(p) = |p0| - 1.  The gradient is
// undefined on the axis p0 = 0 and throws there.
BoundaryMap vertical_lines();

// Cosine-rippled channel walls:
//   left:  F(p) = p0 + 0.05 cos(12 p1) + 0.5
//   right: F(p) = 0.05 cos(20 p1) + 0.95 - p0
BoundaryMap cosine_channel_left();
BoundaryMap cosine_channel_right();

}  // namespace digm
