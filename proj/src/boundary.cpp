#include "digm/boundary.hpp"

#include <cmath>

#include "digm/errors.hpp"

namespace digm {

namespace {
constexpr double kGradientFloor = 1e-12;
}

Vec2 tangent_direction(const BoundaryMap& map, Vec2 p, bool normalize) {
  const Vec2 g = map.gradient(p);
  const double len = norm(g);
  if (len <= kGradientFloor) {
    throw SingularBoundaryError("wall gradient vanishes near (" + std::to_string(p.x) +
                                ", " + std::to_string(p.y) + ") on " + map.label);
  }
  const Vec2 t = perp(g);
  return normalize ? t / len : t;
}

Vec2 project_to_boundary(const BoundaryMap& map, Vec2 p, double tol) {
  Vec2 q = p;
  for (int iter = 0; iter < 50; ++iter) {
    const double f = map.value(q);
    if (std::abs(f) <= tol) return q;
    const Vec2 g = map.gradient(q);
    const double g2 = norm_sq(g);
    if (g2 <= kGradientFloor * kGradientFloor) {
      throw SingularBoundaryError("wall gradient vanishes during projection on " + map.label);
    }
    q -= (f / g2) * g;
  }
  throw ProjectionFailedError("projection onto " + map.label + " did not converge from (" +
                              std::to_string(p.x) + ", " + std::to_string(p.y) + ")");
}

BoundaryMap half_plane() {
  return {
      [](Vec2 p) { return p.y; },
      [](Vec2) { return Vec2{0.0, 1.0}; },
      "half_plane",
  };
}

BoundaryMap vertical_lines() {
  return {
      [](Vec2 p) { return std::abs(p.x) - 1.0; },
      [](Vec2 p) {
        if (p.x == 0.0) {
          throw SingularBoundaryError("vertical_lines gradient undefined at p0 = 0");
        }
        return Vec2{p.x > 0.0 ? 1.0 : -1.0, 0.0};
      },
      "vertical_lines",
  };
}

BoundaryMap cosine_channel_left() {
  return {
      [](Vec2 p) { return p.x + 0.05 * std::cos(12.0 * p.y) + 0.5; },
      [](Vec2 p) { return Vec2{1.0, -0.6 * std::sin(12.0 * p.y)}; },
      "cosine_channel_left",
  };
}

BoundaryMap cosine_channel_right() {
  return {
      [](Vec2 p) { return 0.05 * std::cos(20.0 * p.y) + 0.95 - p.x; },
      [](Vec2 p) { return Vec2{-1.0, -std::sin(20.0 * p.y)}; },
      "cosine_channel_right",
  };
}

}  // namespace digm
