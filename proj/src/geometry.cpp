#include "digm/geometry.hpp"

#include <stdexcept>
#include <string>

#include "digm/errors.hpp"

namespace digm {

ElementGeometry element_geometry(const NodalVectorField& x) {
  const Mesh& mesh = x.mesh();
  const int ne = mesh.element_count();
  ElementGeometry geom;
  geom.speed.resize(ne);
  geom.tangent.resize(ne);
  geom.normal.resize(ne);
  for (int j = 0; j < ne; ++j) {
    const Vec2 chord = x[j + 1] - x[j];
    const double len = norm(chord);
    // Negated comparison so a non-finite chord also lands here.
    if (!(len >= kDegenerateChordLength)) {
      throw DegenerateMeshError(j, "degenerate curve element " + std::to_string(j) +
                                       ": chord length " + std::to_string(len));
    }
    geom.speed[j] = len / mesh.element_length(j);
    geom.tangent[j] = chord / len;
    geom.normal[j] = perp(geom.tangent[j]);
  }
  return geom;
}

ElementVelocities element_velocities(const NodalVectorField& x,
                                     const NodalVectorField& x_prev, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("element_velocities needs dt > 0");
  if (!x.mesh().same_nodes_as(x_prev.mesh())) {
    throw std::invalid_argument("element_velocities: curves live on different meshes");
  }
  const ElementGeometry geom = element_geometry(x);
  const int ne = geom.element_count();
  ElementVelocities vel;
  vel.psi_left.resize(ne);
  vel.psi_right.resize(ne);
  vel.v_left.resize(ne);
  vel.v_right.resize(ne);
  for (int j = 0; j < ne; ++j) {
    const Vec2 d_left = (x[j] - x_prev[j]) / dt;
    const Vec2 d_right = (x[j + 1] - x_prev[j + 1]) / dt;
    vel.psi_left[j] = dot(d_left, geom.tangent[j]);
    vel.psi_right[j] = dot(d_right, geom.tangent[j]);
    vel.v_left[j] = dot(d_left, geom.normal[j]);
    vel.v_right[j] = dot(d_right, geom.normal[j]);
  }
  return vel;
}

}  // namespace digm
