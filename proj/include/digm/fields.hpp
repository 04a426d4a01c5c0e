// Piecewise linear nodal fields on a reference mesh, their interpolation
// operator, and the integral quantities the scheme is built from:
//
//   lumped_inner(u, v)   mass-lumped inner product: per element,
//                        (h/2) * (u_left v_left + u_right v_right)
//   l2_norm_sq(u)        exact squared L2 norm of the piecewise linear u:
//                        per element, (h/3) * (a^2 + a b + b^2)
//   h1_seminorm_sq(u)    exact squared H1 seminorm: per element, (b - a)^2 / h
//
// All functions require their operands to live on the same mesh (checked,
// std::invalid_argument).  Fields are immutable value types; reads from
// multiple threads are safe.
#pragma once

#include <functional>
#include <vector>

#include "digm/mesh.hpp"
#include "digm/vec2.hpp"

namespace digm {

class NodalScalarField {
 public:
  NodalScalarField(MeshPtr mesh, std::vector<double> values);

  static NodalScalarField zero(MeshPtr mesh);
  static NodalScalarField constant(MeshPtr mesh, double value);

  const Mesh& mesh() const { return *mesh_; }
  const MeshPtr& mesh_ptr() const { return mesh_; }
  const std::vector<double>& values() const { return values_; }
  double operator[](int j) const { return values_[j]; }
  int node_count() const { return static_cast<int>(values_.size()); }

 private:
  MeshPtr mesh_;
  std::vector<double> values_;
};

class NodalVectorField {
 public:
  NodalVectorField(MeshPtr mesh, std::vector<Vec2> values);

  static NodalVectorField zero(MeshPtr mesh);

  const Mesh& mesh() const { return *mesh_; }
  const MeshPtr& mesh_ptr() const { return mesh_; }
  const std::vector<Vec2>& values() const { return values_; }
  Vec2 operator[](int j) const { return values_[j]; }
  int node_count() const { return static_cast<int>(values_.size()); }

 private:
  MeshPtr mesh_;
  std::vector<Vec2> values_;
};

// Nodal interpolants of continuous data.
NodalScalarField interpolate_scalar(const std::function<double(double)>& fn, MeshPtr mesh);
NodalVectorField interpolate_vector(const std::function<Vec2(double)>& fn, MeshPtr mesh);

// Nodal difference a - b (same mesh required).
NodalScalarField operator-(const NodalScalarField& a, const NodalScalarField& b);
NodalVectorField operator-(const NodalVectorField& a, const NodalVectorField& b);

double lumped_inner(const NodalScalarField& u, const NodalScalarField& v);

double l2_norm_sq(const NodalScalarField& u);
double l2_norm_sq(const NodalVectorField& u);

double h1_seminorm_sq(const NodalScalarField& u);
double h1_seminorm_sq(const NodalVectorField& u);

}  // namespace digm
