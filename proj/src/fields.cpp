#include "digm/fields.hpp"

#include <stdexcept>

namespace digm {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

void require_same_mesh(const Mesh& a, const Mesh& b) {
  require(a.same_nodes_as(b), "fields live on different meshes");
}

}  // namespace

NodalScalarField::NodalScalarField(MeshPtr mesh, std::vector<double> values)
    : mesh_(std::move(mesh)), values_(std::move(values)) {
  require(mesh_ != nullptr, "scalar field needs a mesh");
  require(static_cast<int>(values_.size()) == mesh_->node_count(),
          "scalar field value count does not match mesh node count");
}

NodalScalarField NodalScalarField::zero(MeshPtr mesh) {
  return constant(std::move(mesh), 0.0);
}

NodalScalarField NodalScalarField::constant(MeshPtr mesh, double value) {
  require(mesh != nullptr, "scalar field needs a mesh");
  std::vector<double> values(mesh->node_count(), value);
  return NodalScalarField(std::move(mesh), std::move(values));
}

NodalVectorField::NodalVectorField(MeshPtr mesh, std::vector<Vec2> values)
    : mesh_(std::move(mesh)), values_(std::move(values)) {
  require(mesh_ != nullptr, "vector field needs a mesh");
  require(static_cast<int>(values_.size()) == mesh_->node_count(),
          "vector field value count does not match mesh node count");
}

NodalVectorField NodalVectorField::zero(MeshPtr mesh) {
  require(mesh != nullptr, "vector field needs a mesh");
  std::vector<Vec2> values(mesh->node_count(), Vec2{});
  return NodalVectorField(std::move(mesh), std::move(values));
}

NodalScalarField interpolate_scalar(const std::function<double(double)>& fn, MeshPtr mesh) {
  require(mesh != nullptr, "interpolation needs a mesh");
  std::vector<double> values(mesh->node_count());
  for (int j = 0; j < mesh->node_count(); ++j) values[j] = fn(mesh->node(j));
  return NodalScalarField(std::move(mesh), std::move(values));
}

NodalVectorField interpolate_vector(const std::function<Vec2(double)>& fn, MeshPtr mesh) {
  require(mesh != nullptr, "interpolation needs a mesh");
  std::vector<Vec2> values(mesh->node_count());
  for (int j = 0; j < mesh->node_count(); ++j) values[j] = fn(mesh->node(j));
  return NodalVectorField(std::move(mesh), std::move(values));
}

NodalScalarField operator-(const NodalScalarField& a, const NodalScalarField& b) {
  require_same_mesh(a.mesh(), b.mesh());
  std::vector<double> values(a.node_count());
  for (int j = 0; j < a.node_count(); ++j) values[j] = a[j] - b[j];
  return NodalScalarField(a.mesh_ptr(), std::move(values));
}

NodalVectorField operator-(const NodalVectorField& a, const NodalVectorField& b) {
  require_same_mesh(a.mesh(), b.mesh());
  std::vector<Vec2> values(a.node_count());
  for (int j = 0; j < a.node_count(); ++j) values[j] = a[j] - b[j];
  return NodalVectorField(a.mesh_ptr(), std::move(values));
}

double lumped_inner(const NodalScalarField& u, const NodalScalarField& v) {
  require_same_mesh(u.mesh(), v.mesh());
  const Mesh& mesh = u.mesh();
  double sum = 0.0;
  for (int j = 0; j < mesh.element_count(); ++j) {
    sum += 0.5 * mesh.element_length(j) * (u[j] * v[j] + u[j + 1] * v[j + 1]);
  }
  return sum;
}

double l2_norm_sq(const NodalScalarField& u) {
  const Mesh& mesh = u.mesh();
  double sum = 0.0;
  for (int j = 0; j < mesh.element_count(); ++j) {
    const double a = u[j], b = u[j + 1];
    sum += mesh.element_length(j) / 3.0 * (a * a + a * b + b * b);
  }
  return sum;
}

double l2_norm_sq(const NodalVectorField& u) {
  const Mesh& mesh = u.mesh();
  double sum = 0.0;
  for (int j = 0; j < mesh.element_count(); ++j) {
    const Vec2 a = u[j], b = u[j + 1];
    sum += mesh.element_length(j) / 3.0 * (norm_sq(a) + dot(a, b) + norm_sq(b));
  }
  return sum;
}

double h1_seminorm_sq(const NodalScalarField& u) {
  const Mesh& mesh = u.mesh();
  double sum = 0.0;
  for (int j = 0; j < mesh.element_count(); ++j) {
    const double d = u[j + 1] - u[j];
    sum += d * d / mesh.element_length(j);
  }
  return sum;
}

double h1_seminorm_sq(const NodalVectorField& u) {
  const Mesh& mesh = u.mesh();
  double sum = 0.0;
  for (int j = 0; j < mesh.element_count(); ++j) {
    sum += norm_sq(u[j + 1] - u[j]) / mesh.element_length(j);
  }
  return sum;
}

}  // namespace digm
