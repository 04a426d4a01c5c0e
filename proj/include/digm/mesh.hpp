// 1D reference mesh on [0,1]: nodes rho_0 < ... < rho_J and element lengths.
//
// Element j (0-based, j = 0..J-1) spans [rho_j, rho_{j+1}].  Meshes are
// immutable after construction; fields reference them through shared
// ownership so a field can never outlive its mesh.
#pragma once

#include <memory>
#include <vector>

namespace digm {

class Mesh {
 public:
  // Nodes must be strictly increasing with rho_0 = 0 and rho_J = 1 exactly,
  // and there must be at least two elements.  Throws std::invalid_argument.
  explicit Mesh(std::vector<double> nodes);

  int element_count() const { return static_cast<int>(nodes_.size()) - 1; }
  int node_count() const { return static_cast<int>(nodes_.size()); }

  double node(int j) const { return nodes_[j]; }
  // Length h of element j, i.e. rho_{j+1} - rho_j.
  double element_length(int j) const { return lengths_[j]; }

  const std::vector<double>& nodes() const { return nodes_; }

  bool same_nodes_as(const Mesh& other) const;

 private:
  std::vector<double> nodes_;
  std::vector<double> lengths_;
};

using MeshPtr = std::shared_ptr<const Mesh>;

// Uniform mesh with the given number of elements (at least 2).
MeshPtr make_uniform_mesh(int element_count);

}  // namespace digm
