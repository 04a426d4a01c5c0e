#include "digm/mesh.hpp"

#include <stdexcept>
#include <string>

namespace digm {

Mesh::Mesh(std::vector<double> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 3) {
    throw std::invalid_argument("mesh needs at least 2 elements (3 nodes)");
  }
  if (nodes_.front() != 0.0 || nodes_.back() != 1.0) {
    throw std::invalid_argument("mesh nodes must start at 0 and end at 1");
  }
  lengths_.resize(nodes_.size() - 1);
  for (std::size_t j = 0; j + 1 < nodes_.size(); ++j) {
    const double h = nodes_[j + 1] - nodes_[j];
    if (!(h > 0.0)) {
      throw std::invalid_argument("mesh nodes must be strictly increasing (element " +
                                  std::to_string(j) + ")");
    }
    lengths_[j] = h;
  }
}

bool Mesh::same_nodes_as(const Mesh& other) const {
  return this == &other || nodes_ == other.nodes_;
}

MeshPtr make_uniform_mesh(int element_count) {
  if (element_count < 2) {
    throw std::invalid_argument("uniform mesh needs at least 2 elements");
  }
  std::vector<double> nodes(element_count + 1);
  for (int j = 0; j <= element_count; ++j) {
    nodes[j] = static_cast<double>(j) / element_count;
  }
  return std::make_shared<const Mesh>(std::move(nodes));
}

}  // namespace digm
