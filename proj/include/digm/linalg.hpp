// Direct solvers for the two banded systems the scheme produces each step:
// a scalar tridiagonal system (solute update) and a block tridiagonal system
// whose interior rows are 2x2 blocks while the two endpoint rows are scalars
// (curve update with endpoint motion reduced to one tangential unknown).
//
// Both solvers are single-sweep eliminations.  The scalar solver uses partial
// pivoting between adjacent rows; the block solver eliminates without
// inter-row pivoting (the systems it is used for are symmetric positive
// definite) and inverts the small diagonal blocks directly.  A pivot or block
// determinant below 1e-14 relative to the matrix scale raises
// SingularSystemError.
#pragma once

#include <vector>

#include "digm/vec2.hpp"

namespace digm {

struct Tridiag {
  // sub[0] and super[n-1] are ignored.
  std::vector<double> sub, diag, super;
  int size() const { return static_cast<int>(diag.size()); }
};

std::vector<double> solve_tridiag(const Tridiag& a, std::vector<double> rhs);

struct BlockTridiag {
  // dims[i] is 1 or 2.  Blocks are stored as Mat2; rows/columns beyond a
  // row's dimension are ignored.  sub[i] couples row i to row i-1 (shape
  // dims[i] x dims[i-1]), super[i] couples row i to row i+1.  sub[0] and
  // super[n-1] are ignored.
  std::vector<int> dims;
  std::vector<Mat2> sub, diag, super;
  int size() const { return static_cast<int>(dims.size()); }
};

// rhs[i] holds a row's entries in .x (and .y when dims[i] == 2); the same
// layout is used for the solution.
std::vector<Vec2> solve_block_tridiag(const BlockTridiag& a, std::vector<Vec2> rhs);

}  // namespace digm
