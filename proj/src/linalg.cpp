#include "digm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "digm/errors.hpp"

namespace digm {

namespace {

constexpr double kPivotRel = 1e-14;

double max_abs_entry(const Tridiag& a) {
  double m = 0.0;
  const int n = a.size();
  for (int i = 0; i < n; ++i) {
    m = std::max(m, std::abs(a.diag[i]));
    if (i > 0) m = std::max(m, std::abs(a.sub[i]));
    if (i + 1 < n) m = std::max(m, std::abs(a.super[i]));
  }
  return m;
}

double max_abs_entry(const BlockTridiag& a) {
  double m = 0.0;
  auto scan = [&m](const Mat2& b, int rows, int cols) {
    const double e[2][2] = {{b.m00, b.m01}, {b.m10, b.m11}};
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m = std::max(m, std::abs(e[r][c]));
  };
  const int n = a.size();
  for (int i = 0; i < n; ++i) {
    scan(a.diag[i], a.dims[i], a.dims[i]);
    if (i > 0) scan(a.sub[i], a.dims[i], a.dims[i - 1]);
    if (i + 1 < n) scan(a.super[i], a.dims[i], a.dims[i + 1]);
  }
  return m;
}

// Inverse of the leading dim x dim block, determinant checked against tol.
Mat2 invert_block(const Mat2& d, int dim, double tol, int row) {
  if (dim == 1) {
    if (std::abs(d.m00) <= tol) {
      throw SingularSystemError("singular 1x1 diagonal block at row " + std::to_string(row));
    }
    return {1.0 / d.m00, 0.0, 0.0, 0.0};
  }
  const double det = d.m00 * d.m11 - d.m01 * d.m10;
  if (std::abs(det) <= tol * std::max({std::abs(d.m00), std::abs(d.m01), std::abs(d.m10),
                                       std::abs(d.m11), tol})) {
    throw SingularSystemError("singular 2x2 diagonal block at row " + std::to_string(row));
  }
  return {d.m11 / det, -d.m01 / det, -d.m10 / det, d.m00 / det};
}

}  // namespace

std::vector<double> solve_tridiag(const Tridiag& a, std::vector<double> rhs) {
  const int n = a.size();
  if (n < 1 || static_cast<int>(a.sub.size()) != n || static_cast<int>(a.super.size()) != n ||
      static_cast<int>(rhs.size()) != n) {
    throw std::invalid_argument("solve_tridiag: inconsistent band sizes");
  }
  const double tol = kPivotRel * std::max(1.0, max_abs_entry(a));

  // Banded LU with partial pivoting; the row swap creates one extra
  // superdiagonal (d2).
  std::vector<double> low(a.sub), dia(a.diag), up(a.super), up2(n, 0.0);
  for (int i = 0; i + 1 < n; ++i) {
    if (std::abs(low[i + 1]) > std::abs(dia[i])) {
      std::swap(dia[i], low[i + 1]);
      std::swap(up[i], dia[i + 1]);
      if (i + 2 < n) std::swap(up2[i], up[i + 1]);
      std::swap(rhs[i], rhs[i + 1]);
    }
    if (std::abs(dia[i]) <= tol) {
      throw SingularSystemError("singular tridiagonal system at row " + std::to_string(i));
    }
    const double m = low[i + 1] / dia[i];
    dia[i + 1] -= m * up[i];
    if (i + 2 < n) up[i + 1] -= m * up2[i];
    rhs[i + 1] -= m * rhs[i];
  }
  if (std::abs(dia[n - 1]) <= tol) {
    throw SingularSystemError("singular tridiagonal system at row " + std::to_string(n - 1));
  }

  std::vector<double> x(n);
  x[n - 1] = rhs[n - 1] / dia[n - 1];
  if (n >= 2) x[n - 2] = (rhs[n - 2] - up[n - 2] * x[n - 1]) / dia[n - 2];
  for (int i = n - 3; i >= 0; --i) {
    x[i] = (rhs[i] - up[i] * x[i + 1] - up2[i] * x[i + 2]) / dia[i];
  }
  return x;
}

std::vector<Vec2> solve_block_tridiag(const BlockTridiag& a, std::vector<Vec2> rhs) {
  const int n = a.size();
  if (n < 1 || static_cast<int>(a.sub.size()) != n || static_cast<int>(a.diag.size()) != n ||
      static_cast<int>(a.super.size()) != n || static_cast<int>(rhs.size()) != n) {
    throw std::invalid_argument("solve_block_tridiag: inconsistent band sizes");
  }
  for (int i = 0; i < n; ++i) {
    if (a.dims[i] != 1 && a.dims[i] != 2) {
      throw std::invalid_argument("solve_block_tridiag: row dimensions must be 1 or 2");
    }
  }
  const double tol = kPivotRel * std::max(1.0, max_abs_entry(a));

  // The full 2x2 products below are only valid when entries outside a
  // block's declared shape are zero, so clear them first.
  auto trim = [](Mat2 b, int rows, int cols) {
    if (rows < 2) b.m10 = b.m11 = 0.0;
    if (cols < 2) b.m01 = b.m11 = 0.0;
    return b;
  };
  std::vector<Mat2> dia(n), up(n), low(n);
  for (int i = 0; i < n; ++i) {
    dia[i] = trim(a.diag[i], a.dims[i], a.dims[i]);
    if (i > 0) low[i] = trim(a.sub[i], a.dims[i], a.dims[i - 1]);
    if (i + 1 < n) up[i] = trim(a.super[i], a.dims[i], a.dims[i + 1]);
    if (a.dims[i] < 2) rhs[i].y = 0.0;
  }

  for (int i = 1; i < n; ++i) {
    const Mat2 inv = invert_block(dia[i - 1], a.dims[i - 1], tol, i - 1);
    const Mat2 l = low[i] * inv;
    dia[i] = dia[i] - l * up[i - 1];
    rhs[i] -= l * rhs[i - 1];
  }

  std::vector<Vec2> x(n);
  x[n - 1] = invert_block(dia[n - 1], a.dims[n - 1], tol, n - 1) * rhs[n - 1];
  for (int i = n - 2; i >= 0; --i) {
    x[i] = invert_block(dia[i], a.dims[i], tol, i) * (rhs[i] - up[i] * x[i + 1]);
  }
  return x;
}

}  // namespace digm
