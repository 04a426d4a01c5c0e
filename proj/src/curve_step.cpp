#include "digm/curve_step.hpp"

#include <stdexcept>

#include "digm/geometry.hpp"

namespace digm {

namespace {

void validate(const CurveStepInputs& in) {
  if (!(in.dt > 0.0)) throw std::invalid_argument("curve step needs dt > 0");
  if (!(in.alpha > 0.0 && in.alpha <= 1.0)) {
    throw std::invalid_argument("curve step needs alpha in (0, 1]");
  }
  if (!in.x_prev.mesh().same_nodes_as(in.w_prev.mesh())) {
    throw std::invalid_argument("curve step: position and solute meshes differ");
  }
}

}  // namespace

CurveSystem assemble_curve_system(const CurveStepInputs& in) {
  validate(in);
  const Mesh& mesh = in.x_prev.mesh();
  const int ne = mesh.element_count();
  const NodalVectorField& xp = in.x_prev;

  const ElementGeometry geom = element_geometry(xp);
  std::vector<double> q(ne);       // squared parametric speed per element
  std::vector<Mat2> a_mat(ne);     // velocity weighting per element
  for (int e = 0; e < ne; ++e) {
    q[e] = geom.speed[e] * geom.speed[e];
    a_mat[e] = Mat2::identity(in.alpha) + (1.0 - in.alpha) * Mat2::outer(geom.normal[e]);
  }

  const Vec2 d0 = tangent_direction(in.boundaries.left, xp[0], in.normalize_tangent);
  const Vec2 d1 = tangent_direction(in.boundaries.right, xp[ne], in.normalize_tangent);

  auto forcing = [&](int node) { return in.f(in.w_prev[node], mesh.node(node), in.t_prev); };

  const int n = ne + 1;
  CurveSystem sys;
  sys.dir_left = d0;
  sys.dir_right = d1;
  sys.matrix.dims.assign(n, 2);
  sys.matrix.dims.front() = sys.matrix.dims.back() = 1;
  sys.matrix.sub.assign(n, Mat2{});
  sys.matrix.diag.assign(n, Mat2{});
  sys.matrix.super.assign(n, Mat2{});
  sys.rhs.assign(n, Vec2{});

  // Endpoint rows: one tangential equation for the displacement delta.
  {
    const double h = mesh.element_length(0);
    const double lump = 0.5 * h * q[0] * quad_form(d0, a_mat[0], d0) / in.dt;
    sys.matrix.diag[0].m00 = lump + norm_sq(d0) / h;
    sys.matrix.super[0] = {-d0.x / h, -d0.y / h, 0.0, 0.0};
    sys.rhs[0].x = 0.5 * h * q[0] * forcing(0) * dot(geom.normal[0], d0) - dot(xp[0], d0) / h;
  }
  {
    const double h = mesh.element_length(ne - 1);
    const double lump = 0.5 * h * q[ne - 1] * quad_form(d1, a_mat[ne - 1], d1) / in.dt;
    sys.matrix.diag[n - 1].m00 = lump + norm_sq(d1) / h;
    sys.matrix.sub[n - 1] = {-d1.x / h, -d1.y / h, 0.0, 0.0};
    sys.rhs[n - 1].x =
        0.5 * h * q[ne - 1] * forcing(ne) * dot(geom.normal[ne - 1], d1) - dot(xp[ne], d1) / h;
  }

  // Interior rows: lumped weighted velocity block plus exact stiffness.
  for (int j = 1; j < n - 1; ++j) {
    const double hl = mesh.element_length(j - 1);
    const double hr = mesh.element_length(j);
    const Mat2 lump =
        (0.5 / in.dt) * (hl * q[j - 1] * a_mat[j - 1] + hr * q[j] * a_mat[j]);
    sys.matrix.diag[j] = lump + Mat2::identity(1.0 / hl + 1.0 / hr);

    const double fj = forcing(j);
    Vec2 rhs = lump * xp[j] +
               0.5 * fj * (hl * q[j - 1] * geom.normal[j - 1] + hr * q[j] * geom.normal[j]);

    if (j == 1) {
      // Left neighbour is the constrained endpoint: known part to the rhs,
      // tangential displacement coupling into the scalar column.
      rhs += (1.0 / hl) * xp[0];
      sys.matrix.sub[j] = {-d0.x / hl, 0.0, -d0.y / hl, 0.0};
    } else {
      sys.matrix.sub[j] = Mat2::identity(-1.0 / hl);
    }
    if (j == n - 2) {
      rhs += (1.0 / hr) * xp[ne];
      sys.matrix.super[j] = {-d1.x / hr, 0.0, -d1.y / hr, 0.0};
    } else {
      sys.matrix.super[j] = Mat2::identity(-1.0 / hr);
    }
    sys.rhs[j] = rhs;
  }

  return sys;
}

NodalVectorField curve_step(const CurveStepInputs& in) {
  const CurveSystem sys = assemble_curve_system(in);
  const std::vector<Vec2> u = solve_block_tridiag(sys.matrix, sys.rhs);

  const int last = static_cast<int>(u.size()) - 1;
  std::vector<Vec2> x(u.size());
  x[0] = in.x_prev[0] + u[0].x * sys.dir_left;
  for (int j = 1; j < last; ++j) x[j] = u[j];
  x[last] = in.x_prev[last] + u[last].x * sys.dir_right;

  if (in.project_endpoints) {
    x[0] = project_to_boundary(in.boundaries.left, x[0], in.projection_tol);
    x[last] = project_to_boundary(in.boundaries.right, x[last], in.projection_tol);
  }
  return NodalVectorField(in.x_prev.mesh_ptr(), std::move(x));
}

}  // namespace digm
