// Scenario data: frozen values, wall compatibility, and finite-difference
// verification that the closed-form pair of the shrinking-circle setup
// solves the strong system for any tangential grading.
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "digm/scenario.hpp"
#include "doctest.h"
#include "support/fd.hpp"

using namespace digm;
using digm::testing::fd_derivative;
using digm::testing::fd_second_derivative;

namespace {

constexpr double kPi = std::numbers::pi;

struct PointData {
  Vec2 x, x_t, x_rho, x_rhorho;
  Vec2 tangent, normal;
  double speed = 0.0, psi = 0.0, v = 0.0, w = 0.0;
};

PointData probe(const ExactSolution& exact, double rho, double t) {
  PointData d;
  d.x = exact.x(rho, t);
  d.x_t = {fd_derivative([&](double s) { return exact.x(rho, s).x; }, t),
           fd_derivative([&](double s) { return exact.x(rho, s).y; }, t)};
  d.x_rho = {fd_derivative([&](double r) { return exact.x(r, t).x; }, rho),
             fd_derivative([&](double r) { return exact.x(r, t).y; }, rho)};
  d.x_rhorho = {fd_second_derivative([&](double r) { return exact.x(r, t).x; }, rho),
                fd_second_derivative([&](double r) { return exact.x(r, t).y; }, rho)};
  d.speed = norm(d.x_rho);
  d.tangent = d.x_rho / d.speed;
  d.normal = perp(d.tangent);
  d.psi = dot(d.x_t, d.tangent);
  d.v = dot(d.x_t, d.normal);
  d.w = exact.w(rho, t);
  return d;
}

constexpr double kSampleRho[] = {0.13, 0.37, 0.5, 0.71, 0.9};
constexpr double kSampleT[] = {0.05, 0.2, 0.35};

}  // namespace

TEST_SUITE("scenarios") {
  TEST_CASE("lookup table") {
    CHECK(scenario_names().size() == 3);
    CHECK(scenario_by_name("example2").name == "example2");
    CHECK_THROWS_AS(scenario_by_name("nope"), std::invalid_argument);
    for (const std::string& name : scenario_names()) {
      validate_scenario(scenario_by_name(name));
    }
  }

  TEST_CASE("shrinking-circle setup: frozen data") {
    const Scenario s = example1();
    CHECK(s.w_b == 0.0);
    CHECK(s.default_time_horizon == 0.4);
    CHECK(s.default_alpha == 1.0);
    REQUIRE(s.exact.has_value());

    CHECK(norm(s.x0(0.0) - Vec2{1.0, 0.0}) <= 1e-15);
    CHECK(norm(s.x0(0.5) - Vec2{0.0, 1.0}) <= 1e-15);
    CHECK(norm(s.x0(1.0) - Vec2{-1.0, 0.0}) <= 1e-15);
    for (const double rho : kSampleRho) {
      CHECK(norm(s.exact->x(rho, 0.0) - s.x0(rho)) <= 1e-15);
      CHECK(std::abs(s.exact->w(rho, 0.0) - s.w0(rho)) <= 1e-15);
      // Boundary trace of the solute matches the Dirichlet value for all t.
      CHECK(std::abs(s.exact->w(0.0, rho * 0.4) - s.w_b) <= 1e-15);
      CHECK(std::abs(s.exact->w(1.0, rho * 0.4) - s.w_b) <= 1e-15);
    }

    // Along the closed-form pair, the curve forcing collapses to a function
    // of time alone and the solute source to a function of rho alone.
    for (const double t : kSampleT) {
      for (const double rho : kSampleRho) {
        const double w = s.exact->w(rho, t);
        CHECK(s.f(w, rho, t) ==
              doctest::Approx(-0.5 / std::sqrt(1.0 - t)).epsilon(1e-13));
        CHECK(s.g(123.0, w, rho, t) ==
              doctest::Approx(-0.5 * std::sin(kPi * rho)).epsilon(1e-13));
      }
    }
  }

  TEST_CASE("shrinking-circle setup: endpoints ride the wall for all time") {
    const Scenario s = example1();
    for (const double t : kSampleT) {
      const Vec2 a = s.exact->x(0.0, t);
      const Vec2 b = s.exact->x(1.0, t);
      CHECK(std::abs(s.boundaries.left.value(a)) <= 1e-15);
      CHECK(std::abs(s.boundaries.right.value(b)) <= 1e-15);
      // Orthogonal contact: x_rho is parallel to grad F at the ends.
      for (const double rho : {0.0, 1.0}) {
        const Vec2 xr = {fd_derivative([&](double r) { return s.exact->x(r, t).x; }, rho),
                         fd_derivative([&](double r) { return s.exact->x(r, t).y; }, rho)};
        const BoundaryMap& map = rho == 0.0 ? s.boundaries.left : s.boundaries.right;
        const Vec2 g = map.gradient(s.exact->x(rho, t));
        CHECK(std::abs(dot(xr, perp(g))) <= 1e-9 * norm(xr));
      }
    }
  }

  TEST_CASE("shrinking-circle pair solves the curve equation for any grading") {
    const Scenario s = example1();
    for (const double alpha : {1.0, 0.3}) {
      double worst = 0.0;
      for (const double t : kSampleT) {
        for (const double rho : kSampleRho) {
          const PointData d = probe(*s.exact, rho, t);
          const Vec2 r = alpha * d.x_t + (1.0 - alpha) * dot(d.x_t, d.normal) * d.normal -
                         d.x_rhorho / (d.speed * d.speed) -
                         s.f(d.w, rho, t) * d.normal;
          worst = std::max({worst, std::abs(r.x), std::abs(r.y)});
        }
      }
      CHECK(worst <= 1e-8);
    }
  }

  TEST_CASE("shrinking-circle pair solves the solute equation") {
    const Scenario s = example1();
    double worst = 0.0;
    for (const double t : kSampleT) {
      for (const double rho : kSampleRho) {
        const PointData d = probe(*s.exact, rho, t);
        // Outer derivatives of quantities whose inner pieces are themselves
        // finite differences; the nested truncation stays far below the
        // acceptance threshold with the default stencil width.
        auto speed_at = [&](double r, double tt) {
          const Vec2 xr = {fd_derivative([&](double rr) { return s.exact->x(rr, tt).x; }, r),
                           fd_derivative([&](double rr) { return s.exact->x(rr, tt).y; }, r)};
          return norm(xr);
        };
        const double mass_t = fd_derivative(
            [&](double tt) { return speed_at(rho, tt) * s.exact->w(rho, tt); }, t);
        const double diffusion = fd_derivative(
            [&](double r) {
              const double w_r =
                  fd_derivative([&](double rr) { return s.exact->w(rr, t); }, r);
              return w_r / speed_at(r, t);
            },
            rho);
        const double advection = fd_derivative(
            [&](double r) {
              const PointData p = probe(*s.exact, r, t);
              return p.psi * p.w;
            },
            rho);
        const double residual =
            mass_t - diffusion - advection - d.speed * s.g(d.v, d.w, rho, t);
        worst = std::max(worst, std::abs(residual));
      }
    }
    CHECK(worst <= 1e-8);
  }

  TEST_CASE("strip setup: frozen data") {
    const Scenario s = example2();
    CHECK_FALSE(s.exact.has_value());
    CHECK(s.w_b == 1.0);
    CHECK(s.default_time_horizon == 2.5);
    CHECK(norm(s.x0(0.0) - Vec2{-1.0, 0.0}) <= 1e-15);
    CHECK(norm(s.x0(1.0) - Vec2{1.0, 0.0}) <= 1e-15);
    CHECK(s.w0(0.37) == 0.0);
    CHECK(s.f(2.0, 0.3, 1.7) == 4.0);
    // A positive normal velocity removes solute (deposition into the swept
    // material); a source orientation here destabilises the wave.
    CHECK(s.g(3.0, 2.0, 0.3, 1.7) == -6.0);
    const auto walls = s.plot_walls(-2.0, 2.0, -1.0, 1.0);
    CHECK(walls.size() == 2);
  }

  TEST_CASE("channel setup: frozen data") {
    const Scenario s = example3();
    CHECK_FALSE(s.exact.has_value());
    CHECK(s.w_b == 1.0);
    CHECK(s.default_time_horizon == 7.5);
    CHECK(norm(s.x0(0.0) - Vec2{-0.55, 0.0}) <= 1e-15);
    CHECK(norm(s.x0(1.0) - Vec2{1.0, 0.0}) <= 1e-15);
    CHECK(std::abs(s.boundaries.left.value(s.x0(0.0))) <= 1e-12);
    CHECK(std::abs(s.boundaries.right.value(s.x0(1.0))) <= 1e-12);
    CHECK(s.f(0.5, 0.0, 0.0) == 0.25);
    const auto walls = s.plot_walls(-1.0, 1.5, -0.5, 0.5);
    CHECK(walls.size() == 2);
    for (const auto& line : walls) CHECK(line.size() >= 2);
  }

  TEST_CASE("validation rejects endpoints off the walls") {
    Scenario s = example2();
    s.x0 = [](double rho) { return Vec2{2.0 * rho - 1.0, 0.25}; };
    CHECK_NOTHROW(validate_scenario(s));  // strip walls ignore height
    s.x0 = [](double rho) { return Vec2{1.9 * rho - 0.9, 0.0}; };
    CHECK_THROWS_AS(validate_scenario(s), std::invalid_argument);
    Scenario missing = example1();
    missing.f = nullptr;
    CHECK_THROWS_AS(validate_scenario(missing), std::invalid_argument);
  }
}
