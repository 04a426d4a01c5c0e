#include "digm/scenario.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace digm {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Vec2> sample_graph_x_of_y(const std::function<double(double)>& x_of_y,
                                      double ymin, double ymax, int samples = 256) {
  std::vector<Vec2> line(samples);
  for (int i = 0; i < samples; ++i) {
    const double y = ymin + (ymax - ymin) * i / (samples - 1);
    line[i] = {x_of_y(y), y};
  }
  return line;
}

}  // namespace

Scenario example1() {
  Scenario s;
  s.name = "example1";
  s.x0 = [](double rho) { return Vec2{std::cos(kPi * rho), std::sin(kPi * rho)}; };
  s.w0 = [](double rho) { return std::sin(kPi * rho); };
  s.w_b = 0.0;
  s.f = [](double w, double rho, double t) {
    const double c = std::cos(kPi * rho);
    return -w * w / (2.0 * std::pow(1.0 - t, 2.5)) - c * c / (2.0 * std::sqrt(1.0 - t));
  };
  s.g = [](double /*v*/, double w, double /*rho*/, double t) {
    return -w / (2.0 * (1.0 - t));
  };
  s.boundaries = {half_plane(), half_plane()};
  s.exact = ExactSolution{
      [](double rho, double t) {
        const double r = std::sqrt(1.0 - t);
        return Vec2{r * std::cos(kPi * rho), r * std::sin(kPi * rho)};
      },
      [](double rho, double t) { return (1.0 - t) * std::sin(kPi * rho); },
  };
  s.default_time_horizon = 0.4;
  s.default_alpha = 1.0;
  s.plot_walls = [](double xmin, double xmax, double, double) {
    return std::vector<std::vector<Vec2>>{{{xmin, 0.0}, {xmax, 0.0}}};
  };
  return s;
}

Scenario example2() {
  Scenario s;
  s.name = "example2";
  s.x0 = [](double rho) { return Vec2{2.0 * rho - 1.0, 0.0}; };
  s.w0 = [](double) { return 0.0; };
  s.w_b = 1.0;
  s.f = [](double w, double, double) { return w * w; };
  // The advancing interface deposits solute into the material it sweeps, so
  // the coupling removes solute where the normal velocity is positive.  A
  // source orientation (+v w) feeds back through f = w^2 and blows up in
  // finite time instead of settling into the travelling wave.
  s.g = [](double v, double w, double, double) { return -v * w; };
  s.boundaries = {vertical_lines(), vertical_lines()};
  s.default_time_horizon = 2.5;
  s.default_alpha = 1.0;
  s.plot_walls = [](double, double, double ymin, double ymax) {
    return std::vector<std::vector<Vec2>>{{{-1.0, ymin}, {-1.0, ymax}},
                                          {{1.0, ymin}, {1.0, ymax}}};
  };
  return s;
}

Scenario example3() {
  Scenario s;
  s.name = "example3";
  s.x0 = [](double rho) { return Vec2{-0.55 + 1.55 * rho, 0.0}; };
  s.w0 = [](double) { return 0.0; };
  s.w_b = 1.0;
  s.f = [](double w, double, double) { return w * w; };
  // Deposition sink, as in the straight-walled strip setup.
  s.g = [](double v, double w, double, double) { return -v * w; };
  s.boundaries = {cosine_channel_left(), cosine_channel_right()};
  s.default_time_horizon = 7.5;
  s.default_alpha = 1.0;
  s.plot_walls = [](double, double, double ymin, double ymax) {
    return std::vector<std::vector<Vec2>>{
        sample_graph_x_of_y([](double y) { return -0.05 * std::cos(12.0 * y) - 0.5; },
                            ymin, ymax),
        sample_graph_x_of_y([](double y) { return 0.05 * std::cos(20.0 * y) + 0.95; },
                            ymin, ymax),
    };
  };
  return s;
}

Scenario scenario_by_name(const std::string& name) {
  if (name == "example1") return example1();
  if (name == "example2") return example2();
  if (name == "example3") return example3();
  throw std::invalid_argument("unknown scenario '" + name + "'");
}

std::vector<std::string> scenario_names() { return {"example1", "example2", "example3"}; }

void validate_scenario(const Scenario& s) {
  if (!s.x0 || !s.w0 || !s.f || !s.g) {
    throw std::invalid_argument("scenario '" + s.name + "' is missing data functions");
  }
  if (!s.boundaries.left.value || !s.boundaries.left.gradient ||
      !s.boundaries.right.value || !s.boundaries.right.gradient) {
    throw std::invalid_argument("scenario '" + s.name + "' is missing wall maps");
  }
  const double f_left = s.boundaries.left.value(s.x0(0.0));
  const double f_right = s.boundaries.right.value(s.x0(1.0));
  if (std::abs(f_left) > 1e-12 || std::abs(f_right) > 1e-12) {
    throw std::invalid_argument("scenario '" + s.name +
                                "': initial curve endpoints are off the walls");
  }
}

}  // namespace digm
