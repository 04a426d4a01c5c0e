#include "digm/eoc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <sstream>
#include <stdexcept>

namespace digm {

ErrorAccumulators run_with_errors(const Scenario& scenario, int elements, int steps,
                                  double time_horizon, double alpha,
                                  const SimulationOptions& options) {
  if (!scenario.exact) {
    throw std::invalid_argument("error run needs a scenario with a closed-form solution");
  }
  const ExactSolution& exact = *scenario.exact;

  ErrorAccumulators acc;
  const double dt = steps > 0 ? time_horizon / steps : 0.0;
  // Position error of the previous level, for the discrete time derivative.
  std::optional<NodalVectorField> e_prev;

  // Errors sample the states entering each step (time levels 0..N-1), the
  // window of the usual record-then-advance measurement loop.
  run_simulation(scenario, elements, steps, time_horizon, alpha, options,
                 [&](int n, double t, const NodalVectorField& x, const NodalScalarField& w) {
                   if (n >= steps && steps > 0) return;
                   const MeshPtr mesh = x.mesh_ptr();
                   const NodalVectorField e =
                       interpolate_vector([&](double rho) { return exact.x(rho, t); }, mesh) - x;
                   const NodalScalarField z =
                       interpolate_scalar([&](double rho) { return exact.w(rho, t); }, mesh) - w;

                   acc.er1 = std::max(acc.er1, h1_seminorm_sq(e));
                   acc.er3 = std::max(acc.er3, l2_norm_sq(z));
                   if (n > 0) {
                     std::vector<Vec2> rate(e.node_count());
                     for (int j = 0; j < e.node_count(); ++j) {
                       rate[j] = (e[j] - (*e_prev)[j]) / dt;
                     }
                     acc.er2 += dt * l2_norm_sq(NodalVectorField(mesh, std::move(rate)));
                     acc.er4 += dt * h1_seminorm_sq(z);
                   }
                   e_prev = e;
                 });
  return acc;
}

std::vector<double> eoc_from_errors(const std::vector<int>& element_counts,
                                    const std::vector<double>& errors) {
  if (element_counts.size() != errors.size()) {
    throw std::invalid_argument("eoc: element counts and errors disagree in length");
  }
  std::vector<double> eoc;
  for (std::size_t k = 1; k < errors.size(); ++k) {
    const double h_ratio = static_cast<double>(element_counts[k - 1]) / element_counts[k];
    eoc.push_back((std::log(errors[k]) - std::log(errors[k - 1])) / std::log(h_ratio));
  }
  return eoc;
}

EocTable eoc_study(const Scenario& scenario, const std::vector<EocLevel>& levels,
                   double time_horizon, double alpha, const SimulationOptions& options) {
  if (levels.size() < 2) throw std::invalid_argument("eoc study needs at least two levels");
  for (std::size_t k = 1; k < levels.size(); ++k) {
    if (levels[k].elements <= levels[k - 1].elements) {
      throw std::invalid_argument("eoc study levels must refine the mesh strictly");
    }
  }

  std::vector<std::future<ErrorAccumulators>> runs;
  runs.reserve(levels.size());
  for (const EocLevel& level : levels) {
    runs.push_back(std::async(std::launch::async, [=, &scenario, &options] {
      return run_with_errors(scenario, level.elements, level.steps, time_horizon, alpha,
                             options);
    }));
  }

  EocTable table;
  table.scenario = scenario.name;
  table.alpha = alpha;
  table.time_horizon = time_horizon;
  table.rows.resize(levels.size());
  for (std::size_t k = 0; k < levels.size(); ++k) {
    EocRow& row = table.rows[k];
    row.elements = levels[k].elements;
    row.steps = levels[k].steps;
    row.errors = runs[k].get().as_array();
    if (k > 0) {
      const double h_ratio =
          static_cast<double>(levels[k - 1].elements) / levels[k].elements;
      for (int i = 0; i < 4; ++i) {
        row.eoc[i] =
            (std::log(row.errors[i]) - std::log(table.rows[k - 1].errors[i])) /
            std::log(h_ratio);
      }
    }
  }
  return table;
}

namespace {

std::string fixed(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

}  // namespace

std::string format_eoc_table(const EocTable& table) {
  std::ostringstream out;
  out << "# scenario=" << table.scenario << " alpha=" << fixed("%g", table.alpha)
      << " T=" << fixed("%g", table.time_horizon) << "\n";
  char header[160];
  std::snprintf(header, sizeof header, "%6s %8s %12s %6s %12s %6s %12s %6s %12s %6s\n", "J",
                "N", "er1", "eoc1", "er2", "eoc2", "er3", "eoc3", "er4", "eoc4");
  out << header;
  for (const EocRow& row : table.rows) {
    char line[256];
    std::string cells[4];
    for (int i = 0; i < 4; ++i) {
      cells[i] = row.eoc[i] ? fixed("%6.2f", *row.eoc[i]) : std::string(6, ' ').replace(5, 1, "-");
    }
    std::snprintf(line, sizeof line, "%6d %8d %12.4e %s %12.4e %s %12.4e %s %12.4e %s\n",
                  row.elements, row.steps, row.errors[0], cells[0].c_str(), row.errors[1],
                  cells[1].c_str(), row.errors[2], cells[2].c_str(), row.errors[3],
                  cells[3].c_str());
    out << line;
  }
  return out.str();
}

std::string eoc_table_csv(const EocTable& table) {
  std::ostringstream out;
  out << "# scenario=" << table.scenario << " alpha=" << fixed("%g", table.alpha)
      << " T=" << fixed("%g", table.time_horizon) << "\n";
  out << "J,N,er1,eoc1,er2,eoc2,er3,eoc3,er4,eoc4\n";
  for (const EocRow& row : table.rows) {
    out << row.elements << "," << row.steps;
    for (int i = 0; i < 4; ++i) {
      out << "," << fixed("%.17g", row.errors[i]) << ",";
      if (row.eoc[i]) out << fixed("%.17g", *row.eoc[i]);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace digm
