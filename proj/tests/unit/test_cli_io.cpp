// Configuration parsing, snapshot/figure emission, and the in-process
// command entry points with their exit codes.
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "digm/commands.hpp"
#include "digm/config.hpp"
#include "digm/output.hpp"
#include "doctest.h"

using namespace digm;
namespace fs = std::filesystem;

namespace {

// Fresh scratch directory under the build tree.
fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::current_path() / "test_scratch" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path write_config(const fs::path& dir, const std::string& text) {
  const fs::path path = dir / "test.cfg";
  std::ofstream out(path);
  out << text;
  return path;
}

int count_occurrences(const std::string& text, const std::string& needle) {
  int n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_SUITE("config") {
  TEST_CASE("full config file round trip") {
    const fs::path dir = scratch_dir("config_full");
    const fs::path path = write_config(dir,
                                       "# run setup\n"
                                       "scenario = example2\n"
                                       "J = 128          # elements\n"
                                       "N = 2000\n"
                                       "T = 2.5\n"
                                       "alpha = 0.1\n"
                                       "out = some_dir\n"
                                       "snapshots = 0, 0.5, 2.5\n"
                                       "levels = 10:80, 20:320\n"
                                       "project_endpoints = true\n"
                                       "normalize_tangent = false\n");
    const RunConfig c = parse_config_file(path.string());
    CHECK(c.scenario == "example2");
    CHECK(c.elements == 128);
    CHECK(c.steps == 2000);
    CHECK(c.time_horizon == 2.5);
    CHECK(c.alpha == 0.1);
    CHECK(c.out_dir == "some_dir");
    REQUIRE(c.snapshots.has_value());
    CHECK(c.snapshots->size() == 3);
    CHECK((*c.snapshots)[1] == 0.5);
    REQUIRE(c.levels.size() == 2);
    CHECK(c.levels[0].elements == 10);
    CHECK(c.levels[0].steps == 80);
    CHECK(c.levels[1].elements == 20);
    CHECK(c.levels[1].steps == 320);
    CHECK(c.project_endpoints == true);
    CHECK(c.normalize_tangent == false);
  }

  TEST_CASE("config errors") {
    const fs::path dir = scratch_dir("config_bad");
    CHECK_THROWS_AS(parse_config_file((dir / "missing.cfg").string()), ConfigError);
    CHECK_THROWS_AS(parse_config_file(write_config(dir, "bad line\n").string()),
                    ConfigError);
    CHECK_THROWS_AS(parse_config_file(write_config(dir, "Jay = 4\n").string()),
                    ConfigError);
    CHECK_THROWS_AS(parse_config_file(write_config(dir, "J = 10x\n").string()),
                    ConfigError);
    CHECK_THROWS_AS(parse_config_file(write_config(dir, "T = .\n").string()), ConfigError);
    CHECK_THROWS_AS(parse_config_file(write_config(dir, "levels = 10-80\n").string()),
                    ConfigError);
    CHECK_THROWS_AS(
        parse_config_file(write_config(dir, "project_endpoints = yep\n").string()),
        ConfigError);

    RunConfig c;
    CHECK_THROWS_AS(apply_config_entry(c, "whatever", "1"), ConfigError);
  }

  TEST_CASE("overrides replace file values") {
    RunConfig c;
    apply_config_entry(c, "J", "10");
    apply_config_entry(c, "J", "20");
    CHECK(c.elements == 20);
    apply_config_entry(c, "scenario", "example3");
    CHECK(c.scenario == "example3");
  }
}

TEST_SUITE("output") {
  TEST_CASE("snapshot values survive the text round trip bit for bit") {
    const MeshPtr mesh = make_uniform_mesh(4);
    const std::vector<Vec2> pts{{1.0 / 3.0, 0.1},
                                {-1e-17, 2.2250738585072014e-308},
                                {6.02214076e23, -0.72913845689204857},
                                {3.0, 4.0},
                                {-.9999999999999999, 1.0000000000000002}};
    std::vector<double> ws{0.0, 0.30000000000000004, -1.0 / 3.0, 1e300, -2.5};
    const NodalVectorField x(mesh, pts);
    const NodalScalarField w(mesh, ws);

    std::ostringstream out;
    write_snapshot_csv(out, x, w);
    std::istringstream in(out.str());
    std::string header;
    std::getline(in, header);
    CHECK(header == "rho,x0,x1,w");
    for (int j = 0; j <= 4; ++j) {
      std::string line;
      REQUIRE(std::getline(in, line));
      std::replace(line.begin(), line.end(), ',', ' ');
      std::istringstream cells(line);
      std::string c0, c1, c2, c3;
      REQUIRE((cells >> c0 >> c1 >> c2 >> c3));
      CHECK(std::strtod(c0.c_str(), nullptr) == mesh->node(j));
      CHECK(std::strtod(c1.c_str(), nullptr) == pts[j].x);
      CHECK(std::strtod(c2.c_str(), nullptr) == pts[j].y);
      CHECK(std::strtod(c3.c_str(), nullptr) == ws[j]);
    }
  }

  TEST_CASE("figures are well formed and carry one curve per snapshot") {
    const MeshPtr mesh = make_uniform_mesh(6);
    const Scenario s = example2();
    std::vector<Snapshot> snaps;
    for (const double t : {0.0, 0.5, 1.0}) {
      snaps.push_back({t, interpolate_vector([&](double rho) { return s.x0(rho) + Vec2{0.0, t}; },
                                             mesh),
                       NodalScalarField::constant(mesh, t)});
    }

    std::ostringstream iface;
    write_interface_svg(iface, snaps, s.plot_walls);
    const std::string isvg = iface.str();
    CHECK(isvg.rfind("<?xml", 0) == 0);
    CHECK(isvg.find("<svg") != std::string::npos);
    CHECK(isvg.find("</svg>") != std::string::npos);
    CHECK(count_occurrences(isvg, "<polyline") == 3);
    CHECK(count_occurrences(isvg, "<path") == 2);  // two strip walls

    std::ostringstream sol;
    write_solute_svg(sol, snaps);
    const std::string ssvg = sol.str();
    CHECK(ssvg.rfind("<?xml", 0) == 0);
    CHECK(ssvg.find("</svg>") != std::string::npos);
    CHECK(count_occurrences(ssvg, "<polyline") == 3);
  }
}

TEST_SUITE("commands") {
  TEST_CASE("run command writes snapshots and figures") {
    const fs::path dir = scratch_dir("cmd_run");
    RunConfig c;
    c.scenario = "example2";
    c.elements = 16;
    c.steps = 10;
    c.time_horizon = 0.1;
    c.out_dir = (dir / "out").string();
    std::ostringstream log, err;
    const int code = cmd_run(c, log, err);
    CHECK(code == 0);
    CHECK(err.str().empty());

    int csv_count = 0;
    for (const auto& entry : fs::directory_iterator(c.out_dir)) {
      if (entry.path().extension() == ".csv") ++csv_count;
    }
    CHECK(csv_count == 6);  // default: six evenly spaced times
    CHECK(fs::exists(fs::path(c.out_dir) / "snapshot_0.csv"));
    CHECK(fs::exists(fs::path(c.out_dir) / "snapshot_0.1.csv"));
    CHECK(fs::exists(fs::path(c.out_dir) / "interface.svg"));
    CHECK(fs::exists(fs::path(c.out_dir) / "solute.svg"));

    const std::string csv = slurp(fs::path(c.out_dir) / "snapshot_0.1.csv");
    CHECK(csv.rfind("rho,x0,x1,w", 0) == 0);
    CHECK(count_occurrences(csv, "\n") == 18);  // header + 17 nodes

    // Explicit snapshot list replaces the default set.
    RunConfig c2 = c;
    c2.snapshots = std::vector<double>{0.0, 0.05};
    c2.out_dir = (dir / "out2").string();
    CHECK(cmd_run(c2, log, err) == 0);
    int csv_count2 = 0;
    for (const auto& entry : fs::directory_iterator(c2.out_dir)) {
      if (entry.path().extension() == ".csv") ++csv_count2;
    }
    CHECK(csv_count2 == 2);
  }

  TEST_CASE("eoc command writes the study files") {
    const fs::path dir = scratch_dir("cmd_eoc");
    RunConfig c;
    c.scenario = "example1";
    c.time_horizon = 0.1;
    c.levels = {{4, 4}, {8, 16}};
    c.out_dir = (dir / "out").string();
    std::ostringstream log, err;
    const int code = cmd_eoc(c, log, err);
    CHECK(code == 0);
    CHECK(err.str().empty());
    CHECK(fs::exists(fs::path(c.out_dir) / "eoc.txt"));
    CHECK(fs::exists(fs::path(c.out_dir) / "eoc.csv"));
    CHECK(log.str().find("example1") != std::string::npos);
    const std::string csv = slurp(fs::path(c.out_dir) / "eoc.csv");
    CHECK(csv.find("er1") != std::string::npos);
  }

  TEST_CASE("configuration problems exit with code 1 before any solve") {
    const fs::path dir = scratch_dir("cmd_errors");
    std::ostringstream log;

    RunConfig missing_j;
    missing_j.scenario = "example1";
    missing_j.steps = 4;
    missing_j.out_dir = (dir / "a").string();
    std::ostringstream err1;
    CHECK(cmd_run(missing_j, log, err1) == 1);
    CHECK(err1.str().find("config error") != std::string::npos);

    RunConfig bogus;
    bogus.scenario = "examplo";
    bogus.elements = 8;
    bogus.steps = 4;
    std::ostringstream err2;
    CHECK(cmd_run(bogus, log, err2) == 1);

    RunConfig bad_alpha;
    bad_alpha.scenario = "example1";
    bad_alpha.elements = 8;
    bad_alpha.steps = 4;
    bad_alpha.alpha = 1.5;
    std::ostringstream err3;
    CHECK(cmd_run(bad_alpha, log, err3) == 1);

    RunConfig late_snapshot;
    late_snapshot.scenario = "example1";
    late_snapshot.elements = 8;
    late_snapshot.steps = 4;
    late_snapshot.time_horizon = 0.1;
    late_snapshot.snapshots = std::vector<double>{0.2};
    std::ostringstream err4;
    CHECK(cmd_run(late_snapshot, log, err4) == 1);

    RunConfig one_level;
    one_level.scenario = "example1";
    one_level.levels = {{10, 80}};
    std::ostringstream err5;
    CHECK(cmd_eoc(one_level, log, err5) == 1);

    RunConfig no_exact;
    no_exact.scenario = "example3";
    no_exact.levels = {{10, 80}, {20, 320}};
    std::ostringstream err6;
    CHECK(cmd_eoc(no_exact, log, err6) == 1);
  }

  TEST_CASE("a mid-run solver failure exits with code 2") {
    // Far past the closed-form collapse time the forcing turns non-finite and
    // the curve degenerates; the run must fail loudly.
    const fs::path dir = scratch_dir("cmd_blowup");
    RunConfig c;
    c.scenario = "example1";
    c.elements = 8;
    c.steps = 2;
    c.time_horizon = 3.0;
    c.out_dir = (dir / "out").string();
    std::ostringstream log, err;
    CHECK(cmd_run(c, log, err) == 2);
    CHECK(err.str().find("solver error") != std::string::npos);
  }
}
