#include <cmath>
#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include <doctest.h>

#include "fjhawkes/config.hpp"
#include "fjhawkes/errors.hpp"
#include "fjhawkes/experiment.hpp"
#include "fjhawkes/simulate.hpp"
#include "fjhawkes/svg.hpp"
#include "test_support.hpp"

using namespace fjhawkes;
using testsup::line_count;
using testsup::slurp;
using testsup::TempDir;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t hits = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++hits;
  }
  return hits;
}

}  // namespace

TEST_SUITE("experiment") {

TEST_CASE("materialize draws every quantity inside its range") {
  const System sys = materialize(ExperimentConfig{});
  REQUIRE(sys.net.n == 5);
  REQUIRE(sys.net.w.rows() == 5);
  REQUIRE(sys.net.w.cols() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < 5; ++j) sum += sys.net.w(i, j);
    CHECK(testsup::close(sum, 1.0, 1e-12));
    CHECK(sys.net.a[i] >= 0.4);
    CHECK(sys.net.a[i] < 0.9);
    CHECK(sys.net.b[i] >= -0.05);
    CHECK(sys.net.b[i] < 0.05);
    CHECK(sys.init.t0[i] >= 0.0);
    CHECK(sys.init.t0[i] < 2.0);
    CHECK(sys.init.t1[i] >= 0.0);
    CHECK(sys.init.t1[i] < 2.0);
    CHECK(sys.init.s0[i] == 0.1);
    CHECK(sys.init.h0[i] == 0.0);
    CHECK(sys.params.mu[i] == 0.1);
  }
  CHECK(sys.topology.n == 5);
  CHECK(sys.topology.seed == default_seed);
}

TEST_CASE("materialize is deterministic") {
  const ExperimentConfig cfg;
  const System s1 = materialize(cfg);
  const System s2 = materialize(cfg);
  CHECK(s1.net.w == s2.net.w);
  CHECK(s1.net.a == s2.net.a);
  CHECK(s1.net.b == s2.net.b);
  CHECK(s1.init == s2.init);
}

TEST_CASE("swapping the topology keeps the agent draws") {
  ExperimentConfig random_cfg;
  ExperimentConfig star_cfg;
  star_cfg.topology.kind = TopologyKind::star;

  const System r = materialize(random_cfg);
  const System s = materialize(star_cfg);
  CHECK(r.net.a == s.net.a);
  CHECK(r.net.b == s.net.b);
  CHECK(r.init.t0 == s.init.t0);
  CHECK(r.init.t1 == s.init.t1);
  CHECK(!(r.net.w == s.net.w));
}

TEST_CASE("absent t0 range starts from the anchor") {
  ExperimentConfig cfg;
  cfg.t0_range.reset();
  const System sys = materialize(cfg);
  CHECK(sys.init.t0 == sys.init.t1);
}

TEST_CASE("sensitivity scan walks the grid and writes one file") {
  const TempDir td("scan");
  ExperimentConfig cfg;
  cfg.scan = ScanSpec{"alpha", 0.0, 0.5, 101};
  cfg.output.directory = td.str();

  const std::vector<ScanRow> rows = sensitivity_scan(cfg);
  REQUIRE(rows.size() == 101);
  for (int k = 0; k < 101; ++k) {
    const double expect = 0.5 * static_cast<double>(k) / 100.0;
    CHECK(rows[static_cast<std::size_t>(k)].value == expect);
    CHECK(rows[static_cast<std::size_t>(k)].stable ==
          (rows[static_cast<std::size_t>(k)].rho < 1.0));
  }

  const std::string path = scan_csv_path(cfg);
  CHECK(path == td.str() + "/scan_alpha.csv");
  const std::string body = slurp(path);
  CHECK(body.substr(0, body.find('\n')) ==
        "param,rho,stable,verdict,mean_T_final,mean_S_final,converged_at");
  CHECK(line_count(body) == 102);

  // Same config, same bytes.
  (void)sensitivity_scan(cfg);
  CHECK(slurp(path) == body);
}

TEST_CASE("scan brackets the memory boundary") {
  const TempDir td("scan_beta");
  ExperimentConfig cfg;
  cfg.scan = ScanSpec{"beta", 0.0, 1.0, 21};
  cfg.output.directory = td.str();

  const std::vector<ScanRow> rows = sensitivity_scan(cfg);
  REQUIRE(rows.size() == 21);
  CHECK(rows[9].stable);  // beta = 0.45, radius near 0.95
  CHECK(rows[9].verdict == "converged");
  CHECK(rows[9].converged_at.has_value());
  CHECK(!rows[12].stable);  // beta = 0.60, radius near 1.10
  CHECK(rows[12].verdict == "diverged");
  CHECK(!rows[12].converged_at.has_value());
}

TEST_CASE("grid points outside the admissible region become error rows") {
  const TempDir td("scan_gamma");
  ExperimentConfig cfg;
  cfg.scan = ScanSpec{"gamma", 0.5, 1.0, 3};
  cfg.output.directory = td.str();

  const std::vector<ScanRow> rows = sensitivity_scan(cfg);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].verdict == "converged");
  CHECK(rows[2].verdict.rfind("error(", 0) == 0);  // gamma = 1 is out of range
  CHECK(!rows[2].note.empty());
  CHECK(std::isnan(rows[2].mean_trust_final));
  CHECK(rows[2].rho > 1.0);  // the spectrum itself is still reported
  CHECK(slurp(scan_csv_path(cfg)).find("error(") != std::string::npos);
}

TEST_CASE("scan respects the output toggles") {
  const TempDir td("scan_fmt");
  ExperimentConfig cfg;
  cfg.scan = ScanSpec{"beta", 0.0, 1.0, 5};
  cfg.output.directory = td.str();
  cfg.output.csv = false;
  cfg.output.svg = true;

  (void)sensitivity_scan(cfg);
  CHECK(!std::filesystem::exists(scan_csv_path(cfg)));
  CHECK(std::filesystem::exists(td.str() + "/scan_beta_rho.svg"));
  CHECK(std::filesystem::exists(td.str() + "/scan_beta_response.svg"));
  CHECK(slurp(td.str() + "/scan_beta_rho.svg").find("<svg") == 0);
}

TEST_CASE("scan requires a scan block") {
  ExperimentConfig cfg;
  CHECK_THROWS_AS(sensitivity_scan(cfg), InvalidSpec);
  CHECK_THROWS_AS(scan_csv_path(cfg), InvalidSpec);
}

TEST_CASE("topology comparison shares draws and reports groups") {
  const TempDir td("topo");
  ExperimentConfig cfg;
  cfg.n = 4;
  cfg.output.directory = td.str();

  const std::vector<TopologyReport> reports = topology_compare(cfg);
  REQUIRE(reports.size() == 3);
  CHECK(reports[0].name == "random");
  CHECK(reports[1].name == "echo_chamber");
  CHECK(reports[2].name == "star");

  // Only W differs between the three systems, so T0 is drawn identically.
  CHECK(reports[0].trust_initial == reports[1].trust_initial);
  CHECK(reports[0].trust_initial == reports[2].trust_initial);

  REQUIRE(reports[0].groups.size() == 1);
  CHECK(reports[0].groups[0].name == "all");
  CHECK(reports[0].groups[0].members == std::vector<std::size_t>{0, 1, 2, 3});
  REQUIRE(reports[1].groups.size() == 2);
  CHECK(reports[1].groups[0].name == "cluster_0");
  CHECK(reports[1].groups[1].name == "cluster_1");
  CHECK(reports[1].groups[0].members == std::vector<std::size_t>{0, 1});
  CHECK(reports[1].groups[1].members == std::vector<std::size_t>{2, 3});
  REQUIRE(reports[2].groups.size() == 2);
  CHECK(reports[2].groups[0].name == "hub");
  CHECK(reports[2].groups[1].name == "periphery");
  CHECK(reports[2].groups[0].members == std::vector<std::size_t>{0});

  // A one-member group mean is that member's trajectory.
  CHECK(reports[2].groups[0].mean_trust.front() == reports[2].trust_initial[0]);

  for (const TopologyReport& r : reports) {
    CHECK(r.verdict == "converged");
    CHECK(r.stable);
    REQUIRE(r.beta_star.has_value());
    CHECK(*r.beta_star > 0.4);
    CHECK(*r.beta_star < 0.6);
    REQUIRE(r.gamma_star.has_value());
    CHECK(*r.gamma_star > 0.5);
    CHECK(*r.gamma_star < 0.7);
  }

  for (const char* name : {"topology_random.csv", "topology_echo_chamber.csv",
                           "topology_star.csv", "topology_summary.csv"}) {
    CHECK(std::filesystem::exists(td.str() + "/" + name));
  }
  const std::string summary = slurp(td.str() + "/topology_summary.csv");
  CHECK(line_count(summary) == 4);
  CHECK(summary.substr(0, summary.find('\n')) ==
        "topology,rho,verdict,beta_star,gamma_star,alpha_star");

  const std::string echo = slurp(td.str() + "/topology_echo_chamber.csv");
  CHECK(echo.substr(0, echo.find('\n')) == "t,mean_T,mean_S,cluster_0_mean_T,cluster_1_mean_T");
}

TEST_CASE("trajectory files carry every state variable") {
  const TempDir td("traj");
  const testsup::Sys s = testsup::scalar_example();
  const Trajectory traj = run(s.init, s.params, s.net, RunSettings{5, 1e-10, 1e9});
  REQUIRE(traj.states.size() == 6);

  const std::string path = td.file("trajectory.csv");
  write_trajectory_csv(traj, path);
  const std::string body = slurp(path);
  CHECK(body.substr(0, body.find('\n')) == "t,T_0,S_0,H_0");
  CHECK(line_count(body) == 7);
  CHECK(body.find("\n0,") != std::string::npos);

  CHECK_THROWS_AS(write_trajectory_csv(Trajectory{}, td.file("none.csv")), EmptySeries);
}

TEST_CASE("svg charts are self-contained") {
  const TempDir td("svg");

  SUBCASE("a flat series still draws") {
    emit_svg({Series{"flat", {0.0, 1.0, 2.0}, {1.0, 1.0, 1.0}}}, "flat line",
             td.file("flat.svg"));
    const std::string body = slurp(td.file("flat.svg"));
    CHECK(body.rfind("<svg", 0) == 0);
    CHECK(count_occurrences(body, "<polyline") == 1);
    CHECK(body.find("flat line") != std::string::npos);
  }

  SUBCASE("every series gets a polyline and a legend entry") {
    emit_svg({Series{"first", {0.0, 1.0}, {0.0, 1.0}},
              Series{"second", {0.0, 1.0}, {1.0, 0.0}}},
             "two lines", td.file("two.svg"));
    const std::string body = slurp(td.file("two.svg"));
    CHECK(count_occurrences(body, "<polyline") == 2);
    CHECK(body.find(">first</text>") != std::string::npos);
    CHECK(body.find(">second</text>") != std::string::npos);
  }

  SUBCASE("out-of-range values are clamped and flagged") {
    emit_svg({Series{"spike", {0.0, 1.0, 2.0}, {0.5, 2e6, 1.0}}}, "spiky",
             td.file("clip.svg"), 1e6);
    CHECK(slurp(td.file("clip.svg")).find("[clipped at 1e+06]") != std::string::npos);
  }

  SUBCASE("nothing to draw is an error") {
    CHECK_THROWS_AS(emit_svg({}, "empty", td.file("no.svg")), EmptySeries);
    CHECK_THROWS_AS(emit_svg({Series{"ragged", {0.0, 1.0}, {1.0}}}, "bad", td.file("no.svg")),
                    EmptySeries);
    const double nan = std::nan("");
    CHECK_THROWS_AS(emit_svg({Series{"gaps", {0.0, 1.0}, {nan, nan}}}, "bad", td.file("no.svg")),
                    EmptySeries);
  }
}

}  // TEST_SUITE
