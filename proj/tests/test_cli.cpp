#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "fjhawkes/cli.hpp"
#include "test_support.hpp"

using testsup::slurp;
using testsup::spew;
using testsup::TempDir;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = fjhawkes::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// Value following "<key>" on its own line of the report.
std::string line_value(const std::string& text, const std::string& key) {
  const auto pos = text.find(key);
  REQUIRE(pos != std::string::npos);
  const auto end = text.find('\n', pos);
  return text.substr(pos + key.size(), end - pos - key.size());
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("global flags short-circuit") {
  CHECK(cli({}).code == 1);
  CHECK(cli({}).err.rfind("usage error", 0) == 0);

  const CliResult help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("simulate") != std::string::npos);
  CHECK(help.out.find("boundary") != std::string::npos);

  const CliResult version = cli({"--version"});
  CHECK(version.code == 0);
  CHECK(version.out == "0.1.0\n");
}

TEST_CASE("argument mistakes are usage errors") {
  CHECK(cli({"frobnicate"}).code == 1);
  CHECK(cli({"simulate", "--bogus"}).code == 1);
  CHECK(cli({"simulate", "--bogus"}).err.rfind("usage error", 0) == 0);
}

TEST_CASE("validate reports the materialized system") {
  const TempDir td("cli_validate");
  spew(td.file("ok.json"), R"({"n": 3})");
  const CliResult r = cli({"validate", "--config", td.file("ok.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("configuration valid: n = 3") != std::string::npos);

  spew(td.file("bad.json"), R"({"gamma": 1.5})");
  const CliResult bad = cli({"validate", "--config", td.file("bad.json")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("gamma") != std::string::npos);

  CHECK(cli({"validate", "--config", td.file("missing.json")}).code == 3);
}

TEST_CASE("simulate writes the trajectory and summarizes it") {
  const TempDir td("cli_simulate");
  spew(td.file("cfg.json"), R"({"n": 3, "output": {"directory": ")" + td.str() + R"("}})");

  const CliResult r = cli({"simulate", "--config", td.file("cfg.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: converged at t = ") != std::string::npos);
  CHECK(r.out.find("final mean trust: ") != std::string::npos);
  CHECK(std::filesystem::exists(td.str() + "/trajectory.csv"));

  SUBCASE("step budget override caps the run") {
    const CliResult capped =
        cli({"simulate", "--config", td.file("cfg.json"), "--steps", "3"});
    CHECK(capped.code == 0);
    CHECK(capped.out.find("verdict: max_steps_reached") != std::string::npos);
    CHECK(capped.out.find("steps recorded: 3") != std::string::npos);

    CHECK(cli({"simulate", "--config", td.file("cfg.json"), "--steps", "0"}).code == 2);
  }

  SUBCASE("svg output is opt-in") {
    spew(td.file("svg.json"), R"({"n": 3, "output": {"directory": ")" + td.str() +
                                  R"(", "formats": ["csv", "svg"]}})");
    CHECK(cli({"simulate", "--config", td.file("svg.json")}).code == 0);
    CHECK(std::filesystem::exists(td.str() + "/trajectory.svg"));
  }

  SUBCASE("--out redirects every artifact") {
    const TempDir other("cli_simulate_out");
    CHECK(cli({"simulate", "--config", td.file("cfg.json"), "--out", other.str()}).code == 0);
    CHECK(std::filesystem::exists(other.str() + "/trajectory.csv"));
  }
}

TEST_CASE("equilibrium prints the per-agent fixed point") {
  const TempDir td("cli_eq");
  spew(td.file("cfg.json"), R"({"n": 3})");
  const CliResult r = cli({"equilibrium", "--config", td.file("cfg.json")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("agent,T_star,S_star\n", 0) == 0);
  CHECK(r.out.find("\n0,") != std::string::npos);
  CHECK(r.out.find("valid: true") != std::string::npos);
}

TEST_CASE("stability reports the spectrum even when unstable") {
  const TempDir td("cli_stab");
  spew(td.file("cfg.json"), R"({"n": 3})");
  const CliResult r = cli({"stability", "--config", td.file("cfg.json")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("rho: ", 0) == 0);
  CHECK(r.out.find("stable: true") != std::string::npos);

  spew(td.file("hot.json"), R"({"n": 3, "beta": 0.7})");
  const CliResult hot = cli({"stability", "--config", td.file("hot.json")});
  CHECK(hot.code == 0);  // instability is a finding, not a failure
  CHECK(hot.out.find("stable: false") != std::string::npos);

  SUBCASE("seed override changes the drawn system") {
    const CliResult s1 = cli({"stability", "--config", td.file("cfg.json"), "--seed", "1"});
    const CliResult s2 = cli({"stability", "--config", td.file("cfg.json"), "--seed", "2"});
    CHECK(s1.code == 0);
    CHECK(s2.code == 0);
    CHECK(s1.out != s2.out);
  }
}

TEST_CASE("scan runs are reproducible byte for byte") {
  const TempDir td("cli_scan");
  spew(td.file("cfg.json"), R"({"n": 3})");

  const CliResult r = cli({"scan", "--config", td.file("cfg.json"), "--param", "beta",
                           "--range", "0:1:101", "--out", td.str()});
  CHECK(r.code == 0);
  CHECK(r.out.find("scanned beta over [0, 1] in 101 points") != std::string::npos);
  const std::string csv_path = td.str() + "/scan_beta.csv";
  REQUIRE(std::filesystem::exists(csv_path));
  const std::string first = slurp(csv_path);
  CHECK(testsup::line_count(first) == 102);

  CHECK(cli({"scan", "--config", td.file("cfg.json"), "--param", "beta", "--range",
             "0:1:101", "--out", td.str()})
            .code == 0);
  CHECK(slurp(csv_path) == first);

  SUBCASE("a config scan block works without flags") {
    spew(td.file("block.json"),
         R"({"n": 3, "scan": {"parameter": "alpha", "lo": 0, "hi": 0.5, "count": 5},)"
         R"( "output": {"directory": ")" + td.str() + R"("}})");
    const CliResult block = cli({"scan", "--config", td.file("block.json")});
    CHECK(block.code == 0);
    CHECK(block.out.find("scanned alpha over [0, 0.5] in 5 points") != std::string::npos);
  }

  SUBCASE("without a parameter the scan is refused") {
    CHECK(cli({"scan", "--config", td.file("cfg.json")}).code == 2);
  }

  SUBCASE("malformed ranges are rejected") {
    CHECK(cli({"scan", "--config", td.file("cfg.json"), "--param", "beta", "--range", "abc"})
              .code == 2);
    CHECK(cli({"scan", "--config", td.file("cfg.json"), "--param", "beta", "--range",
               "0:1:2:3"})
              .code == 2);
  }
}

TEST_CASE("boundary locates critical parameter values") {
  const TempDir td("cli_boundary");
  spew(td.file("uncoupled.json"), R"({"n": 3, "alpha": 0})");
  spew(td.file("coupled.json"), R"({"n": 3, "alpha": 0.05, "beta": 0.3})");

  SUBCASE("uncoupled memory crosses exactly at one half") {
    const CliResult r = cli({"boundary", "--config", td.file("uncoupled.json"), "--param",
                             "beta"});
    CHECK(r.code == 0);
    CHECK(line_value(r.out, "critical value: ") == "0.5");
    CHECK(line_value(r.out, "bisection iterations: ") == "0");
  }

  SUBCASE("memory decay boundary lands near its known window") {
    const CliResult r = cli({"boundary", "--config", td.file("coupled.json"), "--param",
                             "gamma"});
    CHECK(r.code == 0);
    const double gstar = std::stod(line_value(r.out, "critical value: "));
    CHECK(gstar > 0.65);
    CHECK(gstar < 0.75);
  }

  SUBCASE("--param is mandatory") {
    CHECK(cli({"boundary", "--config", td.file("coupled.json")}).code == 2);
  }

  SUBCASE("a window with no crossing is reported as an error") {
    const CliResult r = cli({"boundary", "--config", td.file("coupled.json"), "--param",
                             "alpha", "--range", "0:0.001"});
    CHECK(r.code == 3);
    CHECK(r.err.find("does not change sign") != std::string::npos);
  }
}

TEST_CASE("topology comparison prints one line per layout") {
  const TempDir td("cli_topology");
  spew(td.file("cfg.json"), R"({"n": 4, "output": {"directory": ")" + td.str() + R"("}})");
  const CliResult r = cli({"topology", "--config", td.file("cfg.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("random: rho = ") != std::string::npos);
  CHECK(r.out.find("echo_chamber: rho = ") != std::string::npos);
  CHECK(r.out.find("star: rho = ") != std::string::npos);
  CHECK(r.out.find("beta* = ") != std::string::npos);
  CHECK(std::filesystem::exists(td.str() + "/topology_summary.csv"));
}

}  // TEST_SUITE
