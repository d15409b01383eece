#include "fjhawkes/cli.hpp"

#include <filesystem>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fjhawkes/csv.hpp"
#include "fjhawkes/equilibrium.hpp"
#include "fjhawkes/errors.hpp"
#include "fjhawkes/experiment.hpp"
#include "fjhawkes/stability.hpp"
#include "fjhawkes/svg.hpp"

namespace fjhawkes {

namespace {

namespace fs = std::filesystem;

struct CommonFlags {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> steps;
  std::string out_dir;
  std::string param;
  std::string range;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config_path, "experiment config (JSON)");
  cmd->add_option("--seed", flags.seed, "override the config seed");
  cmd->add_option("--out", flags.out_dir, "override the output directory");
}

ExperimentConfig load_with_overrides(const CommonFlags& flags) {
  ExperimentConfig cfg =
      flags.config_path.empty() ? ExperimentConfig{} : load_config(flags.config_path);
  if (flags.seed) {
    cfg.seed = *flags.seed;
    cfg.topology.seed = *flags.seed;
  }
  if (flags.steps) {
    if (*flags.steps < 1) throw ValidationError("--steps must be at least 1");
    cfg.run.max_steps = *flags.steps;
  }
  if (!flags.out_dir.empty()) cfg.output.directory = flags.out_dir;
  return cfg;
}

// "LO:HI" or "LO:HI:COUNT".
void apply_range(const std::string& text, ScanSpec& scan) {
  std::vector<std::string> parts;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ':')) parts.push_back(token);
  if (parts.size() != 2 && parts.size() != 3) {
    throw InvalidSpec("--range: expected LO:HI or LO:HI:COUNT, got '" + text + "'");
  }
  try {
    std::size_t used = 0;
    scan.lo = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument(parts[0]);
    scan.hi = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
    if (parts.size() == 3) {
      scan.count = std::stoi(parts[2], &used);
      if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
    }
  } catch (const std::exception&) {
    throw InvalidSpec("--range: cannot parse '" + text + "'");
  }
}

void ensure_directory(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("output: cannot create directory " + dir + ": " + ec.message());
}

int cmd_simulate(const CommonFlags& flags, std::ostream& out) {
  const ExperimentConfig cfg = load_with_overrides(flags);
  const System sys = materialize(cfg);
  const Trajectory traj = run(sys.init, sys.params, sys.net, cfg.run);

  out << "verdict: " << to_string(traj.verdict);
  if (traj.converged_at) out << " at t = " << *traj.converged_at;
  out << "\n";
  out << "steps recorded: " << traj.states.size() - 1 << "\n";
  out << "final mean trust: " << fmt_double(mean(traj.states.back().trust)) << "\n";
  out << "final mean events: " << fmt_double(mean(traj.states.back().events)) << "\n";
  out << "final residual: " << fmt_double(traj.final_residual) << "\n";

  ensure_directory(cfg.output.directory);
  if (cfg.output.csv) {
    const std::string path = (fs::path(cfg.output.directory) / "trajectory.csv").string();
    write_trajectory_csv(traj, path);
    out << "wrote " << path << "\n";
  }
  if (cfg.output.svg) {
    Series trust{"mean_T", {}, {}};
    Series events{"mean_S", {}, {}};
    for (const SystemState& s : traj.states) {
      trust.x.push_back(static_cast<double>(s.t));
      trust.y.push_back(mean(s.trust));
      events.x.push_back(static_cast<double>(s.t));
      events.y.push_back(mean(s.events));
    }
    const std::string path = (fs::path(cfg.output.directory) / "trajectory.svg").string();
    emit_svg({trust, events}, "trajectory means", path, cfg.run.div_threshold);
    out << "wrote " << path << "\n";
  }
  return 0;
}

int cmd_equilibrium(const CommonFlags& flags, std::ostream& out) {
  const ExperimentConfig cfg = load_with_overrides(flags);
  const System sys = materialize(cfg);
  const EquilibriumSolution sol = solve(sys.params, sys.net, sys.init.t1);

  out << "agent,T_star,S_star\n";
  for (std::size_t i = 0; i < sys.net.n; ++i) {
    out << i << "," << fmt_double(sol.t_star[i]) << "," << fmt_double(sol.s_star[i]) << "\n";
  }
  out << "residual: " << fmt_double(sol.fixed_point_residual) << "\n";
  out << "condition (I - AW): " << fmt_double(sol.cond_trust) << "\n";
  out << "condition (uI - vY): " << fmt_double(sol.cond_events) << "\n";
  out << "valid: " << (sol.valid ? "true" : "false") << "\n";
  return 0;
}

int cmd_stability(const CommonFlags& flags, std::ostream& out) {
  const ExperimentConfig cfg = load_with_overrides(flags);
  const System sys = materialize(cfg);
  const SpectrumReport rep = spectrum(sys.params, sys.net);

  out << "rho: " << fmt_double(rep.rho) << "\n";
  out << "stable: " << (rep.stable ? "true" : "false") << "\n";
  out << "margin: " << fmt_double(rep.margin) << "\n";
  if (rep.critical) out << "note: spectral radius within 1e-6 of the boundary\n";
  out << "eigenvalues (by magnitude):\n";
  for (const Complex& ev : rep.eigenvalues) {
    out << "  " << fmt_double(ev.real());
    if (ev.imag() != 0.0) out << (ev.imag() > 0 ? " + " : " - ") << fmt_double(std::abs(ev.imag())) << "i";
    out << "\n";
  }
  return 0;  // instability is a finding, not a failure
}

int cmd_scan(const CommonFlags& flags, std::ostream& out) {
  ExperimentConfig cfg = load_with_overrides(flags);
  ScanSpec scan = cfg.scan.value_or(ScanSpec{});
  if (!flags.param.empty()) scan.parameter = flags.param;
  if (!flags.range.empty()) apply_range(flags.range, scan);
  if (!cfg.scan && flags.param.empty()) {
    throw ValidationError("scan: pass --param or a config with a scan block");
  }
  if (scan.parameter != "alpha" && scan.parameter != "beta" && scan.parameter != "gamma") {
    throw ValidationError("scan: unknown parameter '" + scan.parameter + "'");
  }
  if (scan.count < 2) throw ValidationError("scan: need at least two grid points");
  if (!(scan.lo < scan.hi)) throw ValidationError("scan: lo must be below hi");
  cfg.scan = scan;

  const std::vector<ScanRow> rows = sensitivity_scan(cfg);
  int stable = 0;
  for (const ScanRow& r : rows) stable += r.stable ? 1 : 0;
  out << "scanned " << scan.parameter << " over [" << fmt_double(scan.lo) << ", "
      << fmt_double(scan.hi) << "] in " << rows.size() << " points\n";
  out << "stable points: " << stable << " of " << rows.size() << "\n";
  if (cfg.output.csv) out << "wrote " << scan_csv_path(cfg) << "\n";
  return 0;
}

int cmd_boundary(const CommonFlags& flags, std::ostream& out) {
  const ExperimentConfig cfg = load_with_overrides(flags);
  if (flags.param.empty()) throw ValidationError("boundary: --param is required");
  ScanSpec window{flags.param, 0.0, 1.0, 2};
  if (!flags.range.empty()) apply_range(flags.range, window);

  const System sys = materialize(cfg);
  const BoundaryResult res =
      find_boundary(flags.param, sys.params, sys.net, window.lo, window.hi);
  out << "parameter: " << res.parameter << "\n";
  out << "critical value: " << fmt_double(res.critical_value) << "\n";
  out << "bracket: [" << fmt_double(res.bracket.first) << ", "
      << fmt_double(res.bracket.second) << "]\n";
  out << "rho at critical: " << fmt_double(res.rho_at_critical) << "\n";
  out << "bisection iterations: " << res.iterations << "\n";
  return 0;
}

int cmd_topology(const CommonFlags& flags, std::ostream& out) {
  const ExperimentConfig cfg = load_with_overrides(flags);
  const std::vector<TopologyReport> reports = topology_compare(cfg);
  for (const TopologyReport& r : reports) {
    out << r.name << ": rho = " << fmt_double(r.rho) << ", verdict = " << r.verdict;
    if (r.beta_star) out << ", beta* = " << fmt_double(*r.beta_star);
    if (r.gamma_star) out << ", gamma* = " << fmt_double(*r.gamma_star);
    if (r.alpha_star) out << ", alpha* = " << fmt_double(*r.alpha_star);
    out << "\n";
  }
  if (cfg.output.csv) {
    out << "wrote " << (fs::path(cfg.output.directory) / "topology_summary.csv").string() << "\n";
  }
  return 0;
}

int cmd_validate(const CommonFlags& flags, std::ostream& out) {
  const ExperimentConfig cfg = load_with_overrides(flags);
  const System sys = materialize(cfg);
  const ValidationReport rep = validate(sys.net, sys.params, sys.init);
  if (!rep.ok()) {
    out << rep.to_string();
    throw ValidationError("validate: materialized system is invalid");
  }
  out << "configuration valid: n = " << sys.net.n << ", topology = "
      << to_string(sys.topology.kind) << ", seed = " << sys.topology.seed << "\n";
  for (const Diagnostic& d : rep.warnings) {
    out << "warning: " << d.where << ": " << d.message << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"coupled trust-event network dynamics"};
  app.set_version_flag("--version", "0.1.0");
  app.require_subcommand(1);

  CommonFlags flags;
  CLI::App* simulate_cmd = app.add_subcommand("simulate", "integrate the dynamics");
  add_common(simulate_cmd, flags);
  simulate_cmd->add_option("--steps", flags.steps, "step budget override");

  CLI::App* equilibrium_cmd = app.add_subcommand("equilibrium", "closed-form fixed point");
  add_common(equilibrium_cmd, flags);

  CLI::App* stability_cmd = app.add_subcommand("stability", "jacobian spectrum");
  add_common(stability_cmd, flags);

  CLI::App* scan_cmd = app.add_subcommand("scan", "parameter sensitivity scan");
  add_common(scan_cmd, flags);
  scan_cmd->add_option("--param", flags.param, "parameter to vary (alpha, beta, gamma)");
  scan_cmd->add_option("--range", flags.range, "grid as LO:HI:COUNT");

  CLI::App* boundary_cmd = app.add_subcommand("boundary", "critical parameter value");
  add_common(boundary_cmd, flags);
  boundary_cmd->add_option("--param", flags.param, "parameter to solve for");
  boundary_cmd->add_option("--range", flags.range, "search window as LO:HI");

  CLI::App* topology_cmd = app.add_subcommand("topology", "compare network topologies");
  add_common(topology_cmd, flags);

  CLI::App* validate_cmd = app.add_subcommand("validate", "check a configuration");
  add_common(validate_cmd, flags);

  std::vector<const char*> argv;
  argv.push_back("fjhawkes");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << "0.1.0\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (simulate_cmd->parsed()) return cmd_simulate(flags, out);
    if (equilibrium_cmd->parsed()) return cmd_equilibrium(flags, out);
    if (stability_cmd->parsed()) return cmd_stability(flags, out);
    if (scan_cmd->parsed()) return cmd_scan(flags, out);
    if (boundary_cmd->parsed()) return cmd_boundary(flags, out);
    if (topology_cmd->parsed()) return cmd_topology(flags, out);
    if (validate_cmd->parsed()) return cmd_validate(flags, out);
    err << "usage error: no subcommand\n";
    return 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidSpec& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace fjhawkes
