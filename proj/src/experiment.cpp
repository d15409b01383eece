#include "fjhawkes/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <limits>
#include <string>

#include "fjhawkes/csv.hpp"
#include "fjhawkes/errors.hpp"
#include "fjhawkes/linalg.hpp"
#include "fjhawkes/svg.hpp"

namespace fjhawkes {

namespace fs = std::filesystem;

System materialize(const ExperimentConfig& cfg) {
  System sys;
  sys.topology = cfg.topology;
  sys.topology.n = cfg.n;
  sys.topology.seed = cfg.seed;

  RngStream rng_w(cfg.seed, StreamId::influence);
  sys.net.n = cfg.n;
  sys.net.w = generate_w(sys.topology, rng_w);

  RngStream rng_a(cfg.seed, StreamId::susceptibility);
  sys.net.a = sample_a(cfg.n, {cfg.a_range.lo, cfg.a_range.hi}, rng_a);
  RngStream rng_b(cfg.seed, StreamId::reactivity);
  sys.net.b = sample_b(cfg.n, {cfg.b_range.lo, cfg.b_range.hi}, rng_b);

  sys.params.mu = cfg.mu.materialize(cfg.n);
  sys.params.alpha = cfg.alpha;
  sys.params.beta = cfg.beta;
  sys.params.gamma = cfg.gamma;

  RngStream rng_t1(cfg.seed, StreamId::trust1);
  std::vector<double> t1 = sample_uniform(cfg.n, {cfg.t1_range.lo, cfg.t1_range.hi}, rng_t1);
  std::vector<double> t0;
  if (cfg.t0_range) {
    RngStream rng_t0(cfg.seed, StreamId::trust0);
    t0 = sample_uniform(cfg.n, {cfg.t0_range->lo, cfg.t0_range->hi}, rng_t0);
  } else {
    t0 = t1;
  }
  sys.init = InitialConditions::make(std::move(t1), cfg.s0.materialize(cfg.n), std::move(t0));
  return sys;
}

namespace {

std::string csv_safe(std::string s) {
  for (char& c : s) {
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  }
  return s;
}

std::string first_line(const std::string& s) {
  const auto pos = s.find('\n');
  return pos == std::string::npos ? s : s.substr(0, pos);
}

void ensure_directory(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("output: cannot create directory " + dir + ": " + ec.message());
}

ModelParams with_value(const ModelParams& base, const std::string& parameter, double value) {
  ModelParams p = base;
  if (parameter == "alpha") p.alpha = value;
  else if (parameter == "beta") p.beta = value;
  else p.gamma = value;
  return p;
}

}  // namespace

std::string scan_csv_path(const ExperimentConfig& cfg) {
  if (!cfg.scan) throw InvalidSpec("scan: config has no scan block");
  return (fs::path(cfg.output.directory) / ("scan_" + cfg.scan->parameter + ".csv")).string();
}

std::vector<ScanRow> sensitivity_scan(const ExperimentConfig& cfg) {
  if (!cfg.scan) throw InvalidSpec("scan: config has no scan block");
  const ScanSpec& scan = *cfg.scan;
  const System sys = materialize(cfg);

  std::vector<ScanRow> rows;
  rows.reserve(static_cast<std::size_t>(scan.count));
  for (int k = 0; k < scan.count; ++k) {
    ScanRow row;
    row.value = scan.lo + (scan.hi - scan.lo) * static_cast<double>(k) /
                              static_cast<double>(scan.count - 1);
    const ModelParams params = with_value(sys.params, scan.parameter, row.value);
    row.rho = spectral_radius(jacobian(params, sys.net));
    row.stable = row.rho < 1.0;
    try {
      const Trajectory traj = run(sys.init, params, sys.net, cfg.run);
      row.verdict = to_string(traj.verdict);
      row.mean_trust_final = mean(traj.states.back().trust);
      row.mean_events_final = mean(traj.states.back().events);
      row.converged_at = traj.converged_at;
    } catch (const ValidationError& e) {
      // Grid edges may leave the model's admissible region; keep the row.
      row.verdict = "error(" + csv_safe(first_line(e.what())) + ")";
      row.note = e.what();
      row.mean_trust_final = std::numeric_limits<double>::quiet_NaN();
      row.mean_events_final = std::numeric_limits<double>::quiet_NaN();
    }
    rows.push_back(std::move(row));
  }

  ensure_directory(cfg.output.directory);
  if (cfg.output.csv) {
    CsvFile csv(scan_csv_path(cfg));
    csv.row({"param", "rho", "stable", "verdict", "mean_T_final", "mean_S_final",
             "converged_at"});
    for (const ScanRow& r : rows) {
      csv.row({fmt_double(r.value), fmt_double(r.rho), r.stable ? "true" : "false", r.verdict,
               std::isnan(r.mean_trust_final) ? "" : fmt_double(r.mean_trust_final),
               std::isnan(r.mean_events_final) ? "" : fmt_double(r.mean_events_final),
               r.converged_at ? std::to_string(*r.converged_at) : ""});
    }
    csv.close();
  }
  if (cfg.output.svg) {
    Series rho_series{"rho", {}, {}};
    Series trust_series{"mean_T_final", {}, {}};
    Series events_series{"mean_S_final", {}, {}};
    for (const ScanRow& r : rows) {
      rho_series.x.push_back(r.value);
      rho_series.y.push_back(r.rho);
      if (!std::isnan(r.mean_trust_final)) {
        trust_series.x.push_back(r.value);
        trust_series.y.push_back(r.mean_trust_final);
        events_series.x.push_back(r.value);
        events_series.y.push_back(r.mean_events_final);
      }
    }
    const fs::path dir(cfg.output.directory);
    emit_svg({rho_series}, "spectral radius vs " + scan.parameter,
             (dir / ("scan_" + scan.parameter + "_rho.svg")).string());
    emit_svg({trust_series, events_series}, "final means vs " + scan.parameter,
             (dir / ("scan_" + scan.parameter + "_response.svg")).string(),
             cfg.run.div_threshold);
  }
  return rows;
}

void write_trajectory_csv(const Trajectory& traj, const std::string& path) {
  if (traj.states.empty()) throw EmptySeries("trajectory: nothing to write");
  const std::size_t n = traj.states.front().trust.size();
  CsvFile csv(path);
  std::vector<std::string> header{"t"};
  for (std::size_t i = 0; i < n; ++i) header.push_back("T_" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) header.push_back("S_" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) header.push_back("H_" + std::to_string(i));
  csv.row(header);
  for (const SystemState& s : traj.states) {
    std::vector<std::string> cells{std::to_string(s.t)};
    for (double v : s.trust) cells.push_back(fmt_double(v));
    for (double v : s.events) cells.push_back(fmt_double(v));
    for (double v : s.memory) cells.push_back(fmt_double(v));
    csv.row(cells);
  }
  csv.close();
}

namespace {

std::vector<GroupSeries> group_series(const System& sys, const Trajectory& traj) {
  const std::vector<std::size_t> ids = cluster_of(sys.topology);
  const std::size_t groups = ids.empty() ? 0 : 1 + *std::max_element(ids.begin(), ids.end());

  std::vector<GroupSeries> out(groups);
  for (std::size_t g = 0; g < groups; ++g) {
    switch (sys.topology.kind) {
      case TopologyKind::random: out[g].name = "all"; break;
      case TopologyKind::echo_chamber: out[g].name = "cluster_" + std::to_string(g); break;
      case TopologyKind::star: out[g].name = (g == 0) ? "hub" : "periphery"; break;
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (ids[i] == g) out[g].members.push_back(i);
    }
  }
  for (const SystemState& s : traj.states) {
    for (GroupSeries& g : out) {
      double sum = 0.0;
      for (std::size_t i : g.members) sum += s.trust[i];
      g.mean_trust.push_back(sum / static_cast<double>(g.members.size()));
    }
  }
  return out;
}

std::optional<double> boundary_or_nothing(const std::string& parameter, const System& sys) {
  try {
    return find_boundary(parameter, sys.params, sys.net, 0.0, 1.0).critical_value;
  } catch (const NoBracket&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<TopologyReport> topology_compare(const ExperimentConfig& cfg) {
  ensure_directory(cfg.output.directory);
  const fs::path dir(cfg.output.directory);

  std::vector<TopologyReport> reports;
  for (TopologyKind kind :
       {TopologyKind::random, TopologyKind::echo_chamber, TopologyKind::star}) {
    ExperimentConfig local = cfg;
    local.topology.kind = kind;
    const System sys = materialize(local);

    TopologyReport rep;
    rep.kind = kind;
    rep.name = to_string(kind);

    const SpectrumReport spec = spectrum(sys.params, sys.net);
    rep.rho = spec.rho;
    rep.stable = spec.stable;

    const Trajectory traj = run(sys.init, sys.params, sys.net, cfg.run);
    rep.verdict = to_string(traj.verdict);
    rep.trust_initial = traj.states.front().trust;
    rep.trust_final = traj.states.back().trust;
    rep.events_final = traj.states.back().events;
    rep.groups = group_series(sys, traj);
    rep.alpha_star = boundary_or_nothing("alpha", sys);
    rep.beta_star = boundary_or_nothing("beta", sys);
    rep.gamma_star = boundary_or_nothing("gamma", sys);

    if (cfg.output.csv) {
      CsvFile csv((dir / ("topology_" + rep.name + ".csv")).string());
      std::vector<std::string> header{"t", "mean_T", "mean_S"};
      for (const GroupSeries& g : rep.groups) header.push_back(g.name + "_mean_T");
      csv.row(header);
      for (std::size_t k = 0; k < traj.states.size(); ++k) {
        std::vector<std::string> cells{std::to_string(traj.states[k].t),
                                       fmt_double(mean(traj.states[k].trust)),
                                       fmt_double(mean(traj.states[k].events))};
        for (const GroupSeries& g : rep.groups) cells.push_back(fmt_double(g.mean_trust[k]));
        csv.row(cells);
      }
      csv.close();
    }
    if (cfg.output.svg) {
      std::vector<Series> series;
      for (const GroupSeries& g : rep.groups) {
        Series s{g.name, {}, {}};
        for (std::size_t k = 0; k < g.mean_trust.size(); ++k) {
          s.x.push_back(static_cast<double>(k));
          s.y.push_back(g.mean_trust[k]);
        }
        series.push_back(std::move(s));
      }
      emit_svg(series, "group mean trust, " + rep.name + " topology",
               (dir / ("topology_" + rep.name + "_trust.svg")).string(),
               cfg.run.div_threshold);
    }
    reports.push_back(std::move(rep));
  }

  if (cfg.output.csv) {
    CsvFile csv((dir / "topology_summary.csv").string());
    csv.row({"topology", "rho", "verdict", "beta_star", "gamma_star", "alpha_star"});
    for (const TopologyReport& r : reports) {
      csv.row({r.name, fmt_double(r.rho), r.verdict,
               r.beta_star ? fmt_double(*r.beta_star) : "",
               r.gamma_star ? fmt_double(*r.gamma_star) : "",
               r.alpha_star ? fmt_double(*r.alpha_star) : ""});
    }
    csv.close();
  }
  return reports;
}

}  // namespace fjhawkes
