#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fjhawkes/config.hpp"
#include "fjhawkes/equilibrium.hpp"
#include "fjhawkes/model.hpp"
#include "fjhawkes/simulate.hpp"
#include "fjhawkes/stability.hpp"
#include "fjhawkes/topology.hpp"

namespace fjhawkes {

// A config turned into concrete matrices. Every random quantity comes from
// its own (seed, stream) pair, so two systems materialized from one seed but
// different topologies share their A, B, T0 and T1 draws exactly.
struct System {
  ModelParams params;
  Network net;
  InitialConditions init;
  TopologySpec topology;
};

System materialize(const ExperimentConfig& cfg);

// One grid point of a parameter scan. For grid values where the model is not
// even well formed (say gamma = 1), the row records the failure in `note` and
// carries the spectral radius only.
struct ScanRow {
  double value = 0.0;
  double rho = 0.0;
  bool stable = false;
  std::string verdict;
  double mean_trust_final = 0.0;
  double mean_events_final = 0.0;
  std::optional<std::size_t> converged_at;
  std::string note;
};

// Sweep cfg.scan.parameter over its grid on the fixed materialized system,
// integrating the dynamics and reporting the jacobian spectral radius at each
// value. Writes scan_<parameter>.csv (plus SVG when enabled) into
// cfg.output.directory and returns the rows. Throws InvalidSpec when the
// config has no scan block.
std::vector<ScanRow> sensitivity_scan(const ExperimentConfig& cfg);

// Trust trajectory summary for one agent group.
struct GroupSeries {
  std::string name;
  std::vector<std::size_t> members;
  std::vector<double> mean_trust;  // one entry per recorded step
};

struct TopologyReport {
  TopologyKind kind = TopologyKind::random;
  std::string name;
  double rho = 0.0;
  bool stable = false;
  std::string verdict;
  std::vector<double> trust_initial;
  std::vector<double> trust_final;
  std::vector<double> events_final;
  std::vector<GroupSeries> groups;
  std::optional<double> alpha_star;  // absent when no boundary in (0, 1)
  std::optional<double> beta_star;
  std::optional<double> gamma_star;
};

// Run the same sampled system on random, echo-chamber and star topologies:
// same seed, same A, B, T0, T1, only W changes. Reports trajectories, group
// means, spectral radii and the critical parameter values per topology, and
// writes per-topology CSVs plus topology_summary.csv (and SVGs when enabled).
std::vector<TopologyReport> topology_compare(const ExperimentConfig& cfg);

// Shared file helpers, also used by the CLI.
std::string scan_csv_path(const ExperimentConfig& cfg);
void write_trajectory_csv(const Trajectory& traj, const std::string& path);

}  // namespace fjhawkes
