#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fjhawkes/model.hpp"
#include "fjhawkes/tolerances.hpp"

namespace fjhawkes {

enum class Verdict { converged, oscillating, diverged, max_steps_reached };

const char* to_string(Verdict v);

struct RunSettings {
  int max_steps = tol::max_steps_default;
  double conv_tol = tol::conv_tol_default;
  double div_threshold = tol::div_threshold_default;

  bool operator==(const RunSettings&) const = default;
};

struct Trajectory {
  std::vector<SystemState> states;  // states[k] is the state at time k
  Verdict verdict = Verdict::max_steps_reached;
  std::optional<std::size_t> converged_at;
  double final_residual = 0.0;  // last step-to-step sup distance
};

// Integrate the coupled dynamics from the given start until one of the stop
// rules fires. Convergence: successive states within conv_tol in sup norm.
// Oscillation: a state repeats two steps apart while successive states still
// differ. Divergence: any component exceeds div_threshold in magnitude.
// Throws ValidationError when validate() reports errors.
Trajectory run(const InitialConditions& init, const ModelParams& params, const Network& net,
               const RunSettings& settings = {});

struct ReplayResult {
  bool pass = true;
  std::optional<std::size_t> first_mismatch;  // time index of the first bad state
};

// Re-derive every recorded state from its predecessor and compare within
// 1e-12; catches any nondeterminism or state corruption in a stored run.
ReplayResult replay_check(const Trajectory& traj, const ModelParams& params, const Network& net,
                          const InitialConditions& init);

// Column-mean trust and event series, one value per recorded step.
std::vector<double> mean_trust_series(const Trajectory& traj);
std::vector<double> mean_event_series(const Trajectory& traj);

}  // namespace fjhawkes
