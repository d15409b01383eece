#include "fjhawkes/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "fjhawkes/errors.hpp"

namespace fjhawkes {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::converged: return "converged";
    case Verdict::oscillating: return "oscillating";
    case Verdict::diverged: return "diverged";
    case Verdict::max_steps_reached: return "max_steps_reached";
  }
  return "unknown";
}

namespace {

double state_diff(const SystemState& a, const SystemState& b) {
  return std::max({inf_diff(a.trust, b.trust), inf_diff(a.events, b.events),
                   inf_diff(a.memory, b.memory)});
}

double state_max_abs(const SystemState& s) {
  return std::max({inf_norm(s.trust), inf_norm(s.events), inf_norm(s.memory)});
}

}  // namespace

Trajectory run(const InitialConditions& init, const ModelParams& params, const Network& net,
               const RunSettings& settings) {
  const ValidationReport report = validate(net, params, init);
  if (!report.ok()) {
    throw ValidationError("run: invalid system\n" + report.to_string());
  }
  if (settings.max_steps < 1 || settings.conv_tol <= 0.0 || settings.div_threshold <= 0.0) {
    throw ValidationError("run: max_steps, conv_tol and div_threshold must all be positive");
  }

  Trajectory traj;
  traj.states.reserve(static_cast<std::size_t>(settings.max_steps) + 1);
  traj.states.push_back(SystemState{0, init.t0, init.s0, init.h0});

  for (int k = 0; k < settings.max_steps; ++k) {
    const SystemState& cur = traj.states.back();
    SystemState next = step(cur, params, net, init);
    const double diff = state_diff(next, cur);
    traj.states.push_back(std::move(next));
    traj.final_residual = diff;

    const SystemState& stored = traj.states.back();
    if (diff < settings.conv_tol) {
      traj.verdict = Verdict::converged;
      traj.converged_at = stored.t;
      return traj;
    }
    // Period-2 cycle: the new state matches the one from two steps back while
    // successive states still differ (the convergence check above rules that out).
    if (traj.states.size() >= 3 &&
        state_diff(stored, traj.states[traj.states.size() - 3]) < settings.conv_tol) {
      traj.verdict = Verdict::oscillating;
      traj.converged_at = stored.t;
      return traj;
    }
    if (state_max_abs(stored) > settings.div_threshold) {
      traj.verdict = Verdict::diverged;
      return traj;
    }
  }
  traj.verdict = Verdict::max_steps_reached;
  return traj;
}

ReplayResult replay_check(const Trajectory& traj, const ModelParams& params, const Network& net,
                          const InitialConditions& init) {
  constexpr double kTol = 1e-12;
  for (std::size_t k = 0; k + 1 < traj.states.size(); ++k) {
    const SystemState redo = step(traj.states[k], params, net, init);
    if (state_diff(redo, traj.states[k + 1]) > kTol || redo.t != traj.states[k + 1].t) {
      return ReplayResult{false, traj.states[k + 1].t};
    }
  }
  return ReplayResult{true, std::nullopt};
}

std::vector<double> mean_trust_series(const Trajectory& traj) {
  std::vector<double> out;
  out.reserve(traj.states.size());
  for (const SystemState& s : traj.states) out.push_back(mean(s.trust));
  return out;
}

std::vector<double> mean_event_series(const Trajectory& traj) {
  std::vector<double> out;
  out.reserve(traj.states.size());
  for (const SystemState& s : traj.states) out.push_back(mean(s.events));
  return out;
}

}  // namespace fjhawkes
