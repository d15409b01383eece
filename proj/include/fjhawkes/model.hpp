#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fjhawkes/matrix.hpp"

namespace fjhawkes {

// Global dynamics parameters. mu is the per-agent baseline event intensity;
// alpha couples trust into future events, beta couples events into future
// events, gamma is the geometric memory decay.
struct ModelParams {
  std::vector<double> mu;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.5;

  bool operator==(const ModelParams&) const = default;
};

// Agent network: row-stochastic influence matrix W, per-agent susceptibility
// a_i in [0,1], per-agent event reactivity b_i (any sign).
struct Network {
  std::size_t n = 0;
  Matrix w;
  std::vector<double> a;
  std::vector<double> b;

  bool operator==(const Network&) const = default;
};

// Joint state at one time step: trust levels T_t, perceived event intensity
// S_t, and the geometric event memory H_t with S_t = mu + H_t for t >= 1.
struct SystemState {
  std::size_t t = 0;
  std::vector<double> trust;
  std::vector<double> events;
  std::vector<double> memory;

  bool operator==(const SystemState&) const = default;
};

struct InitialConditions {
  std::vector<double> t0;  // starting trust
  std::vector<double> t1;  // anchor trust (the level agents are pulled back to)
  std::vector<double> s0;  // starting event intensity
  std::vector<double> h0;  // starting memory, zero unless stated otherwise

  static InitialConditions make(std::vector<double> t1,
                                std::vector<double> s0,
                                std::vector<double> t0 = {},
                                std::vector<double> h0 = {});

  bool operator==(const InitialConditions&) const = default;
};

struct Diagnostic {
  std::string where;
  std::string message;
};

struct ValidationReport {
  std::vector<Diagnostic> errors;
  std::vector<Diagnostic> warnings;

  bool ok() const { return errors.empty(); }
  std::string to_string() const;
};

// Structural checks: shapes, ranges, row-stochastic W, gamma in (0,1).
// Out-of-range starting trust is reported as a warning, not an error.
ValidationReport validate(const Network& net, const ModelParams& params,
                          const InitialConditions& init);

// One synchronous update of the coupled system:
//   T' = A W T + (I - A) T1 + B S
//   H' = gamma H + alpha T + beta S
//   S' = mu + H'
SystemState step(const SystemState& state, const ModelParams& params, const Network& net,
                 const InitialConditions& init);

// Event intensity at time t+1 evaluated from the full history sum rather than
// the memory recursion; the two agree to rounding. t indexes into the
// histories, which must both hold at least t+1 entries.
std::vector<double> event_intensity_direct(const std::vector<std::vector<double>>& trust_hist,
                                           const std::vector<std::vector<double>>& event_hist,
                                           const ModelParams& params, std::size_t t);

}  // namespace fjhawkes
