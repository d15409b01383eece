#include "fjhawkes/model.hpp"

#include <cmath>
#include <sstream>

#include "fjhawkes/errors.hpp"
#include "fjhawkes/tolerances.hpp"

namespace fjhawkes {

InitialConditions InitialConditions::make(std::vector<double> t1, std::vector<double> s0,
                                          std::vector<double> t0, std::vector<double> h0) {
  InitialConditions init;
  init.t1 = std::move(t1);
  init.s0 = std::move(s0);
  init.t0 = t0.empty() ? init.t1 : std::move(t0);
  init.h0 = h0.empty() ? std::vector<double>(init.t1.size(), 0.0) : std::move(h0);
  return init;
}

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (const Diagnostic& d : errors) out << "error: " << d.where << ": " << d.message << "\n";
  for (const Diagnostic& d : warnings) out << "warning: " << d.where << ": " << d.message << "\n";
  return out.str();
}

namespace {

void check_length(ValidationReport& rep, const char* where, std::size_t got, std::size_t want) {
  if (got != want) {
    rep.errors.push_back({where, "length " + std::to_string(got) + ", expected " +
                                     std::to_string(want)});
  }
}

void check_finite_entries(ValidationReport& rep, const char* where,
                          const std::vector<double>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i])) {
      rep.errors.push_back({where, "non-finite entry at index " + std::to_string(i)});
      return;
    }
  }
}

}  // namespace

ValidationReport validate(const Network& net, const ModelParams& params,
                          const InitialConditions& init) {
  ValidationReport rep;
  const std::size_t n = net.n;

  if (n == 0) {
    rep.errors.push_back({"network", "empty network"});
    return rep;
  }
  if (net.w.rows() != n || net.w.cols() != n) {
    rep.errors.push_back({"W", "shape " + std::to_string(net.w.rows()) + "x" +
                                   std::to_string(net.w.cols()) + ", expected " +
                                   std::to_string(n) + "x" + std::to_string(n)});
    return rep;
  }

  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double w = net.w(i, j);
      if (!(w >= 0.0)) {
        rep.errors.push_back({"W", "negative entry at (" + std::to_string(i) + ", " +
                                       std::to_string(j) + ")"});
        return rep;
      }
      sum += w;
    }
    if (std::abs(sum - 1.0) > tol::row_stochastic) {
      rep.errors.push_back({"W", "row " + std::to_string(i) + " sums to " +
                                     std::to_string(sum) + ", expected 1"});
    }
  }

  check_length(rep, "A", net.a.size(), n);
  check_length(rep, "B", net.b.size(), n);
  check_finite_entries(rep, "A", net.a);
  check_finite_entries(rep, "B", net.b);
  if (net.a.size() == n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (net.a[i] < 0.0 || net.a[i] > 1.0) {
        rep.errors.push_back({"A", "entry " + std::to_string(i) + " = " +
                                       std::to_string(net.a[i]) + " outside [0, 1]"});
        break;
      }
    }
  }

  check_length(rep, "mu", params.mu.size(), n);
  check_finite_entries(rep, "mu", params.mu);
  for (double m : params.mu) {
    if (m < 0.0) {
      rep.errors.push_back({"mu", "negative baseline intensity"});
      break;
    }
  }
  if (!(params.gamma > 0.0) || !(params.gamma < 1.0)) {
    rep.errors.push_back({"gamma", std::to_string(params.gamma) + " outside (0, 1)"});
  }
  if (!(params.alpha >= 0.0) || !(params.alpha <= 1.0)) {
    rep.errors.push_back({"alpha", std::to_string(params.alpha) + " outside [0, 1]"});
  }
  if (!(params.beta >= 0.0) || !(params.beta <= 1.0)) {
    rep.errors.push_back({"beta", std::to_string(params.beta) + " outside [0, 1]"});
  }

  check_length(rep, "T0", init.t0.size(), n);
  check_length(rep, "T1", init.t1.size(), n);
  check_length(rep, "S0", init.s0.size(), n);
  check_length(rep, "H0", init.h0.size(), n);
  check_finite_entries(rep, "T0", init.t0);
  check_finite_entries(rep, "T1", init.t1);
  check_finite_entries(rep, "S0", init.s0);
  check_finite_entries(rep, "H0", init.h0);

  // Trust outside the working range is unusual but not structurally wrong.
  auto warn_range = [&rep](const char* where, const std::vector<double>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 0.0 || v[i] > 2.0) {
        rep.warnings.push_back({where, "entry " + std::to_string(i) + " = " +
                                           std::to_string(v[i]) + " outside [0, 2]"});
        return;
      }
    }
  };
  warn_range("T0", init.t0);
  warn_range("T1", init.t1);

  return rep;
}

SystemState step(const SystemState& state, const ModelParams& params, const Network& net,
                 const InitialConditions& init) {
  const std::size_t n = net.n;
  if (state.trust.size() != n || state.events.size() != n || state.memory.size() != n ||
      init.t1.size() != n || params.mu.size() != n) {
    throw DimensionMismatch("step: state, anchors and parameters must all have length " +
                            std::to_string(n));
  }

  SystemState next;
  next.t = state.t + 1;
  next.trust.resize(n);
  next.events.resize(n);
  next.memory.resize(n);

  const std::vector<double> wt = net.w * state.trust;
  for (std::size_t i = 0; i < n; ++i) {
    next.trust[i] = net.a[i] * wt[i] + (1.0 - net.a[i]) * init.t1[i] + net.b[i] * state.events[i];
    next.memory[i] =
        params.gamma * state.memory[i] + params.alpha * state.trust[i] + params.beta * state.events[i];
    next.events[i] = params.mu[i] + next.memory[i];
  }
  return next;
}

std::vector<double> event_intensity_direct(const std::vector<std::vector<double>>& trust_hist,
                                           const std::vector<std::vector<double>>& event_hist,
                                           const ModelParams& params, std::size_t t) {
  if (trust_hist.empty() || event_hist.empty()) {
    throw EmptyHistory("event_intensity_direct: empty history");
  }
  if (t >= trust_hist.size() || t >= event_hist.size()) {
    throw EmptyHistory("event_intensity_direct: t = " + std::to_string(t) +
                       " exceeds history length");
  }
  const std::size_t n = params.mu.size();
  std::vector<double> s = params.mu;
  for (std::size_t i = 0; i <= t; ++i) {
    if (trust_hist[i].size() != n || event_hist[i].size() != n) {
      throw DimensionMismatch("event_intensity_direct: history entry " + std::to_string(i) +
                              " has the wrong length");
    }
    const double w = std::pow(params.gamma, static_cast<double>(t - i));
    for (std::size_t k = 0; k < n; ++k) {
      s[k] += w * (params.alpha * trust_hist[i][k] + params.beta * event_hist[i][k]);
    }
  }
  return s;
}

}  // namespace fjhawkes
