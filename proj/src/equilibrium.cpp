#include "fjhawkes/equilibrium.hpp"

#include <cmath>
#include <string>

#include "fjhawkes/errors.hpp"
#include "fjhawkes/linalg.hpp"
#include "fjhawkes/tolerances.hpp"

namespace fjhawkes {

namespace {

double residual_of(const std::vector<double>& t_star, const std::vector<double>& s_star,
                   const ModelParams& params, const Network& net,
                   const std::vector<double>& t1) {
  const std::size_t n = net.n;
  const std::vector<double> wt = net.w * t_star;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t_next = net.a[i] * wt[i] + (1.0 - net.a[i]) * t1[i] + net.b[i] * s_star[i];
    // At the fixed point the memory is (alpha T* + beta S*) / (1 - gamma).
    const double h_star =
        (params.alpha * t_star[i] + params.beta * s_star[i]) / (1.0 - params.gamma);
    const double s_next = params.mu[i] + h_star;
    worst = std::max({worst, std::abs(t_next - t_star[i]), std::abs(s_next - s_star[i])});
  }
  return worst;
}

}  // namespace

EquilibriumSolution solve(const ModelParams& params, const Network& net,
                          const std::vector<double>& t1) {
  const std::size_t n = net.n;
  if (net.w.rows() != n || net.w.cols() != n || net.a.size() != n || net.b.size() != n ||
      params.mu.size() != n || t1.size() != n) {
    throw DimensionMismatch("equilibrium: inconsistent system sizes");
  }
  if (!(params.gamma > 0.0) || !(params.gamma < 1.0)) {
    throw ValidationError("equilibrium: gamma = " + std::to_string(params.gamma) +
                          " outside (0, 1)");
  }

  // I - AW, where AW scales row i of W by a_i.
  Matrix i_aw = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) i_aw(i, j) -= net.a[i] * net.w(i, j);

  InverseResult trust_inv;
  try {
    trust_inv = invert(i_aw);
  } catch (const SingularMatrix&) {
    throw SingularSystem("equilibrium: (I - AW) is singular");
  }

  EquilibriumSolution sol;
  sol.u = 1.0 - params.beta / (1.0 - params.gamma);
  sol.v = params.alpha / (1.0 - params.gamma);
  sol.cond_trust = trust_inv.condition;

  std::vector<double> anchor(n);
  for (std::size_t i = 0; i < n; ++i) anchor[i] = (1.0 - net.a[i]) * t1[i];
  sol.x = trust_inv.inverse * anchor;

  // Y = (I - AW)^{-1} B with diagonal B: scale column j of the inverse by b_j.
  sol.y = trust_inv.inverse;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sol.y(i, j) *= net.b[j];

  Matrix uv = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) uv(i, j) = sol.u * (i == j ? 1.0 : 0.0) - sol.v * sol.y(i, j);

  InverseResult event_inv;
  try {
    event_inv = invert(uv);
  } catch (const SingularMatrix&) {
    throw SingularSystem("equilibrium: (uI - vY) is singular");
  }
  sol.cond_events = event_inv.condition;

  std::vector<double> rhs(n);
  for (std::size_t i = 0; i < n; ++i) rhs[i] = params.mu[i] + sol.v * sol.x[i];
  sol.s_star = event_inv.inverse * rhs;
  sol.t_star = vec_add(sol.x, sol.y * sol.s_star);

  sol.fixed_point_residual = residual_of(sol.t_star, sol.s_star, params, net, t1);
  sol.valid = sol.cond_trust < tol::equilibrium_cond && sol.cond_events < tol::equilibrium_cond &&
              sol.fixed_point_residual < tol::equilibrium_residual;
  return sol;
}

ScalarEquilibrium solve_scalar(double a, double w, double b, double t1,
                               const ModelParams& params) {
  if (params.mu.size() != 1) {
    throw DimensionMismatch("solve_scalar: expected a single-agent mu, got length " +
                            std::to_string(params.mu.size()));
  }
  if (!(params.gamma > 0.0) || !(params.gamma < 1.0)) {
    throw ValidationError("solve_scalar: gamma = " + std::to_string(params.gamma) +
                          " outside (0, 1)");
  }
  const double trust_den = 1.0 - a * w;
  if (std::abs(trust_den) < tol::degenerate_denominator) {
    throw DegenerateDenominator("solve_scalar: 1 - a w = " + std::to_string(trust_den));
  }
  const double x = (1.0 - a) * t1 / trust_den;
  const double y = b / trust_den;
  const double u = 1.0 - params.beta / (1.0 - params.gamma);
  const double v = params.alpha / (1.0 - params.gamma);
  const double event_den = u - v * y;
  if (std::abs(event_den) < tol::degenerate_denominator) {
    throw DegenerateDenominator("solve_scalar: u - v y = " + std::to_string(event_den));
  }
  ScalarEquilibrium eq;
  eq.s_star = (params.mu[0] + v * x) / event_den;
  eq.t_star = x + y * eq.s_star;
  return eq;
}

double residual(const EquilibriumSolution& sol, const ModelParams& params, const Network& net,
                const InitialConditions& init) {
  if (init.t1.size() != net.n) {
    throw DimensionMismatch("residual: anchor trust has the wrong length");
  }
  return residual_of(sol.t_star, sol.s_star, params, net, init.t1);
}

}  // namespace fjhawkes
