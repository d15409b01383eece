#pragma once

#include <vector>

#include "fjhawkes/matrix.hpp"
#include "fjhawkes/model.hpp"

namespace fjhawkes {

// Closed-form fixed point of the coupled dynamics. With
//   X = (I - AW)^{-1} (I - A) T1,   Y = (I - AW)^{-1} B,
//   u = 1 - beta / (1 - gamma),     v = alpha / (1 - gamma),
// the equilibrium solves (uI - vY) S* = mu + v X and T* = X + Y S*.
struct EquilibriumSolution {
  std::vector<double> t_star;
  std::vector<double> s_star;
  std::vector<double> x;
  Matrix y;
  double u = 0.0;
  double v = 0.0;
  double cond_trust = 0.0;   // condition of I - AW
  double cond_events = 0.0;  // condition of uI - vY
  double fixed_point_residual = 0.0;
  bool valid = false;  // conditions and residual within tolerance
};

// Throws SingularSystem naming the offending operator when either linear
// system is singular, ValidationError when gamma is outside (0, 1).
EquilibriumSolution solve(const ModelParams& params, const Network& net,
                          const std::vector<double>& t1);

// Single-agent closed form. Throws DegenerateDenominator when 1 - a w or
// u - v y vanishes.
struct ScalarEquilibrium {
  double t_star = 0.0;
  double s_star = 0.0;
};
ScalarEquilibrium solve_scalar(double a, double w, double b, double t1,
                               const ModelParams& params);

// Sup-norm residual of (T*, S*) under one exact dynamics update.
double residual(const EquilibriumSolution& sol, const ModelParams& params, const Network& net,
                const InitialConditions& init);

}  // namespace fjhawkes
