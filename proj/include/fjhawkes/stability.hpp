#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fjhawkes/linalg.hpp"
#include "fjhawkes/matrix.hpp"
#include "fjhawkes/model.hpp"

namespace fjhawkes {

// Linearized one-step update of the reduced (T, S) system:
//   [ AW       B            ]
//   [ alpha I  (gamma+beta)I ]
// The fixed point is stable exactly when the spectral radius is below 1.
Matrix jacobian(const ModelParams& params, const Network& net);

// 3n-state variant that keeps S and H as separate coordinates. Its spectrum
// is the 2n-state spectrum plus n zeros, kept for cross-checking only.
Matrix jacobian_redundant(const ModelParams& params, const Network& net);

struct SpectrumReport {
  std::vector<Complex> eigenvalues;  // all 2n, sorted by descending magnitude
  double rho = 0.0;
  bool stable = false;              // rho < 1
  bool critical = false;            // |rho - 1| within tol::critical_band
  double margin = 0.0;              // 1 - rho, negative when unstable
  // With uniform reactivity (B = b I) each influence mode factors into a
  // quadratic; filled only in that case.
  std::optional<std::vector<std::pair<Complex, Complex>>> mode_roots;
};

SpectrumReport spectrum(const ModelParams& params, const Network& net);

// Roots of (lambda_k - z)(gamma + beta - z) = alpha * b_k, the quadratic a
// single influence mode lambda_k contributes under uniform reactivity.
std::pair<Complex, Complex> decoupled_roots(Complex lambda_k, double b_k,
                                            const ModelParams& params);

// |det(AW - alpha/(gamma+beta-z) B - z I)|: the reduced nonlinear eigenvalue
// condition. Eigenvalues of the jacobian away from z = gamma + beta are its
// zeros. Throws ExcludedPoint inside the guard band around the pole.
double nonlinear_residual(Complex z, const ModelParams& params, const Network& net);

// Same determinant plus the Hadamard row bound of the evaluated matrix, for
// callers that need a scale to compare the determinant against.
DeterminantResult nonlinear_certificate(Complex z, const ModelParams& params, const Network& net);

struct BoundaryResult {
  std::string parameter;
  double critical_value = 0.0;
  std::pair<double, double> bracket{0.0, 0.0};  // grid cell the crossing was found in
  double rho_at_critical = 0.0;
  int iterations = 0;
};

// Locate the stability boundary in one parameter ("alpha", "beta" or "gamma")
// by a coarse grid scan followed by bisection on rho - 1. Throws NoBracket
// when no sign change exists on [lo, hi], NoConvergence if bisection stalls,
// InvalidSpec for an unknown parameter name or an empty interval.
BoundaryResult find_boundary(const std::string& parameter, const ModelParams& params,
                             const Network& net, double lo, double hi);

}  // namespace fjhawkes
