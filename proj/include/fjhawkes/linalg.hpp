#pragma once

#include <vector>

#include "fjhawkes/matrix.hpp"

namespace fjhawkes {

struct InverseResult {
  Matrix inverse;
  double condition;       // ||M||_1 * ||M^-1||_1, computed from the explicit inverse
  bool ill_conditioned;   // condition above tol::ill_conditioned
};

// Solve M x = rhs by partially pivoted LU elimination. Throws SingularMatrix
// when a pivot falls below tol::pivot_rel relative to the largest initial
// entry, DimensionMismatch on shape errors.
std::vector<double> solve_linear(const Matrix& m, const std::vector<double>& rhs);

// Explicit inverse via pivoted solves against identity columns.
InverseResult invert(const Matrix& m);

// All eigenvalues of a general real square matrix: balance, Householder
// reduction to Hessenberg form, then Francis double-shift QR. Conjugate pairs
// come out exactly conjugate. Throws NoConvergence when the QR iteration
// exhausts tol::eig_sweeps_per_n * n sweeps.
std::vector<Complex> eig_general(const Matrix& m);

// Spectral radius helper: max |eigenvalue|.
double spectral_radius(const Matrix& m);

// Scale each row to unit sum. With nonneg set, negative entries are an error;
// rows already summing to 1 within tol::row_stochastic are left untouched, so
// the operation is exactly idempotent. Throws ZeroRow when a row sum is at or
// below tol::zero_row in magnitude.
Matrix row_normalize(const Matrix& m, bool nonneg = true);

// |det| of a complex square matrix via pivoted elimination, used by the
// reduced stability determinant. A vanishing pivot means det = 0, not an
// error. Also returns the Hadamard row bound as a scale reference.
struct DeterminantResult {
  double abs_det;
  double scale;  // product of row 2-norms; |det| <= scale always
};
DeterminantResult complex_abs_det(const std::vector<Complex>& entries, std::size_t n);

}  // namespace fjhawkes
