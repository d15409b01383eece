#include "fjhawkes/linalg.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <utility>

#include "fjhawkes/errors.hpp"
#include "fjhawkes/tolerances.hpp"

namespace fjhawkes {

namespace {

template <typename T>
double abs_of(const T& x) {
  return std::abs(x);
}

// In-place LU with partial pivoting. The singularity cutoff is relative to
// the largest entry of the unfactored matrix, so scaling the whole system
// does not change which matrices are rejected.
template <typename T>
struct LuFactors {
  std::vector<T> lu;
  std::vector<std::size_t> perm;
  std::size_t n = 0;
};

template <typename T>
LuFactors<T> lu_factor(std::vector<T> a, std::size_t n) {
  double max_entry = 0.0;
  for (const T& x : a) max_entry = std::max(max_entry, abs_of(x));
  const double floor = tol::pivot_rel * max_entry;

  LuFactors<T> f{std::move(a), std::vector<std::size_t>(n), n};
  for (std::size_t i = 0; i < n; ++i) f.perm[i] = i;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = abs_of(f.lu[k * n + k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double cand = abs_of(f.lu[i * n + k]);
      if (cand > best) {
        best = cand;
        piv = i;
      }
    }
    if (best <= floor) {
      throw SingularMatrix("lu: pivot " + std::to_string(best) + " at column " +
                           std::to_string(k) + " under cutoff " + std::to_string(floor));
    }
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(f.lu[k * n + j], f.lu[piv * n + j]);
      std::swap(f.perm[k], f.perm[piv]);
    }
    const T pivot = f.lu[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const T m = f.lu[i * n + k] / pivot;
      f.lu[i * n + k] = m;
      if (m != T{}) {
        for (std::size_t j = k + 1; j < n; ++j) f.lu[i * n + j] -= m * f.lu[k * n + j];
      }
    }
  }
  return f;
}

template <typename T>
std::vector<T> lu_solve(const LuFactors<T>& f, const std::vector<T>& rhs) {
  const std::size_t n = f.n;
  std::vector<T> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[f.perm[i]];
  for (std::size_t i = 1; i < n; ++i) {
    T s = x[i];
    for (std::size_t j = 0; j < i; ++j) s -= f.lu[i * n + j] * x[j];
    x[i] = s;
  }
  for (std::size_t i = n; i-- > 0;) {
    T s = x[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= f.lu[i * n + j] * x[j];
    x[i] = s / f.lu[i * n + i];
  }
  return x;
}

}  // namespace

std::vector<double> solve_linear(const Matrix& m, const std::vector<double>& rhs) {
  require_square(m, "solve_linear");
  if (rhs.size() != m.rows()) {
    throw DimensionMismatch("solve_linear: matrix order " + std::to_string(m.rows()) +
                            " vs rhs length " + std::to_string(rhs.size()));
  }
  const auto f = lu_factor<double>(m.data(), m.rows());
  return lu_solve(f, rhs);
}

InverseResult invert(const Matrix& m) {
  require_square(m, "invert");
  const std::size_t n = m.rows();
  const auto f = lu_factor<double>(m.data(), n);

  Matrix inv(n, n);
  std::vector<double> e(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    e[j] = 1.0;
    const std::vector<double> col = lu_solve(f, e);
    e[j] = 0.0;
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
  }

  const double condition = m.norm1() * inv.norm1();
  return InverseResult{std::move(inv), condition, condition > tol::ill_conditioned};
}

double spectral_radius(const Matrix& m) {
  double rho = 0.0;
  for (const Complex& ev : eig_general(m)) rho = std::max(rho, std::abs(ev));
  return rho;
}

Matrix row_normalize(const Matrix& m, bool nonneg) {
  Matrix out = m;
  for (std::size_t i = 0; i < out.rows(); ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < out.cols(); ++j) {
      const double w = out(i, j);
      if (nonneg && w < 0.0) {
        throw ValidationError("row_normalize: negative entry at (" + std::to_string(i) + ", " +
                              std::to_string(j) + ")");
      }
      sum += w;
    }
    if (std::abs(sum) <= tol::zero_row) {
      throw ZeroRow("row_normalize: row " + std::to_string(i) + " sums to " +
                    std::to_string(sum));
    }
    // Rows already stochastic are returned bit-identical, which makes the
    // operation idempotent rather than merely convergent.
    if (std::abs(sum - 1.0) <= tol::row_stochastic) continue;
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) /= sum;
  }
  return out;
}

DeterminantResult complex_abs_det(const std::vector<Complex>& entries, std::size_t n) {
  if (entries.size() != n * n) {
    throw DimensionMismatch("complex_abs_det: entry count does not match order");
  }
  double scale = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += std::norm(entries[i * n + j]);
    scale *= std::sqrt(row);
  }

  std::vector<Complex> a = entries;
  double abs_det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(a[k * n + k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double cand = std::abs(a[i * n + k]);
      if (cand > best) {
        best = cand;
        piv = i;
      }
    }
    if (best == 0.0) return DeterminantResult{0.0, scale};  // exactly singular
    if (piv != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
    }
    const Complex pivot = a[k * n + k];
    abs_det *= std::abs(pivot);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex m = a[i * n + k] / pivot;
      if (m != Complex{}) {
        for (std::size_t j = k + 1; j < n; ++j) a[i * n + j] -= m * a[k * n + j];
      }
    }
  }
  return DeterminantResult{abs_det, scale};
}

}  // namespace fjhawkes
