#include "fjhawkes/stability.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fjhawkes/errors.hpp"
#include "fjhawkes/tolerances.hpp"

namespace fjhawkes {

namespace {

void check_network(const ModelParams& params, const Network& net, const char* what) {
  if (net.n == 0 || net.w.rows() != net.n || net.w.cols() != net.n || net.a.size() != net.n ||
      net.b.size() != net.n || params.mu.size() != net.n) {
    throw DimensionMismatch(std::string(what) + ": inconsistent system sizes");
  }
}

}  // namespace

Matrix jacobian(const ModelParams& params, const Network& net) {
  check_network(params, net, "jacobian");
  const std::size_t n = net.n;
  Matrix j(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) j(i, k) = net.a[i] * net.w(i, k);
    j(i, n + i) = net.b[i];
    j(n + i, i) = params.alpha;
    j(n + i, n + i) = params.gamma + params.beta;
  }
  return j;
}

Matrix jacobian_redundant(const ModelParams& params, const Network& net) {
  check_network(params, net, "jacobian_redundant");
  const std::size_t n = net.n;
  Matrix j(3 * n, 3 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) j(i, k) = net.a[i] * net.w(i, k);
    j(i, n + i) = net.b[i];
    // S and H rows carry the same linearization; S' differs from H' only by
    // the constant mu.
    for (std::size_t r : {n + i, 2 * n + i}) {
      j(r, i) = params.alpha;
      j(r, n + i) = params.beta;
      j(r, 2 * n + i) = params.gamma;
    }
  }
  return j;
}

std::pair<Complex, Complex> decoupled_roots(Complex lambda_k, double b_k,
                                            const ModelParams& params) {
  const double g = params.gamma + params.beta;
  const Complex disc = (lambda_k - g) * (lambda_k - g) + 4.0 * params.alpha * b_k;
  const Complex root = std::sqrt(disc);
  const Complex sum = lambda_k + g;
  return {0.5 * (sum + root), 0.5 * (sum - root)};
}

SpectrumReport spectrum(const ModelParams& params, const Network& net) {
  check_network(params, net, "spectrum");
  SpectrumReport rep;
  rep.eigenvalues = eig_general(jacobian(params, net));
  std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end(),
            [](const Complex& a, const Complex& b) {
              const double ma = std::abs(a);
              const double mb = std::abs(b);
              if (ma != mb) return ma > mb;
              if (a.real() != b.real()) return a.real() > b.real();
              return a.imag() > b.imag();
            });
  rep.rho = rep.eigenvalues.empty() ? 0.0 : std::abs(rep.eigenvalues.front());
  rep.stable = rep.rho < 1.0;
  rep.critical = std::abs(rep.rho - 1.0) < tol::critical_band;
  rep.margin = 1.0 - rep.rho;

  double spread = 0.0;
  for (double b : net.b) spread = std::max(spread, std::abs(b - net.b[0]));
  if (spread <= tol::uniform_reactivity) {
    // Uniform reactivity: each influence mode contributes one quadratic.
    Matrix aw(net.n, net.n);
    for (std::size_t i = 0; i < net.n; ++i)
      for (std::size_t k = 0; k < net.n; ++k) aw(i, k) = net.a[i] * net.w(i, k);
    std::vector<std::pair<Complex, Complex>> roots;
    roots.reserve(net.n);
    for (const Complex& lk : eig_general(aw)) {
      roots.push_back(decoupled_roots(lk, net.b[0], params));
    }
    rep.mode_roots = std::move(roots);
  }
  return rep;
}

namespace {

std::vector<Complex> reduced_determinant_matrix(Complex z, const ModelParams& params,
                                                const Network& net) {
  const double g = params.gamma + params.beta;
  if (std::abs(z - g) <= tol::excluded_point) {
    throw ExcludedPoint("nonlinear_residual: z within the guard band around gamma + beta");
  }
  const Complex c = params.alpha / (g - z);
  const std::size_t n = net.n;
  std::vector<Complex> m(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      Complex entry = net.a[i] * net.w(i, k);
      if (i == k) entry -= c * net.b[i] + z;
      m[i * n + k] = entry;
    }
  }
  return m;
}

}  // namespace

double nonlinear_residual(Complex z, const ModelParams& params, const Network& net) {
  check_network(params, net, "nonlinear_residual");
  return complex_abs_det(reduced_determinant_matrix(z, params, net), net.n).abs_det;
}

DeterminantResult nonlinear_certificate(Complex z, const ModelParams& params,
                                        const Network& net) {
  check_network(params, net, "nonlinear_certificate");
  return complex_abs_det(reduced_determinant_matrix(z, params, net), net.n);
}

BoundaryResult find_boundary(const std::string& parameter, const ModelParams& params,
                             const Network& net, double lo, double hi) {
  check_network(params, net, "find_boundary");
  if (parameter != "alpha" && parameter != "beta" && parameter != "gamma") {
    throw InvalidSpec("find_boundary: unknown parameter '" + parameter + "'");
  }
  if (!(lo < hi)) {
    throw InvalidSpec("find_boundary: empty interval [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
  }

  auto excess = [&](double x) {
    ModelParams p = params;
    if (parameter == "alpha") p.alpha = x;
    else if (parameter == "beta") p.beta = x;
    else p.gamma = x;
    return spectral_radius(jacobian(p, net)) - 1.0;
  };

  // Coarse scan, then bisection inside the first cell with a sign change.
  const int grid = tol::boundary_grid;
  std::vector<double> xs(grid), fs(grid);
  for (int k = 0; k < grid; ++k) {
    xs[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(grid - 1);
    fs[k] = excess(xs[k]);
  }

  BoundaryResult result;
  result.parameter = parameter;
  // A grid point already on the boundary wins over bisection in an adjacent
  // cell; otherwise rounding in rho could steal the exact answer.
  for (int k = 0; k < grid; ++k) {
    if (std::abs(fs[k]) > tol::boundary_rho) continue;
    result.critical_value = xs[k];
    result.bracket = k + 1 < grid ? std::pair{xs[k], xs[k + 1]} : std::pair{xs[k - 1], xs[k]};
    result.rho_at_critical = fs[k] + 1.0;
    result.iterations = 0;
    return result;
  }
  for (int k = 0; k + 1 < grid; ++k) {
    if (fs[k] * fs[k + 1] > 0.0) continue;

    result.bracket = {xs[k], xs[k + 1]};
    double a = xs[k];
    double b = xs[k + 1];
    double fa = fs[k];
    for (int it = 1; it <= tol::boundary_max_iter; ++it) {
      const double mid = 0.5 * (a + b);
      const double fm = excess(mid);
      if (std::abs(fm) <= tol::boundary_rho) {
        result.critical_value = mid;
        result.rho_at_critical = fm + 1.0;
        result.iterations = it;
        return result;
      }
      if (fa * fm < 0.0) {
        b = mid;
      } else {
        a = mid;
        fa = fm;
      }
    }
    throw NoConvergence("find_boundary: bisection used " +
                        std::to_string(tol::boundary_max_iter) +
                        " iterations without pinning the crossing");
  }
  throw NoBracket("find_boundary: rho - 1 does not change sign for " + parameter + " on [" +
                  std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

}  // namespace fjhawkes
