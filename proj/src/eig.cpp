#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "fjhawkes/errors.hpp"
#include "fjhawkes/linalg.hpp"
#include "fjhawkes/tolerances.hpp"

// Eigenvalues of a general real matrix, classical dense pipeline:
//   1. balance     - diagonal similarity by powers of 2 to even out row and
//                    column norms (no rounding error, eigenvalues unchanged)
//   2. hessenberg  - Householder similarity reduction to upper Hessenberg
//   3. hqr         - Francis implicit double-shift QR on the Hessenberg form,
//                    eigenvalues only, no eigenvectors accumulated
// Complex conjugate pairs are produced from one 2x2 block, so they are exact
// conjugates of each other by construction.

namespace fjhawkes {

namespace {

class HView {
 public:
  HView(double* p, int n) : p_(p), n_(n) {}
  double& operator()(int i, int j) { return p_[i * n_ + j]; }
  double operator()(int i, int j) const { return p_[i * n_ + j]; }

 private:
  double* p_;
  int n_;
};

void balance(HView a, int n) {
  const double radix = 2.0;
  const double sqrdx = radix * radix;
  bool done = false;
  while (!done) {
    done = true;
    for (int i = 0; i < n; ++i) {
      double r = 0.0;
      double c = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= sqrdx;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= sqrdx;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        g = 1.0 / f;
        for (int j = 0; j < n; ++j) a(i, j) *= g;
        for (int j = 0; j < n; ++j) a(j, i) *= f;
      }
    }
  }
}

void hessenberg(HView a, int n) {
  for (int k = 0; k + 2 < n; ++k) {
    double scale = 0.0;
    for (int i = k + 1; i < n; ++i) scale += std::abs(a(i, k));
    if (scale == 0.0) continue;

    // Householder vector for column k, scaled entries in rows k+1..n-1.
    std::vector<double> v(static_cast<std::size_t>(n - k - 1));
    double h = 0.0;
    for (int i = k + 1; i < n; ++i) {
      v[i - k - 1] = a(i, k) / scale;
      h += v[i - k - 1] * v[i - k - 1];
    }
    const double f0 = v[0];
    const double g = (f0 >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
    h -= f0 * g;
    v[0] = f0 - g;

    // a <- P a P with P = I - v v^T / h.
    for (int j = 0; j < n; ++j) {
      double f = 0.0;
      for (int i = k + 1; i < n; ++i) f += v[i - k - 1] * a(i, j);
      f /= h;
      for (int i = k + 1; i < n; ++i) a(i, j) -= f * v[i - k - 1];
    }
    for (int i = 0; i < n; ++i) {
      double f = 0.0;
      for (int j = k + 1; j < n; ++j) f += a(i, j) * v[j - k - 1];
      f /= h;
      for (int j = k + 1; j < n; ++j) a(i, j) -= f * v[j - k - 1];
    }

    a(k + 1, k) = scale * g;
    for (int i = k + 2; i < n; ++i) a(i, k) = 0.0;
  }
}

std::vector<Complex> hqr(HView h, int n, int max_sweeps) {
  const double eps = std::numeric_limits<double>::epsilon();
  std::vector<Complex> eig(static_cast<std::size_t>(n));

  double anorm = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::abs(h(i, j));

  int nn = n - 1;
  double t = 0.0;
  int sweeps = 0;
  while (nn >= 0) {
    int its = 0;
    int l = 0;
    do {
      // Look for a negligible subdiagonal entry; the active block is l..nn.
      for (l = nn; l >= 1; --l) {
        double s = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
        if (s == 0.0) s = anorm;
        if (std::abs(h(l, l - 1)) <= eps * s) {
          h(l, l - 1) = 0.0;
          break;
        }
      }
      double x = h(nn, nn);
      if (l == nn) {
        // 1x1 block: one real eigenvalue.
        eig[nn] = Complex(x + t, 0.0);
        --nn;
      } else {
        double y = h(nn - 1, nn - 1);
        double w = h(nn, nn - 1) * h(nn - 1, nn);
        if (l == nn - 1) {
          // 2x2 block: a real pair or an exact conjugate pair.
          const double p = 0.5 * (y - x);
          const double q = p * p + w;
          double z = std::sqrt(std::abs(q));
          x += t;
          if (q >= 0.0) {
            z = p + std::copysign(z, p);
            const double r1 = x + z;
            eig[nn - 1] = Complex(r1, 0.0);
            eig[nn] = Complex(z != 0.0 ? x - w / z : r1, 0.0);
          } else {
            eig[nn - 1] = Complex(x + p, z);
            eig[nn] = Complex(x + p, -z);
          }
          nn -= 2;
        } else {
          if (++sweeps > max_sweeps) {
            throw NoConvergence("eig: QR used more than " + std::to_string(max_sweeps) +
                                " sweeps without deflating");
          }
          if (its == 10 || its == 20) {
            // Exceptional shift to break symmetric stalling.
            t += x;
            for (int i = 0; i <= nn; ++i) h(i, i) -= x;
            const double s = std::abs(h(nn, nn - 1)) + std::abs(h(nn - 1, nn - 2));
            y = x = 0.75 * s;
            w = -0.4375 * s * s;
          }
          ++its;

          // Find two consecutive small subdiagonals for the implicit start.
          double p = 0.0, q = 0.0, r = 0.0, z = 0.0;
          int m;
          for (m = nn - 2; m >= l; --m) {
            z = h(m, m);
            const double rr = x - z;
            const double ss = y - z;
            p = (rr * ss - w) / h(m + 1, m) + h(m, m + 1);
            q = h(m + 1, m + 1) - z - rr - ss;
            r = h(m + 2, m + 1);
            const double sc = std::abs(p) + std::abs(q) + std::abs(r);
            p /= sc;
            q /= sc;
            r /= sc;
            if (m == l) break;
            const double u = std::abs(h(m, m - 1)) * (std::abs(q) + std::abs(r));
            const double v =
                std::abs(p) * (std::abs(h(m - 1, m - 1)) + std::abs(z) + std::abs(h(m + 1, m + 1)));
            if (u <= eps * v) break;
          }
          for (int i = m + 2; i <= nn; ++i) {
            h(i, i - 2) = 0.0;
            if (i != m + 2) h(i, i - 3) = 0.0;
          }

          // Double QR sweep on rows and columns l..nn.
          for (int k = m; k <= nn - 1; ++k) {
            if (k != m) {
              p = h(k, k - 1);
              q = h(k + 1, k - 1);
              r = (k != nn - 1) ? h(k + 2, k - 1) : 0.0;
              x = std::abs(p) + std::abs(q) + std::abs(r);
              if (x != 0.0) {
                p /= x;
                q /= x;
                r /= x;
              }
            }
            double s = std::copysign(std::sqrt(p * p + q * q + r * r), p);
            if (s == 0.0) continue;
            if (k == m) {
              if (l != m) h(k, k - 1) = -h(k, k - 1);
            } else {
              h(k, k - 1) = -s * x;
            }
            p += s;
            x = p / s;
            y = q / s;
            z = r / s;
            q /= p;
            r /= p;
            for (int j = k; j <= nn; ++j) {
              double pp = h(k, j) + q * h(k + 1, j);
              if (k != nn - 1) {
                pp += r * h(k + 2, j);
                h(k + 2, j) -= pp * z;
              }
              h(k + 1, j) -= pp * y;
              h(k, j) -= pp * x;
            }
            const int mmin = (nn < k + 3) ? nn : k + 3;
            for (int i = l; i <= mmin; ++i) {
              double pp = x * h(i, k) + y * h(i, k + 1);
              if (k != nn - 1) {
                pp += z * h(i, k + 2);
                h(i, k + 2) -= pp * r;
              }
              h(i, k + 1) -= pp * q;
              h(i, k) -= pp;
            }
          }
        }
      }
    } while (l < nn - 1);
  }
  return eig;
}

}  // namespace

std::vector<Complex> eig_general(const Matrix& m) {
  require_square(m, "eig_general");
  const int n = static_cast<int>(m.rows());
  std::vector<double> work = m.data();
  HView h(work.data(), n);

  balance(h, n);
  hessenberg(h, n);
  return hqr(h, n, tol::eig_sweeps_per_n * n);
}

}  // namespace fjhawkes
