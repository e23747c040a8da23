#include "pseudoham/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "pseudoham/error.hpp"

namespace pseudoham {

namespace {

// Householder reduction of the lower triangle. On return d holds the diagonal
// and e the subdiagonal (e[0] = 0, e[i] couples rows i-1 and i).
void tridiagonalize(DenseMatrix& a, std::vector<double>& d, std::vector<double>& e) {
  const auto n = static_cast<std::ptrdiff_t>(a.size());
  d.assign(static_cast<std::size_t>(n), 0.0);
  e.assign(static_cast<std::size_t>(n), 0.0);
  for (std::ptrdiff_t i = n - 1; i > 0; --i) {
    const std::ptrdiff_t l = i - 1;
    double h = 0.0;
    double* ai = a.row(static_cast<std::size_t>(i));
    if (l > 0) {
      double scale = 0.0;
      for (std::ptrdiff_t k = 0; k <= l; ++k) scale += std::abs(ai[k]);
      if (scale == 0.0) {
        e[i] = ai[l];
      } else {
        for (std::ptrdiff_t k = 0; k <= l; ++k) {
          ai[k] /= scale;
          h += ai[k] * ai[k];
        }
        double f = ai[l];
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        ai[l] = f - g;
        f = 0.0;
        for (std::ptrdiff_t j = 0; j <= l; ++j) {
          const double* aj = a.row(static_cast<std::size_t>(j));
          g = 0.0;
          for (std::ptrdiff_t k = 0; k <= j; ++k) g += aj[k] * ai[k];
          for (std::ptrdiff_t k = j + 1; k <= l; ++k) g += a(static_cast<std::size_t>(k), static_cast<std::size_t>(j)) * ai[k];
          e[j] = g / h;
          f += e[j] * ai[j];
        }
        const double hh = f / (h + h);
        for (std::ptrdiff_t j = 0; j <= l; ++j) {
          f = ai[j];
          e[j] = g = e[j] - hh * f;
          double* aj = a.row(static_cast<std::size_t>(j));
          for (std::ptrdiff_t k = 0; k <= j; ++k) aj[k] -= (f * e[k] + g * ai[k]);
        }
      }
    } else {
      e[i] = ai[l];
    }
    d[i] = h;
  }
  for (std::ptrdiff_t i = 0; i < n; ++i) d[i] = a(static_cast<std::size_t>(i), static_cast<std::size_t>(i));
}

// Implicit QL on a symmetric tridiagonal matrix; e[i] couples rows i and i+1.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e) {
  const auto n = static_cast<std::ptrdiff_t>(d.size());
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (std::ptrdiff_t l = 0; l < n; ++l) {
    int iter = 0;
    std::ptrdiff_t m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 100) throw Error("tridiagonal QL failed to converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::abs(r) : -std::abs(r)));
        double s = 1.0, c = 1.0, p = 0.0;
        std::ptrdiff_t i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          e[i + 1] = (r = std::hypot(f, g));
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          d[i + 1] = g + (p = s * r);
          g = c * r - b;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

std::vector<double> symmetric_eigenvalues(DenseMatrix a) {
  if (a.size() == 0) return {};
  std::vector<double> d, e;
  tridiagonalize(a, d, e);
  for (std::size_t i = 1; i < e.size(); ++i) e[i - 1] = e[i];
  e.back() = 0.0;
  tridiagonal_ql(d, e);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

}  // namespace pseudoham
