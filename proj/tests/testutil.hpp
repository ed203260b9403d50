#pragma once

// Test-only helpers: independent oracles and small numerics used to check the
// library against references that do not share its implementation paths.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace testutil {

// Long-double reference for ln Gamma (libm lgammal, ~1e-18), independent of
// the library's Lanczos path.
inline double ref_log_gamma(double x) { return static_cast<double>(lgammal((long double)x)); }

// Difference computed in long double so nearby large arguments do not lose
// the low bits before the subtraction.
inline double ref_log_gamma_ratio(double x, double y) {
  return static_cast<double>(lgammal((long double)x) - lgammal((long double)y));
}

// Brute-force FARIMA covariance series sum_{l=0}^{L} psi_{n+l}(d1) psi_l(d2)
// with an integral tail correction; long double throughout.
inline double farima_series_oracle(long n, double d1_, double d2_, long terms) {
  const long double d1 = d1_, d2 = d2_;
  long double psi1 = expl(lgammal(d1 + n) - lgammal((long double)n + 1) - lgammal(d1));
  long double psi2 = 1.0L;
  long double s = 0.0L;
  for (long l = 0; l <= terms; ++l) {
    s += psi1 * psi2;
    psi1 *= (d1 + n + l) / (long double)(n + l + 1);
    psi2 *= (d2 + l) / (long double)(l + 1);
  }
  // tail ~ int_terms^inf (n+u)^{d1-1} u^{d2-1} du / (Gamma(d1) Gamma(d2)),
  // Simpson on u = terms * e^y
  const long double Y = 90.0L / (1.0L - (d1 + d2));
  const int nn = 20000;
  const long double h = Y / nn;
  long double acc = 0.0L;
  for (int i = 0; i <= nn; ++i) {
    const long double y = i * h;
    const long double u = terms * expl(y);
    const long double w = (i == 0 || i == nn) ? 1.0L : ((i & 1) ? 4.0L : 2.0L);
    acc += w * powl(n + u, d1 - 1.0L) * powl(u, d2 - 1.0L) * u;
  }
  s += acc * h / 3.0L / (expl(lgammal(d1)) * expl(lgammal(d2)));
  return static_cast<double>(s);
}

// Eigenvalues of a small dense symmetric matrix by cyclic Jacobi rotations.
inline std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n) {
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i * n + j] * a[i * n + j];
    if (off < 1e-26) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k], aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i];
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace testutil
