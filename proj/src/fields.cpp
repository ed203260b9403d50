#include "mgp/fields.hpp"

#include <algorithm>
#include <cmath>

namespace mgp::fields {

using specialfn::c_norm;
using specialfn::d_coef;
using specialfn::log_gamma;
using specialfn::log_gamma_ratio;

namespace {

constexpr double kPi = 3.14159265358979323846;

// |n+1|^a + |n-1|^a - 2 n^a for n >= 2 without subtractive cancellation:
// n^a [expm1(a log1p(1/n)) + expm1(a log1p(-1/n))].
double second_diff_pow(long n, double a) {
  if (n == 0) return 2.0;
  if (n == 1) return std::pow(2.0, a) - 2.0;
  const double inv = 1.0 / static_cast<double>(n);
  const double bracket =
      std::expm1(a * std::log1p(inv)) + std::expm1(a * std::log1p(-inv));
  return std::pow(static_cast<double>(n), a) * bracket;
}

}  // namespace

double fwn_cov(long j, long k, const HurstPair& p) {
  if (j < 0 || k < 0) throw DomainError("fwn_cov: indices must be nonnegative");
  const long n = std::labs(j - k);
  return d_coef(p) * second_diff_pow(n, p.h1 + p.h2);
}

double fwn_spectral_oracle(long j, long k, const HurstPair& p, const quad::Options& opts) {
  if (j < 0 || k < 0) throw DomainError("fwn_spectral_oracle: indices must be nonnegative");
  const long n = std::labs(j - k);
  if (n > 64) throw DomainError("fwn_spectral_oracle: |j-k| must be <= 64 (oracle scale)");
  const double a = p.h1 + p.h2;

  // real cosine form: 4 int_0^inf cos(nx)(1-cos x) x^{-a-1} dx; the
  // symmetrized integrand is exactly real, imaginary part 0 by construction
  auto f = [&](double x) {
    if (x < 1e-6) {
      // (1-cos x) x^{-a-1} = x^{1-a} (1/2 - x^2/24 + ...), avoids 0 * inf
      return std::cos(n * x) * 0.5 * std::pow(x, 1.0 - a) * (1.0 - x * x / 12.0);
    }
    const double s = std::sin(0.5 * x);
    return std::cos(n * x) * (2.0 * s * s) * std::pow(x, -a - 1.0);
  };

  quad::Options o = opts;
  o.rel_tol = std::min(opts.rel_tol, 1e-9);
  o.abs_tol = 1e-13;  // oscillation nodes make per-panel relative targets moot

  // (0, 1]: integrable endpoint singularity x^{1-a}
  double integral = quad::tanh_sinh(f, 0.0, 1.0, o);

  // [1, X]: oscillatory; fixed panels short enough for the highest frequency
  const double X = 200.0;
  const double plen = kPi / (2.0 * (n + 2));
  double x0 = 1.0;
  while (x0 < X) {
    const double x1 = std::min(x0 + plen, X);
    integral += quad::adaptive_gk15(f, x0, x1, o);
    x0 = x1;
  }

  // analytic tail from X: cos(nx)(1-cos x) = cos(nx) - cos((n+1)x)/2 - cos((n-1)x)/2
  auto tail_cos = [&](double freq) {
    // int_X^inf cos(kx) x^{-a-1} dx by three integrations by parts
    const double g0 = std::pow(X, -a - 1.0);
    const double g1 = -(a + 1.0) * std::pow(X, -a - 2.0);
    const double g2 = (a + 1.0) * (a + 2.0) * std::pow(X, -a - 3.0);
    return -std::sin(freq * X) * g0 / freq - std::cos(freq * X) * g1 / (freq * freq) +
           std::sin(freq * X) * g2 / (freq * freq * freq);
  };
  const double power_tail = std::pow(X, -a) / a;  // int_X^inf x^{-a-1} dx
  if (n == 0) {
    integral += power_tail - tail_cos(1.0);
  } else if (n == 1) {
    integral += tail_cos(1.0) - 0.5 * tail_cos(2.0) - 0.5 * power_tail;
  } else {
    integral += tail_cos(static_cast<double>(n)) -
                0.5 * tail_cos(static_cast<double>(n + 1)) -
                0.5 * tail_cos(static_cast<double>(n - 1));
  }

  return 4.0 / (c_norm(p.h1) * c_norm(p.h2)) * integral;
}

double farima_psi(long l, double d) {
  if (l < 0) throw DomainError("farima_psi: index must be nonnegative");
  if (!(d > 0.0 && d < 0.5)) throw DomainError("farima_psi: d must lie in (0, 1/2)");
  if (l == 0) return 1.0;
  if (l < 8) {
    double psi = 1.0;
    for (long i = 1; i <= l; ++i) psi *= (d + i - 1.0) / static_cast<double>(i);
    return psi;
  }
  return std::exp(log_gamma_ratio(d + l, l + 1.0) - log_gamma(d));
}

namespace {

double farima_cov_lag(long n, double d_later, double d_earlier) {
  // Gamma(dL+n) Gamma(1-dL-dE) / (Gamma(dL) Gamma(1-dL) Gamma(n+1-dE))
  const double ratio = log_gamma_ratio(d_later + n, n + 1.0 - d_earlier);
  return std::exp(ratio + log_gamma(1.0 - d_later - d_earlier) - log_gamma(d_later) -
                  log_gamma(1.0 - d_later));
}

}  // namespace

double farima_cov(long j, long k, const HurstPair& p) {
  if (j < 0 || k < 0) throw DomainError("farima_cov: indices must be nonnegative");
  const double d1 = p.h1 - 0.5, d2 = p.h2 - 0.5;
  return j >= k ? farima_cov_lag(j - k, d1, d2) : farima_cov_lag(k - j, d2, d1);
}

FieldModel::FieldModel(Kind k, double a, double b) : kind_(k), a_(a), b_(b) {
  if (!(a > 0.5 && a <= b && b < 1.0))
    throw DomainError("FieldModel: Hurst range must satisfy 1/2 < a <= b < 1");
}

FieldModel FieldModel::fwn(double a, double b) { return FieldModel(Kind::Fwn, a, b); }
FieldModel FieldModel::farima(double a, double b) { return FieldModel(Kind::Farima, a, b); }

double FieldModel::cov(long j, long k, double h_j, double h_k) const {
  const HurstPair p(h_j, h_k);
  return kind_ == Kind::Fwn ? fwn_cov(j, k, p) : farima_cov(j, k, p);
}

kernels::AsymptoticCovariance FieldModel::asympt() const {
  return kind_ == Kind::Fwn ? kernels::AsymptoticCovariance::fwn()
                            : kernels::AsymptoticCovariance::farima();
}

double assumption2_residual(const FieldModel& model, long n, int grid) {
  if (n < 1) throw DomainError("assumption2_residual: lag must be >= 1");
  const auto r = model.asympt();
  const double a = model.lower(), b = model.upper();
  double sup = 0.0;
  for (int i = 0; i < grid; ++i)
    for (int jj = 0; jj < grid; ++jj) {
      const double h1 = grid == 1 ? a : a + (b - a) * i / (grid - 1.0);
      const double h2 = grid == 1 ? a : a + (b - a) * jj / (grid - 1.0);
      const double scaled =
          std::pow(static_cast<double>(n), 2.0 - h1 - h2) *
          model.cov(n, 0, h1, h2);
      sup = std::max(sup, std::abs(scaled - r(h1, h2)));
    }
  return sup;
}

double lemma1_residual(long n, double d1, double d2) {
  if (n < 1) throw DomainError("lemma1_residual: lag must be >= 1");
  if (!(d1 > 0.0 && d1 < 0.5 && d2 > 0.0 && d2 < 0.5))
    throw DomainError("lemma1_residual: memory parameters must lie in (0, 1/2)");
  // sum_{l>=1} = Gamma(d1) Gamma(d2) cov_lag(n; d1, d2) - l=0 term, exactly
  const double full = std::exp(log_gamma(d1) + log_gamma(d2)) * farima_cov_lag(n, d1, d2);
  const double l0 = std::exp(log_gamma_ratio(d1 + n, n + 1.0) + log_gamma(d2));
  const double scaled = std::pow(static_cast<double>(n), 1.0 - d1 - d2) * (full - l0);
  const double target = std::exp(log_gamma(d2) + log_gamma(1.0 - d1 - d2) -
                                 log_gamma(1.0 - d1));
  return std::abs(scaled - target);
}

}  // namespace mgp::fields
