#include "mgp/specialfn.hpp"

#include <cmath>

namespace mgp::specialfn {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfLog2Pi = 0.91893853320467274178;  // 0.5*ln(2*pi)

// Lanczos coefficients, g = 7, n = 9.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_log_gamma(double x) {
  // valid for x >= 0.5
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (x - 1.0 + i);
  const double t = x + 6.5;
  return kHalfLog2Pi + (x - 0.5) * std::log(t) - t + std::log(acc);
}

// Stirling tail sum(k) B_{2k} / (2k(2k-1) z^{2k-1}), usable for z >= 8.
double stirling_tail(double z) {
  static constexpr double b[8] = {
      1.0 / 12.0,       -1.0 / 360.0,      1.0 / 1260.0,       -1.0 / 1680.0,
      1.0 / 1188.0,     -691.0 / 360360.0, 1.0 / 156.0,        -3617.0 / 122400.0};
  const double w = 1.0 / (z * z);
  double s = b[7];
  for (int i = 6; i >= 0; --i) s = b[i] + s * w;
  return s / z;
}

}  // namespace

double sin_pi(double x) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("sin_pi: argument outside (0,1)");
  // 1-x is exact for x in (1/2,1), so the reduction loses nothing near 1.
  const double z = x <= 0.5 ? x : 1.0 - x;
  return std::sin(kPi * z);
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive");
  if (x == 1.0 || x == 2.0) return 0.0;
  if (x >= 0.5) return lanczos_log_gamma(x);
  // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
  return std::log(kPi / sin_pi(x)) - lanczos_log_gamma(1.0 - x);
}

double log_gamma_ratio(double x, double y) {
  if (!(x > 0.0 && y > 0.0)) throw DomainError("log_gamma_ratio: arguments must be positive");
  if (x < 8.0 || y < 8.0) return log_gamma(x) - log_gamma(y);
  // ln G(x) - ln G(y) = (x-y) ln y + (x-1/2) log1p((x-y)/y) - (x-y) + S(x) - S(y).
  // Every term stays O(|x-y| log y), so nearby large arguments do not cancel.
  const double d = x - y;
  const double u = std::log(y);
  const double v = std::log1p(d / y);
  return d * u + (x - 0.5) * v - d + stirling_tail(x) - stirling_tail(y);
}

double c_norm(double h) {
  if (!(h > 0.0 && h < 1.0)) throw DomainError("c_norm: Hurst index outside (0,1)");
  const double log_c2 = std::log(kPi) - std::log(h) - log_gamma(2.0 * h) - std::log(sin_pi(h));
  return std::exp(0.5 * log_c2);
}

double d_coef(const HurstPair& p) {
  const double h1 = p.h1, h2 = p.h2;
  const double num = 0.5 * (log_gamma(2.0 * h1 + 1.0) + log_gamma(2.0 * h2 + 1.0) +
                            std::log(sin_pi(h1)) + std::log(sin_pi(h2)));
  const double den = std::log(2.0) + log_gamma(h1 + h2 + 1.0) + std::log(sin_pi(0.5 * (h1 + h2)));
  return std::exp(num - den);
}

}  // namespace mgp::specialfn
