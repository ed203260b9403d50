#include <cmath>
#include <cstddef>

#include "mgp/simd/simd.hpp"

namespace mgp::simd {

namespace {

void s_exp(const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = std::exp(x[i]);
}
void s_log(const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = std::log(x[i]);
}
void s_expm1(const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = std::expm1(x[i]);
}
void s_log1p(const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = std::log1p(x[i]);
}

// Stirling with a fixed shift by 8; matches the AVX2 variant bit-for-bit in
// structure so the two stay within a few ulp of each other.
constexpr double kHalfLog2Pi = 0.91893853320467274178;

double stirling_series(double z) {
  static constexpr double b[7] = {1.0 / 12.0,   -1.0 / 360.0,      1.0 / 1260.0,
                                  -1.0 / 1680.0, 1.0 / 1188.0,     -691.0 / 360360.0,
                                  1.0 / 156.0};
  const double w = 1.0 / (z * z);
  double s = b[6];
  for (int i = 5; i >= 0; --i) s = b[i] + s * w;
  return s / z;
}

double lgamma_one(double x) {
  double shift = 0.0;
  double z = x;
  if (z < 8.0) {
    double p = z;
    for (int i = 1; i < 8; ++i) p *= z + i;
    shift = std::log(p);
    z += 8.0;
  }
  return (z - 0.5) * std::log(z) - z + kHalfLog2Pi + stirling_series(z) - shift;
}

void s_lgamma(const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = lgamma_one(x[i]);
}

double sinpi_one(double x) {
  constexpr double kPi = 3.14159265358979323846;
  const double z = x <= 0.5 ? x : 1.0 - x;
  // Taylor in (pi z)^2; |pi z| <= pi/2, 10 terms reach ~1e-17 relative
  const double r = kPi * z;
  const double r2 = r * r;
  double s = 1.0 / 121645100408832000.0;  // 1/19!
  s = 1.0 / 355687428096000.0 - s * r2;   // 1/17!
  s = 1.0 / 1307674368000.0 - s * r2;     // 1/15!
  s = 1.0 / 6227020800.0 - s * r2;        // 1/13!
  s = 1.0 / 39916800.0 - s * r2;          // 1/11!
  s = 1.0 / 362880.0 - s * r2;            // 1/9!
  s = 1.0 / 5040.0 - s * r2;              // 1/7!
  s = 1.0 / 120.0 - s * r2;               // 1/5!
  s = 1.0 / 6.0 - s * r2;                 // 1/3!
  s = 1.0 - s * r2;
  return r * s;
}

void s_sinpi(const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = sinpi_one(x[i]);
}

}  // namespace

const Kernels& scalar() {
  static const Kernels k = {s_exp, s_log, s_expm1, s_log1p, s_lgamma, s_sinpi, "scalar"};
  return k;
}

}  // namespace mgp::simd
