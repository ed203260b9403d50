#pragma once

#include "mgp/errors.hpp"

namespace mgp {

// A pair of Hurst indices in the long-range-dependent band (1/2, 1).
struct HurstPair {
  double h1;
  double h2;

  HurstPair(double h1_, double h2_) : h1(h1_), h2(h2_) {
    if (!(h1 > 0.5 && h1 < 1.0 && h2 > 0.5 && h2 < 1.0))
      throw DomainError("HurstPair: indices must lie in (1/2, 1)");
  }
};

namespace specialfn {

// ln Gamma(x) for x > 0.  Lanczos approximation (g = 7, 9 coefficients),
// reflection below 1/2; returns exactly 0 at x = 1 and x = 2.
double log_gamma(double x);

// ln Gamma(x) - ln Gamma(y), computed without the catastrophic cancellation
// of the two large Stirling terms when x and y are large and close.
double log_gamma_ratio(double x, double y);

// sin(pi * x) for x in (0, 1), accurate near both endpoints.
double sin_pi(double x);

// Spectral normalization C(H) = sqrt(pi / (H Gamma(2H) sin(pi H))), H in (0,1).
double c_norm(double h);

// Covariance coefficient D(H1, H2) of the two-index fractional kernel.
// D(H,H) = 1/2.
double d_coef(const HurstPair& p);

}  // namespace specialfn
}  // namespace mgp
