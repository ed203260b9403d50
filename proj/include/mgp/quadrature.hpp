#pragma once

#include <functional>

#include "mgp/errors.hpp"

namespace mgp::quad {

struct Options {
  double rel_tol = 1e-8;
  double abs_tol = 0.0;    // acceptance is err <= max(abs_tol, rel_tol*|I|)
  int max_panels = 10000;  // subdivision budget
};

// Globally adaptive Gauss-Kronrod 7-15 on [a, b].
// Throws QuadratureError when the budget is exhausted before the tolerance.
double adaptive_gk15(const std::function<double(double)>& f, double a, double b,
                     const Options& opts = {});

// tanh-sinh rule on (a, b); robust to integrable endpoint singularities.
// The integrand is never evaluated at the endpoints.
double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 const Options& opts = {});

// tanh-sinh variant for integrands singular at an endpoint: receives the
// node plus its exact distances to a and b (the node coordinate alone loses
// those distances to rounding deep in the corners).
using EndpointIntegrand =
    std::function<double(double x, double dist_a, double dist_b)>;
double tanh_sinh_endpoint(const EndpointIntegrand& f, double a, double b,
                          const Options& opts = {});

// Integral of f over [a1,b1] x [a2,b2] where f may have an integrable
// singularity on the diagonal theta = sigma (exponent > -1). Splits along
// the diagonal and substitutes w = theta - sigma so the singular direction
// is handled by the tanh-sinh rule. The integrand receives
// (theta, sigma, w) with w the exact signed offset theta - sigma; near the
// diagonal theta - sigma rounds to zero while w stays meaningful, so the
// singular factor must be computed from w.
using DiagonalIntegrand = std::function<double(double theta, double sigma, double w)>;
double singular_rect(const DiagonalIntegrand& f, double a1, double b1, double a2,
                     double b2, const Options& opts = {});

}  // namespace mgp::quad
