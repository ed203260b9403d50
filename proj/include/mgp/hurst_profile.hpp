#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mgp/errors.hpp"

namespace mgp {

// The multifractional function h : [0, inf) -> [a, b], 1/2 < a <= b < 1,
// restricted to parametric families with exact derivatives.
class HurstProfile {
 public:
  enum class Kind { Constant, LinearClamped, Sinusoidal, PiecewiseLinear };

  static HurstProfile constant(double h);
  static HurstProfile linear_clamped(double h0, double slope, double a, double b);
  static HurstProfile sinusoidal(double center, double amplitude, double omega,
                                 double phase, double a, double b);
  static HurstProfile piecewise_linear(std::vector<std::pair<double, double>> knots,
                                       double a, double b);

  // h(t), t >= 0; value lies in [a, b]
  double eval(double t) const;

  // exact analytic h'(t); throws UnsupportedProfileError where the family is
  // not differentiable (linear-clamped anywhere, piecewise-linear at knots)
  double derivative(double t) const;

  // true for the C^2 families (constant, sinusoidal)
  bool twice_differentiable() const;

  double lower() const { return a_; }
  double upper() const { return b_; }
  Kind kind() const { return kind_; }
  std::string describe() const;

 private:
  HurstProfile() = default;

  Kind kind_ = Kind::Constant;
  double a_ = 0.75, b_ = 0.75;
  // constant / linear-clamped / sinusoidal parameters
  double p0_ = 0.75, p1_ = 0.0, p2_ = 0.0, p3_ = 0.0;
  std::vector<std::pair<double, double>> knots_;
};

}  // namespace mgp
