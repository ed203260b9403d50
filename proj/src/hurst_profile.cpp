#include "mgp/hurst_profile.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mgp {

namespace {

void check_bounds(double a, double b) {
  if (!(a > 0.5 && a <= b && b < 1.0))
    throw DomainError("HurstProfile: bounds must satisfy 1/2 < a <= b < 1");
}

void check_time(double t) {
  if (!(t >= 0.0)) throw DomainError("HurstProfile: time must be nonnegative");
}

}  // namespace

HurstProfile HurstProfile::constant(double h) {
  check_bounds(h, h);
  HurstProfile p;
  p.kind_ = Kind::Constant;
  p.a_ = p.b_ = h;
  p.p0_ = h;
  return p;
}

HurstProfile HurstProfile::linear_clamped(double h0, double slope, double a, double b) {
  check_bounds(a, b);
  if (!(h0 >= a && h0 <= b))
    throw DomainError("HurstProfile: linear-clamped start value outside [a, b]");
  HurstProfile p;
  p.kind_ = Kind::LinearClamped;
  p.a_ = a;
  p.b_ = b;
  p.p0_ = h0;
  p.p1_ = slope;
  return p;
}

HurstProfile HurstProfile::sinusoidal(double center, double amplitude, double omega,
                                      double phase, double a, double b) {
  check_bounds(a, b);
  const double amp = std::abs(amplitude);
  if (!(center - amp >= a && center + amp <= b))
    throw DomainError("HurstProfile: sinusoidal range [center-|amp|, center+|amp|] outside [a, b]");
  HurstProfile p;
  p.kind_ = Kind::Sinusoidal;
  p.a_ = a;
  p.b_ = b;
  p.p0_ = center;
  p.p1_ = amplitude;
  p.p2_ = omega;
  p.p3_ = phase;
  return p;
}

HurstProfile HurstProfile::piecewise_linear(std::vector<std::pair<double, double>> knots,
                                            double a, double b) {
  check_bounds(a, b);
  if (knots.size() < 2)
    throw DomainError("HurstProfile: piecewise-linear needs at least two knots");
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (i > 0 && !(knots[i].first > knots[i - 1].first))
      throw DomainError("HurstProfile: piecewise-linear knot times must increase");
    if (!(knots[i].first >= 0.0))
      throw DomainError("HurstProfile: piecewise-linear knot times must be nonnegative");
    if (!(knots[i].second >= a && knots[i].second <= b))
      throw DomainError("HurstProfile: piecewise-linear knot value outside [a, b]");
  }
  HurstProfile p;
  p.kind_ = Kind::PiecewiseLinear;
  p.a_ = a;
  p.b_ = b;
  p.knots_ = std::move(knots);
  return p;
}

double HurstProfile::eval(double t) const {
  check_time(t);
  switch (kind_) {
    case Kind::Constant:
      return p0_;
    case Kind::LinearClamped:
      return std::clamp(p0_ + p1_ * t, a_, b_);
    case Kind::Sinusoidal:
      return p0_ + p1_ * std::sin(p2_ * t + p3_);
    case Kind::PiecewiseLinear: {
      if (t <= knots_.front().first) return knots_.front().second;
      if (t >= knots_.back().first) return knots_.back().second;
      auto hi = std::upper_bound(
          knots_.begin(), knots_.end(), t,
          [](double v, const std::pair<double, double>& k) { return v < k.first; });
      auto lo = hi - 1;
      const double w = (t - lo->first) / (hi->first - lo->first);
      return lo->second + w * (hi->second - lo->second);
    }
  }
  return p0_;
}

double HurstProfile::derivative(double t) const {
  check_time(t);
  switch (kind_) {
    case Kind::Constant:
      return 0.0;
    case Kind::LinearClamped:
      if (p1_ == 0.0) return 0.0;
      throw UnsupportedProfileError(
          "HurstProfile: linear-clamped profiles are not C^1 at the clamp corners");
    case Kind::Sinusoidal:
      return p1_ * p2_ * std::cos(p2_ * t + p3_);
    case Kind::PiecewiseLinear: {
      for (const auto& k : knots_)
        if (t == k.first)
          throw UnsupportedProfileError(
              "HurstProfile: piecewise-linear derivative undefined at a knot");
      if (t < knots_.front().first || t > knots_.back().first) return 0.0;
      auto hi = std::upper_bound(
          knots_.begin(), knots_.end(), t,
          [](double v, const std::pair<double, double>& k) { return v < k.first; });
      auto lo = hi - 1;
      return (hi->second - lo->second) / (hi->first - lo->first);
    }
  }
  return 0.0;
}

bool HurstProfile::twice_differentiable() const {
  return kind_ == Kind::Constant || kind_ == Kind::Sinusoidal;
}

std::string HurstProfile::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Constant:
      os << "constant(h=" << p0_ << ")";
      break;
    case Kind::LinearClamped:
      os << "linear-clamped(h0=" << p0_ << ", slope=" << p1_ << ", a=" << a_
         << ", b=" << b_ << ")";
      break;
    case Kind::Sinusoidal:
      os << "sinusoidal(center=" << p0_ << ", amplitude=" << p1_ << ", omega=" << p2_
         << ", phase=" << p3_ << ", a=" << a_ << ", b=" << b_ << ")";
      break;
    case Kind::PiecewiseLinear:
      os << "piecewise-linear(" << knots_.size() << " knots, a=" << a_ << ", b=" << b_
         << ")";
      break;
  }
  return os.str();
}

}  // namespace mgp
