#include <doctest.h>

#include <cmath>
#include <random>

#include "mgp/hurst_profile.hpp"

using namespace mgp;

TEST_CASE("profile construction validates the (1/2,1) band") {
  CHECK_THROWS_AS(HurstProfile::constant(0.4), DomainError);
  CHECK_THROWS_AS(HurstProfile::constant(0.5), DomainError);
  CHECK_THROWS_AS(HurstProfile::constant(1.0), DomainError);
  CHECK_THROWS_AS(HurstProfile::sinusoidal(0.75, 0.2, 1.0, 0.0, 0.6, 0.9), DomainError);
  CHECK_THROWS_AS(HurstProfile::linear_clamped(0.55, 0.1, 0.6, 0.9), DomainError);
  CHECK_THROWS_AS(
      HurstProfile::piecewise_linear({{0.0, 0.7}, {1.0, 0.95}}, 0.6, 0.9), DomainError);
  CHECK_THROWS_AS(
      HurstProfile::piecewise_linear({{1.0, 0.7}, {1.0, 0.8}}, 0.6, 0.9), DomainError);
}

TEST_CASE("eval examples") {
  CHECK(HurstProfile::constant(0.75).eval(3.2) == 0.75);
  const auto sine = HurstProfile::sinusoidal(0.75, 0.15, 1.0, 0.0, 0.6, 0.9);
  CHECK(sine.eval(0.0) == doctest::Approx(0.75).epsilon(1e-15));
  const auto pwl = HurstProfile::piecewise_linear({{0.0, 0.6}, {1.0, 0.9}}, 0.6, 0.9);
  CHECK(pwl.eval(0.5) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(pwl.eval(2.0) == 0.9);
  CHECK_THROWS_AS(sine.eval(-0.1), DomainError);
}

TEST_CASE("derivative examples and rejections") {
  CHECK(HurstProfile::constant(0.75).derivative(12.0) == 0.0);
  const auto sine = HurstProfile::sinusoidal(0.75, 0.15, 1.0, 0.0, 0.6, 0.9);
  CHECK(sine.derivative(0.0) == doctest::Approx(0.15).epsilon(1e-15));
  CHECK(sine.derivative(1.57079632679489662) == doctest::Approx(0.0).epsilon(1e-15));
  const auto lin = HurstProfile::linear_clamped(0.7, 0.05, 0.6, 0.9);
  CHECK_THROWS_AS(lin.derivative(0.5), UnsupportedProfileError);
  const auto pwl = HurstProfile::piecewise_linear({{0.0, 0.6}, {1.0, 0.9}}, 0.6, 0.9);
  CHECK(pwl.derivative(0.5) == doctest::Approx(0.3).epsilon(1e-14));
  CHECK_THROWS_AS(pwl.derivative(1.0), UnsupportedProfileError);
}

TEST_CASE("range containment on random times") {
  const auto sine = HurstProfile::sinusoidal(0.75, 0.15, 2.3, 0.4, 0.6, 0.9);
  const auto lin = HurstProfile::linear_clamped(0.62, 0.07, 0.6, 0.9);
  const auto pwl =
      HurstProfile::piecewise_linear({{0.0, 0.6}, {2.0, 0.8}, {4.0, 0.6}}, 0.6, 0.8);
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(0.0, 100.0);
  for (int i = 0; i < 10000; ++i) {
    const double t = u(gen);
    for (const auto* p : {&sine, &lin, &pwl}) {
      const double v = p->eval(t);
      CHECK(v >= p->lower());
      CHECK(v <= p->upper());
    }
  }
}

TEST_CASE("derivative consistent with central differences") {
  const auto sine = HurstProfile::sinusoidal(0.75, 0.15, 1.7, 0.2, 0.6, 0.9);
  for (double t : {0.3, 1.1, 2.9, 7.7}) {
    const double d = 1e-5;
    const double fd = (sine.eval(t + d) - sine.eval(t - d)) / (2.0 * d);
    CHECK(std::abs(fd - sine.derivative(t)) <= 1.0 * d * d * 10.0);
  }
  const auto pwl = HurstProfile::piecewise_linear({{0.0, 0.6}, {1.0, 0.9}}, 0.6, 0.9);
  const double d = 1e-4;
  CHECK(std::abs((pwl.eval(0.5 + d) - pwl.eval(0.5 - d)) / (2 * d) - pwl.derivative(0.5)) <=
        1e-12);
}

TEST_CASE("regularity tags") {
  CHECK(HurstProfile::constant(0.75).twice_differentiable());
  CHECK(HurstProfile::sinusoidal(0.75, 0.15, 1.0, 0.0, 0.6, 0.9).twice_differentiable());
  CHECK_FALSE(HurstProfile::linear_clamped(0.7, 0.1, 0.6, 0.9).twice_differentiable());
  CHECK_FALSE(HurstProfile::piecewise_linear({{0.0, 0.6}, {1.0, 0.9}}, 0.6, 0.9)
                  .twice_differentiable());
}
