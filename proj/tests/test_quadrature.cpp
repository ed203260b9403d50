#include <doctest.h>

#include <cmath>

#include "mgp/quadrature.hpp"
#include "mgp/specialfn.hpp"

using namespace mgp;

TEST_CASE("gk15 adaptive on smooth integrands") {
  quad::Options o;
  CHECK(quad::adaptive_gk15([](double x) { return std::sin(x); }, 0.0, 3.14159265358979323846,
                            o) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(quad::adaptive_gk15([](double x) { return std::exp(-x * x); }, -8.0, 8.0, o) ==
        doctest::Approx(std::sqrt(3.14159265358979323846)).epsilon(1e-12));
}

TEST_CASE("gk15 throws when the budget cannot meet the tolerance") {
  quad::Options o;
  o.rel_tol = 1e-14;
  o.max_panels = 4;
  CHECK_THROWS_AS(quad::adaptive_gk15([](double x) { return std::pow(std::abs(x - 0.3141), -0.5); },
                                      0.0, 1.0, o),
                  QuadratureError);
}

TEST_CASE("tanh_sinh handles endpoint singularities") {
  quad::Options o;
  CHECK(quad::tanh_sinh([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, o) ==
        doctest::Approx(2.0).epsilon(1e-10));
  CHECK(quad::tanh_sinh([](double x) { return std::pow(x, -0.8); }, 0.0, 1.0, o) ==
        doctest::Approx(5.0).epsilon(1e-10));
}

TEST_CASE("tanh_sinh reproduces the Beta integral with singular endpoints") {
  // B(d2, 1-d1-d2) = int_0^1 v^{d2-1} (1-v)^{-d1-d2} dv, both endpoints singular
  for (auto [d1, d2] : {std::pair<double, double>{0.2, 0.2}, {0.39, 0.45}, {0.45, 0.05}}) {
    const double ref = std::exp(specialfn::log_gamma(d2) +
                                specialfn::log_gamma(1 - d1 - d2) -
                                specialfn::log_gamma(1 - d1));
    quad::Options o;
    o.rel_tol = 1e-10;
    const double got = quad::tanh_sinh_endpoint(
        [&](double, double da, double db) {
          return std::pow(da, d2 - 1.0) * std::pow(db, -d1 - d2);
        },
        0.0, 1.0, o);
    CHECK(got == doctest::Approx(ref).epsilon(1e-9));
  }
  CHECK(std::exp(specialfn::log_gamma(0.2) + specialfn::log_gamma(0.6) -
                 specialfn::log_gamma(0.8)) ==
        doctest::Approx(5.8722508031029054).epsilon(1e-13));
}

TEST_CASE("singular_rect integrates |theta-sigma|^{2H-2} on the unit square") {
  const double h = 0.75;
  quad::Options o;
  const double got = quad::singular_rect(
      [&](double, double, double w) { return std::pow(std::abs(w), 2.0 * h - 2.0); }, 0.0,
      1.0, 0.0, 1.0, o);
  CHECK(got == doctest::Approx(1.0 / (h * (2.0 * h - 1.0))).epsilon(1e-8));
}

TEST_CASE("singular_rect on off-diagonal and partial rectangles") {
  const double beta = -0.5;
  auto f = [&](double, double, double w) { return std::pow(std::abs(w), beta); };
  auto exact = [&](double a1, double b1, double a2, double b2) {
    const double p = beta + 2.0, c = (beta + 1.0) * (beta + 2.0);
    auto q = [&](double x) { return std::pow(std::abs(x), p); };
    return (q(a1 - b2) + q(b1 - a2) - q(b1 - b2) - q(a1 - a2)) / c;
  };
  quad::Options o;
  CHECK(quad::singular_rect(f, 2.0, 3.0, 0.0, 1.0, o) ==
        doctest::Approx(exact(2, 3, 0, 1)).epsilon(1e-9));
  CHECK(quad::singular_rect(f, 0.0, 2.0, 1.0, 3.0, o) ==
        doctest::Approx(exact(0, 2, 1, 3)).epsilon(1e-8));
  CHECK(quad::singular_rect(f, 0.5, 0.75, 0.5, 0.75, o) ==
        doctest::Approx(exact(0.5, 0.75, 0.5, 0.75)).epsilon(1e-8));
}
