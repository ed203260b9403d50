#include <doctest.h>

#include <cmath>

#include "mgp/analysis.hpp"

using namespace mgp;
using namespace mgp::analysis;
using fields::FieldModel;
using kernels::AsymptoticCovariance;
using kernels::LimitKernel;

namespace {
const HurstProfile kConst075 = HurstProfile::constant(0.75);
const HurstProfile kSine = HurstProfile::sinusoidal(0.75, 0.15, 1.0, 0.0, 0.6, 0.9);
}  // namespace

TEST_CASE("riemann oracle hits the constant-h closed form") {
  const auto rc = AsymptoticCovariance::constant(0.375);
  const double v = riemann_oracle(kConst075, rc, 1.0, 1.0, 4096, 2);
  CHECK(std::abs(v - 1.0) <= 5e-3);
}

TEST_CASE("riemann oracle band insensitivity shrinks as N doubles") {
  const auto rc = AsymptoticCovariance::constant(0.375);
  const double d1 = std::abs(riemann_oracle(kConst075, rc, 1.0, 1.0, 1024, 2) -
                             riemann_oracle(kConst075, rc, 1.0, 1.0, 1024, 8));
  const double d2 = std::abs(riemann_oracle(kConst075, rc, 1.0, 1.0, 2048, 2) -
                             riemann_oracle(kConst075, rc, 1.0, 1.0, 2048, 8));
  const double d3 = std::abs(riemann_oracle(kConst075, rc, 1.0, 1.0, 4096, 2) -
                             riemann_oracle(kConst075, rc, 1.0, 1.0, 4096, 8));
  CHECK(d2 < d1);
  CHECK(d3 < d2);
}

TEST_CASE("riemann oracle cross-validates the quadrature on a varying profile") {
  const auto rf = AsymptoticCovariance::farima();
  const LimitKernel k(kSine, rf);
  const double quadv = k.eval(1.0, 1.0);
  const double oracle_a = riemann_oracle(kSine, rf, 1.0, 1.0, 8192, 4);
  CHECK(std::abs(oracle_a - quadv) / std::abs(quadv) <= 1e-3);
  const double oracle_b = riemann_oracle(kSine, rf, 1.0, 1.0, 4096, 8);
  CHECK(std::abs(oracle_b - quadv) / std::abs(quadv) <= 1e-3);
}

TEST_CASE("invariance report: exactness scenario shows floor-level errors") {
  const auto model = FieldModel::fwn(0.75, 0.75);
  const Report rep = invariance_report(model, kConst075, {16, 64}, {0.5, 1.0}, 0.05);
  CHECK(rep.all_pass());
  for (const auto& [name, rows] : rep.error_tables)
    for (const auto& r : rows) CHECK(r.max_rel_err < 1e-6);
}

TEST_CASE("tangent report: constant-h case is exact, distinct base decays") {
  TangentSettings s;
  s.t_same = 1.0;
  s.t_distinct = 1.0;
  s.s_distinct = 9.0;
  s.eps_ladder = {0.25, 0.125, 0.0625, 0.03125};
  s.distinct_tol = 0.2;
  const Report rep =
      tangent_report(kConst075, AsymptoticCovariance::constant(0.375), s);
  CHECK(rep.all_pass());
  for (const auto& [name, rows] : rep.error_tables)
    if (name == "tangent_same_base")
      for (const auto& r : rows) CHECK(r.max_rel_err < 1e-6);
}

TEST_CASE("tangent report: sinusoidal same-base errors decrease") {
  TangentSettings s;
  s.t_same = 1.0;
  s.t_distinct = 4.0;
  s.s_distinct = 5.0;
  s.eps_ladder = {0.25, 0.0625, 0.015625, 0.00390625};
  s.distinct_tol = 1e-2;
  const Report rep = tangent_report(kSine, AsymptoticCovariance::farima(), s);
  for (const auto& c : rep.criteria) {
    INFO(c.name, " value=", c.value, " tol=", c.tolerance);
    CHECK(c.pass);
  }
}

TEST_CASE("holder estimator recovers H on an exact fGn increment matrix") {
  const double h = 0.6, delta = 0.01;
  const int p = 32;
  simulate::CovMatrix incr(p);
  for (int i = 0; i < p; ++i)
    for (int j = i; j < p; ++j) {
      const long lag = j - i;
      const double c = 0.5 * (std::pow(std::abs(lag + 1.0), 2 * h) +
                              std::pow(std::abs(lag - 1.0), 2 * h) -
                              2.0 * std::pow(double(lag), 2 * h)) *
                       std::pow(delta, 2 * h);
      incr.set(i, j, c);
    }
  const double est = holder_estimate_from_increments(incr, delta, 1000, 77);
  CHECK(std::abs(est - h) <= 0.05);
}

TEST_CASE("holder estimator needs enough dyadic lags") {
  simulate::CovMatrix tiny(8);
  for (int i = 0; i < 8; ++i) tiny.set(i, i, 1.0);
  CHECK_THROWS_AS(holder_estimate_from_increments(tiny, 0.1, 500, 1), DomainError);
}

TEST_CASE("holder estimate on the constant-h limit process") {
  const LimitKernel k(kConst075, AsymptoticCovariance::fwn());
  const double est = holder_estimate(k, 1.0, 0.1, 32, 1000, 20250801);
  CHECK(std::abs(est - 0.75) <= 0.05);
}

TEST_CASE("representation check: constant profile reduces to the limit covariance") {
  const auto rf = AsymptoticCovariance::fwn();
  const LimitKernel k(kConst075, rf);
  const double rep = representation_cov(kConst075, rf, 1.0, 1.0, 1e-3, 1.0 / 128.0);
  CHECK(rep == doctest::Approx(k.eval(1.0, 1.0)).epsilon(1e-6));
}

TEST_CASE("representation check rejects profiles without two derivatives") {
  const auto pwl = HurstProfile::piecewise_linear({{0.0, 0.6}, {1.0, 0.9}}, 0.6, 0.9);
  CHECK_THROWS_AS(representation_cov(pwl, AsymptoticCovariance::farima(), 1, 1, 1e-3, 0.01),
                  UnsupportedProfileError);
  CHECK_THROWS_AS(
      representation_cov(kSine, AsymptoticCovariance::constant(1.0), 1, 1, 1e-3, 0.01),
      DomainError);
}

TEST_CASE("decays helper") {
  CHECK(decays({3.0, 2.0, 1.0}));
  CHECK_FALSE(decays({3.0, 3.5, 1.0}));
  CHECK(decays({3.0, 3.5, 1.0}, 1));
  CHECK_FALSE(decays({1.0, 2.0}, 1));  // must end below the start
}
