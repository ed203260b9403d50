#include <doctest.h>

#include <cmath>

#include "mgp/simd/simd.hpp"
#include "mgp/simulate.hpp"
#include "testutil.hpp"

using namespace mgp;
using namespace mgp::simulate;
using fields::FieldModel;
using kernels::AsymptoticCovariance;

namespace {
const HurstProfile kConst075 = HurstProfile::constant(0.75);
const HurstProfile kSine = HurstProfile::sinusoidal(0.75, 0.15, 1.0, 0.0, 0.6, 0.9);
}  // namespace

TEST_CASE("partial sums: constant-h fwn telescopes exactly") {
  for (long n : {8L, 64L, 256L}) {
    const PartialSumSpec spec{FieldModel::fwn(0.75, 0.75), kConst075, n, {1.0}};
    const CovMatrix g = partial_sum_cov_exact(spec);
    CHECK(std::abs(g.at(0, 0) - 1.0) <= 1e-12);
  }
}

TEST_CASE("partial sums: fGn block closed form at off-diagonal times") {
  const long n = 64;
  const PartialSumSpec spec{FieldModel::fwn(0.75, 0.75), kConst075, n, {0.5, 1.0, 1.75}};
  const CovMatrix g = partial_sum_cov_exact(spec);
  auto closed = [&](double t, double s) {
    const double h = 0.75;
    const double a = std::floor(n * t + 1e-9), b = std::floor(n * s + 1e-9);
    return std::pow(double(n), -2.0 * h) * 0.5 *
           (std::pow(a, 2 * h) + std::pow(b, 2 * h) - std::pow(std::abs(a - b), 2 * h));
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(g.at(i, j) == doctest::Approx(closed(spec.eval_times[i], spec.eval_times[j]))
                              .epsilon(1e-12));
}

TEST_CASE("partial sums: N=1 single term") {
  const PartialSumSpec spec{FieldModel::farima(0.6, 0.9), kSine, 1, {1.0}};
  const CovMatrix g = partial_sum_cov_exact(spec);
  const double h1 = kSine.eval(1.0);
  CHECK(g.at(0, 0) == doctest::Approx(fields::farima_cov(1, 1, HurstPair(h1, h1)))
                          .epsilon(1e-13));
}

TEST_CASE("partial sums: guard rejects oversized lattices") {
  const PartialSumSpec spec{FieldModel::fwn(0.6, 0.9), kSine, 200000, {1.0}};
  CHECK_THROWS_AS(partial_sum_cov_exact(spec), SizeLimitError);
}

TEST_CASE("partial sums agree between scalar and simd paths") {
  const PartialSumSpec spec{FieldModel::farima(0.6, 0.9), kSine, 96, {0.5, 1.0}};
  const CovMatrix fast = partial_sum_cov_exact(spec);
  simd::force_scalar(true);
  const CovMatrix slow = partial_sum_cov_exact(spec);
  simd::force_scalar(false);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(fast.at(i, j) == doctest::Approx(slow.at(i, j)).epsilon(1e-11));

  const PartialSumSpec spec2{FieldModel::fwn(0.6, 0.9), kSine, 96, {0.5, 1.0}};
  const CovMatrix fast2 = partial_sum_cov_exact(spec2);
  simd::force_scalar(true);
  const CovMatrix slow2 = partial_sum_cov_exact(spec2);
  simd::force_scalar(false);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(fast2.at(i, j) == doctest::Approx(slow2.at(i, j)).epsilon(1e-11));
}

TEST_CASE("factorization: identity, 2x2 closed form, jitter record") {
  CovMatrix id(3);
  for (int i = 0; i < 3; ++i) id.set(i, i, 1.0);
  id.factorize();
  CHECK(id.factor()[0] == 1.0);
  CHECK(id.factor()[4] == 1.0);
  CHECK(id.factor()[8] == 1.0);
  CHECK(id.jitter_record().attempts == 1);
  CHECK(id.jitter_record().jitter == 0.0);

  CovMatrix m(2);
  m.set(0, 0, 1.0);
  m.set(1, 1, 1.0);
  m.set(0, 1, 0.5);
  m.factorize();
  CHECK(m.factor()[0] == doctest::Approx(1.0));
  CHECK(m.factor()[2] == doctest::Approx(0.5));
  CHECK(m.factor()[3] == doctest::Approx(std::sqrt(0.75)));
  CHECK(m.reconstruction_error() <= 1e-15);
}

TEST_CASE("factorization: zero matrix factors to zero; indefinite fails") {
  CovMatrix z(4);
  z.factorize();
  for (double v : z.factor()) CHECK(v == 0.0);
  const auto paths = sample_paths(z, 5, 99);
  for (double v : paths) CHECK(v == 0.0);

  CovMatrix bad(2);
  bad.set(0, 0, 1.0);
  bad.set(1, 1, 1.0);
  bad.set(0, 1, 2.0);  // correlation 2 is not a covariance
  CHECK_THROWS_AS(bad.factorize(), NotPsdError);
}

TEST_CASE("factorization round-trip on a 200x200 partial-sum matrix") {
  std::vector<double> times;
  for (int i = 1; i <= 200; ++i) times.push_back(i * 0.01);
  const PartialSumSpec spec{FieldModel::fwn(0.6, 0.9), kSine, 100, times};
  CovMatrix g = partial_sum_cov_exact(spec);
  g.factorize();
  CHECK(g.reconstruction_error() <= 1e-9 * std::max(1.0, g.max_abs()));
  CHECK(g.jitter_record().attempts <= 4);
}

TEST_CASE("sampling: determinism and moment check") {
  CovMatrix m(4);
  const double entries[4][4] = {{2.0, 0.6, 0.2, 0.1},
                                {0.6, 1.5, 0.4, 0.2},
                                {0.2, 0.4, 1.2, 0.3},
                                {0.1, 0.2, 0.3, 1.0}};
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) m.set(i, j, entries[i][j]);
  m.factorize();
  const std::size_t reps = 10000;
  const auto a = sample_paths(m, reps, 123);
  const auto b = sample_paths(m, reps, 123);
  CHECK(a == b);

  // empirical covariance within 5 standard errors of each entry
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double acc = 0.0;
      for (std::size_t r = 0; r < reps; ++r) acc += a[r * 4 + i] * a[r * 4 + j];
      const double emp = acc / reps;
      const double se = std::sqrt((entries[i][i] * entries[j][j] +
                                   entries[i][j] * entries[i][j]) /
                                  double(reps));
      CHECK(std::abs(emp - entries[i][j]) <= 5.0 * se);
    }
}

TEST_CASE("sampling: scalar variance CLT window") {
  CovMatrix m(1);
  m.set(0, 0, 1.0);
  m.factorize();
  const auto s = sample_paths(m, 100000, 2024);
  double acc = 0.0;
  for (double v : s) acc += v * v;
  CHECK(acc / 100000.0 > 0.98);
  CHECK(acc / 100000.0 < 1.02);
}

TEST_CASE("field grid: limit reductions and PSD") {
  const auto rc = AsymptoticCovariance::constant(0.375);
  const CovMatrix one = field_grid_cov_limit({{1.0, 0.75}}, rc);
  CHECK(one.at(0, 0) == doctest::Approx(1.0).epsilon(1e-13));

  const CovMatrix two = field_grid_cov_limit({{1.0, 0.75}, {2.0, 0.75}}, rc);
  CHECK(two.at(0, 1) ==
        doctest::Approx(0.5 * (1.0 + std::pow(2.0, 1.5) - 1.0)).epsilon(1e-13));

  const auto rf = AsymptoticCovariance::farima();
  const CovMatrix g =
      field_grid_cov_limit({{1.0, 0.65}, {2.0, 0.75}, {1.5, 0.85}}, rf);
  std::vector<double> dense(9);
  double tr = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) dense[i * 3 + j] = g.at(i, j);
  for (int i = 0; i < 3; ++i) tr += g.at(i, i);
  const auto eig = testutil::symmetric_eigenvalues(dense, 3);
  CHECK(eig.front() >= -1e-8 * tr);
}

TEST_CASE("finite field grid converges to the limit field covariance") {
  // fwn at lattice times IS the limit field, so its deviation sits at the
  // rounding floor; farima shows a genuine convergence sequence
  const std::vector<std::pair<double, double>> grid = {{1.0, 0.65}, {2.0, 0.8}, {1.5, 0.7}};
  for (auto model : {FieldModel::fwn(0.6, 0.9), FieldModel::farima(0.6, 0.9)}) {
    const CovMatrix limit = field_grid_cov_limit(grid, model.asympt());
    double prev = 1e300;
    for (long n : {64L, 256L, 1024L, 4096L}) {
      const CovMatrix g = field_grid_cov_finite(model, n, grid);
      double dev = 0.0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          dev = std::max(dev, std::abs(g.at(i, j) - limit.at(i, j)));
      CHECK((dev < prev || dev < 1e-12));
      prev = dev;
    }
    CHECK(prev < 0.05);
    if (model.kind() == FieldModel::Kind::Fwn) CHECK(prev < 1e-12);
  }
}

TEST_CASE("partial sums: zero-length prefix gives zero rows") {
  const PartialSumSpec spec{FieldModel::fwn(0.6, 0.9), kSine, 4, {0.1, 1.0}};
  const CovMatrix g = partial_sum_cov_exact(spec);  // floor(4 * 0.1) = 0
  CHECK(g.at(0, 0) == 0.0);
  CHECK(g.at(0, 1) == 0.0);
  CHECK(g.at(1, 1) > 0.0);
}

TEST_CASE("an inconsistent user table fails PSD beyond the jitter budget") {
  // wildly asymmetric "covariance" table: the Gram of the limit field on a
  // mixed grid is far from positive semidefinite
  const auto bad = AsymptoticCovariance::table({0.6, 0.9}, {{1.0, 1e4}, {1e-4, 1.0}});
  const std::vector<std::pair<double, double>> grid = {
      {0.5, 0.62}, {1.0, 0.7}, {1.5, 0.8}, {2.0, 0.88}};
  CovMatrix g = field_grid_cov_limit(grid, bad);
  CHECK_THROWS_AS(g.factorize(), NotPsdError);
}

TEST_CASE("renormalization: T_1 identity and the Z fixed point") {
  const auto rf = AsymptoticCovariance::farima();
  const auto model = FieldModel::farima(0.6, 0.9);
  const auto xcov = [&](long j, long k, double h1, double h2) {
    return model.cov(j, k, h1, h2);
  };
  const auto zcov = z_field_cov(rf);

  for (double h1 : {0.65, 0.82})
    for (double h2 : {0.7, 0.9}) {
      CHECK(renormalize_cov(xcov, 1, 0, 0, h1, h2) ==
            doctest::Approx(xcov(1, 1, h1, h2)).epsilon(1e-14));
      CHECK(renormalize_cov(xcov, 1, 2, 1, h1, h2) ==
            doctest::Approx(xcov(3, 2, h1, h2)).epsilon(1e-14));
      for (long n : {2L, 4L, 8L}) {
        for (long lag : {0L, 1L}) {
          const double lhs = renormalize_cov(zcov, n, lag, 0, h1, h2);
          const double rhs = zcov(lag + 1, 1, h1, h2);
          CHECK(std::abs(lhs - rhs) <= 1e-10);
        }
      }
    }
}

TEST_CASE("renormalization drives the discrete field to Z") {
  // the fwn field is itself the fixed point (its renormalized covariance is
  // exactly cov(Z) at every N); farima converges with a visible sequence
  for (auto model : {FieldModel::fwn(0.6, 0.9), FieldModel::farima(0.6, 0.9)}) {
    const auto r = model.asympt();
    const auto zcov = z_field_cov(r);
    const auto xcov = [&](long j, long k, double h1, double h2) {
      return model.cov(j, k, h1, h2);
    };
    double prev = 1e300;
    for (long n : {4L, 16L, 64L}) {
      double worst = 0.0;
      for (double h1 : {0.65, 0.75, 0.85})
        for (double h2 : {0.65, 0.75, 0.85})
          for (long lag : {0L, 1L})
            worst = std::max(worst, std::abs(renormalize_cov(xcov, n, lag, 0, h1, h2) -
                                             zcov(lag + 1, 1, h1, h2)));
      CHECK((worst < prev || worst < 1e-12));
      prev = worst;
    }
    if (model.kind() == FieldModel::Kind::Fwn)
      CHECK(prev < 1e-12);
    else
      CHECK(prev < 0.05);
  }
}
