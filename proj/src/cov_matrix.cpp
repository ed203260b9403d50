#include "mgp/cov_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "mgp/parallel.hpp"
#include "mgp/rng.hpp"

namespace mgp::simulate {

CovMatrix::CovMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {
  if (dim == 0) throw DomainError("CovMatrix: dimension must be positive");
}

void CovMatrix::set(std::size_t i, std::size_t j, double v) {
  data_[i * dim_ + j] = v;
  data_[j * dim_ + i] = v;
  factor_.clear();
}

const std::vector<double>& CovMatrix::factor() const {
  if (factor_.empty()) throw Error("CovMatrix: not factorized");
  return factor_;
}

double CovMatrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

double CovMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

namespace {

// dense Cholesky, semidefinite-safe: exact zero pivots produce a zero
// column (so a zero matrix factorizes to zero); negative pivots fail
bool try_cholesky(const std::vector<double>& a, std::size_t n, double jitter,
                  std::vector<double>& l) {
  l.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = a[i * n + j] + (i == j ? jitter : 0.0);
      for (std::size_t k = 0; k < j; ++k) s -= l[i * n + k] * l[j * n + k];
      if (i == j) {
        if (s < 0.0) return false;
        l[i * n + i] = s == 0.0 ? 0.0 : std::sqrt(s);
      } else {
        l[i * n + j] = l[j * n + j] == 0.0 ? 0.0 : s / l[j * n + j];
      }
    }
  }
  return true;
}

}  // namespace

void CovMatrix::factorize(double jitter_scale, int max_attempts) {
  const double base = jitter_scale * trace() / static_cast<double>(dim_);
  double jitter = 0.0;
  std::vector<double> l;
  for (int attempt = 0; attempt <= max_attempts; ++attempt) {
    if (try_cholesky(data_, dim_, jitter, l)) {
      factor_ = std::move(l);
      jitter_ = {attempt + 1, jitter};
      return;
    }
    jitter = attempt == 0 ? std::max(base, 1e-300) : jitter * 10.0;
  }
  throw NotPsdError("CovMatrix: not positive semidefinite within the jitter budget");
}

double CovMatrix::reconstruction_error() const {
  if (factor_.empty()) return 0.0;
  double err = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k <= j; ++k) s += factor_[i * dim_ + k] * factor_[j * dim_ + k];
      err = std::max(err, std::abs(s - at(i, j) - (i == j ? jitter_.jitter : 0.0)));
    }
  return err;
}

std::vector<double> sample_paths(const CovMatrix& m, std::size_t replicates,
                                 std::uint64_t seed) {
  if (!m.factorized()) throw Error("sample_paths: matrix must be factorized first");
  if (replicates == 0) throw DomainError("sample_paths: need at least one replicate");
  const std::size_t n = m.dim();
  const auto& l = m.factor();
  std::vector<double> out(replicates * n);
  mgp::parallel_for(replicates, [&](std::size_t r) {
    std::vector<double> z(n);
    for (std::size_t i = 0; i < n; ++i)
      z[i] = rng::normal(seed, static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(i));
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t k = 0; k <= i; ++k) s += l[i * n + k] * z[k];
      out[r * n + i] = s;
    }
  });
  return out;
}

}  // namespace mgp::simulate
