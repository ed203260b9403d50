#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mgp/errors.hpp"

namespace mgp::simulate {

// Dense symmetric covariance matrix with an optional lower-triangular factor.
// Entries are stored once; set(i,j) writes the (j,i) mirror as well.
class CovMatrix {
 public:
  explicit CovMatrix(std::size_t dim);

  std::size_t dim() const { return dim_; }
  double at(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  void set(std::size_t i, std::size_t j, double v);

  bool factorized() const { return !factor_.empty(); }
  // row-major dense lower-triangular factor L with L L^T ~= matrix
  const std::vector<double>& factor() const;

  struct JitterRecord {
    int attempts = 0;       // Cholesky attempts performed
    double jitter = 0.0;    // diagonal shift of the successful attempt
  };
  const JitterRecord& jitter_record() const { return jitter_; }

  double max_abs() const;
  double trace() const;

  // Cholesky with a geometric jitter ladder: starts at
  // jitter_scale * trace/dim, multiplies by 10, at most max_attempts tries.
  // Throws NotPsdError when the budget is exceeded.
  void factorize(double jitter_scale = 1e-12, int max_attempts = 3);

  // max |L L^T - M| over all entries (0 when not factorized)
  double reconstruction_error() const;

 private:
  std::size_t dim_;
  std::vector<double> data_;
  std::vector<double> factor_;
  JitterRecord jitter_;
};

// replicates x dim row-major samples of N(0, m); row r depends only on
// (seed, r), so any parallel schedule produces identical bits.
std::vector<double> sample_paths(const CovMatrix& m, std::size_t replicates,
                                 std::uint64_t seed);

}  // namespace mgp::simulate
