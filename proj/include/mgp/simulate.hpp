#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "mgp/cov_matrix.hpp"
#include "mgp/fields.hpp"
#include "mgp/hurst_profile.hpp"
#include "mgp/kernels.hpp"

namespace mgp::simulate {

// Partial-sum process S_h^N(t) = sum_{n<=floor(Nt)} X_n(h(n/N)) / N^{h(n/N)}.
struct PartialSumSpec {
  fields::FieldModel model;
  HurstProfile profile;
  long scale = 1;                  // N >= 1
  std::vector<double> eval_times;  // nonnegative, strictly increasing

  void validate() const;  // throws DomainError / SizeLimitError
};

// floor(N t) with a guard against 53-bit noise on exact grid multiples
long lattice_index(long scale, double t);

// Exact Gram matrix E[S_h^N(t_i) S_h^N(t_j)] by the full double sum over the
// discrete field covariance. Deterministic for any thread count.
CovMatrix partial_sum_cov_exact(const PartialSumSpec& spec);

// Gram of the limit field W~ on (t, H) grid points via the closed form.
CovMatrix field_grid_cov_limit(const std::vector<std::pair<double, double>>& grid,
                               const kernels::AsymptoticCovariance& r);

// Gram of S^N(t, H) = N^{-H} sum_{n<=floor(Nt)} X_n(H) on (t, H) grid points;
// fixed H per point makes each entry a stationary lag sum.
CovMatrix field_grid_cov_finite(const fields::FieldModel& model, long scale,
                                const std::vector<std::pair<double, double>>& grid);

// Covariance rule of the increment field Z_n(H) = W~(n,H) - W~(n-1,H).
std::function<double(long, long, double, double)> z_field_cov(
    const kernels::AsymptoticCovariance& r);

// Covariance of the block-renormalized field
// (T_N X)_n(H) = N^{-H} sum_{j=nN+1}^{(n+1)N} X_j(H), as an exact double sum
// over the input covariance rule. T_1 is the identity.
double renormalize_cov(const std::function<double(long, long, double, double)>& cov,
                       long scale, long n, long m, double h1, double h2);

}  // namespace mgp::simulate
