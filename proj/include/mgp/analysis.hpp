#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mgp/cov_matrix.hpp"
#include "mgp/fields.hpp"
#include "mgp/hurst_profile.hpp"
#include "mgp/kernels.hpp"
#include "mgp/report.hpp"
#include "mgp/simulate.hpp"

namespace mgp::analysis {

// Relative-error floor: avoids blowups against near-zero covariances.
constexpr double kRelFloor = 1e-8;

// Riemann-sum check of the limit covariance (independent of the adaptive
// quadrature): corner-evaluated sum over lattice cells with |j-k| > M plus
// the exact closed-form power mass of the diagonal band cells.
double riemann_oracle(const HurstProfile& profile,
                      const kernels::AsymptoticCovariance& r, double t, double s,
                      long scale, long band);

// Same, over the full time grid in one lattice sweep.
simulate::CovMatrix riemann_oracle_grid(const HurstProfile& profile,
                                        const kernels::AsymptoticCovariance& r,
                                        const std::vector<double>& times, long scale,
                                        long band);

// Partial-sum Gram versus the limit covariance along an N ladder.
Report invariance_report(const fields::FieldModel& model, const HurstProfile& profile,
                         const std::vector<long>& n_ladder,
                         const std::vector<double>& time_grid, double final_rel_tol,
                         const quad::Options& opts = {});

// Local self-similarity: rescaled increment covariances against the tangent
// covariance at one base point, plus the distinct-base-point decay.
struct TangentSettings {
  double t_same = 1.0;
  double t_distinct = 4.0;
  double s_distinct = 5.0;
  double u = 1.0;
  double v = 1.0;
  std::vector<double> eps_ladder;  // decreasing
  double distinct_tol = 1e-2;
};
Report tangent_report(const HurstProfile& profile,
                      const kernels::AsymptoticCovariance& r,
                      const TangentSettings& settings, const quad::Options& opts = {});

// Pointwise Hoelder exponent estimate at t0: samples the limit process on a
// local window (exact increment covariances, factorized), then regresses the
// log second moment of increments on log lag over dyadic lags.
double holder_estimate(const kernels::LimitKernel& kernel, double t0, double window,
                       int cells, std::size_t replicates, std::uint64_t seed);

// Estimator core on a precomputed increment covariance with uniform spacing.
double holder_estimate_from_increments(const simulate::CovMatrix& increments,
                                       double spacing, std::size_t replicates,
                                       std::uint64_t seed);

// Covariance of W~(t, h(t)) - int_0^t h'(theta) dH W~(theta, H)|_{h} dtheta,
// from the field covariance only: central differences in H (step dh) and
// composite midpoint rules (grid step) for the integrals.
double representation_cov(const HurstProfile& profile,
                          const kernels::AsymptoticCovariance& r, double t, double s,
                          double dh, double grid_step);

// Monotone-decay helper: true when the sequence decreases with at most
// `allowed_inversions` adjacent increases and ends below its start.
bool decays(const std::vector<double>& seq, int allowed_inversions = 0);

}  // namespace mgp::analysis
