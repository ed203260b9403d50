#include "mgp/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "mgp/parallel.hpp"
#include "mgp/simd/simd.hpp"

namespace mgp::simulate {

using fields::FieldModel;

namespace {

constexpr double kLn2 = 0.69314718055994530942;
constexpr double kHalfLog2Pi = 0.91893853320467274178;
constexpr long kMaxLatticePoints = 100000;

double stirling_tail(double z) {
  static constexpr double b[7] = {1.0 / 12.0,   -1.0 / 360.0,      1.0 / 1260.0,
                                  -1.0 / 1680.0, 1.0 / 1188.0,     -691.0 / 360360.0,
                                  1.0 / 156.0};
  const double w = 1.0 / (z * z);
  double s = b[6];
  for (int i = 5; i >= 0; --i) s = b[i] + s * w;
  return s / z;
}

struct KahanSum {
  double sum = 0.0, c = 0.0;
  void add(double v) {
    const double y = v - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

// Shared per-row precomputation for the double-sum engines.
struct LatticeData {
  long length = 0;             // L = floor(N t_max)
  double log_scale = 0.0;      // log N
  std::vector<double> h;       // h[m], 1-based, size L+1
  std::vector<double> logw;    // -h[m] log N
  std::vector<double> logdist; // log(k), k = 0..L (entry 0 unused)
  // fwn extras
  std::vector<double> rho;     // 0.5 (lgGamma(2h+1) + log sin(pi h))
  // farima extras
  std::vector<double> d;           // h - 1/2
  std::vector<double> lg_d;        // lgGamma(d)
  std::vector<double> lg_1md;      // lgGamma(1-d)
};

LatticeData build_lattice(const FieldModel& model, const HurstProfile& profile,
                          long scale, long length) {
  LatticeData lat;
  lat.length = length;
  lat.log_scale = std::log(static_cast<double>(scale));
  lat.h.assign(length + 1, 0.0);
  lat.logw.assign(length + 1, 0.0);
  lat.logdist.assign(length + 1, 0.0);
  for (long m = 1; m <= length; ++m) {
    lat.h[m] = profile.eval(static_cast<double>(m) / static_cast<double>(scale));
    lat.logw[m] = -lat.h[m] * lat.log_scale;
    lat.logdist[m] = std::log(static_cast<double>(m));
  }
  const auto& k = simd::active();
  if (model.kind() == FieldModel::Kind::Fwn) {
    std::vector<double> two_h(length + 1), lg(length + 1), sp(length + 1);
    for (long m = 1; m <= length; ++m) two_h[m] = 2.0 * lat.h[m] + 1.0;
    lat.rho.assign(length + 1, 0.0);
    k.lgamma_v(two_h.data() + 1, lg.data() + 1, length);
    k.sinpi_v(lat.h.data() + 1, sp.data() + 1, length);
    k.log_v(sp.data() + 1, sp.data() + 1, length);
    for (long m = 1; m <= length; ++m) lat.rho[m] = 0.5 * (lg[m] + sp[m]);
  } else {
    lat.d.assign(length + 1, 0.0);
    std::vector<double> one_md(length + 1);
    for (long m = 1; m <= length; ++m) {
      lat.d[m] = lat.h[m] - 0.5;
      one_md[m] = 1.0 - lat.d[m];
    }
    lat.lg_d.assign(length + 1, 0.0);
    lat.lg_1md.assign(length + 1, 0.0);
    k.lgamma_v(lat.d.data() + 1, lat.lg_d.data() + 1, length);
    k.lgamma_v(one_md.data() + 1, lat.lg_1md.data() + 1, length);
  }
  return lat;
}

// Row engine: writes cov(n, m) w_n w_m for m = 1..L into out[1..L].
class RowEngine {
 public:
  RowEngine(const FieldModel& model, const LatticeData& lat)
      : model_(model), lat_(lat) {
    const std::size_t sz = lat.length + 1;
    alpha_.resize(sz);
    t1_.resize(sz);
    t2_.resize(sz);
    t3_.resize(sz);
    t4_.resize(sz);
    t5_.resize(sz);
  }

  void compute(long n, double* out) {
    if (model_.kind() == FieldModel::Kind::Fwn)
      fwn_row(n, out);
    else
      farima_row(n, out);
  }

 private:
  void fwn_row(long n, double* out) {
    const long L = lat_.length;
    const auto& k = simd::active();
    const double hn = lat_.h[n];
    const double base = lat_.rho[n] + lat_.logw[n] - kLn2;
    // alpha, and signed inverse lags for the second-difference bracket
    for (long m = 1; m <= L; ++m) alpha_[m] = hn + lat_.h[m];
    for (long m = 1; m <= L; ++m) t1_[m] = alpha_[m] + 1.0;
    k.lgamma_v(t1_.data() + 1, t1_.data() + 1, L);  // lgGamma(alpha+1)
    for (long m = 1; m <= L; ++m) t2_[m] = 0.5 * alpha_[m];
    k.sinpi_v(t2_.data() + 1, t2_.data() + 1, L);
    k.log_v(t2_.data() + 1, t2_.data() + 1, L);  // log sin(pi alpha / 2)
    for (long m = 1; m <= L; ++m) {
      const double dist = static_cast<double>(std::labs(n - m));
      t3_[m] = m == n ? 0.0 : 1.0 / dist;  // +1/k
      t4_[m] = -t3_[m];                    // -1/k
    }
    k.log1p_v(t3_.data() + 1, t3_.data() + 1, L);
    k.log1p_v(t4_.data() + 1, t4_.data() + 1, L);
    for (long m = 1; m <= L; ++m) t3_[m] *= alpha_[m];
    for (long m = 1; m <= L; ++m) t4_[m] *= alpha_[m];
    k.expm1_v(t3_.data() + 1, t3_.data() + 1, L);
    k.expm1_v(t4_.data() + 1, t4_.data() + 1, L);  // bracket parts
    // exponent: base + rho_m + logw_m - lgGamma(alpha+1) - log sin + alpha log k
    for (long m = 1; m <= L; ++m) {
      const double logk = lat_.logdist[std::labs(n - m)];  // unused slot safe: m != n only
      t5_[m] = base + lat_.rho[m] + lat_.logw[m] - t1_[m] - t2_[m] +
               (m == n ? 0.0 : alpha_[m] * logk);
    }
    k.exp_v(t5_.data() + 1, t5_.data() + 1, L);
    for (long m = 1; m <= L; ++m) out[m] = t5_[m] * (t3_[m] + t4_[m]);
    // diagonal: bracket = 2 exactly
    out[n] = t5_[n] * 2.0;
  }

  void farima_row(long n, double* out) {
    const long L = lat_.length;
    const auto& k = simd::active();
    const double dn = lat_.d[n];
    // segment m < n: later index is n; segment m > n: later index is m
    // gamma-ratio arguments: x = dL + lag, y = lag + 1 - dE
    for (long m = 1; m <= L; ++m) {
      if (m == n) {
        t1_[m] = 1.0;  // placeholders, diagonal overwritten by the scalar edge
        t2_[m] = 0.0;
        t5_[m] = 1.0;
        continue;
      }
      const double lag = static_cast<double>(std::labs(n - m));
      const double dl = m < n ? dn : lat_.d[m];
      const double de = m < n ? lat_.d[m] : dn;
      t1_[m] = lag + 1.0 - de;       // y
      t2_[m] = dl + de - 1.0;        // x - y
      t5_[m] = 2.0 - lat_.h[n] - lat_.h[m];  // 1 - dl - de
    }
    k.log_v(t1_.data() + 1, t3_.data() + 1, L);  // log y
    for (long m = 1; m <= L; ++m) t4_[m] = t2_[m] / t1_[m];
    k.log1p_v(t4_.data() + 1, t4_.data() + 1, L);  // log1p((x-y)/y)
    k.lgamma_v(t5_.data() + 1, t5_.data() + 1, L);  // lgGamma(1-dl-de)
    for (long m = 1; m <= L; ++m) {
      if (std::labs(n - m) < 8) continue;  // scalar edge below
      const double y = t1_[m];
      const double x = y + t2_[m];
      const double ratio =
          t2_[m] * t3_[m] + (x - 0.5) * t4_[m] - t2_[m] + stirling_tail(x) - stirling_tail(y);
      const double dl_idx_lg = m < n ? lat_.lg_d[n] : lat_.lg_d[m];
      const double dl_idx_lg1m = m < n ? lat_.lg_1md[n] : lat_.lg_1md[m];
      t5_[m] = ratio + t5_[m] - dl_idx_lg - dl_idx_lg1m + lat_.logw[n] + lat_.logw[m];
    }
    k.exp_v(t5_.data() + 1, out + 1, L);
    // scalar edges |n - m| < 8 (short lags need plain lgamma, not the
    // Stirling-difference path)
    const long lo = std::max(1L, n - 7), hi = std::min(L, n + 7);
    for (long m = lo; m <= hi; ++m) {
      const HurstPair p(lat_.h[n], lat_.h[m]);
      out[m] = fields::farima_cov(n, m, p) * std::exp(lat_.logw[n] + lat_.logw[m]);
    }
  }

  const FieldModel& model_;
  const LatticeData& lat_;
  std::vector<double> alpha_, t1_, t2_, t3_, t4_, t5_;
};

}  // namespace

long lattice_index(long scale, double t) {
  return static_cast<long>(std::floor(static_cast<double>(scale) * t + 1e-9));
}

void PartialSumSpec::validate() const {
  if (scale < 1) throw DomainError("PartialSumSpec: scale must be >= 1");
  if (eval_times.empty()) throw DomainError("PartialSumSpec: eval_times is empty");
  for (std::size_t i = 0; i < eval_times.size(); ++i) {
    if (!(eval_times[i] >= 0.0))
      throw DomainError("PartialSumSpec: eval_times must be nonnegative");
    if (i > 0 && !(eval_times[i] > eval_times[i - 1]))
      throw DomainError("PartialSumSpec: eval_times must be strictly increasing");
  }
  if (lattice_index(scale, eval_times.back()) > kMaxLatticePoints)
    throw SizeLimitError("PartialSumSpec: floor(N t_max) exceeds the 1e5 cost guard");
}

CovMatrix partial_sum_cov_exact(const PartialSumSpec& spec) {
  spec.validate();
  const std::size_t nt = spec.eval_times.size();
  std::vector<long> limits(nt);
  for (std::size_t i = 0; i < nt; ++i)
    limits[i] = lattice_index(spec.scale, spec.eval_times[i]);
  const long L = limits.back();

  CovMatrix out(nt);
  if (L == 0) return out;

  const LatticeData lat = build_lattice(spec.model, spec.profile, spec.scale, L);

  // per-row partial sums over the column segments (L_{j-1}, L_j]
  std::vector<double> rowseg(static_cast<std::size_t>(L + 1) * nt, 0.0);
  const int blocks = static_cast<int>((L + 255) / 256);
  parallel_for(blocks, [&](std::size_t blk) {
    RowEngine engine(spec.model, lat);
    std::vector<double> row(L + 1);
    const long n0 = static_cast<long>(blk) * 256 + 1;
    const long n1 = std::min(L, n0 + 255);
    for (long n = n0; n <= n1; ++n) {
      engine.compute(n, row.data());
      long m = 1;
      for (std::size_t j = 0; j < nt; ++j) {
        KahanSum seg;
        for (; m <= limits[j]; ++m) seg.add(row[m]);
        rowseg[n * nt + j] = seg.sum;
      }
    }
  });

  // sequential reduction over rows in index order (thread-count independent):
  // gram[i][j] = sum_{n <= L_i} prefix_j(n), prefix_j(n) = sum_{s <= j} rowseg[n][s]
  std::vector<std::vector<double>> gram(nt, std::vector<double>(nt, 0.0));
  {
    std::vector<KahanSum> cum(nt);
    std::size_t ti = 0;
    while (ti < nt && limits[ti] == 0) ++ti;  // zero-length sums stay zero
    for (long n = 1; n <= L; ++n) {
      double prefix = 0.0;
      for (std::size_t j = 0; j < nt; ++j) {
        prefix += rowseg[n * nt + j];
        cum[j].add(prefix);
      }
      while (ti < nt && n == limits[ti]) {
        for (std::size_t j = 0; j < nt; ++j) gram[ti][j] = cum[j].sum;
        ++ti;
      }
    }
  }
  for (std::size_t a = 0; a < nt; ++a)
    for (std::size_t b = a; b < nt; ++b) out.set(a, b, 0.5 * (gram[a][b] + gram[b][a]));
  return out;
}

CovMatrix field_grid_cov_limit(const std::vector<std::pair<double, double>>& grid,
                               const kernels::AsymptoticCovariance& r) {
  if (grid.empty()) throw DomainError("field_grid_cov_limit: empty grid");
  CovMatrix out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = i; j < grid.size(); ++j) {
      const HurstPair p(grid[i].second, grid[j].second);
      out.set(i, j, kernels::field_cov(p, grid[i].first, grid[j].first, r));
    }
  return out;
}

CovMatrix field_grid_cov_finite(const fields::FieldModel& model, long scale,
                                const std::vector<std::pair<double, double>>& grid) {
  if (scale < 1) throw DomainError("field_grid_cov_finite: scale must be >= 1");
  if (grid.empty()) throw DomainError("field_grid_cov_finite: empty grid");
  CovMatrix out(grid.size());
  for (std::size_t gi = 0; gi < grid.size(); ++gi)
    for (std::size_t gj = gi; gj < grid.size(); ++gj) {
      const long A = lattice_index(scale, grid[gi].first);
      const long B = lattice_index(scale, grid[gj].first);
      const double h1 = grid[gi].second, h2 = grid[gj].second;
      if (lattice_index(scale, std::max(grid[gi].first, grid[gj].first)) > kMaxLatticePoints)
        throw SizeLimitError("field_grid_cov_finite: grid exceeds the 1e5 cost guard");
      double sum = 0.0;
      if (A > 0 && B > 0) {
        KahanSum ks;
        for (long n = -(B - 1); n <= A - 1; ++n) {
          const long count = std::min(A, B + n) - std::max(1L, 1 + n) + 1;
          if (count <= 0) continue;
          const double c = model.cov(n >= 0 ? n : 0, n >= 0 ? 0 : -n, h1, h2);
          ks.add(c * static_cast<double>(count));
        }
        sum = ks.sum * std::pow(static_cast<double>(scale), -(h1 + h2));
      }
      out.set(gi, gj, sum);
    }
  return out;
}

std::function<double(long, long, double, double)> z_field_cov(
    const kernels::AsymptoticCovariance& r) {
  return [r](long j, long k, double h1, double h2) {
    const HurstPair p(h1, h2);
    const auto tj = static_cast<double>(j);
    const auto tk = static_cast<double>(k);
    return kernels::field_cov(p, tj, tk, r) - kernels::field_cov(p, tj, tk - 1.0, r) -
           kernels::field_cov(p, tj - 1.0, tk, r) +
           kernels::field_cov(p, tj - 1.0, tk - 1.0, r);
  };
}

double renormalize_cov(const std::function<double(long, long, double, double)>& cov,
                       long scale, long n, long m, double h1, double h2) {
  if (scale < 1) throw DomainError("renormalize_cov: scale must be >= 1");
  if (n < 0 || m < 0) throw DomainError("renormalize_cov: block indices must be >= 0");
  KahanSum ks;
  for (long j = n * scale + 1; j <= (n + 1) * scale; ++j)
    for (long k = m * scale + 1; k <= (m + 1) * scale; ++k) ks.add(cov(j, k, h1, h2));
  return ks.sum * std::pow(static_cast<double>(scale), -(h1 + h2));
}

}  // namespace mgp::simulate
