#include "mgp/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "mgp/parallel.hpp"
#include "mgp/rng.hpp"
#include "mgp/simd/simd.hpp"

namespace mgp::analysis {

using kernels::AsymptoticCovariance;
using kernels::LimitKernel;
using simulate::CovMatrix;

namespace {

constexpr double kLn2 = 0.69314718055994530942;
constexpr double kLogPi = 1.14472988584940017414;

struct KahanSum {
  double sum = 0.0, c = 0.0;
  void add(double v) {
    const double y = v - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

// exact integral of |theta - sigma|^beta over a cell, beta in (-1, 0)
double cell_power_mass(double a1, double b1, double a2, double b2, double beta) {
  const double p = beta + 2.0;
  const double c = (beta + 1.0) * (beta + 2.0);
  auto q = [&](double x) { return std::pow(std::abs(x), p); };
  return (q(a1 - b2) + q(b1 - a2) - q(b1 - b2) - q(a1 - a2)) / c;
}

struct RiemannLattice {
  long length;
  double log_scale;
  std::vector<double> h;
  std::vector<double> logdist;
  // fwn
  std::vector<double> rho;
  // farima
  std::vector<double> lgsin;  // log sin(pi (h - 1/2))
};

RiemannLattice build_riemann_lattice(const HurstProfile& profile,
                                     const AsymptoticCovariance& r, long scale,
                                     long length) {
  RiemannLattice lat;
  lat.length = length;
  lat.log_scale = std::log(static_cast<double>(scale));
  lat.h.assign(length + 1, 0.0);
  lat.logdist.assign(length + 1, 0.0);
  for (long m = 1; m <= length; ++m) {
    lat.h[m] = profile.eval(static_cast<double>(m) / static_cast<double>(scale));
    lat.logdist[m] = std::log(static_cast<double>(m));
  }
  const auto& k = simd::active();
  if (r.kind() == AsymptoticCovariance::Kind::Fwn) {
    std::vector<double> two_h(length + 1), lg(length + 1), sp(length + 1);
    for (long m = 1; m <= length; ++m) two_h[m] = 2.0 * lat.h[m] + 1.0;
    lat.rho.assign(length + 1, 0.0);
    k.lgamma_v(two_h.data() + 1, lg.data() + 1, length);
    k.sinpi_v(lat.h.data() + 1, sp.data() + 1, length);
    k.log_v(sp.data() + 1, sp.data() + 1, length);
    for (long m = 1; m <= length; ++m) lat.rho[m] = 0.5 * (lg[m] + sp[m]);
  } else if (r.kind() == AsymptoticCovariance::Kind::Farima) {
    std::vector<double> d(length + 1, 0.25);
    for (long m = 1; m <= length; ++m) d[m] = lat.h[m] - 0.5;
    lat.lgsin.assign(length + 1, 0.0);
    k.sinpi_v(d.data() + 1, lat.lgsin.data() + 1, length);
    k.log_v(lat.lgsin.data() + 1, lat.lgsin.data() + 1, length);
  }
  return lat;
}

// One row of the Lemma-2 sum: out[m] = G(n/N, m/N) ((|n-m|)/N)^{h_n+h_m-2} / N^2
// for |n - m| > band; band cells get G times the exact cell power mass.
class RiemannRow {
 public:
  RiemannRow(const AsymptoticCovariance& r, const RiemannLattice& lat, long band)
      : r_(r), lat_(lat), band_(band) {
    const std::size_t sz = lat.length + 1;
    t1_.resize(sz);
    t2_.resize(sz);
    t3_.resize(sz);
  }

  void compute(long n, double* out) {
    const long L = lat_.length;
    const auto& k = simd::active();
    const double hn = lat_.h[n];
    const double inv_n2 = -2.0 * lat_.log_scale;

    switch (r_.kind()) {
      case AsymptoticCovariance::Kind::Fwn: {
        for (long m = 1; m <= L; ++m) t1_[m] = hn + lat_.h[m] + 1.0;
        k.lgamma_v(t1_.data() + 1, t1_.data() + 1, L);
        for (long m = 1; m <= L; ++m) t2_[m] = 0.5 * (hn + lat_.h[m]);
        k.sinpi_v(t2_.data() + 1, t2_.data() + 1, L);
        k.log_v(t2_.data() + 1, t2_.data() + 1, L);
        for (long m = 1; m <= L; ++m) {
          const double a = hn + lat_.h[m];
          t3_[m] = a * (a - 1.0);
        }
        k.log_v(t3_.data() + 1, t3_.data() + 1, L);
        const double base = lat_.rho[n] - kLn2 + inv_n2;
        for (long m = 1; m <= L; ++m) {
          const double a = hn + lat_.h[m];
          const long dist = std::labs(n - m);
          const double ld = dist == 0 ? 0.0 : lat_.logdist[dist] - lat_.log_scale;
          t1_[m] = base + lat_.rho[m] + t3_[m] - t1_[m] - t2_[m] + (a - 2.0) * ld;
        }
        k.exp_v(t1_.data() + 1, out + 1, L);
        break;
      }
      case AsymptoticCovariance::Kind::Farima: {
        // G = sin(pi(h_later - 1/2)) Gamma(2 - h_n - h_m) / pi
        for (long m = 1; m <= L; ++m) t1_[m] = 2.0 - hn - lat_.h[m];
        k.lgamma_v(t1_.data() + 1, t1_.data() + 1, L);
        for (long m = 1; m <= L; ++m) {
          const double a = hn + lat_.h[m];
          const long dist = std::labs(n - m);
          const double ld = dist == 0 ? 0.0 : lat_.logdist[dist] - lat_.log_scale;
          const double lgs = m <= n ? lat_.lgsin[n] : lat_.lgsin[m];
          t1_[m] = lgs - kLogPi + t1_[m] + inv_n2 + (a - 2.0) * ld;
        }
        k.exp_v(t1_.data() + 1, out + 1, L);
        break;
      }
      default: {
        // constant / user-table: plain scalar row
        for (long m = 1; m <= L; ++m) {
          const double a = hn + lat_.h[m];
          const long dist = std::labs(n - m);
          const double g = m <= n ? r_(hn, lat_.h[m]) : r_(lat_.h[m], hn);
          const double ld = dist == 0 ? 1.0 : std::exp((a - 2.0) * (lat_.logdist[dist] -
                                                                    lat_.log_scale));
          out[m] = g * ld * std::exp(inv_n2);
        }
        break;
      }
    }

    // band cells |n - m| <= band: replace by G times the exact cell mass
    const double invN = 1.0 / std::exp(lat_.log_scale);
    const long lo = std::max(1L, n - band_), hi = std::min(L, n + band_);
    for (long m = lo; m <= hi; ++m) {
      const double hm = lat_.h[m];
      const double g = m <= n ? r_(hn, hm) : r_(hm, hn);
      const double beta = hn + hm - 2.0;
      out[m] = g * cell_power_mass((n - 1) * invN, n * invN, (m - 1) * invN, m * invN,
                                   beta);
    }
  }

 private:
  const AsymptoticCovariance& r_;
  const RiemannLattice& lat_;
  long band_;
  std::vector<double> t1_, t2_, t3_;
};

CovMatrix riemann_sweep(const HurstProfile& profile, const AsymptoticCovariance& r,
                        const std::vector<double>& times, long scale, long band) {
  if (scale < 1) throw DomainError("riemann_oracle: scale must be >= 1");
  if (band < 1) throw DomainError("riemann_oracle: band must be >= 1");
  const std::size_t nt = times.size();
  if (nt == 0) throw DomainError("riemann_oracle: empty time grid");
  std::vector<long> limits(nt);
  for (std::size_t i = 0; i < nt; ++i) {
    if (i > 0 && !(times[i] > times[i - 1]))
      throw DomainError("riemann_oracle: times must be strictly increasing");
    limits[i] = simulate::lattice_index(scale, times[i]);
  }
  const long L = limits.back();
  CovMatrix out(nt);
  if (L == 0) return out;

  const RiemannLattice lat = build_riemann_lattice(profile, r, scale, L);
  std::vector<double> rowseg(static_cast<std::size_t>(L + 1) * nt, 0.0);
  const int blocks = static_cast<int>((L + 255) / 256);
  parallel_for(blocks, [&](std::size_t blk) {
    RiemannRow engine(r, lat, band);
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

  std::vector<std::vector<double>> gram(nt, std::vector<double>(nt, 0.0));
  std::vector<KahanSum> cum(nt);
  std::size_t ti = 0;
  while (ti < nt && limits[ti] == 0) ++ti;
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
  for (std::size_t a = 0; a < nt; ++a)
    for (std::size_t b = a; b < nt; ++b) out.set(a, b, 0.5 * (gram[a][b] + gram[b][a]));
  return out;
}

}  // namespace

double riemann_oracle(const HurstProfile& profile, const AsymptoticCovariance& r,
                      double t, double s, long scale, long band) {
  if (t == s) {
    const CovMatrix m = riemann_sweep(profile, r, {t}, scale, band);
    return m.at(0, 0);
  }
  const double lo = std::min(t, s), hi = std::max(t, s);
  const CovMatrix m = riemann_sweep(profile, r, {lo, hi}, scale, band);
  return m.at(0, 1);
}

simulate::CovMatrix riemann_oracle_grid(const HurstProfile& profile,
                                        const AsymptoticCovariance& r,
                                        const std::vector<double>& times, long scale,
                                        long band) {
  return riemann_sweep(profile, r, times, scale, band);
}

bool decays(const std::vector<double>& seq, int allowed_inversions) {
  if (seq.size() < 2) return false;
  int inversions = 0;
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (!(seq[i] < seq[i - 1])) ++inversions;
  return inversions <= allowed_inversions && seq.back() < seq.front();
}

Report invariance_report(const fields::FieldModel& model, const HurstProfile& profile,
                         const std::vector<long>& n_ladder,
                         const std::vector<double>& time_grid, double final_rel_tol,
                         const quad::Options& opts) {
  if (n_ladder.empty()) throw DomainError("invariance_report: empty N ladder");
  for (std::size_t i = 1; i < n_ladder.size(); ++i)
    if (!(n_ladder[i] > n_ladder[i - 1]))
      throw DomainError("invariance_report: N ladder must increase");

  const LimitKernel kernel(profile, model.asympt(), opts);
  const std::size_t nt = time_grid.size();
  std::vector<double> limit(nt * nt);
  std::vector<std::pair<std::size_t, std::size_t>> entries;
  for (std::size_t i = 0; i < nt; ++i)
    for (std::size_t j = i; j < nt; ++j) entries.emplace_back(i, j);
  parallel_for(entries.size(), [&](std::size_t e) {
    const auto [i, j] = entries[e];
    const double v = kernel.eval(time_grid[i], time_grid[j]);
    limit[i * nt + j] = v;
    limit[j * nt + i] = v;
  });

  Report rep;
  rep.scenario = "invariance";
  std::vector<double> rel_sequence;
  ErrorTable table;
  for (long n : n_ladder) {
    const simulate::PartialSumSpec spec{model, profile, n, time_grid};
    const CovMatrix gram = simulate::partial_sum_cov_exact(spec);
    double max_abs = 0.0, max_rel = 0.0;
    for (std::size_t i = 0; i < nt; ++i)
      for (std::size_t j = i; j < nt; ++j) {
        const double err = std::abs(gram.at(i, j) - limit[i * nt + j]);
        max_abs = std::max(max_abs, err);
        max_rel = std::max(max_rel, err / std::max(std::abs(limit[i * nt + j]), kRelFloor));
      }
    table.push_back({static_cast<double>(n), max_abs, max_rel});
    rel_sequence.push_back(max_rel);
  }
  rep.error_tables.emplace_back("invariance_rel_error", table);

  // sequences that sit at the quadrature floor (exactness scenarios) cannot
  // show decrease; treat them as converged
  const double floor_tol = 100.0 * opts.rel_tol;
  rep.criteria.push_back({"invariance.error_decreasing",
                          rel_sequence.back() / std::max(rel_sequence.front(), 1e-300),
                          1.0, decays(rel_sequence, 0) || rel_sequence.back() < floor_tol,
                          "max relative error strictly decreasing along the N ladder"});
  rep.criteria.push_back({"invariance.final_error", rel_sequence.back(), final_rel_tol,
                          rel_sequence.back() < final_rel_tol,
                          "final max relative error below tolerance"});
  return rep;
}

Report tangent_report(const HurstProfile& profile, const AsymptoticCovariance& r,
                      const TangentSettings& s, const quad::Options& opts) {
  if (s.eps_ladder.size() < 2)
    throw DomainError("tangent_report: epsilon ladder needs at least two rungs");
  for (std::size_t i = 1; i < s.eps_ladder.size(); ++i)
    if (!(s.eps_ladder[i] < s.eps_ladder[i - 1]))
      throw DomainError("tangent_report: epsilon ladder must decrease");

  const LimitKernel kernel(profile, r, opts);
  const double ht = profile.eval(s.t_same);
  const double ref = kernels::tangent_cov(s.t_same, s.u, s.v, profile, r);

  Report rep;
  rep.scenario = "tangent";
  ErrorTable same_tbl, distinct_tbl;
  std::vector<double> same_err, distinct_val;
  const double h_td = profile.eval(s.t_distinct);
  const double h_sd = profile.eval(s.s_distinct);
  for (double eps : s.eps_ladder) {
    const double raw = kernel.rect(s.t_same, s.t_same + eps * s.u, s.t_same,
                                   s.t_same + eps * s.v);
    const double val = raw / std::pow(eps, 2.0 * ht);
    const double err = std::abs(val - ref) / std::max(std::abs(ref), kRelFloor);
    same_err.push_back(err);
    same_tbl.push_back({eps, std::abs(val - ref), err});

    const double cross_raw =
        kernel.rect(s.t_distinct, s.t_distinct + eps * s.u, s.s_distinct,
                    s.s_distinct + eps * s.v);
    const double cross = std::abs(cross_raw) / std::pow(eps, h_td + h_sd);
    distinct_val.push_back(cross);
    distinct_tbl.push_back({eps, cross, cross});
  }
  rep.error_tables.emplace_back("tangent_same_base", same_tbl);
  rep.error_tables.emplace_back("tangent_distinct_base", distinct_tbl);

  rep.criteria.push_back({"tangent.same_base_decay", same_err.back(), same_err.front(),
                          decays(same_err, 1) || same_err.back() < 1e-8,
                          "rescaled same-base error decreasing along epsilon"});
  rep.criteria.push_back({"tangent.distinct_base_decay", distinct_val.back(),
                          distinct_val.front(), decays(distinct_val, 1),
                          "normalized distinct-base covariance decreasing"});
  rep.criteria.push_back({"tangent.distinct_base_final", distinct_val.back(),
                          s.distinct_tol, distinct_val.back() < s.distinct_tol,
                          "normalized distinct-base covariance small at final epsilon"});
  return rep;
}

double holder_estimate_from_increments(const CovMatrix& increments, double spacing,
                                       std::size_t replicates, std::uint64_t seed) {
  const std::size_t p = increments.dim();
  std::vector<long> lags;
  for (long m = 1; 4 * m <= static_cast<long>(p); m *= 2) lags.push_back(m);
  if (lags.size() < 4)
    throw DomainError("holder_estimate: fewer than 4 usable dyadic lags");

  CovMatrix work = increments;
  work.factorize();
  const std::vector<double> draws = simulate::sample_paths(work, replicates, seed);

  // structure function S2(m) averaged over replicates and positions
  std::vector<double> s2(lags.size(), 0.0);
  std::vector<double> path(p + 1);
  std::vector<KahanSum> acc(lags.size());
  std::vector<std::size_t> counts(lags.size(), 0);
  for (std::size_t rep = 0; rep < replicates; ++rep) {
    path[0] = 0.0;
    for (std::size_t i = 0; i < p; ++i) path[i + 1] = path[i] + draws[rep * p + i];
    for (std::size_t li = 0; li < lags.size(); ++li) {
      const long m = lags[li];
      for (std::size_t i = 0; i + m <= p; ++i) {
        const double d = path[i + m] - path[i];
        acc[li].add(d * d);
        ++counts[li];
      }
    }
  }
  for (std::size_t li = 0; li < lags.size(); ++li) s2[li] = acc[li].sum / counts[li];

  // least-squares slope of log S2 on log lag
  double mx = 0.0, my = 0.0;
  const std::size_t k = lags.size();
  std::vector<double> xs(k), ys(k);
  for (std::size_t i = 0; i < k; ++i) {
    xs[i] = std::log(lags[i] * spacing);
    ys[i] = std::log(s2[i]);
    mx += xs[i];
    my += ys[i];
  }
  mx /= k;
  my /= k;
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  return 0.5 * num / den;
}

double holder_estimate(const LimitKernel& kernel, double t0, double window, int cells,
                       std::size_t replicates, std::uint64_t seed) {
  if (!(window > 0.0) || t0 - window < 0.0)
    throw DomainError("holder_estimate: window must be positive with t0 - window >= 0");
  if (replicates < 100) throw DomainError("holder_estimate: need at least 100 replicates");
  const int p = cells;
  const double lo = t0 - window;
  const double delta = 2.0 * window / p;

  CovMatrix incr(p);
  std::vector<std::pair<int, int>> entries;
  for (int i = 0; i < p; ++i)
    for (int j = i; j < p; ++j) entries.emplace_back(i, j);
  std::vector<double> vals(entries.size());
  parallel_for(entries.size(), [&](std::size_t e) {
    const auto [i, j] = entries[e];
    vals[e] = kernel.rect(lo + i * delta, lo + (i + 1) * delta, lo + j * delta,
                          lo + (j + 1) * delta);
  });
  for (std::size_t e = 0; e < entries.size(); ++e)
    incr.set(entries[e].first, entries[e].second, vals[e]);

  return holder_estimate_from_increments(incr, delta, replicates, seed);
}

double representation_cov(const HurstProfile& profile, const AsymptoticCovariance& r,
                          double t, double s, double dh, double grid_step) {
  if (!profile.twice_differentiable())
    throw UnsupportedProfileError(
        "representation_cov: profile must be twice continuously differentiable");
  if (r.kind() != AsymptoticCovariance::Kind::Fwn &&
      r.kind() != AsymptoticCovariance::Kind::Farima)
    throw DomainError(
        "representation_cov: needs a smooth asymptotic covariance (fwn or farima)");
  if (!(dh > 0.0 && grid_step > 0.0))
    throw DomainError("representation_cov: dh and grid_step must be positive");

  auto K = [&](double theta, double h1, double sigma, double h2) {
    return kernels::field_cov(HurstPair(h1, h2), theta, sigma, r);
  };

  const double ht = profile.eval(t), hs = profile.eval(s);
  const long pt = std::max(1L, std::lround(t / grid_step));
  const long ps = std::max(1L, std::lround(s / grid_step));
  const double step_t = t / pt, step_s = s / ps;

  const double term1 = K(t, ht, s, hs);

  // midpoint rule in sigma of h'(sigma) dH2 K((t,h(t)), (sigma, H2))|h(sigma)
  KahanSum term2;
  for (long j = 0; j < ps; ++j) {
    const double sg = (j + 0.5) * step_s;
    const double hp = profile.derivative(sg);
    const double hh = profile.eval(sg);
    const double dk = (K(t, ht, sg, hh + dh) - K(t, ht, sg, hh - dh)) / (2.0 * dh);
    term2.add(hp * dk * step_s);
  }

  KahanSum term3;
  for (long i = 0; i < pt; ++i) {
    const double th = (i + 0.5) * step_t;
    const double hp = profile.derivative(th);
    const double hh = profile.eval(th);
    const double dk = (K(th, hh + dh, s, hs) - K(th, hh - dh, s, hs)) / (2.0 * dh);
    term3.add(hp * dk * step_t);
  }

  // double midpoint rule of h'h' d2K/dH1 dH2
  std::vector<double> rows(pt, 0.0);
  parallel_for(pt, [&](std::size_t i) {
    const double th = (i + 0.5) * step_t;
    const double hp_t = profile.derivative(th);
    const double hh_t = profile.eval(th);
    KahanSum acc;
    for (long j = 0; j < ps; ++j) {
      const double sg = (j + 0.5) * step_s;
      const double hp_s = profile.derivative(sg);
      const double hh_s = profile.eval(sg);
      const double dd = (K(th, hh_t + dh, sg, hh_s + dh) - K(th, hh_t + dh, sg, hh_s - dh) -
                         K(th, hh_t - dh, sg, hh_s + dh) + K(th, hh_t - dh, sg, hh_s - dh)) /
                        (4.0 * dh * dh);
      acc.add(hp_t * hp_s * dd);
    }
    rows[i] = acc.sum * step_t * step_s;
  });
  KahanSum term4;
  for (long i = 0; i < pt; ++i) term4.add(rows[i]);

  return term1 - term2.sum - term3.sum + term4.sum;
}

}  // namespace mgp::analysis
