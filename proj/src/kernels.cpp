#include "mgp/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace mgp::kernels {

using specialfn::d_coef;
using specialfn::log_gamma;
using specialfn::sin_pi;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double r_fwn(const HurstPair& p) {
  const double a = p.h1 + p.h2;
  return a * (a - 1.0) * d_coef(p);
}

double r_fwn_paper_raw(const HurstPair& p) { return 2.0 * r_fwn(p); }

double r_farima(const HurstPair& p) {
  return sin_pi(p.h1 - 0.5) * std::exp(log_gamma(2.0 - p.h1 - p.h2)) / kPi;
}

AsymptoticCovariance AsymptoticCovariance::fwn() {
  AsymptoticCovariance r;
  r.kind_ = Kind::Fwn;
  return r;
}

AsymptoticCovariance AsymptoticCovariance::farima() {
  AsymptoticCovariance r;
  r.kind_ = Kind::Farima;
  return r;
}

AsymptoticCovariance AsymptoticCovariance::constant(double c) {
  if (!(c > 0.0)) throw DomainError("AsymptoticCovariance: constant must be positive");
  AsymptoticCovariance r;
  r.kind_ = Kind::Constant;
  r.c_ = c;
  return r;
}

AsymptoticCovariance AsymptoticCovariance::table(std::vector<double> h_grid,
                                                 std::vector<std::vector<double>> values) {
  if (h_grid.size() < 2) throw DomainError("AsymptoticCovariance: table grid too small");
  for (std::size_t i = 1; i < h_grid.size(); ++i)
    if (!(h_grid[i] > h_grid[i - 1]))
      throw DomainError("AsymptoticCovariance: table grid must increase");
  if (values.size() != h_grid.size())
    throw DomainError("AsymptoticCovariance: table rows do not match grid");
  for (const auto& row : values) {
    if (row.size() != h_grid.size())
      throw DomainError("AsymptoticCovariance: table columns do not match grid");
    for (double v : row)
      if (!(v > 0.0)) throw DomainError("AsymptoticCovariance: table values must be positive");
  }
  AsymptoticCovariance r;
  r.kind_ = Kind::Table;
  r.grid_ = std::move(h_grid);
  r.values_ = std::move(values);
  return r;
}

double AsymptoticCovariance::operator()(double h1, double h2) const {
  switch (kind_) {
    case Kind::Fwn:
      return r_fwn(HurstPair(h1, h2));
    case Kind::Farima:
      return r_farima(HurstPair(h1, h2));
    case Kind::Constant:
      return c_;
    case Kind::Table: {
      auto locate = [&](double h) -> std::pair<std::size_t, double> {
        const double lo = grid_.front(), hi = grid_.back();
        const double x = std::clamp(h, lo, hi);
        auto it = std::upper_bound(grid_.begin(), grid_.end(), x);
        std::size_t i = std::min<std::size_t>(
            grid_.size() - 2, it == grid_.begin() ? 0 : (it - grid_.begin()) - 1);
        const double w = (x - grid_[i]) / (grid_[i + 1] - grid_[i]);
        return {i, std::clamp(w, 0.0, 1.0)};
      };
      const auto [i, wi] = locate(h1);
      const auto [j, wj] = locate(h2);
      return (1 - wi) * ((1 - wj) * values_[i][j] + wj * values_[i][j + 1]) +
             wi * ((1 - wj) * values_[i + 1][j] + wj * values_[i + 1][j + 1]);
    }
  }
  return c_;
}

std::string AsymptoticCovariance::name() const {
  switch (kind_) {
    case Kind::Fwn:
      return "fwn";
    case Kind::Farima:
      return "farima";
    case Kind::Constant:
      return "constant";
    case Kind::Table:
      return "user-table";
  }
  return "?";
}

double AsymptoticCovariance::sup_abs(double a, double b) const {
  double sup = 0.0;
  const int n = 50;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double h1 = a + (b - a) * i / (n - 1.0);
      const double h2 = a + (b - a) * j / (n - 1.0);
      sup = std::max(sup, std::abs((*this)(h1, h2)));
    }
  return sup;
}

double script_r(double t, double s, const HurstPair& p, const AsymptoticCovariance& r) {
  if (!(t >= 0.0 && s >= 0.0)) throw DomainError("script_r: times must be nonnegative");
  return t >= s ? r(p.h1, p.h2) : r(p.h2, p.h1);
}

double script_r_star(double theta, double sigma, const HurstProfile& h,
                     const AsymptoticCovariance& r) {
  if (theta == sigma)
    throw SingularPointError("script_r_star: evaluated on the diagonal theta == sigma");
  const double h1 = h.eval(theta), h2 = h.eval(sigma);
  const double g = script_r(theta, sigma, HurstPair(h1, h2), r);
  return g * std::pow(std::abs(theta - sigma), h1 + h2 - 2.0);
}

LimitKernel::LimitKernel(HurstProfile profile, AsymptoticCovariance asympt,
                         quad::Options opts)
    : profile_(std::move(profile)), asympt_(std::move(asympt)), opts_(opts) {}

double LimitKernel::rect(double a1, double b1, double a2, double b2) const {
  if (!(a1 >= 0.0 && a2 >= 0.0))
    throw DomainError("LimitKernel: integration limits must be nonnegative");
  // offset-aware integrand: theta - sigma can round to zero near the
  // diagonal, so the singular factor is computed from the exact offset w
  auto f = [this](double th, double sg, double w) {
    const double h1 = profile_.eval(th), h2 = profile_.eval(sg);
    const double g = w >= 0.0 ? asympt_(h1, h2) : asympt_(h2, h1);
    return g * std::pow(std::abs(w), h1 + h2 - 2.0);
  };
  return quad::singular_rect(f, a1, b1, a2, b2, opts_);
}

double LimitKernel::eval(double t, double s) const {
  if (!(t >= 0.0 && s >= 0.0)) throw DomainError("LimitKernel: times must be nonnegative");
  if (t == 0.0 || s == 0.0) return 0.0;
  return rect(0.0, t, 0.0, s);
}

double field_cov(const HurstPair& p, double t, double s, const AsymptoticCovariance& r) {
  if (!(t >= 0.0 && s >= 0.0)) throw DomainError("field_cov: times must be nonnegative");
  const double a = p.h1 + p.h2;
  const double denom = a * (a - 1.0);
  const double r12 = r(p.h1, p.h2);
  const double r21 = r(p.h2, p.h1);
  const double rts = t >= s ? r12 : r21;
  return (r21 * std::pow(s, a) + r12 * std::pow(t, a) -
          rts * std::pow(std::abs(t - s), a)) /
         denom;
}

double mbm_cov(const HurstProfile& h, double t, double s) {
  if (!(t >= 0.0 && s >= 0.0)) throw DomainError("mbm_cov: times must be nonnegative");
  const double ht = h.eval(t), hs = h.eval(s);
  const double a = ht + hs;
  return d_coef(HurstPair(ht, hs)) *
         (std::pow(t, a) + std::pow(s, a) - std::pow(std::abs(t - s), a));
}

double tangent_cov(double t, double u, double v, const HurstProfile& h,
                   const AsymptoticCovariance& r, bool distinct_base) {
  if (!(t >= 0.0 && u >= 0.0 && v >= 0.0))
    throw DomainError("tangent_cov: arguments must be nonnegative");
  if (distinct_base) return 0.0;
  const double ht = h.eval(t);
  const double c = r(ht, ht) / (4.0 * ht * ht - 2.0 * ht);
  return c * (std::pow(u, 2.0 * ht) + std::pow(v, 2.0 * ht) -
              std::pow(std::abs(u - v), 2.0 * ht));
}

}  // namespace mgp::kernels
