#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mgp/hurst_profile.hpp"
#include "mgp/quadrature.hpp"
#include "mgp/specialfn.hpp"

namespace mgp::kernels {

// Asymptotic covariance of the fractional-white-noise field,
// R(H1,H2) = (H1+H2)(H1+H2-1) D(H1,H2). Symmetric; diagonal H(2H-1).
double r_fwn(const HurstPair& p);

// Same quantity with the uncorrected spectral prefactor (twice r_fwn);
// kept for reporting next to the oracle-resolved value.
double r_fwn_paper_raw(const HurstPair& p);

// Asymptotic covariance of the FARIMA field,
// R(H1,H2) = sin(pi(H1-1/2)) Gamma(2-H1-H2) / pi, H1 on the later index.
// Not symmetric.
double r_farima(const HurstPair& p);

// Evaluation rule R(H1, H2) for the limit kernels.
class AsymptoticCovariance {
 public:
  enum class Kind { Fwn, Farima, Constant, Table };

  static AsymptoticCovariance fwn();
  static AsymptoticCovariance farima();
  static AsymptoticCovariance constant(double c);
  // bilinear interpolation over a rectangular grid of positive values
  static AsymptoticCovariance table(std::vector<double> h_grid,
                                    std::vector<std::vector<double>> values);

  double operator()(double h1, double h2) const;
  Kind kind() const { return kind_; }
  std::string name() const;
  // sup of |R| over [a,b]^2 on a 50x50 grid
  double sup_abs(double a, double b) const;

 private:
  AsymptoticCovariance() = default;
  Kind kind_ = Kind::Constant;
  double c_ = 0.0;
  std::vector<double> grid_;
  std::vector<std::vector<double>> values_;
};

// Directional composite: R(H1,H2) 1_{t>=s} + R(H2,H1) 1_{t<s}.
double script_r(double t, double s, const HurstPair& p, const AsymptoticCovariance& r);

// Singular integrand of the limit covariance:
// script_r(theta,sigma; h(theta),h(sigma)) |theta-sigma|^{h(theta)+h(sigma)-2}.
// Throws SingularPointError at theta == sigma.
double script_r_star(double theta, double sigma, const HurstProfile& h,
                     const AsymptoticCovariance& r);

// Covariance I(t,s) of the limit process: the double integral of
// script_r_star over [0,t] x [0,s], evaluated by singular quadrature.
class LimitKernel {
 public:
  LimitKernel(HurstProfile profile, AsymptoticCovariance asympt,
              quad::Options opts = {});

  double eval(double t, double s) const;  // I(t, s)
  // integral of script_r_star over [a1,b1] x [a2,b2] (tangent / increment use)
  double rect(double a1, double b1, double a2, double b2) const;

  const HurstProfile& profile() const { return profile_; }
  const AsymptoticCovariance& asympt() const { return asympt_; }
  const quad::Options& options() const { return opts_; }

 private:
  HurstProfile profile_;
  AsymptoticCovariance asympt_;
  quad::Options opts_;
};

// Covariance of the two-parameter limit field W~ at ((t,H1),(s,H2)):
// [R(H2,H1) s^a + R(H1,H2) t^a - scriptR(t,s;H1,H2) |t-s|^a] / (a(a-1)),
// a = H1+H2.
double field_cov(const HurstPair& p, double t, double s, const AsymptoticCovariance& r);

// Multifractional Brownian covariance
// D(h(t),h(s)) (t^{h(t)+h(s)} + s^{h(t)+h(s)} - |t-s|^{h(t)+h(s)}).
double mbm_cov(const HurstProfile& h, double t, double s);

// Tangent-process covariance at base point t for lags u, v; zero when the
// base points differ (distinct_base = true).
double tangent_cov(double t, double u, double v, const HurstProfile& h,
                   const AsymptoticCovariance& r, bool distinct_base = false);

}  // namespace mgp::kernels
