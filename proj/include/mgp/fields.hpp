#pragma once

#include <string>

#include "mgp/kernels.hpp"
#include "mgp/quadrature.hpp"
#include "mgp/specialfn.hpp"

namespace mgp::fields {

// Cross-covariance of fractional-white-noise increments:
// E[X_j(H1) X_k(H2)] = D(H1,H2) (|n+1|^a + |n-1|^a - 2|n|^a), n = j-k,
// a = H1+H2. Reduces to the fGn autocovariance for H1 = H2.
double fwn_cov(long j, long k, const HurstPair& p);

// Ground truth for the fwn normalization: the spectral integral
// (C1 C2)^{-1} int (e^{-i(j+1)x}-e^{-ijx}) conj(e^{-i(k+1)x}-e^{-ikx}) |x|^{-a-1} dx,
// symmetrized to its real cosine form and integrated numerically.
// Oracle scale only: requires |j-k| <= 64.
double fwn_spectral_oracle(long j, long k, const HurstPair& p,
                           const quad::Options& opts = {});

// MA(inf) coefficient psi_l(d) = Gamma(d+l) / (l! Gamma(d)), d in (0, 1/2).
double farima_psi(long l, double d);

// Cross-covariance E[Phi_j^{d1} Phi_k^{d2}], d_i = H_i - 1/2, with the
// later index carrying its own memory parameter in the psi_{n+l} role.
// The series sums exactly to
// Gamma(dL+n) Gamma(1-dL-dE) / (Gamma(dL) Gamma(1-dL) Gamma(n+1-dE)).
double farima_cov(long j, long k, const HurstPair& p);

// Discrete Gaussian field model: covariance rule plus its asymptotic R.
class FieldModel {
 public:
  enum class Kind { Fwn, Farima };

  static FieldModel fwn(double a, double b);
  static FieldModel farima(double a, double b);

  double cov(long j, long k, double h_j, double h_k) const;
  kernels::AsymptoticCovariance asympt() const;
  Kind kind() const { return kind_; }
  double lower() const { return a_; }
  double upper() const { return b_; }
  std::string name() const { return kind_ == Kind::Fwn ? "fwn" : "farima"; }

 private:
  FieldModel(Kind k, double a, double b);
  Kind kind_;
  double a_, b_;
};

// sup over a grid x grid of [a,b]^2 of
// |n^{2-H1-H2} cov(n, 0, H1, H2) - R(H1, H2)|   (assumption (ii) residual)
double assumption2_residual(const FieldModel& model, long n, int grid = 21);

// |n^{1-d1-d2} sum_{l>=1} [Gamma(d1+n+l)/(n+l)!][Gamma(d2+l)/l!]
//  - Gamma(d2)Gamma(1-d1-d2)/Gamma(1-d1)|, evaluated via the exact sum.
double lemma1_residual(long n, double d1, double d2);

}  // namespace mgp::fields
