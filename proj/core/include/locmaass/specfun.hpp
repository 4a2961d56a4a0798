#pragma once

// Special-function kernels used by the lattice sums: complex Gamma, Gauss
// 2F1 on [0, 1], Kummer 1F1 / Whittaker M, the incomplete beta function and
// the radial kernels phi_s, phi*_s and psi attached to a discriminant.

#include <complex>

#include "locmaass/summation.hpp"

namespace locmaass {

/// Weight parameter k, spectral parameter s and discriminant D.
struct KernelParams {
  int k = 2;
  cplx s{1.25, 0.0};
  long D = 5;

  /// lambda_s = (s - k/2 - 1/4)(1 - s - k/2 - 1/4).
  cplx lambda() const;

  /// Throws DomainError unless k is even and >= 2 and D > 0 with D = 0,1 mod 4.
  void validate() const;
};

/// True if D is a discriminant: D = 0 or 1 mod 4.
bool is_discriminant(long D);

/// Complex Gamma function (Lanczos, reflected for Re(s) < 1/2).
/// Throws PoleError at non-positive integers.
cplx cgamma(cplx s);

/// 1/Gamma(s); entire, returns exactly zero at the poles of Gamma.
cplx rgamma(cplx s);

/// Extended Kronecker symbol (D|n) for n >= 1.
int kronecker(long D, long n);

/// Gauss hypergeometric function evaluated on 0 <= w <= 1. Coefficients
/// that depend only on (a, b, c) are computed once, so a single instance can
/// be reused across many arguments.
class Hypergeometric2F1 {
public:
  Hypergeometric2F1(cplx a, cplx b, cplx c);
  cplx operator()(double w) const;

  /// Largest w evaluated by the direct power series.
  static constexpr double kSeriesCutoff = 0.8;

private:
  cplx a_, b_, c_;
  bool degenerate_ = false; // c - a - b is an integer
  cplx gauss_ = 0.0;        // value at w = 1 (when Re(c-a-b) > 0)
  cplx conn1_ = 0.0;        // connection coefficients for w -> 1 - w
  cplx conn2_ = 0.0;
};

/// 2F1(a, b; c; w) for 0 <= w <= 1 to about 1e-12 relative accuracy.
cplx hyp2f1(cplx a, cplx b, cplx c, double w);

/// Independent 2F1 oracle: Euler's integral evaluated by tanh-sinh
/// quadrature. Requires Re(c) > Re(b) > 0 and 0 <= w < 1.
cplx hyp2f1_euler_oracle(cplx a, cplx b, cplx c, double w);

/// Kummer 1F1(a; b; x) by its power series, x real.
cplx hyp1f1(cplx a, cplx b, double x);

/// Whittaker M_{mu,nu}(x) for x > 0. Throws OverflowError for x > 700.
cplx whittaker_m(cplx mu, cplx nu, double x);

/// |t|^{-kappa/2} M_{(kappa/2) sgn t, s - 1/2}(|t|), t != 0.
cplx mathcal_m(double kappa, cplx s, double t);

/// The same function through the Euler-type integral representation of M,
/// by quadrature. Requires Re(s +- kappa/2) > 0.
cplx mathcal_m_integral_oracle(double kappa, cplx s, double t);

/// Incomplete beta integral of u^{a-1}(1-u)^{b-1} over [0, v], 0 < v <= 1.
cplx incomplete_beta(double v, cplx a, cplx b);

/// Radial kernel of f_{k,s,D}; requires Re(s) >= k/2 + 1/4 and 0 < w <= 1.
class PhiKernel {
public:
  explicit PhiKernel(const KernelParams &p);
  cplx operator()(double w) const;
  /// Closed-form value at w = 1 by Gauss's summation.
  cplx at_one() const;

private:
  KernelParams p_;
  cplx prefactor_;
  cplx exponent_;
  Hypergeometric2F1 f21_;
};

/// Radial kernel of F_{1-k,s,D}; requires Re(s) > 3/4 and 0 < w <= 1.
class PhiStarKernel {
public:
  explicit PhiStarKernel(const KernelParams &p);
  cplx operator()(double w) const;
  /// (4 pi D)^{3/4-k/2} / (12 Gamma(s - k/2 + 3/4)).
  cplx at_one() const;

private:
  KernelParams p_;
  cplx prefactor_;
  cplx exponent_;
  Hypergeometric2F1 f21_;
};

/// psi(v) = beta(v; k - 1/2, 1/2) / 2.
class PsiKernel {
public:
  explicit PsiKernel(int k);
  double operator()(double v) const;
  double at_one() const { return at_one_; }

private:
  int k_;
  double at_one_;
};

cplx phi_kernel(const KernelParams &p, double w);
cplx phi_star_kernel(const KernelParams &p, double w);
double psi_kernel(int k, double v);

} // namespace locmaass
