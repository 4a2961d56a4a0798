#pragma once

// Truncated lattice sums over forms of fixed discriminant:
//   f_{k,D}       = D^{k-1/2}/(binom(2k-2,k-1) pi) sum Q(z,1)^{-k}
//   f_{k,s,D}     = sum Q(z,1)^{-k} phi_s(w)
//   F_{1-k,s,D}   = sum sgn(Q_z) Q(z,1)^{k-1} phi*_s(w)
//   F_{1-k,D}     = (4 pi D)^{3/4-k/2}/(12 psi(1)) sum sgn(Q_z) Q(z,1)^{k-1} psi(w)
// with w = D/(Q_z^2 + D). Truncation is on Q_z^2, which is invariant under the
// simultaneous action of SL2(Z) on z and on the forms.

#include <cstddef>
#include <optional>
#include <vector>

#include "locmaass/qforms.hpp"
#include "locmaass/specfun.hpp"

namespace locmaass {

enum class Family { f_classical, f, F, F_harmonic };

/// Weight of the family: 2k for the f-side, 2 - 2k for the F-side.
int family_weight(Family fam, int k);

const char *family_name(Family fam);

struct SumConfig {
  /// Fixed cutoff on Q_z^2.
  std::optional<double> qz2_max;
  /// Adaptive mode: double the cutoff until tail_estimate <= target_tol.
  std::optional<double> target_tol;
  std::size_t max_forms = 20'000'000;
  EnumLimits limits;

  static SumConfig fixed(double qz2_max);
  static SumConfig adaptive(double target_tol);

  /// DomainError unless exactly one of qz2_max / target_tol is set and max_forms > 0.
  void validate() const;
};

struct EvalResult {
  cplx value;
  double tail_estimate = 0.0;
  std::size_t forms_used = 0;
  double min_abs_qz = 0.0;
  /// Largest |term| among the included forms.
  double largest_term = 0.0;
  /// Cutoff actually used (the final one in adaptive mode).
  double qz2_max = 0.0;
};

/// Checks k, D and the admissible range of s for a family.
void validate_family(Family fam, const KernelParams &p);

/// Single summand for a form at a point.
class TermKernel {
public:
  TermKernel(Family fam, const KernelParams &p);
  cplx operator()(const QForm &q, UHPoint z) const;
  /// q with |term| ~ (Q_z^2)^{-q} for large Q_z^2.
  double decay_exponent() const { return decay_; }
  Family family() const { return fam_; }
  const KernelParams &params() const { return p_; }

private:
  Family fam_;
  KernelParams p_;
  cplx scale_ = 1.0;
  double decay_ = 0.0;
  std::optional<PhiKernel> phi_;
  std::optional<PhiStarKernel> phi_star_;
  std::optional<PsiKernel> psi_;
};

/// Generic evaluator behind the four named ones.
EvalResult evaluate(Family fam, const KernelParams &p, UHPoint z, const SumConfig &cfg);

EvalResult eval_f_classical(int k, long D, UHPoint z, const SumConfig &cfg);
EvalResult eval_f(const KernelParams &p, UHPoint z, const SumConfig &cfg);
EvalResult eval_F(const KernelParams &p, UHPoint z, const SumConfig &cfg);
EvalResult eval_F_harmonic(int k, long D, UHPoint z, const SumConfig &cfg);

/// Sum over a form set frozen at a center point, evaluated at nearby points.
/// Used by finite-difference stencils so that every stencil point sees the
/// same forms. With stencil_radius > 0 the constructor throws DomainError if
/// some geodesic of the set may pass within stencil_radius of the center
/// (the summands are not smooth across their geodesics).
class FrozenSum {
public:
  FrozenSum(Family fam, const KernelParams &p, UHPoint center, double qz2_max,
            double stencil_radius = 0.0, EnumLimits limits = {});
  cplx operator()(UHPoint z) const;
  const std::vector<QForm> &forms() const { return forms_; }

private:
  TermKernel kernel_;
  std::vector<QForm> forms_;
};

} // namespace locmaass
