#pragma once

// Indefinite theta kernels over all integral binary quadratic forms:
//   Theta(z, tau)  = y^{-2k} v^{1/2} sum Q(z,1)^k e^{-4 pi Q_z^2 v} e^{2 pi i D tau}
//   Theta*(z, tau) = v^k sum Q_z Q(z,1)^{k-1} e^{-4 pi |Q(z,1)|^2 v / y^2} e^{-2 pi i D tau}
// Both are majorized by e^{-2 pi v (2 Q_z^2 + D)}.

#include <optional>
#include <vector>

#include "locmaass/qforms.hpp"

namespace locmaass {

struct ThetaPoint {
  UHPoint z;
  UHPoint tau;
};

enum class ThetaKind { theta, theta_star };

struct ThetaConfig {
  /// Majorant cutoff; when unset it is chosen from tol.
  std::optional<double> t_max;
  /// Bound on the dropped Gaussian mass e^{-2 pi v t} (t/v)^{3/2}.
  double tol = 1e-12;
  EnumLimits limits;

  /// Cutoff used at a point for weight parameter k.
  double cutoff(const ThetaPoint &pt, int k) const;
};

/// Sum of the kernel over a given list of forms (no truncation logic).
cplx theta_over_forms(ThetaKind kind, int k, const std::vector<QForm> &forms, const ThetaPoint &pt);

cplx eval_theta(int k, const ThetaPoint &pt, const ThetaConfig &cfg = {});
cplx eval_theta_star(int k, const ThetaPoint &pt, const ThetaConfig &cfg = {});

struct IdentityResidual {
  cplx lhs;
  cplx rhs;
  double residual = 0.0;
};

/// which = 1: xi_{k+1/2, tau} Theta(z, tau) = -i y^{2-2k} d/dz Theta*(-conj z, tau).
/// which = 2: xi_{3/2-k, tau} Theta*(-conj z, tau) = -i y^{2k} d/dz Theta(z, tau).
/// Both sides by central differences with step h on a form set frozen at the
/// centre; residual = |lhs - rhs| / (|lhs| + |rhs| + 1e-300).
IdentityResidual theta_identity_residual(int k, const ThetaPoint &pt, int which, double h,
                                         bool richardson = false);

} // namespace locmaass
