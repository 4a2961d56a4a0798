#pragma once

// Finite-difference realizations of the weight-kappa operators
//   xi_kappa  = 2i v^kappa conj(d/d tau-bar)
//   Delta_kappa = -v^2 (d_u^2 + d_v^2) + i kappa v (d_u + i d_v)
// on functions of tau = u + iv, with optional Richardson extrapolation.

#include <functional>

#include "locmaass/qforms.hpp"

namespace locmaass {

using PointFunction = std::function<cplx(UHPoint)>;

struct OperatorConfig {
  /// Step; 0 selects the default 1e-3 * min(1, v).
  double h = 0.0;
  /// Combine steps h and h/2 as (4 D(h/2) - D(h)) / 3.
  bool richardson = true;

  /// Step actually used at tau; DomainError unless 0 < h <= 1e-2 and h < v/2.
  double step_at(UHPoint tau) const;
};

/// xi_kappa F at tau.
cplx xi_op(double kappa, const PointFunction &F, UHPoint tau, const OperatorConfig &cfg = {});

/// Delta_kappa F at tau.
cplx laplacian_op(double kappa, const PointFunction &F, UHPoint tau, const OperatorConfig &cfg = {});

/// dF/dtau = (F_u - i F_v)/2.
cplx wirtinger_dz(const PointFunction &F, UHPoint tau, const OperatorConfig &cfg = {});

/// dF/dtau-bar = (F_u + i F_v)/2.
cplx wirtinger_dzbar(const PointFunction &F, UHPoint tau, const OperatorConfig &cfg = {});

} // namespace locmaass
