#pragma once

// Half-integral weight Maass-Poincare series on Gamma_0(4):
//   P(tau) = sum over Gamma_inf \ Gamma_0(4) of (psi_{m,kappa}(s) |_kappa g)(tau)
// with the theta multiplier j(g, tau) = (c/d) eps_d^{-1} (c tau + d)^{1/2}.

#include <vector>

#include "locmaass/qforms.hpp"

namespace locmaass {

struct PoincareSpec {
  double kappa = 2.5; // half-integral weight
  cplx s{2.0, 0.0};   // Re(s) > 1
  long m = 1;         // nonzero index
  long c_max = 40;    // cosets with 0 < c <= c_max, 4 | c
  /// Translates tau + n with |n| <= N are summed for each (c, d mod c); N is
  /// chosen so that N^{1 - 2 Re(s)} <= translate_tol.
  double translate_tol = 1e-9;

  void validate() const;
  /// Number of translates on each side.
  long translates() const;
};

/// (4 pi |m|)^{kappa/2} Gamma(2s)^{-1} M_{kappa,s}(4 pi m v) e^{2 pi i m u}.
cplx seed_psi(long m, double kappa, cplx s, UHPoint tau);

/// Identity plus one matrix [[a, b], [c, d]] per c in {4, 8, ...} <= c_max and
/// d mod c coprime to c (0 < d < c), completed to determinant 1.
std::vector<GL2Int> coset_reps(long c_max);

/// Shimura's extension of the Jacobi symbol (c/d), d odd.
int shimura_symbol(long c, long d);

/// j(g, tau) = (c/d) eps_d^{-1} (c tau + d)^{1/2}, principal square root.
/// DomainError unless det g = 1, 4 | c and d odd.
cplx theta_multiplier(const GL2Int &g, UHPoint tau);

/// Automorphy factor j(g, tau)^{2 kappa} (2 kappa an odd integer).
cplx automorphy_factor(const GL2Int &g, UHPoint tau, double kappa);

/// Truncated Poincare series.
cplx eval_poincare(const PoincareSpec &spec, UHPoint tau);

/// The same series without the identity coset (P minus the seed).
cplx eval_poincare_nonidentity(const PoincareSpec &spec, UHPoint tau);

/// sum_{n in Z} e^{2 pi i n^2 tau}; weight-1/2 oracle for the multiplier.
cplx jacobi_theta(UHPoint tau);

} // namespace locmaass
