#pragma once

// Hecke operators: the pointwise integral-weight T_p and the three-term
// action on discriminant-indexed families f_{k,s,D} and F_{1-k,s,D}.

#include <vector>

#include "locmaass/diffops.hpp"

namespace locmaass {

/// p^{kappa-1} F(p tau) + p^{-1} sum_{r mod p} F((tau + r)/p).
cplx hecke_tp(const PointFunction &F, int kappa, long p, UHPoint tau);

struct DFamilyTerm {
  long discriminant = 0;
  cplx coefficient;
};

bool is_prime(long n);

/// F_{1-k,s,D} | T_p as a combination of F_{1-k,s,D'}:
///   p^{-k-1/2} F_{Dp^2} + p^{-k} (D|p) F_D + p^{3/2-k} F_{D/p^2}.
/// The last term is present only when p^2 | D and D/p^2 is a discriminant.
std::vector<DFamilyTerm> hecke_family_F(long D, long p, int k);

/// f_{k,s,D} | T_p as a combination of f_{k,s,D'}:
///   p^{k-3/2} f_{Dp^2} + p^{k-1} (D|p) f_D + p^{k+1/2} f_{D/p^2}.
std::vector<DFamilyTerm> hecke_family_f(long D, long p, int k);

/// The same relations for the rescaled families D^{-k/2-1/4} F_{1-k,s,D} and
/// D^{k/2-3/4} f_{k,s,D}:
///   F: 1, p^{-k}(D|p), p^{1-2k};  f: 1, p^{k-1}(D|p), p^{2k-1}.
std::vector<DFamilyTerm> hecke_family_F_rescaled(long D, long p, int k);
std::vector<DFamilyTerm> hecke_family_f_rescaled(long D, long p, int k);

/// Rescaling factors D^{-k/2-1/4} (F-side) and D^{k/2-3/4} (f-side).
double family_rescale_F(long D, int k);
double family_rescale_f(long D, int k);

} // namespace locmaass
