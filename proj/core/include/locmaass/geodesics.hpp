#pragma once

// The exceptional set E_D: geodesics attached to forms of positive
// discriminant, the finite set of forms vanishing at a point, and the
// closed-form jump of F_{1-k,s,D} across E_D.

#include <vector>

#include "locmaass/qforms.hpp"
#include "locmaass/specfun.hpp"

namespace locmaass {

struct GeodesicArc {
  enum class Kind { semicircle, vertical };

  QForm source;
  Kind kind = Kind::semicircle;
  double center = 0.0; // semicircle
  double radius = 0.0; // semicircle
  double x0 = 0.0;     // vertical
};

/// Locus a|z|^2 + bx + c = 0 in the upper half-plane. DomainError if D <= 0.
GeodesicArc geodesic_of_form(const QForm &q);

/// A point on the arc: angle theta in (0, pi) for semicircles, height t > 0
/// for vertical lines.
UHPoint point_on_geodesic(const GeodesicArc &arc, double param);

struct VanishingSet {
  UHPoint z;
  std::vector<QForm> forms;
};

inline constexpr double kVanishingTol = 1e-9;

/// Forms of discriminant D with |Q_z| <= tol.
VanishingSet vanishing_forms(UHPoint z, long D, double tol = kVanishingTol);

/// lim_{r -> 0+} F_{1-k,s,D}(z + ir) - F_{1-k,s,D}(z - ir) for z on E_D:
/// 2 * sum over the vanishing set of sgn(a) Q(z,1)^{k-1} phi*_s(w).
/// DomainError if z is not on E_D or a vanishing form has a = 0.
cplx predicted_jump(UHPoint z, const KernelParams &p, double tol = kVanishingTol);

/// One arc per pair {Q, -Q} of discriminant D with 1 <= |a| <= a_max (and the
/// vertical lines with a = 0 when D is a square) that meets the strip
/// |x| <= half_width. Sorted by (a, b, c) of the representative with a > 0
/// (or a = 0, b > 0).
std::vector<GeodesicArc> geodesics_in_strip(long D, long a_max, double half_width = 1.5);

} // namespace locmaass
