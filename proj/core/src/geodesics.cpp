#include "locmaass/geodesics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "locmaass/error.hpp"

namespace locmaass {

GeodesicArc geodesic_of_form(const QForm &q) {
  const long D = q.disc();
  if (D <= 0)
    throw DomainError("geodesic_of_form: discriminant must be positive (got " + std::to_string(D) +
                      ")");
  GeodesicArc arc;
  arc.source = q;
  if (q.a != 0) {
    arc.kind = GeodesicArc::Kind::semicircle;
    arc.center = -static_cast<double>(q.b) / (2.0 * static_cast<double>(q.a));
    arc.radius = std::sqrt(static_cast<double>(D)) / (2.0 * std::abs(static_cast<double>(q.a)));
  } else {
    arc.kind = GeodesicArc::Kind::vertical;
    arc.x0 = -static_cast<double>(q.c) / static_cast<double>(q.b);
  }
  return arc;
}

UHPoint point_on_geodesic(const GeodesicArc &arc, double param) {
  if (arc.kind == GeodesicArc::Kind::vertical)
    return {arc.x0, param};
  return {arc.center + arc.radius * std::cos(param), arc.radius * std::sin(param)};
}

VanishingSet vanishing_forms(UHPoint z, long D, double tol) {
  if (!(tol >= 0.0))
    throw DomainError("vanishing_forms: tol must be non-negative");
  return {z, enumerate_disc_forms(z, D, tol * tol)};
}

cplx predicted_jump(UHPoint z, const KernelParams &p, double tol) {
  p.validate();
  const VanishingSet set = vanishing_forms(z, p.D, tol);
  if (set.forms.empty())
    throw DomainError("predicted_jump: z is not on the exceptional set E_D");
  const PhiStarKernel phi(p);
  const double D = static_cast<double>(p.D);
  CompensatedComplexSum sum;
  for (const QForm &q : set.forms) {
    if (q.a == 0)
      throw DomainError("predicted_jump: vertical geodesic through z; vertical approach does not "
                        "cross it");
    const FormValues fv = form_values(q, z);
    const double w = D / (fv.qz * fv.qz + D);
    sum += (q.a > 0 ? 2.0 : -2.0) * ipow(fv.qpoly, p.k - 1) * phi(w);
  }
  return sum.value();
}

std::vector<GeodesicArc> geodesics_in_strip(long D, long a_max, double half_width) {
  if (D <= 0 || !is_discriminant(D))
    throw DomainError("geodesics_in_strip: D must be a positive discriminant");
  if (a_max < 0)
    throw DomainError("geodesics_in_strip: a_max must be non-negative");
  std::vector<GeodesicArc> arcs;
  const double sqrtD = std::sqrt(static_cast<double>(D));
  for (long a = 1; a <= a_max; ++a) {
    // |center| <= half_width + radius with center = -b/(2a).
    const double radius = sqrtD / (2.0 * static_cast<double>(a));
    const long b_max = static_cast<long>(std::floor(2.0 * a * (half_width + radius)));
    for (long b = -b_max; b <= b_max; ++b) {
      const long num = b * b - D;
      if (num % (4 * a) != 0)
        continue;
      arcs.push_back(geodesic_of_form({a, b, num / (4 * a)}));
    }
  }
  long r = static_cast<long>(std::llround(sqrtD));
  if (r > 0 && r * r == D) {
    // a = 0, b = r > 0: vertical line x = -c/r.
    const long c_max = static_cast<long>(std::floor(half_width * static_cast<double>(r)));
    for (long c = -c_max; c <= c_max; ++c)
      arcs.push_back(geodesic_of_form({0, r, c}));
  }
  std::sort(arcs.begin(), arcs.end(),
            [](const GeodesicArc &l, const GeodesicArc &r) { return l.source < r.source; });
  return arcs;
}

} // namespace locmaass
