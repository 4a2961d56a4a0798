#pragma once

// Integral binary quadratic forms [a, b, c] = aX^2 + bXY + cY^2, points of the
// upper half-plane, the action of SL2(Z), and enumeration of forms of fixed
// discriminant near a point.

#include <array>
#include <compare>
#include <cstddef>
#include <vector>

#include "locmaass/summation.hpp"

namespace locmaass {

struct QForm {
  long a = 0;
  long b = 0;
  long c = 0;

  long disc() const { return b * b - 4 * a * c; }
  friend auto operator<=>(const QForm &, const QForm &) = default;
};

struct UHPoint {
  double x = 0.0;
  double y = 1.0;

  cplx z() const { return {x, y}; }
  static UHPoint from(cplx z);
  friend bool operator==(const UHPoint &, const UHPoint &) = default;
};

/// Integer 2x2 matrix [[a, b], [c, d]].
struct GL2Int {
  long a = 1;
  long b = 0;
  long c = 0;
  long d = 1;

  long det() const { return a * d - b * c; }
  GL2Int operator*(const GL2Int &o) const;
  /// Inverse of a matrix of determinant +-1.
  GL2Int inverse() const;
  /// Moebius action (az + b)/(cz + d); requires det = 1.
  UHPoint act(UHPoint z) const;
  friend bool operator==(const GL2Int &, const GL2Int &) = default;

  static GL2Int S() { return {0, -1, 1, 0}; }
  static GL2Int T() { return {1, 1, 0, 1}; }
};

/// Q(z, 1) and Q_z = (a|z|^2 + b x + c)/y at a point.
struct FormValues {
  cplx qpoly;
  double qz = 0.0;
};

inline long form_disc(const QForm &q) { return q.disc(); }

FormValues form_values(const QForm &q, UHPoint z);
double form_qz(const QForm &q, UHPoint z);

/// Sign of Q_z with sgn(0) = 0; values within a few ulps of zero count as 0.
int form_sign(const QForm &q, UHPoint z);

/// (Q o g)(X, Y) = Q(aX + bY, cX + dY). For det g = 1, (Q o g)_z = Q_{gz}.
QForm form_transform(const QForm &q, const GL2Int &g);

/// Gram matrix of the positive majorant at z: for v = (a, b, c),
/// v^T M v = 2 Q_z^2 + disc(Q).
std::array<std::array<double, 3>, 3> gram_majorant(UHPoint z);

/// 2 Q_z^2 + disc(Q).
double majorant_value(const QForm &q, UHPoint z);

struct EnumLimits {
  /// Upper bound on candidate cells scanned before CapacityError is thrown.
  std::size_t max_cells = 100'000'000;
};

/// All forms of discriminant D (D > 0, D = 0,1 mod 4) with Q_z^2 <= qz2_max,
/// sorted by (Q_z^2, a, b, c).
std::vector<QForm> enumerate_disc_forms(UHPoint z, long D, double qz2_max, EnumLimits limits = {});

/// Minimum of |Q_z| over all forms of discriminant D (proximity of z to E_D).
double min_abs_qz(UHPoint z, long D, EnumLimits limits = {});

/// All nonzero integer triples with 2 Q_z^2 + disc(Q) <= t_max, sorted by
/// (majorant value, a, b, c).
std::vector<QForm> enumerate_majorant(UHPoint z, double t_max, EnumLimits limits = {});

} // namespace locmaass
