#include "locmaass/qforms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>

#include "locmaass/error.hpp"
#include "locmaass/specfun.hpp"

namespace locmaass {

namespace {

constexpr double kSlack = 1e-9;

void check_point(UHPoint z) {
  if (!(z.y > 0.0) || !std::isfinite(z.x) || !std::isfinite(z.y))
    throw DomainError("point must lie in the upper half-plane (y > 0)");
}

long floor_l(double v) { return static_cast<long>(std::floor(v)); }
long ceil_l(double v) { return static_cast<long>(std::ceil(v)); }

void check_capacity(double cells, const EnumLimits &limits, const char *what) {
  if (cells > static_cast<double>(limits.max_cells))
    throw CapacityError(std::string(what) + ": about " + std::to_string(static_cast<long long>(cells)) +
                        " candidate cells exceed the limit of " + std::to_string(limits.max_cells));
}

// Floor of a non-negative integer square root.
long isqrt(long n) {
  long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n)
    --r;
  while ((r + 1) * (r + 1) <= n)
    ++r;
  return r;
}

} // namespace

UHPoint UHPoint::from(cplx z) { return {z.real(), z.imag()}; }

GL2Int GL2Int::operator*(const GL2Int &o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

GL2Int GL2Int::inverse() const {
  const long dt = det();
  if (dt != 1 && dt != -1)
    throw DomainError("matrix is not invertible over the integers");
  return {d * dt, -b * dt, -c * dt, a * dt};
}

UHPoint GL2Int::act(UHPoint z) const {
  if (det() != 1)
    throw DomainError("Moebius action requires determinant 1");
  const cplx w = (static_cast<double>(a) * z.z() + static_cast<double>(b)) /
                 (static_cast<double>(c) * z.z() + static_cast<double>(d));
  return UHPoint::from(w);
}

FormValues form_values(const QForm &q, UHPoint z) {
  const cplx zz = z.z();
  const double a = q.a, b = q.b, c = q.c;
  return {a * zz * zz + b * zz + c, form_qz(q, z)};
}

double form_qz(const QForm &q, UHPoint z) {
  const double a = q.a, b = q.b, c = q.c;
  return (a * (z.x * z.x + z.y * z.y) + b * z.x + c) / z.y;
}

int form_sign(const QForm &q, UHPoint z) {
  const double a = q.a, b = q.b, c = q.c;
  const double num = a * (z.x * z.x + z.y * z.y) + b * z.x + c;
  const double scale =
      std::abs(a) * (z.x * z.x + z.y * z.y) + std::abs(b) * std::abs(z.x) + std::abs(c);
  if (std::abs(num) <= 64.0 * std::numeric_limits<double>::epsilon() * scale)
    return 0;
  return num > 0 ? 1 : -1;
}

QForm form_transform(const QForm &q, const GL2Int &g) {
  auto value = [&](long X, long Y) { return q.a * X * X + q.b * X * Y + q.c * Y * Y; };
  return {value(g.a, g.c), 2 * q.a * g.a * g.b + q.b * (g.a * g.d + g.b * g.c) + 2 * q.c * g.c * g.d,
          value(g.b, g.d)};
}

std::array<std::array<double, 3>, 3> gram_majorant(UHPoint z) {
  check_point(z);
  const std::array<double, 3> v = {z.x * z.x + z.y * z.y, z.x, 1.0};
  const double f = 2.0 / (z.y * z.y);
  std::array<std::array<double, 3>, 3> m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m[i][j] = f * v[i] * v[j];
  m[0][2] -= 2.0;
  m[2][0] -= 2.0;
  m[1][1] += 1.0;
  return m;
}

double majorant_value(const QForm &q, UHPoint z) {
  const double qz = form_qz(q, z);
  return 2.0 * qz * qz + static_cast<double>(q.disc());
}

// At z = x + iy the majorant equals 2A^2 + B^2 + 2C^2 with A = a y,
// B = 2ax + b, C = (a x^2 + b x + c)/y; the loops below walk a, then b, then c.

std::vector<QForm> enumerate_disc_forms(UHPoint z, long D, double qz2_max, EnumLimits limits) {
  check_point(z);
  if (D <= 0 || !is_discriminant(D))
    throw DomainError("enumerate_disc_forms: D must be a positive discriminant");
  if (std::isnan(qz2_max) || std::isinf(qz2_max))
    throw DomainError("enumerate_disc_forms: qz2_max must be finite");
  if (qz2_max < 0.0)
    return {};

  const double T = (2.0 * qz2_max + static_cast<double>(D)) * (1.0 + kSlack) + kSlack;
  const long a_max = floor_l(std::sqrt(T / 2.0) / z.y);
  const long sq = isqrt(D);
  const bool square = sq * sq == D;

  double cells = 0.0;
  for (long a = -a_max; a <= a_max; ++a) {
    const double ay = static_cast<double>(a) * z.y;
    const double rem = T - 2.0 * ay * ay;
    if (rem < 0)
      continue;
    cells += 2.0 * std::sqrt(rem) + 1.0;
    if (a == 0 && square)
      cells += 2.0 * z.y * std::sqrt(qz2_max) + 2.0;
  }
  check_capacity(cells, limits, "enumerate_disc_forms");

  std::vector<std::pair<double, QForm>> found;
  const long parity = D & 1;
  for (long a = -a_max; a <= a_max; ++a) {
    const double ay = static_cast<double>(a) * z.y;
    const double rem = T - 2.0 * ay * ay;
    if (rem < 0)
      continue;
    const double r = std::sqrt(rem);
    const double center = -2.0 * static_cast<double>(a) * z.x;
    long b_lo = ceil_l(center - r), b_hi = floor_l(center + r);
    if (((b_lo % 2) + 2) % 2 != parity)
      ++b_lo;
    for (long b = b_lo; b <= b_hi; b += 2) {
      if (a == 0) {
        if (b * b != D)
          continue;
        const double half_width = z.y * std::sqrt(qz2_max) * (1.0 + kSlack) + kSlack;
        const double mid = -static_cast<double>(b) * z.x;
        for (long c = ceil_l(mid - half_width); c <= floor_l(mid + half_width); ++c) {
          const QForm q{0, b, c};
          const double qz = form_qz(q, z);
          if (qz * qz <= qz2_max)
            found.emplace_back(qz * qz, q);
        }
        continue;
      }
      const long num = b * b - D;
      if (num % (4 * a) != 0)
        continue;
      const QForm q{a, b, num / (4 * a)};
      const double qz = form_qz(q, z);
      if (qz * qz <= qz2_max)
        found.emplace_back(qz * qz, q);
    }
  }
  std::sort(found.begin(), found.end(), [](const auto &l, const auto &r) {
    return std::tie(l.first, l.second) < std::tie(r.first, r.second);
  });
  std::vector<QForm> out;
  out.reserve(found.size());
  for (const auto &e : found)
    out.push_back(e.second);
  return out;
}

double min_abs_qz(UHPoint z, long D, EnumLimits limits) {
  for (double t = 1.0;; t *= 4.0) {
    const auto forms = enumerate_disc_forms(z, D, t, limits);
    if (!forms.empty())
      return std::abs(form_qz(forms.front(), z));
  }
}

std::vector<QForm> enumerate_majorant(UHPoint z, double t_max, EnumLimits limits) {
  check_point(z);
  if (std::isnan(t_max) || std::isinf(t_max))
    throw DomainError("enumerate_majorant: t_max must be finite");
  if (t_max < 0.0)
    return {};
  const double T = t_max * (1.0 + kSlack) + kSlack;
  const long a_max = floor_l(std::sqrt(T / 2.0) / z.y);

  double cells = 0.0;
  for (long a = -a_max; a <= a_max; ++a) {
    const double ay = static_cast<double>(a) * z.y;
    const double rem = T - 2.0 * ay * ay;
    if (rem < 0)
      continue;
    const double r = std::sqrt(rem);
    // Volume of the (b, c) ellipse slice plus its boundary.
    cells += 3.14159 * rem * z.y / std::sqrt(2.0) + 2.0 * r + 2.0 * z.y * r + 1.0;
  }
  check_capacity(cells, limits, "enumerate_majorant");

  std::vector<std::pair<double, QForm>> found;
  for (long a = -a_max; a <= a_max; ++a) {
    const double ay = static_cast<double>(a) * z.y;
    const double rem = T - 2.0 * ay * ay;
    if (rem < 0)
      continue;
    const double r = std::sqrt(rem);
    const double center = -2.0 * static_cast<double>(a) * z.x;
    for (long b = ceil_l(center - r); b <= floor_l(center + r); ++b) {
      const double B = 2.0 * static_cast<double>(a) * z.x + static_cast<double>(b);
      const double rem2 = rem - B * B;
      if (rem2 < 0)
        continue;
      const double cr = z.y * std::sqrt(rem2 / 2.0);
      const double mid = -(static_cast<double>(a) * z.x * z.x + static_cast<double>(b) * z.x);
      for (long c = ceil_l(mid - cr); c <= floor_l(mid + cr); ++c) {
        if (a == 0 && b == 0 && c == 0)
          continue;
        const QForm q{a, b, c};
        const double m = majorant_value(q, z);
        if (m <= t_max)
          found.emplace_back(m, q);
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const auto &l, const auto &r) {
    return std::tie(l.first, l.second) < std::tie(r.first, r.second);
  });
  std::vector<QForm> out;
  out.reserve(found.size());
  for (const auto &e : found)
    out.push_back(e.second);
  return out;
}

} // namespace locmaass
