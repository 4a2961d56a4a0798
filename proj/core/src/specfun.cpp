#include "locmaass/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "locmaass/error.hpp"
#include "locmaass/quadrature.hpp"

namespace locmaass {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

bool is_nonpositive_integer(cplx z) {
  if (std::abs(z.imag()) > 1e-13)
    return false;
  const double r = std::round(z.real());
  return r <= 0.0 && std::abs(z.real() - r) < 1e-13;
}

bool is_integer(cplx z) {
  return std::abs(z.imag()) < 1e-13 && std::abs(z.real() - std::round(z.real())) < 1e-13;
}

// Lanczos approximation, g = 7, n = 9.
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

cplx lanczos_gamma(cplx z) {
  z -= 1.0;
  cplx x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i)
    x += kLanczos[i] / (z + static_cast<double>(i));
  const cplx t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

// Power series of 2F1; requires |w| < 1.
cplx f21_series(cplx a, cplx b, cplx c, double w) {
  CompensatedComplexSum sum;
  sum += 1.0;
  cplx term = 1.0;
  int small = 0;
  constexpr int kMaxTerms = 400000;
  for (int n = 0; n < kMaxTerms; ++n) {
    const double dn = n;
    term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * w;
    if (term == 0.0)
      return sum.value();
    sum += term;
    if (std::abs(term) <= 0.25 * kEps * std::abs(sum.value())) {
      if (++small >= 2)
        return sum.value();
    } else {
      small = 0;
    }
  }
  throw ConvergenceError("hyp2f1: power series did not converge");
}

} // namespace

cplx KernelParams::lambda() const {
  const double h = k / 2.0 + 0.25;
  return (s - h) * (1.0 - s - h);
}

bool is_discriminant(long D) {
  const long r = ((D % 4) + 4) % 4;
  return r == 0 || r == 1;
}

void KernelParams::validate() const {
  if (k < 2 || k % 2 != 0)
    throw DomainError("k must be an even integer >= 2 (got " + std::to_string(k) + ")");
  if (D <= 0 || !is_discriminant(D))
    throw DomainError("D must be a positive discriminant, D = 0,1 mod 4 (got " +
                      std::to_string(D) + ")");
}

cplx cgamma(cplx s) {
  if (is_nonpositive_integer(s))
    throw PoleError("cgamma: pole at non-positive integer");
  if (s.real() < 0.5)
    return kPi / (std::sin(kPi * s) * lanczos_gamma(1.0 - s));
  return lanczos_gamma(s);
}

cplx rgamma(cplx s) {
  if (is_nonpositive_integer(s))
    return 0.0;
  return 1.0 / cgamma(s);
}

int kronecker(long D, long n) {
  if (n < 1)
    throw DomainError("kronecker: n must be >= 1");
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    const long r = ((D % 8) + 8) % 8;
    if (r % 2 == 0)
      return 0;
    if (r == 3 || r == 5)
      result = -result;
  }
  if (n == 1)
    return result;
  // Jacobi symbol (a|n) for odd n > 1.
  long a = ((D % n) + n) % n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const long r = n % 8;
      if (r == 3 || r == 5)
        result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3)
      result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

Hypergeometric2F1::Hypergeometric2F1(cplx a, cplx b, cplx c) : a_(a), b_(b), c_(c) {
  if (is_nonpositive_integer(c))
    throw PoleError("hyp2f1: c is a non-positive integer");
  const cplx e = c - a - b;
  degenerate_ = is_integer(e);
  if (e.real() > 0)
    gauss_ = cgamma(c) * cgamma(e) * rgamma(c - a) * rgamma(c - b);
  if (!degenerate_) {
    conn1_ = cgamma(c) * cgamma(e) * rgamma(c - a) * rgamma(c - b);
    conn2_ = cgamma(c) * cgamma(-e) * rgamma(a) * rgamma(b);
  }
}

cplx Hypergeometric2F1::operator()(double w) const {
  if (!(w >= 0.0 && w <= 1.0))
    throw DomainError("hyp2f1: argument outside [0, 1]");
  if (w == 0.0)
    return 1.0;
  const cplx e = c_ - a_ - b_;
  if (w == 1.0) {
    if (e.real() <= 0)
      throw DomainError("hyp2f1: series diverges at w = 1 unless Re(c - a - b) > 0");
    return gauss_;
  }
  if (w <= kSeriesCutoff || degenerate_)
    return f21_series(a_, b_, c_, w);
  // Connection formula around w = 1.
  const double u = 1.0 - w;
  const cplx first = conn1_ * f21_series(a_, b_, 1.0 - e, u);
  const cplx second = conn2_ * std::exp(e * std::log(u)) * f21_series(c_ - a_, c_ - b_, 1.0 + e, u);
  return first + second;
}

cplx hyp2f1(cplx a, cplx b, cplx c, double w) { return Hypergeometric2F1(a, b, c)(w); }

cplx hyp2f1_euler_oracle(cplx a, cplx b, cplx c, double w) {
  if (!(c.real() > b.real() && b.real() > 0.0))
    throw DomainError("hyp2f1_euler_oracle: requires Re(c) > Re(b) > 0");
  if (!(w >= 0.0 && w < 1.0))
    throw DomainError("hyp2f1_euler_oracle: requires 0 <= w < 1");
  const cplx norm = cgamma(c) / (cgamma(b) * cgamma(c - b));
  const cplx integral = integrate_unit([&](double t, double one_minus_t) -> cplx {
    if (t <= 0.0 || one_minus_t <= 0.0)
      return 0.0;
    const double base = one_minus_t + (1.0 - w) * t; // 1 - w t
    return std::exp((b - 1.0) * std::log(t) + (c - b - 1.0) * std::log(one_minus_t) -
                    a * std::log(base));
  });
  return norm * integral;
}

cplx hyp1f1(cplx a, cplx b, double x) {
  if (is_nonpositive_integer(b))
    throw PoleError("hyp1f1: b is a non-positive integer");
  CompensatedComplexSum sum;
  sum += 1.0;
  cplx term = 1.0;
  int small = 0;
  constexpr int kMaxTerms = 100000;
  for (int n = 0; n < kMaxTerms; ++n) {
    const double dn = n;
    term *= (a + dn) / ((b + dn) * (dn + 1.0)) * x;
    if (term == 0.0)
      return sum.value();
    sum += term;
    if (std::abs(term) <= 0.25 * kEps * std::abs(sum.value())) {
      if (++small >= 2)
        return sum.value();
    } else {
      small = 0;
    }
  }
  throw ConvergenceError("hyp1f1: power series did not converge");
}

namespace {

constexpr double kWhittakerMax = 700.0;

// e^{-x/2} x^{power} 1F1(nu - mu + 1/2; 1 + 2 nu; x)
cplx whittaker_scaled(cplx mu, cplx nu, double x, cplx power) {
  if (!(x > 0.0))
    throw DomainError("whittaker_m: argument must be positive");
  if (x > kWhittakerMax)
    throw OverflowError("whittaker_m: argument " + std::to_string(x) + " exceeds 700");
  return std::exp(-0.5 * x + power * std::log(x)) * hyp1f1(nu - mu + 0.5, 1.0 + 2.0 * nu, x);
}

} // namespace

cplx whittaker_m(cplx mu, cplx nu, double x) { return whittaker_scaled(mu, nu, x, nu + 0.5); }

cplx mathcal_m(double kappa, cplx s, double t) {
  if (t == 0.0)
    throw DomainError("mathcal_m: t must be nonzero");
  const double x = std::abs(t);
  const double mu = 0.5 * kappa * (t > 0 ? 1.0 : -1.0);
  return whittaker_scaled(mu, s - 0.5, x, s - 0.5 * kappa);
}

cplx mathcal_m_integral_oracle(double kappa, cplx s, double t) {
  if (t == 0.0)
    throw DomainError("mathcal_m_integral_oracle: t must be nonzero");
  const double v = std::abs(t);
  const double mu = 0.5 * kappa * (t > 0 ? 1.0 : -1.0);
  if (!((s + mu).real() > 0 && (s - mu).real() > 0))
    throw DomainError("mathcal_m_integral_oracle: requires Re(s +- kappa/2) > 0");
  const cplx integral = integrate_unit([&](double u, double one_minus_u) -> cplx {
    if (u <= 0.0 || one_minus_u <= 0.0)
      return 0.0;
    return std::exp((s + mu - 1.0) * std::log(u) + (s - mu - 1.0) * std::log(one_minus_u) -
                    v * u);
  });
  const cplx m = std::exp(s * std::log(v) + 0.5 * v) * cgamma(2.0 * s) /
                 (cgamma(s + mu) * cgamma(s - mu)) * integral;
  return std::pow(v, -0.5 * kappa) * m;
}

namespace {

// v^a sum_n (1-b)_n/n! v^n/(a+n); used for v <= 1/2.
cplx incomplete_beta_series(double v, cplx a, cplx b) {
  CompensatedComplexSum sum;
  cplx coeff = 1.0; // (1-b)_n / n! * v^n
  int small = 0;
  for (int n = 0; n < 10000; ++n) {
    const cplx term = coeff / (a + static_cast<double>(n));
    sum += term;
    if (std::abs(term) <= 0.25 * kEps * std::abs(sum.value())) {
      if (++small >= 2)
        break;
    } else {
      small = 0;
    }
    coeff *= (static_cast<double>(n) + 1.0 - b) / (static_cast<double>(n) + 1.0) * v;
    if (coeff == 0.0)
      break;
  }
  return std::exp(a * std::log(v)) * sum.value();
}

} // namespace

cplx incomplete_beta(double v, cplx a, cplx b) {
  if (!(v > 0.0 && v <= 1.0))
    throw DomainError("incomplete_beta: v must lie in (0, 1]");
  if (!(a.real() > 0 && b.real() > 0))
    throw DomainError("incomplete_beta: requires Re(a) > 0 and Re(b) > 0");
  if (v <= 0.5)
    return incomplete_beta_series(v, a, b);
  const cplx complete = cgamma(a) * cgamma(b) / cgamma(a + b);
  if (v == 1.0)
    return complete;
  return complete - incomplete_beta_series(1.0 - v, b, a);
}

namespace {

void check_unit_argument(double w, const char *who) {
  if (!(w > 0.0 && w <= 1.0))
    throw DomainError(std::string(who) + ": argument must lie in (0, 1]");
}

} // namespace

PhiKernel::PhiKernel(const KernelParams &p)
    : p_(p), f21_(p.s + p.k / 2.0 - 0.25, p.s - p.k / 2.0 - 0.25, 2.0 * p.s) {
  p.validate();
  if (p.s.real() < p.k / 2.0 + 0.25 - 1e-12)
    throw DomainError("phi_kernel: requires Re(s) >= k/2 + 1/4");
  const double k = p.k;
  const double D = static_cast<double>(p.D);
  prefactor_ = cgamma(p.s + k / 2.0 - 0.25) * std::pow(D, k / 2.0 + 0.25) /
               (6.0 * cgamma(2.0 * p.s) * std::pow(4.0 * kPi, k / 2.0 - 0.25));
  exponent_ = p.s - k / 2.0 - 0.25;
}

cplx PhiKernel::operator()(double w) const {
  check_unit_argument(w, "phi_kernel");
  return prefactor_ * std::exp(exponent_ * std::log(w)) * f21_(w);
}

cplx PhiKernel::at_one() const {
  const double k = p_.k;
  return prefactor_ * cgamma(2.0 * p_.s) * std::sqrt(kPi) *
         rgamma(p_.s - k / 2.0 + 0.25) * rgamma(p_.s + k / 2.0 + 0.25);
}

PhiStarKernel::PhiStarKernel(const KernelParams &p)
    : p_(p), f21_(p.s - p.k / 2.0 + 0.25, p.s + p.k / 2.0 - 0.75, 2.0 * p.s) {
  p.validate();
  if (p.s.real() <= 0.75)
    throw DomainError("phi_star_kernel: requires Re(s) > 3/4");
  const double k = p.k;
  const double D = static_cast<double>(p.D);
  prefactor_ = cgamma(p.s + k / 2.0 - 0.25) * std::pow(4.0 * kPi * D, 0.75 - k / 2.0) /
               (12.0 * std::sqrt(kPi) * cgamma(2.0 * p.s));
  exponent_ = k / 2.0 - 0.75 + p.s;
}

cplx PhiStarKernel::operator()(double w) const {
  check_unit_argument(w, "phi_star_kernel");
  return prefactor_ * std::exp(exponent_ * std::log(w)) * f21_(w);
}

cplx PhiStarKernel::at_one() const {
  const double k = p_.k;
  return std::pow(4.0 * kPi * static_cast<double>(p_.D), 0.75 - k / 2.0) *
         rgamma(p_.s - k / 2.0 + 0.75) / 12.0;
}

PsiKernel::PsiKernel(int k) : k_(k) {
  if (k < 2 || k % 2 != 0)
    throw DomainError("psi_kernel: k must be an even integer >= 2");
  at_one_ = 0.5 * incomplete_beta(1.0, k - 0.5, 0.5).real();
}

double PsiKernel::operator()(double v) const {
  check_unit_argument(v, "psi_kernel");
  return 0.5 * incomplete_beta(v, k_ - 0.5, 0.5).real();
}

cplx phi_kernel(const KernelParams &p, double w) { return PhiKernel(p)(w); }

cplx phi_star_kernel(const KernelParams &p, double w) { return PhiStarKernel(p)(w); }

double psi_kernel(int k, double v) { return PsiKernel(k)(v); }

} // namespace locmaass
