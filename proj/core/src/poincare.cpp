#include "locmaass/poincare.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "locmaass/error.hpp"
#include "locmaass/parallel.hpp"
#include "locmaass/specfun.hpp"

namespace locmaass {

namespace {

constexpr double kPi = std::numbers::pi;

int two_kappa(double kappa) {
  const double t = 2.0 * kappa;
  const long r = std::lround(t);
  if (std::abs(t - static_cast<double>(r)) > 1e-12 || r % 2 == 0)
    throw DomainError("weight must be half-integral (2 kappa odd)");
  return static_cast<int>(r);
}

long mod_inverse(long a, long n) {
  long t = 0, new_t = 1, r = n, new_r = ((a % n) + n) % n;
  while (new_r != 0) {
    const long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1)
    throw DomainError("mod_inverse: not invertible");
  return ((t % n) + n) % n;
}

} // namespace

void PoincareSpec::validate() const {
  two_kappa(kappa);
  if (!(s.real() > 1.0))
    throw DomainError("Poincare series: requires Re(s) > 1");
  if (m == 0)
    throw DomainError("Poincare series: m must be nonzero");
  if (c_max < 0)
    throw DomainError("Poincare series: c_max must be non-negative");
  if (!(translate_tol > 0.0 && translate_tol < 1.0))
    throw DomainError("Poincare series: translate_tol must lie in (0, 1)");
}

long PoincareSpec::translates() const {
  return static_cast<long>(std::ceil(std::pow(translate_tol, -1.0 / (2.0 * s.real() - 1.0))));
}

cplx seed_psi(long m, double kappa, cplx s, UHPoint tau) {
  if (m == 0)
    throw DomainError("seed_psi: m must be nonzero");
  const double am = std::abs(static_cast<double>(m));
  const double t = 4.0 * kPi * static_cast<double>(m) * tau.y;
  return std::pow(4.0 * kPi * am, kappa / 2.0) * rgamma(2.0 * s) * mathcal_m(kappa, s, t) *
         std::polar(1.0, 2.0 * kPi * std::fmod(static_cast<double>(m) * tau.x, 1.0));
}

std::vector<GL2Int> coset_reps(long c_max) {
  if (c_max < 0)
    throw DomainError("coset_reps: c_max must be non-negative");
  std::vector<GL2Int> reps{GL2Int{}};
  for (long c = 4; c <= c_max; c += 4) {
    for (long d = 1; d < c; ++d) {
      if (std::gcd(c, d) != 1)
        continue;
      const long a = mod_inverse(d, c);
      reps.push_back({a, (a * d - 1) / c, c, d});
    }
  }
  return reps;
}

int shimura_symbol(long c, long d) {
  if (d % 2 == 0)
    throw DomainError("shimura_symbol: d must be odd");
  if (c == 0)
    return (d == 1 || d == -1) ? 1 : 0;
  int sym = kronecker(c, std::abs(d));
  if (c < 0 && d < 0)
    sym = -sym;
  return sym;
}

cplx theta_multiplier(const GL2Int &g, UHPoint tau) {
  if (g.det() != 1)
    throw DomainError("theta_multiplier: determinant must be 1");
  if (g.c % 4 != 0)
    throw DomainError("theta_multiplier: matrix is not in Gamma_0(4)");
  const long dm4 = ((g.d % 4) + 4) % 4;
  const cplx eps_inv = dm4 == 1 ? cplx{1.0, 0.0} : cplx{0.0, -1.0};
  const cplx ctd = static_cast<double>(g.c) * tau.z() + static_cast<double>(g.d);
  return static_cast<double>(shimura_symbol(g.c, g.d)) * eps_inv * std::sqrt(ctd);
}

cplx automorphy_factor(const GL2Int &g, UHPoint tau, double kappa) {
  return ipow(theta_multiplier(g, tau), two_kappa(kappa));
}

cplx eval_poincare_nonidentity(const PoincareSpec &spec, UHPoint tau) {
  spec.validate();
  if (!(tau.y > 0.0))
    throw DomainError("eval_poincare: tau must lie in the upper half-plane");
  const int tk = two_kappa(spec.kappa);
  const auto reps = coset_reps(spec.c_max);
  const long N = spec.translates();
  const std::size_t per_rep = static_cast<std::size_t>(2 * N + 1);
  const std::size_t total = (reps.size() - 1) * per_rep;
  return deterministic_sum(total, [&](std::size_t idx) -> cplx {
    const GL2Int &g = reps[1 + idx / per_rep];
    const long n = static_cast<long>(idx % per_rep) - N;
    const UHPoint t{tau.x + static_cast<double>(n), tau.y};
    const UHPoint gt = g.act(t);
    return seed_psi(spec.m, spec.kappa, spec.s, gt) / ipow(theta_multiplier(g, t), tk);
  });
}

cplx eval_poincare(const PoincareSpec &spec, UHPoint tau) {
  return seed_psi(spec.m, spec.kappa, spec.s, tau) + eval_poincare_nonidentity(spec, tau);
}

cplx jacobi_theta(UHPoint tau) {
  if (!(tau.y > 0.0))
    throw DomainError("jacobi_theta: tau must lie in the upper half-plane");
  CompensatedComplexSum sum;
  sum += 1.0;
  for (long n = 1;; ++n) {
    const double n2 = static_cast<double>(n * n);
    const double mag = std::exp(-2.0 * kPi * n2 * tau.y);
    if (mag < 1e-18)
      break;
    sum += 2.0 * mag * std::polar(1.0, 2.0 * kPi * std::fmod(n2 * tau.x, 1.0));
  }
  return sum.value();
}

} // namespace locmaass
