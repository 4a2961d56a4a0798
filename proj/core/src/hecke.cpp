#include "locmaass/hecke.hpp"

#include <cmath>
#include <string>

#include "locmaass/error.hpp"
#include "locmaass/specfun.hpp"

namespace locmaass {

namespace {

void check_family_args(long D, long p, int k) {
  if (D <= 0 || !is_discriminant(D))
    throw DomainError("Hecke family: D must be a positive discriminant");
  if (p == 2 || !is_prime(p))
    throw DomainError("Hecke family: p must be an odd prime (got " + std::to_string(p) + ")");
  if (k < 2 || k % 2 != 0)
    throw DomainError("Hecke family: k must be an even integer >= 2");
}

std::vector<DFamilyTerm> three_terms(long D, long p, double c_up, double c_mid, double c_down) {
  std::vector<DFamilyTerm> out;
  out.push_back({D * p * p, c_up});
  out.push_back({D, c_mid * kronecker(D, p)});
  const long p2 = p * p;
  if (D % p2 == 0 && is_discriminant(D / p2))
    out.push_back({D / p2, c_down});
  return out;
}

} // namespace

bool is_prime(long n) {
  if (n < 2)
    return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

cplx hecke_tp(const PointFunction &F, int kappa, long p, UHPoint tau) {
  if (!is_prime(p))
    throw DomainError("hecke_tp: p must be prime");
  if (!(tau.y > 0.0))
    throw DomainError("hecke_tp: tau must lie in the upper half-plane");
  const double pd = static_cast<double>(p);
  CompensatedComplexSum avg;
  for (long r = 0; r < p; ++r)
    avg += F({(tau.x + static_cast<double>(r)) / pd, tau.y / pd});
  return std::pow(pd, kappa - 1.0) * F({pd * tau.x, pd * tau.y}) + avg.value() / pd;
}

std::vector<DFamilyTerm> hecke_family_F(long D, long p, int k) {
  check_family_args(D, p, k);
  const double pd = static_cast<double>(p);
  return three_terms(D, p, std::pow(pd, -k - 0.5), std::pow(pd, -k), std::pow(pd, 1.5 - k));
}

std::vector<DFamilyTerm> hecke_family_f(long D, long p, int k) {
  check_family_args(D, p, k);
  const double pd = static_cast<double>(p);
  return three_terms(D, p, std::pow(pd, k - 1.5), std::pow(pd, k - 1), std::pow(pd, k + 0.5));
}

std::vector<DFamilyTerm> hecke_family_F_rescaled(long D, long p, int k) {
  check_family_args(D, p, k);
  const double pd = static_cast<double>(p);
  return three_terms(D, p, 1.0, std::pow(pd, -k), std::pow(pd, 1 - 2 * k));
}

std::vector<DFamilyTerm> hecke_family_f_rescaled(long D, long p, int k) {
  check_family_args(D, p, k);
  const double pd = static_cast<double>(p);
  return three_terms(D, p, 1.0, std::pow(pd, k - 1), std::pow(pd, 2 * k - 1));
}

double family_rescale_F(long D, int k) { return std::pow(static_cast<double>(D), -0.5 * k - 0.25); }

double family_rescale_f(long D, int k) { return std::pow(static_cast<double>(D), 0.5 * k - 0.75); }

} // namespace locmaass
