#include <cmath>
#include <numbers>

#include "doctest.h"
#include "locmaass/error.hpp"
#include "locmaass/quadrature.hpp"
#include "locmaass/specfun.hpp"
#include "support/oracles.hpp"

using namespace locmaass;
using oracle::rel;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("cgamma reference values") {
  CHECK(rel(cgamma(1.0), 1.0) < 1e-13);
  CHECK(rel(cgamma(0.5), std::sqrt(kPi)) < 1e-13);
  CHECK(rel(cgamma(5.0), 24.0) < 1e-13);
  CHECK(rel(cgamma(-1.5), 4.0 * std::sqrt(kPi) / 3.0) < 1e-13);
  // mpmath.gamma(0.3+2j)
  CHECK(rel(cgamma({0.3, 2.0}), {0.057465337569588, -0.0749849125826461}) < 1e-12);
  CHECK_THROWS_AS(cgamma(0.0), PoleError);
  CHECK_THROWS_AS(cgamma(-3.0), PoleError);
  CHECK(rgamma(-2.0) == cplx(0.0));
}

TEST_CASE("cgamma satisfies the recurrence on a complex grid") {
  for (double re = -3.3; re < 6.0; re += 0.7)
    for (double im = -4.0; im <= 4.0; im += 1.3) {
      const cplx s{re, im};
      CHECK(rel(cgamma(s + 1.0), s * cgamma(s)) < 1e-12);
    }
}

TEST_CASE("kronecker symbol") {
  CHECK(kronecker(5, 5) == 0);
  CHECK(kronecker(5, 11) == 1);
  CHECK(kronecker(8, 3) == -1);
  CHECK(kronecker(5, 1) == 1);
  CHECK(kronecker(5, 2) == -1);
  CHECK(kronecker(17, 2) == 1);
  CHECK(kronecker(12, 2) == 0);
  // Odd primes: Euler's criterion as oracle.
  for (long p : {3L, 7L, 11L, 13L, 97L})
    for (long D = -40; D <= 40; ++D) {
      long r = ((D % p) + p) % p, e = (p - 1) / 2, acc = 1;
      for (long i = 0; i < e; ++i)
        acc = acc * r % p;
      const int expected = r == 0 ? 0 : (acc == 1 ? 1 : -1);
      CHECK(kronecker(D, p) == expected);
    }
  // Complete multiplicativity in n.
  for (long D : {5L, 8L, -3L, 12L, 45L})
    for (long m = 1; m < 30; ++m)
      for (long n = 1; n < 30; ++n)
        CHECK(kronecker(D, m * n) == kronecker(D, m) * kronecker(D, n));
  CHECK_THROWS_AS(kronecker(5, 0), DomainError);
}

TEST_CASE("hyp2f1 closed forms") {
  CHECK(hyp2f1(0.7, 1.3, 2.1, 0.0) == cplx(1.0));
  CHECK(rel(hyp2f1(0.7, 0.0, 2.1, 0.6), 1.0) < 1e-15);
  CHECK(rel(hyp2f1(1.0, 1.0, 2.0, 0.5), -std::log(0.5) / 0.5) < 1e-13);
  for (double w : {0.3, 0.81, 0.9, 0.99, 0.999})
    CHECK(rel(hyp2f1(1.0, 1.0, 2.0, w), -std::log1p(-w) / w) < 1e-11);
  // (1 - w)^{-a}
  for (double w : {0.2, 0.85, 0.97})
    CHECK(rel(hyp2f1(0.3, 1.7, 1.7, w), std::pow(1.0 - w, -0.3)) < 1e-11);
  // Gauss summation at w = 1
  CHECK(rel(hyp2f1(0.5, 0.25, 1.25, 1.0),
            cgamma(1.25) * cgamma(0.5) / (cgamma(0.75) * cgamma(1.0))) < 1e-13);
  CHECK_THROWS_AS(hyp2f1(1.0, 1.0, 1.5, 1.0), DomainError);
  CHECK_THROWS_AS(hyp2f1(1.0, 1.0, -2.0, 0.5), PoleError);
  CHECK_THROWS_AS(hyp2f1(1.0, 1.0, 2.0, 1.1), DomainError);
}

TEST_CASE("hyp2f1 agrees with the Euler integral on the parameter grid") {
  const double vals[] = {0.75, 1.5, 2.25};
  for (double A : vals)
    for (double B : vals)
      for (double C : vals) {
        if (!(C > B))
          continue;
        for (int i = 1; i <= 9; ++i) {
          const double w = 0.1 * i;
          const cplx h = hyp2f1(A, B, C, w);
          const cplx o = hyp2f1_euler_oracle(A, B, C, w);
          CHECK(std::abs(h - o) <= 1e-9 * (1.0 + std::abs(h)));
        }
      }
  // Complex parameters of the kernel type.
  const cplx s{1.6, 0.4};
  for (double w : {0.2, 0.5, 0.85, 0.95}) {
    const cplx h = hyp2f1(s - 0.75, s + 0.25, 2.0 * s, w);
    CHECK(std::abs(h - hyp2f1_euler_oracle(s - 0.75, s + 0.25, 2.0 * s, w)) <= 1e-9 * std::abs(h));
  }
  CHECK(rel(hyp2f1_euler_oracle(1.0, 1.0, 2.0, 0.5), -std::log(0.5) / 0.5) < 1e-10);
  CHECK(rel(hyp2f1_euler_oracle(1.3, 0.7, 2.0, 0.0), 1.0) < 1e-12);
  CHECK_THROWS_AS(hyp2f1_euler_oracle(1.0, 2.0, 1.5, 0.5), DomainError);
}

TEST_CASE("Hypergeometric2F1 is continuous across the series cutoff") {
  const Hypergeometric2F1 f({1.1, 0.3}, 0.6, {2.2, 0.6});
  const double c = Hypergeometric2F1::kSeriesCutoff;
  CHECK(rel(f(c), f(std::nextafter(c, 1.0))) < 1e-12);
}

TEST_CASE("incomplete beta") {
  for (double v : {0.1, 0.5, 0.9, 1.0})
    CHECK(rel(incomplete_beta(v, 2.5, 1.0), std::pow(v, 2.5) / 2.5) < 1e-12);
  CHECK(rel(incomplete_beta(1.0, 1.5, 0.5), kPi / 2.0) < 1e-12);
  CHECK(rel(incomplete_beta(1.0, {1.2, 0.5}, 0.7),
            cgamma({1.2, 0.5}) * cgamma(0.7) / cgamma({1.9, 0.5})) < 1e-12);
  for (double v : {0.05, 0.3, 0.5, 0.51, 0.8, 0.99}) {
    const double q = integrate_real(
        [](double u) { return std::pow(u, 2.5) / std::sqrt(1.0 - u); }, 0.0, v);
    CHECK(rel(incomplete_beta(v, 3.5, 0.5), q) < 1e-11);
  }
  CHECK_THROWS_AS(incomplete_beta(0.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(incomplete_beta(1.2, 1.0, 1.0), DomainError);
}

TEST_CASE("Whittaker M and the normalized M function") {
  for (double t = 0.5; t <= 50.0; t += 0.5)
    CHECK(std::abs(mathcal_m(2.5, 1.25, t) - std::exp(-t / 2.0)) <= 4e-16 * std::exp(-t / 2.0));
  CHECK(rel(mathcal_m(2.5, 2.0, 3.0), mathcal_m_integral_oracle(2.5, 2.0, 3.0)) < 1e-9);
  CHECK(rel(mathcal_m(2.5, 2.0, -3.0), mathcal_m_integral_oracle(2.5, 2.0, -3.0)) < 1e-9);
  CHECK(rel(mathcal_m(1.5, {1.2, 0.3}, 2.5), mathcal_m_integral_oracle(1.5, {1.2, 0.3}, 2.5)) < 1e-9);
  CHECK(rel(mathcal_m(-0.5, 1.75, 4.0), mathcal_m_integral_oracle(-0.5, 1.75, 4.0)) < 1e-9);
  // mpmath.whitm(0.75, 0.7+0.3j, 2.5) * 2.5**-0.75
  CHECK(rel(mathcal_m(1.5, {1.2, 0.3}, 2.5), {0.78655174669102, 0.385321648855973}) < 1e-12);

  // Large-argument behaviour M_{mu,s-1/2}(v) ~ Gamma(2s) e^{v/2} v^{-mu} / Gamma(s - mu).
  const double mu = 1.25;
  const cplx s = 2.0;
  double prev = 1e300;
  for (double v : {40.0, 60.0, 80.0}) {
    const cplx ratio = whittaker_m(mu, s - 0.5, v) * cgamma(s - mu) /
                       (cgamma(2.0 * s) * std::exp(v / 2.0) * std::pow(v, -mu));
    const double dev = std::abs(ratio - 1.0);
    CHECK(dev < prev);
    CHECK(dev < 0.05);
    prev = dev;
  }
  CHECK_THROWS_AS(whittaker_m(1.0, 1.5, 701.0), OverflowError);
  CHECK_THROWS_AS(mathcal_m(2.5, 2.0, 0.0), DomainError);
}

TEST_CASE("phi kernel") {
  // Constant at s = k/2 + 1/4.
  for (int k : {2, 4, 6}) {
    const KernelParams p{k, {k / 2.0 + 0.25, 0.0}, 5};
    const cplx expected = cgamma(double(k)) * std::pow(5.0, k / 2.0 + 0.25) /
                          (6.0 * cgamma(k + 0.5) * std::pow(4.0 * kPi, k / 2.0 - 0.25));
    for (double w : {0.05, 0.4, 0.9, 1.0})
      CHECK(rel(phi_kernel(p, w), expected) < 1e-12);
  }
  // Oracle composition at (k, s, D) = (2, 1.75, 5), w = 0.5.
  const KernelParams p{2, {1.75, 0.0}, 5};
  const double pref = std::pow(5.0, 1.25) * cgamma(2.5).real() /
                      (6.0 * cgamma(3.5).real() * std::pow(4.0 * kPi, 0.75));
  CHECK(rel(phi_kernel(p, 0.5), pref * std::pow(0.5, 0.5) * hyp2f1_euler_oracle(2.5, 0.5, 3.5, 0.5)) <
        1e-10);
  // Finite limit at w = 1 equal to the Gauss-summation form.
  const KernelParams q{4, {2.5, 0.3}, 12};
  const PhiKernel phi(q);
  CHECK(rel(phi(1.0), phi.at_one()) < 1e-9);
  CHECK(rel(phi(1.0 - 1e-9), phi.at_one()) < 1e-4);
  CHECK_THROWS_AS(PhiKernel(KernelParams{2, {1.0, 0.0}, 5}), DomainError);
  CHECK_THROWS_AS(phi(0.0), DomainError);
}

TEST_CASE("phi* kernel") {
  for (int k : {2, 4, 6})
    for (cplx s : {cplx{1.25, 0.0}, cplx{1.75, 0.5}, cplx{3.25, 0.0}}) {
      if (s.real() <= k / 2.0 - 0.75)
        continue;
      const KernelParams p{k, s, 8};
      const PhiStarKernel phi(p);
      const cplx closed =
          std::pow(4.0 * kPi * 8.0, 0.75 - k / 2.0) / (12.0 * cgamma(s - k / 2.0 + 0.75));
      CHECK(rel(phi.at_one(), closed) < 1e-13);
      CHECK(rel(phi(1.0), closed) < 1e-10);
      CHECK(std::abs(phi(1e-8)) < 1e-6 * std::abs(closed));
    }
  // Proportional to psi at s = k/2 + 1/4.
  for (int k : {2, 4}) {
    const KernelParams p{k, {k / 2.0 + 0.25, 0.0}, 5};
    const PsiKernel psi(k);
    const double c = std::pow(4.0 * kPi * 5.0, 0.75 - k / 2.0) / (12.0 * psi.at_one());
    for (int i = 1; i <= 10; ++i) {
      const double w = 0.1 * i;
      CHECK(rel(phi_star_kernel(p, w), c * psi(w)) < 1e-9);
    }
  }
  CHECK_THROWS_AS(PhiStarKernel(KernelParams{2, {0.75, 0.0}, 5}), DomainError);
  CHECK_THROWS_AS(PhiStarKernel(KernelParams{3, {1.25, 0.0}, 5}), DomainError);
  CHECK_THROWS_AS(PhiStarKernel(KernelParams{2, {1.25, 0.0}, 6}), DomainError);
}

TEST_CASE("psi kernel") {
  CHECK(std::abs(psi_kernel(2, 1.0) - kPi / 4.0) < 1e-14);
  const double q =
      0.5 * integrate_real([](double u) { return std::sqrt(u / (1.0 - u)); }, 0.0, 0.5);
  CHECK(std::abs(psi_kernel(2, 0.5) - q) < 1e-12);
  CHECK(std::abs(psi_kernel(2, 0.5) - (kPi / 8.0 - 0.25)) < 1e-14);
  double prev = 0.0;
  for (int i = 1; i <= 100; ++i) {
    const double v = 0.01 * i;
    const double cur = psi_kernel(4, v);
    CHECK(cur > prev);
    prev = cur;
  }
  CHECK_THROWS_AS(psi_kernel(3, 0.5), DomainError);
  CHECK_THROWS_AS(psi_kernel(2, 0.0), DomainError);
}

TEST_CASE("kernel parameter validation and eigenvalue") {
  const KernelParams p{2, {1.75, 0.0}, 5};
  CHECK(rel(p.lambda(), (1.75 - 1.25) * (1.0 - 1.75 - 1.25)) < 1e-15);
  CHECK_NOTHROW(p.validate());
  CHECK_THROWS_AS((KernelParams{0, 1.0, 5}.validate()), DomainError);
  CHECK_THROWS_AS((KernelParams{2, 1.0, -3}.validate()), DomainError);
  CHECK(is_discriminant(0));
  CHECK(is_discriminant(-3));
  CHECK_FALSE(is_discriminant(7));
}
