#include <cmath>

#include "doctest.h"
#include "locmaass/error.hpp"
#include "locmaass/poincare.hpp"
#include "locmaass/theta.hpp"
#include "support/oracles.hpp"

using namespace locmaass;
using oracle::rel;

namespace {

cplx brute_theta(ThetaKind kind, int k, const ThetaPoint &pt, long box) {
  std::vector<QForm> forms;
  for (long a = -box; a <= box; ++a)
    for (long b = -box; b <= box; ++b)
      for (long c = -box; c <= box; ++c)
        if (a || b || c)
          forms.push_back({a, b, c});
  return theta_over_forms(kind, k, forms, pt);
}

ThetaPoint conj_point(const ThetaPoint &pt) {
  return {{-pt.z.x, pt.z.y}, {-pt.tau.x, pt.tau.y}};
}

} // namespace

TEST_CASE("theta agrees with a box brute force") {
  const ThetaPoint p1{{0.0, 1.0}, {0.0, 1.0}};
  CHECK(rel(eval_theta(2, p1), brute_theta(ThetaKind::theta, 2, p1, 10)) < 1e-10);
  const ThetaPoint p2{{0.25, 1.0}, {1.0 / 3.0, 0.5}};
  CHECK(rel(eval_theta_star(2, p2), brute_theta(ThetaKind::theta_star, 2, p2, 12)) < 1e-10);
  CHECK(rel(eval_theta(4, p2), brute_theta(ThetaKind::theta, 4, p2, 12)) < 1e-10);
}

TEST_CASE("theta translation invariance in tau") {
  const ThetaPoint p{{0.2, 0.9}, {0.15, 0.7}};
  const ThetaPoint q{p.z, {p.tau.x + 1.0, p.tau.y}};
  CHECK(rel(eval_theta(2, q), eval_theta(2, p)) < 1e-12);
  CHECK(rel(eval_theta_star(2, q), eval_theta_star(2, p)) < 1e-12);
}

TEST_CASE("theta kernels are modular in z") {
  const ThetaPoint p{{0.21, 1.05}, {0.1, 0.8}};
  for (int k : {2, 4})
    for (const GL2Int &g : {GL2Int::S(), GL2Int::T(), GL2Int{2, 1, 1, 1}}) {
      const ThetaPoint gp{g.act(p.z), p.tau};
      const cplx czd = static_cast<double>(g.c) * p.z.z() + static_cast<double>(g.d);
      // Theta picks up the antiholomorphic factor, Theta* the holomorphic one.
      CHECK(rel(eval_theta(k, gp), ipow(std::conj(czd), 2 * k) * eval_theta(k, p)) < 1e-8);
      CHECK(rel(eval_theta_star(k, gp), ipow(czd, 2 - 2 * k) * eval_theta_star(k, p)) < 1e-8);
    }
}

TEST_CASE("theta kernels are modular in tau on Gamma_0(4)") {
  const ThetaPoint p{{0.25, 1.0}, {0.1, 0.6}};
  for (int k : {2, 4})
    for (const GL2Int &g : {GL2Int{1, 0, 4, 1}, GL2Int{5, 1, 4, 1}, GL2Int{3, -1, 4, -1}}) {
      const ThetaPoint gp{p.z, g.act(p.tau)};
      const cplx j = theta_multiplier(g, p.tau);
      CHECK(rel(eval_theta(k, gp), ipow(j, 2 * k + 1) * eval_theta(k, p)) < 1e-8);
      CHECK(rel(eval_theta_star(k, gp), ipow(j, 3 - 2 * k) * eval_theta_star(k, p)) < 1e-8);
    }
}

TEST_CASE("conjugation symmetries") {
  const ThetaPoint p{{0.3, 0.85}, {-0.2, 0.65}};
  CHECK(rel(std::conj(eval_theta(2, p)), eval_theta(2, conj_point(p))) < 1e-12);
  // conj Theta*(-conj z, tau) = Theta*(z, -conj tau)
  const ThetaPoint mz{{-p.z.x, p.z.y}, p.tau};
  const ThetaPoint mt{p.z, {-p.tau.x, p.tau.y}};
  CHECK(rel(std::conj(eval_theta_star(2, mz)), eval_theta_star(2, mt)) < 1e-12);
}

TEST_CASE("negation invariance termwise") {
  const ThetaPoint p{{0.3, 0.85}, {-0.2, 0.65}};
  for (const QForm &q : {QForm{1, 2, -3}, QForm{0, 1, 4}, QForm{-2, 1, 1}}) {
    const QForm n{-q.a, -q.b, -q.c};
    for (ThetaKind kind : {ThetaKind::theta, ThetaKind::theta_star})
      CHECK(rel(theta_over_forms(kind, 2, {n}, p), theta_over_forms(kind, 2, {q}, p)) < 1e-14);
  }
  // The zero-form-free sum at z = i: (0, +-1, 0) have Q_z = 0 and drop out of Theta*.
  const ThetaPoint at_i{{0.0, 1.0}, {0.1, 0.7}};
  CHECK(std::abs(theta_over_forms(ThetaKind::theta_star, 2, {{0, 1, 0}, {0, -1, 0}}, at_i)) == 0.0);
}

TEST_CASE("Gaussian tail control") {
  const ThetaPoint p{{0.1, 1.1}, {0.0, 0.4}};
  ThetaConfig a, b;
  a.t_max = 6.0;
  b.t_max = 6.0 + 1.0 / (2.0 * 3.141592653589793 * p.tau.y);
  const double bound = std::exp(-2.0 * 3.141592653589793 * p.tau.y * 6.0);
  const double delta = std::abs(eval_theta(2, p, a) - eval_theta(2, p, b));
  CHECK(delta <= 10.0 * bound * std::pow(6.0 / p.tau.y, 1.5) * 36.0);
  CHECK(a.cutoff(p, 2) == 6.0);
  CHECK(ThetaConfig{}.cutoff(p, 2) > 6.0);
}

TEST_CASE("differential identities linking the two kernels") {
  for (const ThetaPoint &pt : {ThetaPoint{{0.25, 1.0}, {0.0, 0.5}}, ThetaPoint{{-0.1, 0.8}, {0.3, 0.7}}})
    for (int which : {1, 2}) {
      const IdentityResidual r1 = theta_identity_residual(2, pt, which, 2e-4);
      const IdentityResidual r2 = theta_identity_residual(2, pt, which, 1e-4);
      CHECK(r2.residual < 1e-5);
      CHECK(r1.residual / r2.residual == doctest::Approx(4.0).epsilon(0.1));
    }
  CHECK_THROWS_AS(theta_identity_residual(2, {{0.0, 1.0}, {0.0, 1.0}}, 3, 1e-3), DomainError);
}

TEST_CASE("theta input validation") {
  CHECK_THROWS_AS(eval_theta(2, {{0.0, -1.0}, {0.0, 1.0}}), DomainError);
  CHECK_THROWS_AS(eval_theta(0, {{0.0, 1.0}, {0.0, 1.0}}), DomainError);
  ThetaConfig small;
  small.limits.max_cells = 5;
  CHECK_THROWS_AS(eval_theta(2, {{0.0, 1.0}, {0.0, 0.1}}, small), CapacityError);
}
