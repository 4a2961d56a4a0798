#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "cli/cli.hpp"
#include "locmaass/diffops.hpp"
#include "locmaass/evaluators.hpp"
#include "locmaass/geodesics.hpp"
#include "locmaass/hecke.hpp"
#include "locmaass/poincare.hpp"
#include "locmaass/specfun.hpp"
#include "locmaass/theta.hpp"

namespace locmaass::cli {

namespace {

constexpr double kPi = std::numbers::pi;

double rel(cplx a, cplx b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

void add(std::vector<CheckResult> &out, std::string name, double measured, double tol) {
  out.push_back({std::move(name), measured, tol, measured <= tol});
}

std::string tag(const char *fmt, double a, double b = 0.0, double c = 0.0) {
  char buf[96];
  std::snprintf(buf, sizeof buf, fmt, a, b, c);
  return buf;
}

cplx slash(const GL2Int &g, UHPoint z, int weight) {
  return ipow(static_cast<double>(g.c) * z.z() + static_cast<double>(g.d), weight);
}

void suite_modularity(std::vector<CheckResult> &out) {
  const UHPoint z{0.23, 1.07};
  const SumConfig cfg = SumConfig::fixed(500.5);
  for (int k : {2, 4})
    for (Family fam : {Family::f, Family::F}) {
      const KernelParams p{k, {k / 2.0 + 0.75, 0.2}, 5};
      const int w = family_weight(fam, k);
      const cplx at_z = evaluate(fam, p, z, cfg).value;
      for (const auto &[gname, g] : {std::pair{"S", GL2Int::S()}, std::pair{"T", GL2Int::T()}}) {
        const cplx at_gz = evaluate(fam, p, g.act(z), cfg).value;
        add(out, std::string("modularity/") + family_name(fam) + "/k=" + std::to_string(k) + "/" + gname,
            rel(at_gz / slash(g, z, w), at_z), fam == Family::f ? 1e-9 : 1e-8);
      }
    }
  const ThetaPoint pt{{0.21, 1.05}, {0.1, 0.8}};
  const GL2Int S = GL2Int::S();
  const ThetaPoint spt{S.act(pt.z), pt.tau};
  const cplx czd = pt.z.z();
  add(out, "modularity/theta/S", rel(eval_theta(2, spt), ipow(std::conj(czd), 4) * eval_theta(2, pt)), 1e-8);
  add(out, "modularity/theta_star/S", rel(eval_theta_star(2, spt), ipow(czd, -2) * eval_theta_star(2, pt)),
      1e-8);
}

void suite_eigen(std::vector<CheckResult> &out) {
  const UHPoint z{0.31, 1.23};
  for (int k : {2, 4})
    for (cplx s : {cplx{k / 2.0 + 0.75, 0.0}, cplx{k / 2.0 + 0.25, 0.5}}) {
      const KernelParams p{k, s, 5};
      for (Family fam : {Family::f, Family::F}) {
        const FrozenSum sum(fam, p, z, 400.0, 2e-3);
        const PointFunction F = [&](UHPoint t) { return sum(t); };
        const cplx lap = laplacian_op(family_weight(fam, k), F, z);
        add(out,
            std::string("eigen/") + family_name(fam) + tag("/k=%g/s=%g%+gi", k, s.real(), s.imag()),
            rel(lap, 4.0 * p.lambda() * F(z)), 1e-4);
      }
    }
  PoincareSpec spec;
  spec.m = 5;
  spec.c_max = 24;
  const PointFunction P = [&](UHPoint t) { return eval_poincare(spec, t); };
  const UHPoint tau{0.2, 1.0};
  const cplx lambda = (spec.s - spec.kappa / 2.0) * (1.0 - spec.s - spec.kappa / 2.0);
  add(out, "eigen/poincare/kappa=2.5/s=2/m=5", rel(laplacian_op(spec.kappa, P, tau), lambda * P(tau)), 1e-2);
}

void suite_xi(std::vector<CheckResult> &out) {
  const UHPoint z{0.27, 1.19};
  for (int k : {2, 4})
    for (cplx s : {cplx{k / 2.0 + 0.75, 0.0}, cplx{k / 2.0 + 0.5, 0.3}}) {
      const KernelParams p{k, s, 5};
      const KernelParams pc{k, std::conj(s), 5};
      const FrozenSum F(Family::F, p, z, 400.0, 2e-3);
      const FrozenSum f(Family::f, p, z, 400.0, 2e-3);
      const PointFunction Ff = [&](UHPoint t) { return F(t); };
      const PointFunction ff = [&](UHPoint t) { return f(t); };
      const SumConfig cfg = SumConfig::fixed(400.0);
      const std::string label = tag("/k=%g/s=%g%+gi", k, s.real(), s.imag());
      const cplx lhs1 = xi_op(2 - 2 * k, Ff, z);
      const cplx rhs1 = 2.0 * (std::conj(s) - 0.75 + k / 2.0) * eval_f(pc, z, cfg).value;
      add(out, "xi/F_to_f" + label, rel(lhs1, rhs1), 1e-4);
      const cplx lhs2 = xi_op(2 * k, ff, z);
      const cplx rhs2 = 2.0 * (std::conj(s) - k / 2.0 - 0.25) * eval_F(pc, z, cfg).value;
      add(out, "xi/f_to_F" + label, rel(lhs2, rhs2), 1e-4);
    }
  const KernelParams h{2, {1.25, 0.0}, 5};
  const FrozenSum f(Family::f, h, z, 400.0, 2e-3);
  const PointFunction ff = [&](UHPoint t) { return f(t); };
  add(out, "xi/f_holomorphic/k=2", std::abs(xi_op(4, ff, z)), 1e-6);
}

void suite_hecke(std::vector<CheckResult> &out, long p) {
  const double X = 2e5;
  const UHPoint points[] = {{0.123, 0.91}, {-0.31, 1.4}};
  auto value = [&](Family fam, KernelParams q, UHPoint t) { return evaluate(fam, q, t, SumConfig::fixed(X)).value; };
  for (Family fam : {Family::F, Family::f}) {
    const KernelParams base{2, {2.25, 0.0}, 5};
    const auto terms = fam == Family::F ? hecke_family_F(5, p, 2) : hecke_family_f(5, p, 2);
    for (const UHPoint &tau : points) {
      const PointFunction F = [&](UHPoint t) { return value(fam, base, t); };
      const cplx lhs = hecke_tp(F, family_weight(fam, 2), p, tau);
      cplx rhs = 0.0;
      for (const DFamilyTerm &t : terms) {
        KernelParams q = base;
        q.D = t.discriminant;
        rhs += t.coefficient * value(fam, q, tau);
      }
      add(out,
          std::string("hecke/") + family_name(fam) + "/p=" + std::to_string(p) +
              tag("/tau=%g%+gi", tau.x, tau.y),
          rel(lhs, rhs), 1e-4);
    }
  }
}

void suite_jump(std::vector<CheckResult> &out) {
  const UHPoint apex{-0.5, std::sqrt(5.0) / 2.0};
  const KernelParams p{2, {1.25, 0.0}, 5};
  const FrozenSum F(Family::F, p, apex, 1e5);
  auto diff = [&](double r) { return F({apex.x, apex.y + r}) - F({apex.x, apex.y - r}); };
  const cplx measured = 2.0 * diff(5e-4) - diff(1e-3);
  const cplx predicted = predicted_jump(apex, p);
  const cplx closed = -10.0 * std::pow(20.0 * kPi, -0.25) / 12.0;
  add(out, "jump/predicted_vs_closed_form", rel(predicted, closed), 1e-12);
  add(out, "jump/measured_vs_predicted", rel(measured, predicted), 1e-3);
  const double r = 1e-4;
  const cplx avg = 0.5 * (F({apex.x, apex.y + r}) + F({apex.x, apex.y - r}));
  add(out, "jump/two_sided_average", std::abs(avg - F(apex)), 1e-4);
  const FrozenSum f(Family::f, p, apex, 1e5);
  add(out, "jump/f_continuous", std::abs(f({apex.x, apex.y + r}) - f({apex.x, apex.y - r})), 1e-5);
}

void suite_collapse(std::vector<CheckResult> &out) {
  const UHPoint z{0.17, 0.93};
  const SumConfig cfg = SumConfig::fixed(3000.0);
  for (int k : {2, 4}) {
    const KernelParams p{k, {k / 2.0 + 0.25, 0.0}, 5};
    const EvalResult lhs = eval_f(p, z, cfg);
    const cplx rhs = std::pow(2.0, 2 * k - 3) / (3.0 * (2 * k - 1)) * std::pow(4.0 * kPi * 5.0, 0.75 - k / 2.0) *
                     eval_f_classical(k, 5, z, cfg).value;
    add(out, "collapse/f/k=" + std::to_string(k), std::abs(lhs.value - rhs) / lhs.largest_term, 1e-10);
    add(out, "collapse/F_harmonic/k=" + std::to_string(k),
        rel(eval_F(p, z, cfg).value, eval_F_harmonic(k, 5, z, cfg).value), 1e-9);
  }
  for (long D : {5L, 8L, 12L}) {
    const EvalResult r = eval_f_classical(2, D, {0.0, 1.0}, SumConfig::fixed(1e5));
    const double bound = std::max(r.tail_estimate, 1e-6 * r.largest_term);
    add(out, "collapse/f_2_vanishes/D=" + std::to_string(D), std::abs(r.value) / bound, 1.0);
  }
}

void suite_theta_id(std::vector<CheckResult> &out) {
  const ThetaPoint pts[] = {{{0.25, 1.0}, {0.0, 0.5}}, {{-0.1, 0.8}, {0.3, 0.7}}};
  for (int i = 0; i < 2; ++i)
    for (int which : {1, 2}) {
      const std::string label = "theta-id/identity" + std::to_string(which) + "/sample" + std::to_string(i + 1);
      const IdentityResidual a = theta_identity_residual(2, pts[i], which, 2e-4);
      const IdentityResidual b = theta_identity_residual(2, pts[i], which, 1e-4);
      add(out, label, b.residual, 1e-5);
      add(out, label + "/halving_ratio_minus_4", std::abs(a.residual / b.residual - 4.0), 0.4);
    }
}

void suite_specfun(std::vector<CheckResult> &out) {
  double m1f1 = 0.0;
  for (double t = 0.5; t <= 50.0; t += 0.5)
    m1f1 = std::max(m1f1, std::abs(mathcal_m(2.5, 1.25, t) - std::exp(-t / 2.0)) / std::exp(-t / 2.0));
  add(out, "specfun/M1F1_exact_case", m1f1, 1e-15);

  const cplx gauss = cgamma(1.25) * cgamma(0.5) / (cgamma(0.75) * cgamma(1.0));
  add(out, "specfun/gauss_at_1", rel(hyp2f1(0.5, 0.25, 1.25, 1.0), gauss), 1e-13);

  double grid = 0.0;
  const double vals[] = {0.75, 1.5, 2.25};
  for (double A : vals)
    for (double B : vals)
      for (double C : vals) {
        if (!(C > B))
          continue;
        for (int i = 1; i <= 9; ++i) {
          const cplx h = hyp2f1(A, B, C, 0.1 * i);
          grid = std::max(grid, std::abs(h - hyp2f1_euler_oracle(A, B, C, 0.1 * i)) / (1.0 + std::abs(h)));
        }
      }
  add(out, "specfun/hyp2f1_vs_euler_oracle", grid, 1e-9);

  double at_one = 0.0;
  for (int k : {2, 4})
    for (cplx s : {cplx{k / 2.0 + 0.25, 0.0}, cplx{k / 2.0 + 0.5, 0.4}}) {
      const KernelParams p{k, s, 5};
      const cplx closed = std::pow(20.0 * kPi, 0.75 - k / 2.0) / (12.0 * cgamma(s - k / 2.0 + 0.75));
      at_one = std::max(at_one, rel(PhiStarKernel(p)(1.0), closed));
    }
  add(out, "specfun/phi_star_at_1", at_one, 1e-10);

  double prop = 0.0;
  for (int k : {2, 4}) {
    const KernelParams p{k, {k / 2.0 + 0.25, 0.0}, 5};
    const PsiKernel psi(k);
    const PhiStarKernel phi(p);
    const cplx c = phi.at_one() / psi.at_one();
    for (int i = 1; i <= 10; ++i)
      prop = std::max(prop, rel(phi(0.1 * i), c * psi(0.1 * i)));
  }
  add(out, "specfun/phi_star_proportional_to_psi", prop, 1e-9);
}

using Suite = std::function<void(std::vector<CheckResult> &, long)>;

const std::vector<std::pair<std::string, Suite>> &suites() {
  static const std::vector<std::pair<std::string, Suite>> all = {
      {"specfun", [](auto &o, long) { suite_specfun(o); }},
      {"modularity", [](auto &o, long) { suite_modularity(o); }},
      {"eigen", [](auto &o, long) { suite_eigen(o); }},
      {"xi", [](auto &o, long) { suite_xi(o); }},
      {"hecke", [](auto &o, long p) { suite_hecke(o, p); }},
      {"jump", [](auto &o, long) { suite_jump(o); }},
      {"collapse", [](auto &o, long) { suite_collapse(o); }},
      {"theta-id", [](auto &o, long) { suite_theta_id(o); }},
  };
  return all;
}

} // namespace

const std::vector<std::string> &verify_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto &s : suites())
      n.push_back(s.first);
    return n;
  }();
  return names;
}

std::vector<CheckResult> run_suite(const std::string &name, long p) {
  std::vector<CheckResult> out;
  bool found = false;
  for (const auto &[n, suite] : suites())
    if (name == "all" || name == n) {
      suite(out, p);
      found = true;
    }
  if (!found)
    throw std::invalid_argument("unknown verification suite \"" + name + "\"");
  return out;
}

std::string format_check(const CheckResult &c) {
  char buf[64];
  std::snprintf(buf, sizeof buf, " measured=%.3e tol=%.1e", c.measured, c.tolerance);
  return std::string(c.pass ? "PASS " : "FAIL ") + c.name + buf;
}

} // namespace locmaass::cli
