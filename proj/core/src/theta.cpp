#include "locmaass/theta.hpp"

#include <cmath>
#include <numbers>

#include "locmaass/diffops.hpp"
#include "locmaass/error.hpp"
#include "locmaass/parallel.hpp"

namespace locmaass {

namespace {

constexpr double kPi = std::numbers::pi;

void check_theta_point(const ThetaPoint &pt, int k) {
  if (k < 1)
    throw DomainError("theta: k must be a positive integer");
  if (!(pt.z.y > 0.0) || !(pt.tau.y > 0.0))
    throw DomainError("theta: z and tau must lie in the upper half-plane");
}

} // namespace

double ThetaConfig::cutoff(const ThetaPoint &pt, int k) const {
  if (t_max)
    return *t_max;
  if (!(tol > 0.0 && tol < 1.0))
    throw DomainError("theta: tol must lie in (0, 1)");
  const double v = pt.tau.y;
  const double target = std::log(tol);
  auto log_mass = [&](double t) {
    return -2.0 * kPi * v * t + 1.5 * std::log1p(t / v) + 0.5 * (k + 1) * std::log1p(t);
  };
  double t = 1.0;
  while (log_mass(t) >= target || log_mass(1.5 * t) >= target)
    t *= 1.1;
  return t;
}

cplx theta_over_forms(ThetaKind kind, int k, const std::vector<QForm> &forms, const ThetaPoint &pt) {
  const UHPoint z = pt.z;
  const double u = pt.tau.x, v = pt.tau.y;
  const cplx sum = deterministic_sum(forms.size(), [&](std::size_t i) -> cplx {
    const QForm &q = forms[i];
    const FormValues fv = form_values(q, z);
    const double D = static_cast<double>(q.disc());
    const double gauss = std::exp(-2.0 * kPi * v * (2.0 * fv.qz * fv.qz + D));
    if (kind == ThetaKind::theta) {
      const cplx phase = std::polar(1.0, 2.0 * kPi * std::fmod(D * u, 1.0));
      return ipow(fv.qpoly, k) * gauss * phase;
    }
    const cplx phase = std::polar(1.0, -2.0 * kPi * std::fmod(D * u, 1.0));
    return fv.qz * ipow(fv.qpoly, k - 1) * gauss * phase;
  });
  if (kind == ThetaKind::theta)
    return std::pow(z.y, -2.0 * k) * std::sqrt(v) * sum;
  return std::pow(v, k) * sum;
}

cplx eval_theta(int k, const ThetaPoint &pt, const ThetaConfig &cfg) {
  check_theta_point(pt, k);
  const auto forms = enumerate_majorant(pt.z, cfg.cutoff(pt, k), cfg.limits);
  return theta_over_forms(ThetaKind::theta, k, forms, pt);
}

cplx eval_theta_star(int k, const ThetaPoint &pt, const ThetaConfig &cfg) {
  check_theta_point(pt, k);
  const auto forms = enumerate_majorant(pt.z, cfg.cutoff(pt, k), cfg.limits);
  return theta_over_forms(ThetaKind::theta_star, k, forms, pt);
}

IdentityResidual theta_identity_residual(int k, const ThetaPoint &pt, int which, double h,
                                         bool richardson) {
  check_theta_point(pt, k);
  if (which != 1 && which != 2)
    throw DomainError("theta_identity_residual: which must be 1 or 2");
  if (!(h >= 1e-6 && h <= 1e-2))
    throw DomainError("theta_identity_residual: step must lie in [1e-6, 1e-2]");

  const UHPoint z = pt.z;
  const UHPoint mz{-z.x, z.y};
  ThetaConfig cfg;
  cfg.tol = 1e-15;
  // The smallest v on either stencil sets the cutoff.
  const ThetaPoint lowest{z, {pt.tau.x, pt.tau.y - h}};
  const double t_max = cfg.cutoff(lowest, k) * (1.0 + 2.0 * h / z.y);
  const auto forms_z = enumerate_majorant(z, t_max);
  const auto forms_mz = enumerate_majorant(mz, t_max);

  OperatorConfig op;
  op.h = h;
  op.richardson = richardson;

  auto theta_tau = [&](UHPoint tau) { return theta_over_forms(ThetaKind::theta, k, forms_z, {z, tau}); };
  auto theta_z = [&](UHPoint zz) { return theta_over_forms(ThetaKind::theta, k, forms_z, {zz, pt.tau}); };
  auto star_tau = [&](UHPoint tau) {
    return theta_over_forms(ThetaKind::theta_star, k, forms_mz, {mz, tau});
  };
  // z' -> Theta*(-conj z', tau)
  auto star_z = [&](UHPoint zz) {
    return theta_over_forms(ThetaKind::theta_star, k, forms_mz, {{-zz.x, zz.y}, pt.tau});
  };

  const cplx I{0.0, 1.0};
  IdentityResidual r;
  if (which == 1) {
    r.lhs = xi_op(k + 0.5, theta_tau, pt.tau, op);
    r.rhs = -I * std::pow(z.y, 2.0 - 2.0 * k) * wirtinger_dz(star_z, z, op);
  } else {
    r.lhs = xi_op(1.5 - k, star_tau, pt.tau, op);
    r.rhs = -I * std::pow(z.y, 2.0 * k) * wirtinger_dz(theta_z, z, op);
  }
  r.residual = std::abs(r.lhs - r.rhs) / (std::abs(r.lhs) + std::abs(r.rhs) + 1e-300);
  return r;
}

} // namespace locmaass
