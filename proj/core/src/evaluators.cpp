#include "locmaass/evaluators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "locmaass/error.hpp"
#include "locmaass/parallel.hpp"

namespace locmaass {

namespace {

constexpr double kPi = std::numbers::pi;

double binomial(int n, int r) {
  double b = 1.0;
  for (int i = 1; i <= r; ++i)
    b = b * (n - r + i) / i;
  return b;
}

struct ShellSums {
  double last = 0.0; // sum of |term| over Q_z^2 in (X/2, X]
  double prev = 0.0; // sum of |term| over Q_z^2 in (X/4, X/2]
};

double tail_from_shells(const ShellSums &sh, double decay) {
  const double rho_a = std::pow(2.0, 0.5 - decay);
  double rho = rho_a;
  if (sh.prev > 0.0) {
    const double rho_emp = sh.last / sh.prev;
    if (rho_emp < 1.0)
      rho = std::max(rho_a, rho_emp);
  }
  if (rho >= 1.0)
    throw ConvergenceError("shell sums do not decay; the lattice sum is not absolutely convergent");
  return sh.last * rho / (1.0 - rho);
}

EvalResult sum_fixed(const TermKernel &kernel, UHPoint z, double qz2_max, const SumConfig &cfg) {
  const long D = kernel.params().D;
  const std::vector<QForm> forms = enumerate_disc_forms(z, D, qz2_max, cfg.limits);
  if (forms.size() > cfg.max_forms)
    throw CapacityError("lattice sum: " + std::to_string(forms.size()) +
                        " forms exceed max_forms = " + std::to_string(cfg.max_forms));
  std::vector<cplx> terms(forms.size());
  parallel_for(forms.size(), [&](std::size_t i) { terms[i] = kernel(forms[i], z); });

  EvalResult r;
  r.qz2_max = qz2_max;
  r.forms_used = forms.size();
  CompensatedComplexSum sum;
  ShellSums shells;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    sum += terms[i];
    const double mag = std::abs(terms[i]);
    r.largest_term = std::max(r.largest_term, mag);
    const double qz = form_qz(forms[i], z);
    const double t = qz * qz;
    if (t > 0.5 * qz2_max)
      shells.last += mag;
    else if (t > 0.25 * qz2_max)
      shells.prev += mag;
  }
  r.value = sum.value();
  r.tail_estimate = tail_from_shells(shells, kernel.decay_exponent());
  r.min_abs_qz = forms.empty() ? min_abs_qz(z, D, cfg.limits) : std::abs(form_qz(forms.front(), z));
  return r;
}

} // namespace

int family_weight(Family fam, int k) {
  return (fam == Family::f_classical || fam == Family::f) ? 2 * k : 2 - 2 * k;
}

const char *family_name(Family fam) {
  switch (fam) {
  case Family::f_classical:
    return "f_classical";
  case Family::f:
    return "f";
  case Family::F:
    return "F";
  case Family::F_harmonic:
    return "F_harmonic";
  }
  return "?";
}

SumConfig SumConfig::fixed(double qz2_max) {
  SumConfig c;
  c.qz2_max = qz2_max;
  return c;
}

SumConfig SumConfig::adaptive(double target_tol) {
  SumConfig c;
  c.target_tol = target_tol;
  return c;
}

void SumConfig::validate() const {
  if (qz2_max.has_value() == target_tol.has_value())
    throw DomainError("SumConfig: set exactly one of qz2_max and target_tol");
  if (qz2_max && !(*qz2_max >= 0.0 && std::isfinite(*qz2_max)))
    throw DomainError("SumConfig: qz2_max must be finite and non-negative");
  if (target_tol && !(*target_tol > 0.0))
    throw DomainError("SumConfig: target_tol must be positive");
  if (max_forms == 0)
    throw DomainError("SumConfig: max_forms must be positive");
}

void validate_family(Family fam, const KernelParams &p) {
  p.validate();
  const double re = p.s.real();
  switch (fam) {
  case Family::f_classical:
  case Family::F_harmonic:
    break;
  case Family::f:
    if (re < p.k / 2.0 + 0.25 - 1e-12)
      throw DomainError("f_{k,s,D}: requires Re(s) >= k/2 + 1/4");
    break;
  case Family::F:
    if (!(re > 0.75) || re < p.k / 2.0 - 0.75 - 1e-12)
      throw DomainError("F_{1-k,s,D}: requires Re(s) > 3/4 and Re(s) >= k/2 - 3/4");
    break;
  }
}

TermKernel::TermKernel(Family fam, const KernelParams &p) : fam_(fam), p_(p) {
  validate_family(fam, p);
  const double D = static_cast<double>(p.D);
  const int k = p.k;
  switch (fam) {
  case Family::f_classical:
    scale_ = std::pow(D, k - 0.5) / (binomial(2 * k - 2, k - 1) * kPi);
    decay_ = k / 2.0;
    break;
  case Family::f:
    phi_.emplace(p);
    decay_ = p.s.real() - 0.25;
    break;
  case Family::F:
    phi_star_.emplace(p);
    decay_ = p.s.real() - 0.25;
    break;
  case Family::F_harmonic:
    psi_.emplace(k);
    scale_ = std::pow(4.0 * kPi * D, 0.75 - k / 2.0) / (12.0 * psi_->at_one());
    decay_ = k / 2.0;
    break;
  }
}

cplx TermKernel::operator()(const QForm &q, UHPoint z) const {
  const FormValues fv = form_values(q, z);
  const double D = static_cast<double>(p_.D);
  const double w = D / (fv.qz * fv.qz + D);
  switch (fam_) {
  case Family::f_classical:
    return scale_ * ipow(fv.qpoly, -p_.k);
  case Family::f:
    return ipow(fv.qpoly, -p_.k) * (*phi_)(w);
  case Family::F: {
    const int sg = form_sign(q, z);
    if (sg == 0)
      return 0.0;
    return static_cast<double>(sg) * ipow(fv.qpoly, p_.k - 1) * (*phi_star_)(w);
  }
  case Family::F_harmonic: {
    const int sg = form_sign(q, z);
    if (sg == 0)
      return 0.0;
    return scale_ * static_cast<double>(sg) * ipow(fv.qpoly, p_.k - 1) * (*psi_)(w);
  }
  }
  return 0.0;
}

EvalResult evaluate(Family fam, const KernelParams &p, UHPoint z, const SumConfig &cfg) {
  cfg.validate();
  if (!(z.y > 0.0))
    throw DomainError("evaluation point must lie in the upper half-plane");
  const TermKernel kernel(fam, p);
  if (cfg.qz2_max)
    return sum_fixed(kernel, z, *cfg.qz2_max, cfg);

  const double tol = *cfg.target_tol;
  double X = 64.0;
  for (;;) {
    EvalResult r = sum_fixed(kernel, z, X, cfg);
    if (r.tail_estimate <= tol)
      return r;
    X *= 2.0;
  }
}

EvalResult eval_f_classical(int k, long D, UHPoint z, const SumConfig &cfg) {
  return evaluate(Family::f_classical, {k, {0.0, 0.0}, D}, z, cfg);
}

EvalResult eval_f(const KernelParams &p, UHPoint z, const SumConfig &cfg) {
  return evaluate(Family::f, p, z, cfg);
}

EvalResult eval_F(const KernelParams &p, UHPoint z, const SumConfig &cfg) {
  return evaluate(Family::F, p, z, cfg);
}

EvalResult eval_F_harmonic(int k, long D, UHPoint z, const SumConfig &cfg) {
  return evaluate(Family::F_harmonic, {k, {k / 2.0 + 0.25, 0.0}, D}, z, cfg);
}

FrozenSum::FrozenSum(Family fam, const KernelParams &p, UHPoint center, double qz2_max,
                     double stencil_radius, EnumLimits limits)
    : kernel_(fam, p), forms_(enumerate_disc_forms(center, p.D, qz2_max, limits)) {
  if (stencil_radius > 0.0 && fam != Family::f_classical) {
    if (!(stencil_radius < center.y))
      throw DomainError("FrozenSum: stencil radius must be smaller than Im(center)");
    const double D = static_cast<double>(p.D);
    for (const QForm &q : forms_) {
      const double qz = form_qz(q, center);
      if (std::abs(qz) <= 2.0 * stencil_radius * std::sqrt(qz * qz + D) / (center.y - stencil_radius))
        throw DomainError("FrozenSum: stencil of radius " + std::to_string(stencil_radius) +
                          " may cross the exceptional set E_D");
    }
  }
}

cplx FrozenSum::operator()(UHPoint z) const {
  std::vector<cplx> terms(forms_.size());
  parallel_for(forms_.size(), [&](std::size_t i) { terms[i] = kernel_(forms_[i], z); });
  CompensatedComplexSum sum;
  for (const cplx &t : terms)
    sum += t;
  return sum.value();
}

} // namespace locmaass
