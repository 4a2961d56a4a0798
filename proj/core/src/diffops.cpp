#include "locmaass/diffops.hpp"

#include <algorithm>
#include <cmath>

#include "locmaass/error.hpp"

namespace locmaass {

namespace {

const cplx I{0.0, 1.0};

struct FirstDiffs {
  cplx fu, fv;
};

FirstDiffs first_diffs(const PointFunction &F, UHPoint t, double h) {
  const cplx fu = (F({t.x + h, t.y}) - F({t.x - h, t.y})) / (2.0 * h);
  const cplx fv = (F({t.x, t.y + h}) - F({t.x, t.y - h})) / (2.0 * h);
  return {fu, fv};
}

template <class Op> cplx extrapolate(const OperatorConfig &cfg, double h, Op op) {
  if (!cfg.richardson)
    return op(h);
  return (4.0 * op(0.5 * h) - op(h)) / 3.0;
}

} // namespace

double OperatorConfig::step_at(UHPoint tau) const {
  if (!(tau.y > 0.0))
    throw DomainError("finite differences: point must lie in the upper half-plane");
  const double step = h > 0.0 ? h : 1e-3 * std::min(1.0, tau.y);
  if (!(step > 0.0 && step <= 1e-2))
    throw DomainError("finite differences: step must satisfy 0 < h <= 1e-2");
  if (!(step < 0.5 * tau.y))
    throw DomainError("finite differences: step must be smaller than Im(tau)/2");
  return step;
}

cplx wirtinger_dz(const PointFunction &F, UHPoint tau, const OperatorConfig &cfg) {
  return extrapolate(cfg, cfg.step_at(tau), [&](double h) {
    const FirstDiffs d = first_diffs(F, tau, h);
    return 0.5 * (d.fu - I * d.fv);
  });
}

cplx wirtinger_dzbar(const PointFunction &F, UHPoint tau, const OperatorConfig &cfg) {
  return extrapolate(cfg, cfg.step_at(tau), [&](double h) {
    const FirstDiffs d = first_diffs(F, tau, h);
    return 0.5 * (d.fu + I * d.fv);
  });
}

cplx xi_op(double kappa, const PointFunction &F, UHPoint tau, const OperatorConfig &cfg) {
  return 2.0 * I * std::pow(tau.y, kappa) * std::conj(wirtinger_dzbar(F, tau, cfg));
}

cplx laplacian_op(double kappa, const PointFunction &F, UHPoint tau, const OperatorConfig &cfg) {
  const cplx center = F(tau);
  const double v = tau.y;
  return extrapolate(cfg, cfg.step_at(tau), [&](double h) {
    const cplx up = F({tau.x + h, v}), um = F({tau.x - h, v});
    const cplx vp = F({tau.x, v + h}), vm = F({tau.x, v - h});
    const cplx fuu = (up - 2.0 * center + um) / (h * h);
    const cplx fvv = (vp - 2.0 * center + vm) / (h * h);
    const cplx fu = (up - um) / (2.0 * h);
    const cplx fv = (vp - vm) / (2.0 * h);
    return -v * v * (fuu + fvv) + I * kappa * v * (fu + I * fv);
  });
}

} // namespace locmaass
