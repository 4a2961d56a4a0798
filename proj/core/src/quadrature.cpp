#include "locmaass/quadrature.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

namespace locmaass {

namespace {

boost::math::quadrature::tanh_sinh<double> &engine() {
  thread_local boost::math::quadrature::tanh_sinh<double> integrator(12);
  return integrator;
}

} // namespace

double integrate_real(const std::function<double(double)> &f, double a, double b, double tol) {
  return engine().integrate(f, a, b, tol);
}

cplx integrate(const std::function<cplx(double)> &f, double a, double b, double tol) {
  const double re = engine().integrate([&](double x) { return f(x).real(); }, a, b, tol);
  const double im = engine().integrate([&](double x) { return f(x).imag(); }, a, b, tol);
  return {re, im};
}

cplx integrate_unit(const std::function<cplx(double, double)> &f, double tol) {
  // xc is the signed distance to the nearer endpoint: a - x on the left half,
  // b - x on the right half.
  auto split = [&](double x, double xc) {
    if (xc <= 0)
      return f(-xc, 1.0 - x);
    return f(x, xc);
  };
  const double re = engine().integrate(
      [&](double x, double xc) { return split(x, xc).real(); }, 0.0, 1.0, tol);
  const double im = engine().integrate(
      [&](double x, double xc) { return split(x, xc).imag(); }, 0.0, 1.0, tol);
  return {re, im};
}

} // namespace locmaass
