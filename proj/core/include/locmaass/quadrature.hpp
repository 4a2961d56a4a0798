#pragma once

#include <functional>

#include "locmaass/summation.hpp"

namespace locmaass {

/// Integral of a complex integrand over [a, b] by tanh-sinh quadrature;
/// tolerates integrable endpoint singularities.
cplx integrate(const std::function<cplx(double)> &f, double a, double b, double tol = 1e-13);

/// Real-valued variant.
double integrate_real(const std::function<double(double)> &f, double a, double b,
                      double tol = 1e-13);

} // namespace locmaass

namespace locmaass {

/// Integral over [0, 1] of f(t, 1 - t); both arguments are supplied
/// accurately near their respective endpoints, which keeps singular factors
/// such as (1 - t)^{-1/2} well resolved.
cplx integrate_unit(const std::function<cplx(double, double)> &f, double tol = 1e-13);

} // namespace locmaass
