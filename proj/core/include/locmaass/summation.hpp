#pragma once

#include <cmath>
#include <complex>

namespace locmaass {

using cplx = std::complex<double>;

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  CompensatedSum &operator+=(double x) {
    add(x);
    return *this;
  }
  double value() const { return sum_ + comp_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class CompensatedComplexSum {
public:
  void add(cplx z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  CompensatedComplexSum &operator+=(cplx z) {
    add(z);
    return *this;
  }
  cplx value() const { return {re_.value(), im_.value()}; }

private:
  CompensatedSum re_;
  CompensatedSum im_;
};

/// z^n for integer n by repeated squaring; no branch cut is involved.
inline cplx ipow(cplx z, int n) {
  if (n < 0)
    return 1.0 / ipow(z, -n);
  cplx result{1.0, 0.0};
  cplx base = z;
  while (n > 0) {
    if (n & 1)
      result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

} // namespace locmaass
