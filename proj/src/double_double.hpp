#pragma once

// Double-double arithmetic built from error-free transforms. Internal to the
// reference Kummer oracle; roughly 32 significant digits.

#include <cmath>

namespace nhmorse::verify::dd {

struct Real {
  double hi = 0.0;
  double lo = 0.0;
};

struct Complex {
  Real re;
  Real im;
};

Real add(Real x, Real y);
Real sub(Real x, Real y);
Real mul(Real x, Real y);
Real div(Real x, Real y);
Real from(double v);
double to_double(Real x);

Complex add(Complex x, Complex y);
Complex mul(Complex x, Complex y);
Complex div(Complex x, Complex y);
Complex from(double re, double im);
double magnitude(Complex x);  // to double precision

}  // namespace nhmorse::verify::dd
