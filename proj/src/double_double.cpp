#include "double_double.hpp"

namespace nhmorse::verify::dd {

namespace {

inline Real two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline Real quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline Real two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

}  // namespace

Real from(double v) { return {v, 0.0}; }

double to_double(Real x) { return x.hi + x.lo; }

Real add(Real x, Real y) {
  Real s = two_sum(x.hi, y.hi);
  const Real t = two_sum(x.lo, y.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

Real sub(Real x, Real y) { return add(x, {-y.hi, -y.lo}); }

Real mul(Real x, Real y) {
  Real p = two_prod(x.hi, y.hi);
  p.lo += x.hi * y.lo + x.lo * y.hi;
  return quick_two_sum(p.hi, p.lo);
}

Real div(Real x, Real y) {
  const double q1 = x.hi / y.hi;
  Real r = sub(x, mul(from(q1), y));
  const double q2 = r.hi / y.hi;
  r = sub(r, mul(from(q2), y));
  const double q3 = r.hi / y.hi;
  return add(quick_two_sum(q1, q2), from(q3));
}

Complex from(double re, double im) { return {from(re), from(im)}; }

Complex add(Complex x, Complex y) { return {add(x.re, y.re), add(x.im, y.im)}; }

Complex mul(Complex x, Complex y) {
  return {sub(mul(x.re, y.re), mul(x.im, y.im)), add(mul(x.re, y.im), mul(x.im, y.re))};
}

Complex div(Complex x, Complex y) {
  const Real denom = add(mul(y.re, y.re), mul(y.im, y.im));
  const Real re = add(mul(x.re, y.re), mul(x.im, y.im));
  const Real im = sub(mul(x.im, y.re), mul(x.re, y.im));
  return {div(re, denom), div(im, denom)};
}

double magnitude(Complex x) { return std::hypot(to_double(x.re), to_double(x.im)); }

}  // namespace nhmorse::verify::dd
