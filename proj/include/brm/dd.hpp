#pragma once

#include <cmath>
#include <complex>

namespace brm {

// Double-double scalar (~31 significant digits).  The Fox-calculus route
// evaluates determinants whose permutation terms cancel down by many orders
// of magnitude, so the intermediate arithmetic runs at extended precision
// and only the final quotient is rounded back to double.
struct dd {
  double hi = 0.0;
  double lo = 0.0;
  dd() = default;
  dd(double h) : hi(h) {}
  dd(double h, double l) : hi(h), lo(l) {}
};

namespace dd_detail {
inline dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}
inline dd quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}
inline dd two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}
}  // namespace dd_detail

inline dd operator+(dd a, dd b) {
  dd s = dd_detail::two_sum(a.hi, b.hi);
  return dd_detail::quick_two_sum(s.hi, s.lo + a.lo + b.lo);
}
inline dd operator-(dd a) { return {-a.hi, -a.lo}; }
inline dd operator-(dd a, dd b) { return a + (-b); }
inline dd operator*(dd a, dd b) {
  dd p = dd_detail::two_prod(a.hi, b.hi);
  return dd_detail::quick_two_sum(p.hi, p.lo + a.hi * b.lo + a.lo * b.hi);
}
inline dd operator/(dd a, dd b) {
  double q1 = a.hi / b.hi;
  dd r = a - dd(q1) * b;
  double q2 = r.hi / b.hi;
  r = r - dd(q2) * b;
  double q3 = r.hi / b.hi;
  return dd_detail::quick_two_sum(q1, q2) + dd(q3);
}
inline dd& operator+=(dd& a, dd b) { return a = a + b; }
inline dd& operator-=(dd& a, dd b) { return a = a - b; }
inline dd& operator*=(dd& a, dd b) { return a = a * b; }

inline double to_double(dd a) { return a.hi + a.lo; }

// Complex double-double.
struct cdd {
  dd re, im;
  cdd() = default;
  cdd(dd r, dd i) : re(r), im(i) {}
  cdd(double r, double i = 0.0) : re(r), im(i) {}
  cdd(const std::complex<double>& z) : re(z.real()), im(z.imag()) {}
};

inline cdd operator+(cdd a, cdd b) { return {a.re + b.re, a.im + b.im}; }
inline cdd operator-(cdd a, cdd b) { return {a.re - b.re, a.im - b.im}; }
inline cdd operator-(cdd a) { return {-a.re, -a.im}; }
inline cdd operator*(cdd a, cdd b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline cdd operator/(cdd a, cdd b) {
  dd n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
inline cdd& operator+=(cdd& a, cdd b) { return a = a + b; }
inline cdd& operator-=(cdd& a, cdd b) { return a = a - b; }
inline cdd& operator*=(cdd& a, cdd b) { return a = a * b; }

inline std::complex<double> to_complex(cdd a) {
  return {to_double(a.re), to_double(a.im)};
}
inline double abs_approx(cdd a) {
  return std::hypot(to_double(a.re), to_double(a.im));
}

}  // namespace brm
