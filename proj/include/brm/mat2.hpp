#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

#include "brm/dd.hpp"

namespace brm {

using cx = std::complex<double>;

inline double magnitude(const cx& z) { return std::abs(z); }
inline double magnitude(const cdd& z) { return abs_approx(z); }

// 2x2 matrix over C (or over complex double-double for the high-precision
// determinant pipeline).  Row-major entries.
template <class C>
struct Mat2T {
  C a11{}, a12{}, a21{}, a22{};

  static Mat2T identity() { return {C(1), C(0), C(0), C(1)}; }

  C trace() const { return a11 + a22; }
  C det() const { return a11 * a22 - a12 * a21; }

  // Adjugate; equals the inverse for unimodular matrices.
  Mat2T adjugate() const { return {a22, -a12, -a21, a11}; }
  Mat2T inverse() const {
    C d = det();
    return {a22 / d, -a12 / d, -a21 / d, a11 / d};
  }

  Mat2T operator*(const Mat2T& o) const {
    return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
            a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
  }
  Mat2T operator+(const Mat2T& o) const {
    return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22};
  }
  Mat2T operator-(const Mat2T& o) const {
    return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22};
  }
  Mat2T operator-() const { return {-a11, -a12, -a21, -a22}; }

  double max_norm() const {
    return std::max(std::max(magnitude(a11), magnitude(a12)),
                    std::max(magnitude(a21), magnitude(a22)));
  }
};

template <class C>
inline Mat2T<C> operator*(const C& s, const Mat2T<C>& m) {
  return {s * m.a11, s * m.a12, s * m.a21, s * m.a22};
}

using Mat2C = Mat2T<cx>;
using Mat2H = Mat2T<cdd>;

inline Mat2H to_hp(const Mat2C& m) {
  return {cdd(m.a11), cdd(m.a12), cdd(m.a21), cdd(m.a22)};
}

inline Mat2C mat_mul(const Mat2C& a, const Mat2C& b) { return a * b; }

// a b a^-1 b^-1, with adjugates as inverses (inputs assumed unimodular).
template <class C>
inline Mat2T<C> commutator(const Mat2T<C>& a, const Mat2T<C>& b) {
  return a * b * a.adjugate() * b.adjugate();
}

// g m g^-1 for arbitrary invertible g.
template <class C>
inline Mat2T<C> conjugated_by(const Mat2T<C>& g, const Mat2T<C>& m) {
  return g * m * g.inverse();
}

// Max-entry norm of m^2 - tr(m) m + e; vanishes on SL(2,C).
inline double hamilton_cayley_check(const Mat2C& m) {
  Mat2C r = m * m - m.trace() * m + Mat2C::identity();
  return r.max_norm();
}

inline bool is_unimodular(const Mat2C& m, double tol = 1e-9) {
  return std::abs(m.det() - cx(1)) <= tol;
}

}  // namespace brm
