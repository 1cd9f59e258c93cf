#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "brm/errors.hpp"
#include "brm/mat2.hpp"

namespace brm {

// Exponent vector of a monomial s1^k1 s2^k2 s3^k3.
using Exp3 = std::array<int, 3>;

inline Exp3 operator+(const Exp3& a, const Exp3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline Exp3 operator-(const Exp3& a, const Exp3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
inline Exp3 operator-(const Exp3& a) { return {-a[0], -a[1], -a[2]}; }

template <class C>
struct lp_traits {
  static constexpr double prune_rel = 1e-12;
};
template <>
struct lp_traits<cdd> {
  static constexpr double prune_rel = 1e-26;
};

// Sparse Laurent polynomial in s1, s2, s3.  Terms are kept in lexicographic
// exponent order; coefficients below prune_rel times the largest one are
// dropped, and the zero polynomial has an empty term map.
template <class C>
class LaurentPoly3T {
 public:
  std::map<Exp3, C> terms;

  LaurentPoly3T() = default;

  static LaurentPoly3T zero() { return {}; }
  static LaurentPoly3T constant(const C& c) { return monomial({0, 0, 0}, c); }
  static LaurentPoly3T one() { return constant(C(1)); }
  static LaurentPoly3T monomial(const Exp3& e, const C& c) {
    LaurentPoly3T p;
    if (magnitude(c) != 0.0) p.terms.emplace(e, c);
    return p;
  }
  // s_var^k, var in {1,2,3}
  static LaurentPoly3T variable(int var, int k = 1) {
    if (var < 1 || var > 3) throw IndexError("variable index out of range");
    Exp3 e{0, 0, 0};
    e[var - 1] = k;
    return monomial(e, C(1));
  }

  bool is_zero() const { return terms.empty(); }

  double max_abs() const {
    double m = 0.0;
    for (const auto& [e, c] : terms) m = std::max(m, magnitude(c));
    return m;
  }

  LaurentPoly3T& prune(double rel = lp_traits<C>::prune_rel) {
    double cut = rel * max_abs();
    for (auto it = terms.begin(); it != terms.end();) {
      if (magnitude(it->second) <= cut)
        it = terms.erase(it);
      else
        ++it;
    }
    return *this;
  }

  LaurentPoly3T& add_term(const Exp3& e, const C& c) {
    auto [it, inserted] = terms.emplace(e, c);
    if (!inserted) it->second += c;
    return *this;
  }

  LaurentPoly3T operator+(const LaurentPoly3T& o) const {
    LaurentPoly3T r = *this;
    for (const auto& [e, c] : o.terms) r.add_term(e, c);
    r.prune();
    return r;
  }
  LaurentPoly3T operator-() const {
    LaurentPoly3T r;
    for (const auto& [e, c] : terms) r.terms.emplace(e, -c);
    return r;
  }
  LaurentPoly3T operator-(const LaurentPoly3T& o) const {
    return *this + (-o);
  }
  LaurentPoly3T operator*(const LaurentPoly3T& o) const {
    LaurentPoly3T r;
    for (const auto& [e1, c1] : terms)
      for (const auto& [e2, c2] : o.terms) r.add_term(e1 + e2, c1 * c2);
    r.prune();
    return r;
  }
  LaurentPoly3T& operator+=(const LaurentPoly3T& o) { return *this = *this + o; }
  LaurentPoly3T& operator-=(const LaurentPoly3T& o) { return *this = *this - o; }
  LaurentPoly3T& operator*=(const LaurentPoly3T& o) { return *this = *this * o; }

  LaurentPoly3T scaled(const C& s) const {
    LaurentPoly3T r;
    for (const auto& [e, c] : terms) r.terms.emplace(e, s * c);
    r.prune();
    return r;
  }

  LaurentPoly3T shifted(const Exp3& d) const {
    LaurentPoly3T r;
    for (const auto& [e, c] : terms) r.terms.emplace(e + d, c);
    return r;
  }

  // Componentwise minimum exponent over all terms.
  Exp3 min_exponents() const {
    if (terms.empty()) throw ZeroPolynomialError("zero polynomial");
    Exp3 m = terms.begin()->first;
    for (const auto& [e, c] : terms)
      for (int k = 0; k < 3; ++k) m[k] = std::min(m[k], e[k]);
    return m;
  }
  Exp3 max_exponents() const {
    if (terms.empty()) throw ZeroPolynomialError("zero polynomial");
    Exp3 m = terms.begin()->first;
    for (const auto& [e, c] : terms)
      for (int k = 0; k < 3; ++k) m[k] = std::max(m[k], e[k]);
    return m;
  }
};

using LaurentPoly3 = LaurentPoly3T<cx>;
using LaurentPoly3H = LaurentPoly3T<cdd>;

inline LaurentPoly3 to_double_poly(const LaurentPoly3H& p) {
  LaurentPoly3 r;
  for (const auto& [e, c] : p.terms) r.terms.emplace(e, to_complex(c));
  r.prune();
  return r;
}
inline LaurentPoly3H to_hp_poly(const LaurentPoly3 & p) {
  LaurentPoly3H r;
  for (const auto& [e, c] : p.terms) r.terms.emplace(e, cdd(c));
  return r;
}

inline LaurentPoly3 lp_mul(const LaurentPoly3& p, const LaurentPoly3& q) {
  return p * q;
}

// --- canonical form ---------------------------------------------------

// p = scale * s^unit * normalized, where normalized has all minimum
// exponents at 0 and leading coefficient (lex-smallest exponent) 1.
struct CanonicalForm {
  LaurentPoly3 normalized;
  Exp3 unit{0, 0, 0};
  cx scale{1.0, 0.0};
};

inline CanonicalForm canonical_form(const LaurentPoly3& p,
                                    double prune_rel = defaults::prune_threshold) {
  LaurentPoly3 q = p;
  q.prune(prune_rel);
  if (q.is_zero()) throw ZeroPolynomialError("cannot normalize zero polynomial");
  CanonicalForm cf;
  cf.unit = q.min_exponents();
  q = q.shifted(-cf.unit);
  cf.scale = q.terms.begin()->second;
  cf.normalized = q.scaled(cx(1.0) / cf.scale);
  return cf;
}

// --- equality up to a monomial unit -----------------------------------

struct UnitComparison {
  bool equal = false;
  Exp3 unit{0, 0, 0};  // p ~ scale * s^unit * q
  cx scale{1.0, 0.0};
};

inline bool approx_equal(const LaurentPoly3& p, const LaurentPoly3& q,
                         double tol) {
  double scale = std::max({1.0, p.max_abs(), q.max_abs()});
  LaurentPoly3 d = p - q;
  return d.max_abs() <= tol * scale;
}

inline UnitComparison equal_up_to_unit(const LaurentPoly3& p,
                                       const LaurentPoly3& q,
                                       double tol = defaults::tol_abs) {
  if (p.is_zero() || q.is_zero()) return {};
  CanonicalForm cp = canonical_form(p);
  CanonicalForm cq = canonical_form(q);
  if (!approx_equal(cp.normalized, cq.normalized, tol)) return {};
  return {true, cp.unit - cq.unit, cp.scale / cq.scale};
}

// --- exact division ----------------------------------------------------

// Divide num by den, den quadratic in s_var (shape c*(s^2 - t s + 1) up to a
// monomial) with Laurent coefficients in the other two variables.  Throws
// NotDivisibleError when the relative remainder exceeds tol.
template <class C>
LaurentPoly3T<C> lp_divide_exact(const LaurentPoly3T<C>& num,
                                 const LaurentPoly3T<C>& den, int var,
                                 double tol = defaults::tol_abs) {
  if (var < 1 || var > 3) throw IndexError("variable index out of range");
  const int k = var - 1;
  if (den.is_zero()) throw DomainError("division by zero polynomial");
  if (num.is_zero()) return {};

  // Slice a polynomial by its s_var exponent.
  auto slice = [&](const LaurentPoly3T<C>& p) {
    std::map<int, LaurentPoly3T<C>> s;
    for (const auto& [e, c] : p.terms) {
      Exp3 r = e;
      r[k] = 0;
      s[e[k]].terms.emplace(r, c);
    }
    return s;
  };

  auto dens = slice(den);
  int dlo = dens.begin()->first, dhi = dens.rbegin()->first;
  if (dhi - dlo != 2)
    throw DomainError("denominator is not quadratic in the chosen variable");
  const LaurentPoly3T<C>& d2 = dens.at(dhi);
  if (d2.terms.size() != 1)
    throw DomainError("denominator leading coefficient is not a monomial");
  const Exp3 lead_exp = d2.terms.begin()->first;
  const C lead_coef = d2.terms.begin()->second;
  LaurentPoly3T<C> d1 = dens.count(dhi - 1) ? dens.at(dhi - 1)
                                            : LaurentPoly3T<C>::zero();
  LaurentPoly3T<C> d0 = dens.at(dlo);

  auto rem = slice(num);
  const double num_norm = num.max_abs();
  const int nlo = rem.begin()->first;
  LaurentPoly3T<C> quotient;

  while (!rem.empty()) {
    int top = rem.rbegin()->first;
    if (top < nlo + 2) break;
    LaurentPoly3T<C> qc;  // top coefficient divided by the leading monomial
    for (const auto& [e, c] : rem.rbegin()->second.terms)
      qc.terms.emplace(e - lead_exp, c / lead_coef);
    rem.erase(top);
    auto sub = [&](int vexp, const LaurentPoly3T<C>& dp) {
      if (dp.is_zero()) return;
      LaurentPoly3T<C>& slot = rem[vexp];
      slot -= qc * dp;
      if (slot.is_zero()) rem.erase(vexp);
    };
    sub(top - 1, d1);
    sub(top - 2, d0);
    for (const auto& [e, c] : qc.terms) {
      Exp3 qe = e;
      qe[k] = top - dhi;
      quotient.add_term(qe, c);
    }
  }

  double rem_norm = 0.0;
  for (const auto& [v, p] : rem) rem_norm = std::max(rem_norm, p.max_abs());
  if (rem_norm > tol * std::max(1.0, num_norm))
    throw NotDivisibleError("polynomial division leaves a remainder");
  quotient.prune();
  return quotient;
}

// --- 2x2 matrices over the Laurent ring ---------------------------------

template <class C>
struct Mat2LT {
  using P = LaurentPoly3T<C>;
  P a11, a12, a21, a22;

  static Mat2LT identity() {
    return {P::one(), P::zero(), P::zero(), P::one()};
  }
  static Mat2LT zero() { return {}; }

  P trace() const { return a11 + a22; }
  Mat2LT adjugate() const { return {a22, -a12, -a21, a11}; }

  Mat2LT operator+(const Mat2LT& o) const {
    return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22};
  }
  Mat2LT operator-(const Mat2LT& o) const {
    return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22};
  }
  Mat2LT operator-() const { return {-a11, -a12, -a21, -a22}; }
  Mat2LT operator*(const Mat2LT& o) const {
    return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
            a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
  }

  Mat2LT scaled(const P& p) const {
    return {p * a11, p * a12, p * a21, p * a22};
  }
};

using Mat2L = Mat2LT<cx>;
using Mat2LH = Mat2LT<cdd>;

template <class C>
LaurentPoly3T<C> matl_det(const Mat2LT<C>& m) {
  return m.a11 * m.a22 - m.a12 * m.a21;
}

// Determinant of an n x n matrix over the Laurent ring, by dynamic
// programming over column subsets (Laplace expansion row by row).
template <class C>
LaurentPoly3T<C> det_poly_matrix(
    const std::vector<std::vector<LaurentPoly3T<C>>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return LaurentPoly3T<C>::one();
  for (const auto& row : a)
    if (row.size() != n) throw IndexError("determinant of non-square matrix");
  std::vector<LaurentPoly3T<C>> dp(std::size_t(1) << n);
  dp[0] = LaurentPoly3T<C>::one();
  for (std::size_t row = 0; row < n; ++row) {
    std::vector<LaurentPoly3T<C>> next(std::size_t(1) << n);
    for (std::size_t s = 0; s < dp.size(); ++s) {
      if (dp[s].is_zero()) continue;
      if (static_cast<std::size_t>(__builtin_popcountll(s)) != row) continue;
      int parity = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (s & (std::size_t(1) << j)) {
          ++parity;
          continue;
        }
        if (a[row][j].is_zero()) continue;
        LaurentPoly3T<C> contrib = dp[s] * a[row][j];
        if ((row + parity) & 1) contrib = -contrib;
        next[s | (std::size_t(1) << j)] += contrib;
      }
    }
    dp = std::move(next);
  }
  return dp[(std::size_t(1) << n) - 1];
}

}  // namespace brm
