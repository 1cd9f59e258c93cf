#pragma once

#include <string>
#include <vector>

#include "brm/charvar.hpp"
#include "brm/laurent.hpp"
#include "brm/words.hpp"

namespace brm {

// Twisted Alexander polynomial, canonically normalized; the raw value is
// scale * s^unit * delta.
struct TapResult {
  LaurentPoly3 delta;
  std::string method;  // "fox" or "closed"
  int column = 0;      // deleted column for the fox route, 0 otherwise
  Exp3 unit{0, 0, 0};
  cx scale{1.0, 0.0};
};

// Ring homomorphism sending a group-ring element to a 2x2 matrix over the
// Laurent ring: each word contributes coeff * s^{abelianization} * rho(word).
template <class C>
Mat2LT<C> phi(const GroupRingElem& g, const std::vector<Mat2T<C>>& gens,
              const std::vector<int>& sigma) {
  Mat2LT<C> out;
  for (const auto& [coeff, word] : g.terms) {
    Exp3 e = word.abelianization(sigma);
    Mat2T<C> m = evaluate_word(word, gens);
    C c{static_cast<double>(coeff)};
    out.a11.add_term(e, c * m.a11);
    out.a12.add_term(e, c * m.a12);
    out.a21.add_term(e, c * m.a21);
    out.a22.add_term(e, c * m.a22);
  }
  out.a11.prune();
  out.a12.prune();
  out.a21.prune();
  out.a22.prune();
  return out;
}

Mat2L phi(const GroupRingElem& g, const Representation& rho,
          const std::vector<int>& sigma = {1, 2, 3});

// det Phi(M_v) with the Jacobian blocks flattened to a 2(l-1) square matrix
// over the Laurent ring.  Computed in double-double precision.
LaurentPoly3 det_phi_jacobian(const Presentation& p,
                              const std::vector<Mat2C>& gens, int v);

// Fox-calculus route: det Phi(M_v) / det Phi(1 - x_v), exact division.
TapResult tap_fox(const Presentation& p, const std::vector<Mat2C>& gens, int v,
                  double tol = defaults::tol_abs);
TapResult tap_fox(const Representation& rho, int v,
                  double tol = defaults::tol_abs);

// Closed form: prod_j (s_j + s_j^-1 - t_j) plus a constant depending on the
// component of the character.
LaurentPoly3 tap_closed_raw(const CharacterTuple& c,
                            const ComponentLabel& label);
TapResult tap_closed(const CharacterTuple& c, const ComponentLabel& label,
                     double tol = defaults::tol_abs);

// xi as a combination of four traces, and as the closed expression
// (t3^2-4) t123 - t3 t13 t23 + 2 t1 t23 + 2 t2 t13; equal on all triples.
cx xi_traces(const Mat2C& x1, const Mat2C& x2, const Mat2C& x3);
cx xi_closed(const CharacterTuple& c);
double xi_cross_check(const Representation& rho);

// eta_1..eta_3 of the determinant expansion; evaluate to t1 t3, t3, t2 t3
// on every representation of the link group.
std::array<cx, 3> eta_traces(const Mat2C& x1, const Mat2C& x2,
                             const Mat2C& x3);
std::array<cx, 3> eta_closed(const CharacterTuple& c);
double eta_cross_check(const Representation& rho);

struct SpanInfo {
  std::array<int, 3> per_variable{0, 0, 0};
  int total = 0;
};
SpanInfo span_degree(const LaurentPoly3& p);

// The u, v matrices of the 2x2 determinant form of the Fox route
// (u = (s1 e - x3 x1 x3^-1)(e - s2 x2) x3, v = (s1 e - x1)(s2 x2 - e));
// det(s3 u + v) reproduces the polynomial up to a unit.
Mat2L tap_u_matrix(const Representation& rho);
Mat2L tap_v_matrix(const Representation& rho);

}  // namespace brm
