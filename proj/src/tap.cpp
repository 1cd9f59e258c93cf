#include "brm/tap.hpp"

#include <cmath>

namespace brm {

Mat2L phi(const GroupRingElem& g, const Representation& rho,
          const std::vector<int>& sigma) {
  return phi(g, rho.matrices(), sigma);
}

namespace {

// 1 - x_v as a group-ring element.
GroupRingElem one_minus_gen(int v) {
  return GroupRingElem::one() - GroupRingElem::from_word(FreeWord::generator(v));
}

std::vector<Mat2H> to_hp_gens(const std::vector<Mat2C>& gens) {
  std::vector<Mat2H> out;
  out.reserve(gens.size());
  for (const Mat2C& m : gens) out.push_back(to_hp(m));
  return out;
}

LaurentPoly3H det_phi_jacobian_hp(const Presentation& p,
                                  const std::vector<Mat2C>& gens, int v) {
  if (static_cast<int>(gens.size()) != p.generators)
    throw IndexError("matrix count does not match the presentation");
  if (static_cast<int>(p.relators.size()) != p.generators - 1)
    throw DomainError("presentation needs l-1 relators");
  auto mv = delete_column(jacobian(p), v);
  auto hp = to_hp_gens(gens);
  const std::size_t n = mv.size();
  std::vector<std::vector<LaurentPoly3H>> flat(2 * n,
                                               std::vector<LaurentPoly3H>(2 * n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Mat2LH block = phi(mv[r][c], hp, p.abelianization);
      flat[2 * r][2 * c] = block.a11;
      flat[2 * r][2 * c + 1] = block.a12;
      flat[2 * r + 1][2 * c] = block.a21;
      flat[2 * r + 1][2 * c + 1] = block.a22;
    }
  return det_poly_matrix(flat);
}

}  // namespace

LaurentPoly3 det_phi_jacobian(const Presentation& p,
                              const std::vector<Mat2C>& gens, int v) {
  return to_double_poly(det_phi_jacobian_hp(p, gens, v));
}

TapResult tap_fox(const Presentation& p, const std::vector<Mat2C>& gens, int v,
                  double tol) {
  LaurentPoly3H num = det_phi_jacobian_hp(p, gens, v);
  auto hp = to_hp_gens(gens);
  Mat2LH den_m = phi(one_minus_gen(v), hp, p.abelianization);
  LaurentPoly3H den = matl_det(den_m);
  if (den.is_zero()) throw DegenerateError("det Phi(1 - x_v) vanishes");
  LaurentPoly3H q = lp_divide_exact(num, den, p.abelianization[v - 1], tol);
  CanonicalForm cf = canonical_form(to_double_poly(q));
  return {cf.normalized, "fox", v, cf.unit, cf.scale};
}

TapResult tap_fox(const Representation& rho, int v, double tol) {
  return tap_fox(borromean_presentation(), rho.matrices(), v, tol);
}

LaurentPoly3 tap_closed_raw(const CharacterTuple& c,
                            const ComponentLabel& label) {
  LaurentPoly3 prod = LaurentPoly3::one();
  const cx ts[3] = {c.t1, c.t2, c.t3};
  for (int j = 1; j <= 3; ++j) {
    LaurentPoly3 f = LaurentPoly3::variable(j, 1) +
                     LaurentPoly3::variable(j, -1) +
                     LaurentPoly3::constant(-ts[j - 1]);
    prod = prod * f;
  }
  cx constant{0.0, 0.0};
  switch (label.kind) {
    case ComponentKind::X1Plus:
    case ComponentKind::X1Minus:
    case ComponentKind::X2:
      break;
    case ComponentKind::X3:
      constant = 4.0 * c.t123 + c.t1 * c.t2 * c.t3;
      break;
    case ComponentKind::X4: {
      if (!c.theta) throw MissingThetaError("X4 closed form needs theta");
      cx th = *c.theta;
      constant = th * th * c.t1 * c.t2 * c.t3;
      break;
    }
    case ComponentKind::Custom:
      throw LabelMismatchError("no closed form for the Custom label");
  }
  return prod + LaurentPoly3::constant(constant);
}

TapResult tap_closed(const CharacterTuple& c, const ComponentLabel& label,
                     double tol) {
  if (!component_membership(c, label, tol))
    throw LabelMismatchError("character is not on component " + label.str());
  CanonicalForm cf = canonical_form(tap_closed_raw(c, label));
  return {cf.normalized, "closed", 0, cf.unit, cf.scale};
}

namespace {
cx word_trace(const std::string& text, const std::vector<Mat2C>& gens) {
  return evaluate_word(parse_word(text), gens).trace();
}
}  // namespace

cx xi_traces(const Mat2C& x1, const Mat2C& x2, const Mat2C& x3) {
  std::vector<Mat2C> g{x1, x2, x3};
  return word_trace("x2 x3 X1", g) + word_trace("x3 X2 X1", g) +
         word_trace("x3 x1 X3 x2 x3", g) + word_trace("x3 x1 X2", g);
}

cx xi_closed(const CharacterTuple& c) {
  return (c.t3 * c.t3 - 4.0) * c.t123 - c.t3 * c.t13 * c.t23 +
         2.0 * c.t1 * c.t23 + 2.0 * c.t2 * c.t13;
}

double xi_cross_check(const Representation& rho) {
  return std::abs(xi_traces(rho.x1, rho.x2, rho.x3) -
                  xi_closed(character_of(rho)));
}

std::array<cx, 3> eta_traces(const Mat2C& x1, const Mat2C& x2,
                             const Mat2C& x3) {
  std::vector<Mat2C> g{x1, x2, x3};
  cx eta1 = word_trace("x2 x3 X2 X1", g) + word_trace("x3 x1 [X3,x2]", g);
  cx eta2 = word_trace("x3 x1 [X3,x2] X1", g);
  cx eta3 = word_trace("x3 x1 X3 x2 x3 X1", g) + word_trace("x3 x1 X2 X1", g);
  return {eta1, eta2, eta3};
}

std::array<cx, 3> eta_closed(const CharacterTuple& c) {
  return {c.t1 * c.t3, c.t3, c.t2 * c.t3};
}

double eta_cross_check(const Representation& rho) {
  auto a = eta_traces(rho.x1, rho.x2, rho.x3);
  auto b = eta_closed(character_of(rho));
  double r = 0.0;
  for (int k = 0; k < 3; ++k) r = std::max(r, std::abs(a[k] - b[k]));
  return r;
}

SpanInfo span_degree(const LaurentPoly3& p) {
  if (p.is_zero()) throw ZeroPolynomialError("span of the zero polynomial");
  SpanInfo s;
  Exp3 lo = p.min_exponents();
  Exp3 hi = p.max_exponents();
  for (int k = 0; k < 3; ++k) {
    s.per_variable[k] = hi[k] - lo[k];
    s.total += s.per_variable[k];
  }
  return s;
}

Mat2L tap_u_matrix(const Representation& rho) {
  LaurentPoly3 s1 = LaurentPoly3::variable(1);
  LaurentPoly3 s2 = LaurentPoly3::variable(2);
  // (s1 e - x3 x1 X3)(e - s2 x2) x3 with the abelianization monomials of the
  // words themselves excluded: matrix coefficients only.
  std::vector<Mat2C> g = rho.matrices();
  auto embed = [](const Mat2C& m) {
    Mat2L r;
    r.a11 = LaurentPoly3::constant(m.a11);
    r.a12 = LaurentPoly3::constant(m.a12);
    r.a21 = LaurentPoly3::constant(m.a21);
    r.a22 = LaurentPoly3::constant(m.a22);
    return r;
  };
  Mat2L e = Mat2L::identity();
  Mat2L conj31 = embed(evaluate_word(parse_word("x3 x1 X3"), g));
  Mat2L x2m = embed(g[1]);
  Mat2L x3m = embed(g[2]);
  Mat2L left = e.scaled(s1) - conj31;
  Mat2L mid = e - x2m.scaled(s2);
  return left * mid * x3m;
}

Mat2L tap_v_matrix(const Representation& rho) {
  LaurentPoly3 s1 = LaurentPoly3::variable(1);
  LaurentPoly3 s2 = LaurentPoly3::variable(2);
  std::vector<Mat2C> g = rho.matrices();
  auto embed = [](const Mat2C& m) {
    Mat2L r;
    r.a11 = LaurentPoly3::constant(m.a11);
    r.a12 = LaurentPoly3::constant(m.a12);
    r.a21 = LaurentPoly3::constant(m.a21);
    r.a22 = LaurentPoly3::constant(m.a22);
    return r;
  };
  Mat2L e = Mat2L::identity();
  Mat2L x1m = embed(g[0]);
  Mat2L x2m = embed(g[1]);
  return (e.scaled(s1) - x1m) * (x2m.scaled(s2) - e);
}

}  // namespace brm
