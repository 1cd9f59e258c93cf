#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brm/errors.hpp"
#include "brm/mat2.hpp"
#include "brm/words.hpp"

namespace brm {

// --- component labels ----------------------------------------------------

enum class ComponentKind { X1Plus, X1Minus, X2, X3, X4, Custom };

struct ComponentLabel {
  ComponentKind kind = ComponentKind::Custom;
  int index = 0;  // 1..3 for the indexed families, 0 otherwise

  std::string str() const;
  static ComponentLabel parse(const std::string& s);
  friend bool operator==(const ComponentLabel&, const ComponentLabel&) = default;
};

struct ClassifiedLabel {
  ComponentLabel label;
  bool boundary = false;  // an open condition holds with margin below tol
};

// --- core data -----------------------------------------------------------

struct Representation {
  Mat2C x1, x2, x3;
  ComponentLabel label{ComponentKind::Custom, 0};
  std::map<std::string, cx> params;

  const Mat2C& x(int i) const;
  std::vector<Mat2C> matrices() const { return {x1, x2, x3}; }
};

// The seven trace coordinates (t1,t2,t3,t12,t13,t23,t123), plus the cover
// parameter theta when the point comes from the canonical component.
struct CharacterTuple {
  cx t1{}, t2{}, t3{}, t12{}, t13{}, t23{}, t123{};
  std::optional<cx> theta;

  cx pair(int i, int j) const;  // t_{ij} = t_{ji}
  cx t(int i) const;            // t_i, index mod 3
};

// nu0, nu1 of the trace hypersurface; the residual t123^2 - nu1 t123 + nu0
// vanishes for the character of any SL(2,C) triple.
cx f3_nu0(const CharacterTuple& c);
cx f3_nu1(const CharacterTuple& c);
double f3_residual(const CharacterTuple& c);

// f_{i,j} = t_i^2 + t_j^2 + t_ij^2 - t_i t_j t_ij - 2 = tr([x_i, x_j]).
cx f_ij(const CharacterTuple& c, int i, int j);
cx f_from_traces(const cx& ti, const cx& tj, const cx& tij);

// --- matrix constructors ---------------------------------------------------

Mat2C mk_w();
Mat2C mk_d(const cx& kappa);
Mat2C mk_p(const cx& u);
Mat2C mk_p();  // p = p(1)

// Trace-t matrix with prescribed product behaviour; requires mu != 0,
// lambda != -1 and lambda + 1/lambda != t^2 - 2, +-2.
Mat2C mk_h(const cx& t, const cx& lambda, const cx& mu);
// Trace-t matrix pairing to commutator -p; requires t != 0.
Mat2C mk_k(const cx& t, const cx& alpha);

// Left side minus right side of the pairing conditions:
//   (a) (lambda-1) t1 t2 = lambda d1 nu / mu - d2 mu / nu,
//   (c) t1^-1 t2 (a^2+1) + t1 t2^-1 (b^2+1) = 2ab + t2 a - t1 b.
cx commutator_condition_residual_a(const cx& t1, const cx& t2,
                                   const cx& lambda, const cx& mu,
                                   const cx& nu);
cx commutator_condition_residual_c(const cx& t1, const cx& t2, const cx& alpha,
                                   const cx& beta);

// --- realizers -------------------------------------------------------------

// x_i = +-e; the two free slots are the remaining generators in increasing
// index order.  Throws ReducibleError when they share an eigenvector.
Representation realize_x1(int i, int sign, const Mat2C& x_prev,
                          const Mat2C& x_next, double tol = defaults::tol_abs);

// x_i = w and the remaining generators (in increasing index order) diagonal.
Representation realize_x2(int i, const cx& kappa_prev, const cx& kappa_next,
                          double tol = defaults::tol_abs);

// x_{i-1} = w, x_{i+1} = d(sqrt(-1)); t_prev_pair pairs x_i with x_{i-1},
// t_next_pair pairs x_i with x_{i+1} (indices mod 3).
Representation realize_x3(int i, const cx& t_i, const cx& t_prev_pair,
                          const cx& t_next_pair, const cx& t123,
                          double tol = defaults::tol_abs);

// Canonical-component representation for (t1,t2,t3,theta) on the quartic.
// kappa_branch 0 picks the root of k^2 - t3 k + 1 with |k| >= 1 (ties broken
// by arg in [0, pi)); branch 1 picks the other root.
Representation realize_x4(const cx& t1, const cx& t2, const cx& t3,
                          const cx& theta, int kappa_branch = 0,
                          double tol = defaults::tol_abs);

// --- canonical component geometry ------------------------------------------

// Roots theta != 0 of
// theta^4 + (4/t1^2+4/t2^2+4/t3^2-2) theta^2 + prod(1-4/ti^2) = 0.
std::vector<cx> solve_theta(const cx& t1, const cx& t2, const cx& t3,
                            double tol = defaults::tol_abs);
double theta_quartic_residual(const cx& t1, const cx& t2, const cx& t3,
                              const cx& theta);

// The two t3 over a base point (t1,t2,theta) of the 2-fold cover.
std::pair<cx, cx> cover_t3(const cx& t1, const cx& t2, const cx& theta,
                           double tol = defaults::tol_abs);
// Symbol-permuted covers over the (t2,t3)- and (t1,t3)-planes.
std::pair<cx, cx> cover_t1(const cx& t2, const cx& t3, const cx& theta,
                           double tol = defaults::tol_abs);
std::pair<cx, cx> cover_t2(const cx& t1, const cx& t3, const cx& theta,
                           double tol = defaults::tol_abs);

cx kappa_of_t3(const cx& t3, int branch = 0);
cx lambda_from_theta(const cx& kappa, const cx& theta, const cx& t3);

// Residuals of the intermediate scalar identities along the X4 derivation;
// all vanish when (t1,t2,t3,theta) satisfies the quartic.
struct X4Consistency {
  double case1_1, case1_2, mu_product, cover;
  double max() const;
};
X4Consistency x4_internal_consistency(const cx& t1, const cx& t2, const cx& t3,
                                      const cx& theta, int kappa_branch = 0);

// --- characters and classification ------------------------------------------

CharacterTuple character_of(const Representation& rho);
CharacterTuple character_of(const Mat2C& x1, const Mat2C& x2, const Mat2C& x3);

// theta recovered from the trace coordinates via t12 = (theta+1)/2 t1 t2.
cx theta_from_character(const CharacterTuple& c);

// Every component whose defining equations hold within tol.  Open
// conditions holding with margin below tol set the boundary flag.
std::vector<ClassifiedLabel> classify(const CharacterTuple& c,
                                      double tol = defaults::tol_abs);
bool component_membership(const CharacterTuple& c, const ComponentLabel& label,
                          double tol = defaults::tol_abs,
                          bool* boundary = nullptr);

bool irreducibility_check(const Mat2C& x1, const Mat2C& x2, const Mat2C& x3,
                          double tol = defaults::tol_abs);
bool irreducibility_check(const Representation& rho,
                          double tol = defaults::tol_abs);

// [a,b] = -e detected through t1 = t2 = tr(ab) = 0.
bool commutator_minus_e_check(const Mat2C& a, const Mat2C& b,
                              double tol = defaults::tol_abs);

double relation_implication_check(const Representation& rho,
                                  double tol = defaults::tol_abs);

// Conjugate the whole representation by g (character unchanged).
Representation conjugated(const Representation& rho, const Mat2C& g);
// Conjugate by d(c) with c chosen to balance off-diagonal magnitudes.
Representation balanced(const Representation& rho);

// Verification report used by the CLI and the test suites.
struct VerificationReport {
  std::array<double, 3> relation;
  double implication;
  std::array<double, 3> unimodular;
  bool irreducible;
  double f3;
  bool pass(double tol = defaults::tol_abs) const;
};
VerificationReport verify_representation(const Representation& rho,
                                         double tol = defaults::tol_abs);

}  // namespace brm
