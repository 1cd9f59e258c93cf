#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "brm/errors.hpp"
#include "brm/mat2.hpp"

namespace brm {

// One letter x_j^{+1} or x_j^{-1} of a free-group word.
struct Letter {
  int gen = 1;   // generator index, 1-based
  int sign = 1;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Freely reduced word in the free group on x1, x2, ...  Concatenation
// cancels adjacent inverse pairs, so the reduced-form invariant holds for
// every value this class produces.
class FreeWord {
 public:
  FreeWord() = default;

  static FreeWord generator(int j, int sign = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  FreeWord operator*(const FreeWord& o) const;
  FreeWord inverse() const;

  // Exponent-sum image under the abelianization x_j -> s_{sigma(j)}.
  std::array<int, 3> abelianization(const std::vector<int>& sigma) const;

  // Space-separated letters, "x2 X1 x3"; the empty word prints as "".
  std::string str() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  // shortlex, for deterministic group-ring term order
  bool operator<(const FreeWord& o) const {
    if (letters_.size() != o.letters_.size())
      return letters_.size() < o.letters_.size();
    return letters_ < o.letters_;
  }

  void push_reduced(const Letter& l);

 private:
  std::vector<Letter> letters_;
};

FreeWord commutator(const FreeWord& u, const FreeWord& v);  // u v u^-1 v^-1
FreeWord conj_word(const FreeWord& u, const FreeWord& v);   // u v u^-1

// Grammar: xN = generator, XN = its inverse, [u,v] = commutator,
// (w) = grouping, juxtaposition = product, whitespace ignored.
FreeWord parse_word(const std::string& text);

// Integer combination of free-group words.  Terms are sorted (shortlex)
// and merged; zero coefficients are dropped.
struct GroupRingElem {
  std::vector<std::pair<long long, FreeWord>> terms;

  static GroupRingElem zero() { return {}; }
  static GroupRingElem one() { return from_word(FreeWord{}); }
  static GroupRingElem from_word(const FreeWord& w, long long coeff = 1);

  bool is_zero() const { return terms.empty(); }

  GroupRingElem operator+(const GroupRingElem& o) const;
  GroupRingElem operator-() const;
  GroupRingElem operator-(const GroupRingElem& o) const;
  GroupRingElem operator*(const GroupRingElem& o) const;

  friend bool operator==(const GroupRingElem&, const GroupRingElem&) = default;
};

// Fox free derivative d r / d x_j, evaluated in the free group ring.
GroupRingElem fox_derivative(const FreeWord& r, int j);

struct Presentation {
  int generators = 0;
  std::vector<FreeWord> relators;
  std::vector<int> abelianization;  // generator index -> meridian index
};

// <x1,x2,x3 | [x2,[x3,X1]], [x3,[x1,X2]]>
Presentation borromean_presentation();
// Six-generator crossing presentation; generators 4..6 are the second
// meridian of each component (y_i), abelianized to the same s_i.
Presentation borromean_wirtinger_presentation();

// (l-1) x l matrix of Fox derivatives of the relators.
std::vector<std::vector<GroupRingElem>> jacobian(const Presentation& p);
std::vector<std::vector<GroupRingElem>> delete_column(
    const std::vector<std::vector<GroupRingElem>>& m, int v);

// [x_i, [x_{i+1}, x_{i-1}^-1]], indices mod 3 in {1,2,3}.
FreeWord borromean_relator(int i);

template <class C>
Mat2T<C> evaluate_word(const FreeWord& w, const std::vector<Mat2T<C>>& gens) {
  Mat2T<C> r = Mat2T<C>::identity();
  for (const Letter& l : w.letters()) {
    if (l.gen < 1 || static_cast<std::size_t>(l.gen) > gens.size())
      throw IndexError("word uses generator outside the representation");
    const Mat2T<C>& g = gens[l.gen - 1];
    r = r * (l.sign > 0 ? g : g.adjugate());
  }
  return r;
}

// Residual of relation i on a triple of matrices.
double relation_residual(int i, const Mat2C& x1, const Mat2C& x2,
                         const Mat2C& x3);
std::array<double, 3> relation_residuals(const Mat2C& x1, const Mat2C& x2,
                                         const Mat2C& x3);

// Residual of the omitted relation [x1,[x2,X3]], given that the two
// defining relations already hold within tol.
double relation_implication_check(const Mat2C& x1, const Mat2C& x2,
                                  const Mat2C& x3,
                                  double tol = defaults::tol_abs);

}  // namespace brm
