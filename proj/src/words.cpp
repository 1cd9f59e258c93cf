#include "brm/words.hpp"

#include <cctype>
#include <map>

namespace brm {

FreeWord FreeWord::generator(int j, int sign) {
  if (j < 1) throw DomainError("generator index must be >= 1");
  if (sign != 1 && sign != -1) throw DomainError("letter sign must be +-1");
  FreeWord w;
  w.letters_.push_back({j, sign});
  return w;
}

void FreeWord::push_reduced(const Letter& l) {
  if (!letters_.empty() && letters_.back().gen == l.gen &&
      letters_.back().sign == -l.sign) {
    letters_.pop_back();
  } else {
    letters_.push_back(l);
  }
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
  FreeWord r = *this;
  for (const Letter& l : o.letters_) r.push_reduced(l);
  return r;
}

FreeWord FreeWord::inverse() const {
  FreeWord r;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    r.letters_.push_back({it->gen, -it->sign});
  return r;
}

std::array<int, 3> FreeWord::abelianization(const std::vector<int>& sigma) const {
  std::array<int, 3> e{0, 0, 0};
  for (const Letter& l : letters_) {
    if (l.gen < 1 || static_cast<std::size_t>(l.gen) > sigma.size())
      throw IndexError("generator outside abelianization table");
    int m = sigma[l.gen - 1];
    if (m < 1 || m > 3) throw IndexError("meridian index outside 1..3");
    e[m - 1] += l.sign;
  }
  return e;
}

std::string FreeWord::str() const {
  std::string s;
  for (const Letter& l : letters_) {
    if (!s.empty()) s += ' ';
    s += (l.sign > 0 ? 'x' : 'X');
    s += std::to_string(l.gen);
  }
  return s;
}

FreeWord commutator(const FreeWord& u, const FreeWord& v) {
  return u * v * u.inverse() * v.inverse();
}

FreeWord conj_word(const FreeWord& u, const FreeWord& v) {
  return u * v * u.inverse();
}

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return text[pos];
  }

  FreeWord parse_sequence(bool stop_at_delim) {
    FreeWord w;
    while (!at_end()) {
      char c = peek();
      if (stop_at_delim && (c == ',' || c == ']' || c == ')')) break;
      w = w * parse_atom();
    }
    return w;
  }

  FreeWord parse_atom() {
    skip_ws();
    char c = text[pos];
    if (c == 'x' || c == 'X') {
      int sign = (c == 'x') ? 1 : -1;
      std::size_t start = pos++;
      std::size_t d = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (pos == d) throw ParseError("generator letter needs an index", start);
      int idx = std::stoi(text.substr(d, pos - d));
      if (idx < 1) throw ParseError("generator index must be >= 1", start);
      return FreeWord::generator(idx, sign);
    }
    if (c == '[') {
      std::size_t start = pos++;
      FreeWord u = parse_sequence(true);
      if (at_end() || text[pos] != ',')
        throw ParseError("expected ',' in commutator", start);
      ++pos;
      FreeWord v = parse_sequence(true);
      if (at_end() || text[pos] != ']')
        throw ParseError("unclosed commutator bracket", start);
      ++pos;
      return commutator(u, v);
    }
    if (c == '(') {
      std::size_t start = pos++;
      FreeWord w = parse_sequence(true);
      if (at_end() || text[pos] != ')')
        throw ParseError("unclosed parenthesis", start);
      ++pos;
      return w;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }
};

}  // namespace

FreeWord parse_word(const std::string& text) {
  Parser p(text);
  FreeWord w = p.parse_sequence(false);
  if (!p.at_end()) throw ParseError("trailing input", p.pos);
  return w;
}

GroupRingElem GroupRingElem::from_word(const FreeWord& w, long long coeff) {
  GroupRingElem e;
  if (coeff != 0) e.terms.emplace_back(coeff, w);
  return e;
}

namespace {
GroupRingElem collect(std::map<FreeWord, long long>&& acc) {
  GroupRingElem e;
  for (auto& [w, c] : acc)
    if (c != 0) e.terms.emplace_back(c, w);
  return e;
}
}  // namespace

GroupRingElem GroupRingElem::operator+(const GroupRingElem& o) const {
  std::map<FreeWord, long long> acc;
  for (const auto& [c, w] : terms) acc[w] += c;
  for (const auto& [c, w] : o.terms) acc[w] += c;
  return collect(std::move(acc));
}

GroupRingElem GroupRingElem::operator-() const {
  GroupRingElem e;
  for (const auto& [c, w] : terms) e.terms.emplace_back(-c, w);
  return e;
}

GroupRingElem GroupRingElem::operator-(const GroupRingElem& o) const {
  return *this + (-o);
}

GroupRingElem GroupRingElem::operator*(const GroupRingElem& o) const {
  std::map<FreeWord, long long> acc;
  for (const auto& [c1, w1] : terms)
    for (const auto& [c2, w2] : o.terms) acc[w1 * w2] += c1 * c2;
  return collect(std::move(acc));
}

GroupRingElem fox_derivative(const FreeWord& r, int j) {
  std::map<FreeWord, long long> acc;
  FreeWord prefix;
  for (const Letter& l : r.letters()) {
    if (l.gen == j) {
      if (l.sign > 0) {
        acc[prefix] += 1;
      } else {
        acc[prefix * FreeWord::generator(j, -1)] -= 1;
      }
    }
    prefix = prefix * FreeWord::generator(l.gen, l.sign);
  }
  return collect(std::move(acc));
}

FreeWord borromean_relator(int i) {
  if (i < 1 || i > 3) throw IndexError("relation index outside 1..3");
  auto x = [](int j) { return FreeWord::generator(((j - 1) % 3 + 3) % 3 + 1); };
  return commutator(x(i), commutator(x(i + 1), x(i - 1).inverse()));
}

Presentation borromean_presentation() {
  Presentation p;
  p.generators = 3;
  p.relators = {borromean_relator(2), borromean_relator(3)};
  p.abelianization = {1, 2, 3};
  return p;
}

Presentation borromean_wirtinger_presentation() {
  // Generators 1..3 are x1..x3, generators 4..6 are y1..y3.
  auto g = [](int j, int s = 1) { return FreeWord::generator(j, s); };
  Presentation p;
  p.generators = 6;
  p.relators = {
      g(4, -1) * conj_word(g(3), g(1)),          // y1 = x3 x1 X3
      g(5, -1) * conj_word(g(1), g(2)),          // y2 = x1 x2 X1
      g(6, -1) * conj_word(g(2), g(3)),          // y3 = x2 x3 X2
      g(3, -1) * conj_word(g(5, -1), g(6)),      // x3 = Y2 y3 y2
      g(2, -1) * conj_word(g(4, -1), g(5)),      // x2 = Y1 y2 y1
  };
  p.abelianization = {1, 2, 3, 1, 2, 3};
  return p;
}

std::vector<std::vector<GroupRingElem>> jacobian(const Presentation& p) {
  std::vector<std::vector<GroupRingElem>> m;
  m.reserve(p.relators.size());
  for (const FreeWord& r : p.relators) {
    std::vector<GroupRingElem> row;
    row.reserve(p.generators);
    for (int j = 1; j <= p.generators; ++j)
      row.push_back(fox_derivative(r, j));
    m.push_back(std::move(row));
  }
  return m;
}

std::vector<std::vector<GroupRingElem>> delete_column(
    const std::vector<std::vector<GroupRingElem>>& m, int v) {
  if (m.empty()) return {};
  int cols = static_cast<int>(m.front().size());
  if (v < 1 || v > cols) throw IndexError("column index outside 1..l");
  std::vector<std::vector<GroupRingElem>> r;
  r.reserve(m.size());
  for (const auto& row : m) {
    std::vector<GroupRingElem> nr;
    nr.reserve(cols - 1);
    for (int j = 0; j < cols; ++j)
      if (j != v - 1) nr.push_back(row[j]);
    r.push_back(std::move(nr));
  }
  return r;
}

double relation_residual(int i, const Mat2C& x1, const Mat2C& x2,
                         const Mat2C& x3) {
  std::vector<Mat2C> gens{x1, x2, x3};
  Mat2C m = evaluate_word(borromean_relator(i), gens);
  return (m - Mat2C::identity()).max_norm();
}

std::array<double, 3> relation_residuals(const Mat2C& x1, const Mat2C& x2,
                                         const Mat2C& x3) {
  return {relation_residual(1, x1, x2, x3), relation_residual(2, x1, x2, x3),
          relation_residual(3, x1, x2, x3)};
}

double relation_implication_check(const Mat2C& x1, const Mat2C& x2,
                                  const Mat2C& x3, double tol) {
  if (relation_residual(2, x1, x2, x3) > tol ||
      relation_residual(3, x1, x2, x3) > tol)
    throw DomainError("defining relations do not hold within tolerance");
  return relation_residual(1, x1, x2, x3);
}

}  // namespace brm
