#include "brm/charvar.hpp"

#include <algorithm>
#include <cmath>

namespace brm {

namespace {

constexpr cx kI{0.0, 1.0};

// Principal square root with signed zeros normalized, so that results that
// are real (or imaginary) up to rounding do not land on the wrong side of
// the branch cut.
cx principal_sqrt(const cx& z) {
  cx w(z.real() == 0.0 ? 0.0 : z.real(), z.imag() == 0.0 ? 0.0 : z.imag());
  return std::sqrt(w);
}

int mod3(int i) { return ((i - 1) % 3 + 3) % 3 + 1; }

// Remaining generator indices in increasing order.
std::pair<int, int> other_indices(int i) {
  switch (i) {
    case 1: return {2, 3};
    case 2: return {1, 3};
    case 3: return {1, 2};
    default: throw IndexError("generator index outside 1..3");
  }
}

double lin_tol(double tol, double m) { return tol * (1.0 + m); }

}  // namespace

// --- labels ---------------------------------------------------------------

std::string ComponentLabel::str() const {
  switch (kind) {
    case ComponentKind::X1Plus: return "X1+," + std::to_string(index);
    case ComponentKind::X1Minus: return "X1-," + std::to_string(index);
    case ComponentKind::X2: return "X2," + std::to_string(index);
    case ComponentKind::X3: return "X3," + std::to_string(index);
    case ComponentKind::X4: return "X4";
    case ComponentKind::Custom: return "Custom";
  }
  return "Custom";
}

ComponentLabel ComponentLabel::parse(const std::string& s) {
  if (s == "X4") return {ComponentKind::X4, 0};
  if (s == "Custom") return {ComponentKind::Custom, 0};
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw ParseError("component label needs an index", 0);
  int idx = std::stoi(s.substr(comma + 1));
  if (idx < 1 || idx > 3) throw ParseError("component index outside 1..3", comma);
  std::string head = s.substr(0, comma);
  if (head == "X1+") return {ComponentKind::X1Plus, idx};
  if (head == "X1-") return {ComponentKind::X1Minus, idx};
  if (head == "X2") return {ComponentKind::X2, idx};
  if (head == "X3") return {ComponentKind::X3, idx};
  throw ParseError("unknown component label '" + s + "'", 0);
}

const Mat2C& Representation::x(int i) const {
  switch (mod3(i)) {
    case 1: return x1;
    case 2: return x2;
    default: return x3;
  }
}

cx CharacterTuple::t(int i) const {
  switch (mod3(i)) {
    case 1: return t1;
    case 2: return t2;
    default: return t3;
  }
}

cx CharacterTuple::pair(int i, int j) const {
  int a = mod3(i), b = mod3(j);
  if (a > b) std::swap(a, b);
  if (a == 1 && b == 2) return t12;
  if (a == 1 && b == 3) return t13;
  if (a == 2 && b == 3) return t23;
  throw IndexError("pair trace needs two distinct indices");
}

// --- universal trace identities --------------------------------------------

cx f3_nu0(const CharacterTuple& c) {
  return c.t1 * c.t1 + c.t2 * c.t2 + c.t3 * c.t3 + c.t12 * c.t12 +
         c.t13 * c.t13 + c.t23 * c.t23 - c.t1 * c.t2 * c.t12 -
         c.t1 * c.t3 * c.t13 - c.t2 * c.t3 * c.t23 + c.t12 * c.t13 * c.t23 -
         4.0;
}

cx f3_nu1(const CharacterTuple& c) {
  return c.t1 * c.t23 + c.t2 * c.t13 + c.t3 * c.t12 - c.t1 * c.t2 * c.t3;
}

double f3_residual(const CharacterTuple& c) {
  return std::abs(c.t123 * c.t123 - f3_nu1(c) * c.t123 + f3_nu0(c));
}

cx f_from_traces(const cx& ti, const cx& tj, const cx& tij) {
  return ti * ti + tj * tj + tij * tij - ti * tj * tij - 2.0;
}

cx f_ij(const CharacterTuple& c, int i, int j) {
  if (mod3(i) == mod3(j)) throw IndexError("f_{i,j} needs distinct indices");
  return f_from_traces(c.t(i), c.t(j), c.pair(i, j));
}

// --- matrix constructors ----------------------------------------------------

Mat2C mk_w() { return {0.0, 1.0, -1.0, 0.0}; }

Mat2C mk_d(const cx& kappa) {
  if (std::abs(kappa) == 0.0) throw DomainError("d(kappa) needs kappa != 0");
  return {kappa, 0.0, 0.0, 1.0 / kappa};
}

Mat2C mk_p(const cx& u) { return {1.0, u, 0.0, 1.0}; }
Mat2C mk_p() { return mk_p(1.0); }

Mat2C mk_h(const cx& t, const cx& lambda, const cx& mu) {
  if (std::abs(mu) == 0.0) throw DomainError("h needs mu != 0");
  if (std::abs(lambda) == 0.0) throw DomainError("h needs lambda != 0");
  cx sum = lambda + 1.0 / lambda;
  if (std::abs(lambda + 1.0) < 1e-14)
    throw DomainError("h needs lambda != -1");
  if (std::abs(sum - 2.0) < 1e-14 || std::abs(sum + 2.0) < 1e-14)
    throw DomainError("h needs lambda + 1/lambda != +-2");
  cx delta = t * t - sum - 2.0;
  if (std::abs(sum - (t * t - 2.0)) < 1e-14)
    throw DomainError("h needs lambda + 1/lambda != t^2 - 2");
  cx f = 1.0 / (lambda + 1.0);
  return {f * lambda * t, f * mu, f * delta * lambda / mu, f * t};
}

Mat2C mk_k(const cx& t, const cx& alpha) {
  if (std::abs(t) == 0.0) throw DomainError("k needs t != 0");
  return {alpha + t / 2.0, (t * t / 4.0 - 1.0 - alpha * alpha) / (2.0 * t),
          2.0 * t, -alpha + t / 2.0};
}

cx commutator_condition_residual_a(const cx& t1, const cx& t2,
                                   const cx& lambda, const cx& mu,
                                   const cx& nu) {
  if (std::abs(lambda - 1.0) < 1e-14 || std::abs(lambda + 1.0) < 1e-14)
    throw DomainError("condition (a) needs lambda != +-1");
  cx sum = lambda + 1.0 / lambda;
  cx d1 = t1 * t1 - sum - 2.0;
  cx d2 = t2 * t2 - sum - 2.0;
  if (std::abs(d1) < 1e-14 || std::abs(d2) < 1e-14)
    throw DomainError("condition (a) needs delta_i != 0");
  return (lambda - 1.0) * t1 * t2 - (lambda * d1 * nu / mu - d2 * mu / nu);
}

cx commutator_condition_residual_c(const cx& t1, const cx& t2, const cx& alpha,
                                   const cx& beta) {
  if (std::abs(t1 * t2) == 0.0) throw DomainError("condition (c) needs t1 t2 != 0");
  return t2 / t1 * (alpha * alpha + 1.0) + t1 / t2 * (beta * beta + 1.0) -
         (2.0 * alpha * beta + t2 * alpha - t1 * beta);
}

// --- realizers ----------------------------------------------------------------

Representation realize_x1(int i, int sign, const Mat2C& x_prev,
                          const Mat2C& x_next, double tol) {
  if (sign != 1 && sign != -1) throw DomainError("sign must be +-1");
  auto [j, k] = other_indices(i);
  double scale = 1.0 + x_prev.max_norm() * x_next.max_norm();
  if (!is_unimodular(x_prev, lin_tol(tol, scale)) ||
      !is_unimodular(x_next, lin_tol(tol, scale)))
    throw DomainError("free generators must be unimodular");
  cx trg = commutator(x_prev, x_next).trace();
  if (std::abs(trg - 2.0) <= lin_tol(tol, scale * scale))
    throw ReducibleError("free generators share an eigenvector");

  Representation rho;
  Mat2C e = Mat2C::identity();
  Mat2C xi = (sign > 0) ? e : -e;
  Mat2C mats[4];
  mats[i] = xi;
  mats[j] = x_prev;
  mats[k] = x_next;
  rho.x1 = mats[1];
  rho.x2 = mats[2];
  rho.x3 = mats[3];
  rho.label = {sign > 0 ? ComponentKind::X1Plus : ComponentKind::X1Minus, i};
  return rho;
}

Representation realize_x2(int i, const cx& kappa_prev, const cx& kappa_next,
                          double tol) {
  for (const cx& kappa : {kappa_prev, kappa_next}) {
    if (std::abs(kappa) == 0.0) throw DomainError("kappa must be nonzero");
    if (std::abs(kappa - 1.0) <= tol || std::abs(kappa + 1.0) <= tol)
      throw DomainError("kappa = +-1 makes the diagonal part central");
  }
  auto [j, k] = other_indices(i);
  Representation rho;
  Mat2C mats[4];
  mats[i] = mk_w();
  mats[j] = mk_d(kappa_prev);
  mats[k] = mk_d(kappa_next);
  rho.x1 = mats[1];
  rho.x2 = mats[2];
  rho.x3 = mats[3];
  rho.label = {ComponentKind::X2, i};
  rho.params = {{"kappa_prev", kappa_prev}, {"kappa_next", kappa_next}};
  return rho;
}

Representation realize_x3(int i, const cx& t_i, const cx& t_prev_pair,
                          const cx& t_next_pair, const cx& t123, double tol) {
  double m = std::max({std::abs(t_i), std::abs(t_prev_pair),
                       std::abs(t_next_pair), std::abs(t123), 1.0});
  double q_tol = tol * m * m;
  if (std::abs(t_i * t123 - t_prev_pair * t_next_pair) > q_tol)
    throw ConstraintError("t_i t_123 = t_{i,i-1} t_{i,i+1} fails");
  cx sq = t_i * t_i + t_prev_pair * t_prev_pair + t_next_pair * t_next_pair +
          t123 * t123;
  if (std::abs(sq - 4.0) > q_tol)
    throw ConstraintError("sum-of-squares constraint fails");
  if (std::abs(4.0 - t_i * t_i) <= q_tol)
    throw ConstraintError("4 - t_i^2 must be nonzero");

  Mat2C a;
  a.a11 = 0.5 * (t_i - t_next_pair * kI);
  a.a12 = -0.5 * (t_prev_pair + t123 * kI);
  a.a21 = 0.5 * (t_prev_pair - t123 * kI);
  a.a22 = 0.5 * (t_i + t_next_pair * kI);

  Representation rho;
  Mat2C mats[4];
  mats[i] = a;
  mats[mod3(i - 1)] = mk_w();
  mats[mod3(i + 1)] = mk_d(kI);
  rho.x1 = mats[1];
  rho.x2 = mats[2];
  rho.x3 = mats[3];
  rho.label = {ComponentKind::X3, i};
  rho.params = {{"t_i", t_i},
                {"t_prev_pair", t_prev_pair},
                {"t_next_pair", t_next_pair},
                {"t123", t123}};
  return rho;
}

cx kappa_of_t3(const cx& t3, int branch) {
  cx s = principal_sqrt(t3 * t3 - 4.0);
  cx r1 = (t3 + s) / 2.0;
  cx r2 = (t3 - s) / 2.0;
  cx principal;
  if (std::abs(std::abs(r1) - std::abs(r2)) > 1e-12) {
    principal = std::abs(r1) >= std::abs(r2) ? r1 : r2;
  } else {
    double a1 = std::arg(r1);
    principal = (a1 >= 0.0 && a1 < std::acos(-1.0)) ? r1 : r2;
  }
  return branch == 0 ? principal : cx(1.0) / principal;
}

cx lambda_from_theta(const cx& kappa, const cx& theta, const cx& t3) {
  cx diff = kappa - 1.0 / kappa;
  return (diff + theta * t3) / (diff - theta * t3);
}

double theta_quartic_residual(const cx& t1, const cx& t2, const cx& t3,
                              const cx& theta) {
  cx i1 = 4.0 / (t1 * t1), i2 = 4.0 / (t2 * t2), i3 = 4.0 / (t3 * t3);
  cx b = i1 + i2 + i3 - 2.0;
  cx c = (1.0 - i1) * (1.0 - i2) * (1.0 - i3);
  cx th2 = theta * theta;
  return std::abs(th2 * th2 + b * th2 + c);
}

Representation realize_x4(const cx& t1, const cx& t2, const cx& t3,
                          const cx& theta, int kappa_branch, double tol) {
  for (const cx& t : {t1, t2, t3})
    if (std::abs(t) <= tol) throw DomainError("t_i must be nonzero on X4");
  if (std::abs(theta) <= tol) throw DomainError("theta must be nonzero on X4");
  double m = std::max({std::abs(t1), std::abs(t2), std::abs(t3),
                       std::abs(theta), 1.0});
  if (theta_quartic_residual(t1, t2, t3, theta) > tol * m * m * m * m)
    throw ConstraintError("(t1,t2,t3,theta) does not satisfy the quartic");

  for (int attempt = 0; attempt < 2; ++attempt) {
    int branch = (kappa_branch + attempt) % 2;
    cx kappa = kappa_of_t3(t3, branch);
    cx kinv = 1.0 / kappa;
    cx c21 = 2.0 + kinv * (theta - 1.0) * t3;
    if (std::abs(c21) <= tol) continue;  // try the other root of kappa

    cx diff = kappa - kinv;
    cx d1 = t1 * t1 - 4.0;
    cx d3 = t3 * t3 - 4.0;
    cx pre = 1.0 / (2.0 * theta * t1 * t3);
    Mat2C x1m{pre * (theta * t1 * t1 * t3 + diff * d1), pre * d1,
              pre * (theta * theta * t1 * t1 * t3 * t3 - d1 * d3),
              pre * (theta * t1 * t1 * t3 - diff * d1)};

    cx a = kappa + (theta - 1.0) * t3 / 2.0;
    cx d = kinv + (1.0 - theta) * t3 / 2.0;
    cx ratio = t3 / t2;
    cx star = (a * d - ratio * ratio) / c21;
    cx f = t2 / t3;
    Mat2C x2m{f * a, f * star, f * c21, f * d};

    Mat2C x3m{kappa, 1.0, 0.0, kinv};

    Representation rho;
    rho.x1 = x1m;
    rho.x2 = x2m;
    rho.x3 = x3m;
    rho.label = {ComponentKind::X4, 0};
    rho.params = {{"t1", t1},     {"t2", t2},       {"t3", t3},
                  {"theta", theta}, {"kappa", kappa}};
    return rho;
  }
  throw DegenerateError("x2 lower-left entry vanishes for both kappa roots");
}

// --- canonical component geometry ---------------------------------------------

std::vector<cx> solve_theta(const cx& t1, const cx& t2, const cx& t3,
                            double tol) {
  for (const cx& t : {t1, t2, t3})
    if (std::abs(t) <= tol) throw DomainError("t_i must be nonzero");
  cx i1 = 4.0 / (t1 * t1), i2 = 4.0 / (t2 * t2), i3 = 4.0 / (t3 * t3);
  cx b = i1 + i2 + i3 - 2.0;
  cx c = (1.0 - i1) * (1.0 - i2) * (1.0 - i3);
  cx disc = principal_sqrt(b * b - 4.0 * c);
  std::vector<cx> out;
  for (const cx& u : {(-b + disc) / 2.0, (-b - disc) / 2.0}) {
    if (std::abs(u) <= tol) continue;  // theta = 0 is excluded
    cx th = principal_sqrt(u);
    out.push_back(th);
    out.push_back(-th);
  }
  return out;
}

std::pair<cx, cx> cover_t3(const cx& t1, const cx& t2, const cx& theta,
                           double tol) {
  if (std::abs(t1) <= tol || std::abs(t2) <= tol)
    throw DomainError("t1 t2 must be nonzero");
  if (std::abs(theta) <= tol) throw DomainError("theta must be nonzero");
  cx e1 = 1.0 - 4.0 / (t1 * t1);
  cx e2 = 1.0 - 4.0 / (t2 * t2);
  cx th2 = theta * theta;
  double m = std::max({std::abs(e1), std::abs(e2), std::abs(th2), 1.0});
  if (std::abs(th2 - e1) <= tol * m || std::abs(th2 - e2) <= tol * m ||
      std::abs(th2 - e1 * e2) <= tol * m)
    throw ExcludedHypersurfaceError("theta^2 lies on an excluded hypersurface");
  // 4/t3^2 = (th2 - e1)(th2 - e2) / (e1 e2 - th2)
  cx t3sq = 4.0 * (e1 * e2 - th2) / ((th2 - e1) * (th2 - e2));
  cx t3 = principal_sqrt(t3sq);
  return {t3, -t3};
}

std::pair<cx, cx> cover_t1(const cx& t2, const cx& t3, const cx& theta,
                           double tol) {
  return cover_t3(t2, t3, theta, tol);
}

std::pair<cx, cx> cover_t2(const cx& t1, const cx& t3, const cx& theta,
                           double tol) {
  return cover_t3(t1, t3, theta, tol);
}

double X4Consistency::max() const {
  return std::max({case1_1, case1_2, mu_product, cover});
}

X4Consistency x4_internal_consistency(const cx& t1, const cx& t2, const cx& t3,
                                      const cx& theta, int kappa_branch) {
  cx kappa = kappa_of_t3(t3, kappa_branch);
  cx k2 = kappa * kappa;
  cx lambda = lambda_from_theta(kappa, theta, t3);
  cx sum = lambda + 1.0 / lambda;
  cx d1 = t1 * t1 - sum - 2.0;
  cx d2 = t2 * t2 - sum - 2.0;
  cx a = (1.0 - 1.0 / lambda) * t1 * t2 / (1.0 + 1.0 / k2);  // delta_1 nu
  cx b = (1.0 - lambda) * t1 * t2 / (1.0 + k2);              // delta_2 / nu
  cx rhs = (lambda - 1.0) * t1 * t2;
  X4Consistency r;
  r.case1_1 = std::abs(rhs - (lambda * a - b));
  r.case1_2 = std::abs(rhs - (lambda * a / k2 - k2 * b));
  r.mu_product = std::abs(a * b - d1 * d2);
  r.cover = std::abs(d1 * d2 * t3 * t3 - (2.0 - sum) * t1 * t1 * t2 * t2);
  return r;
}

// --- characters -----------------------------------------------------------------

CharacterTuple character_of(const Mat2C& x1, const Mat2C& x2, const Mat2C& x3) {
  CharacterTuple c;
  c.t1 = x1.trace();
  c.t2 = x2.trace();
  c.t3 = x3.trace();
  c.t12 = (x1 * x2).trace();
  c.t13 = (x1 * x3).trace();
  c.t23 = (x2 * x3).trace();
  c.t123 = (x1 * x2 * x3).trace();
  return c;
}

CharacterTuple character_of(const Representation& rho) {
  CharacterTuple c = character_of(rho.x1, rho.x2, rho.x3);
  auto it = rho.params.find("theta");
  if (it != rho.params.end()) c.theta = it->second;
  return c;
}

cx theta_from_character(const CharacterTuple& c) {
  cx denom = c.t1 * c.t2;
  if (std::abs(denom) < 1e-14)
    throw DomainError("theta is undefined when t1 t2 = 0");
  return 2.0 * c.t12 / denom - 1.0;
}

// --- classification -----------------------------------------------------------

namespace {

struct MembershipCheck {
  double tol_lin, tol_q, tol_cub;
  bool ok = true;
  bool boundary = false;

  void eq(const cx& value, double tol) {
    if (std::abs(value) > tol) ok = false;
  }
  void ne(const cx& value, double tol) {
    if (std::abs(value) <= tol) boundary = true;
  }
};

double char_scale(const CharacterTuple& c) {
  return std::max({1.0, std::abs(c.t1), std::abs(c.t2), std::abs(c.t3),
                   std::abs(c.t12), std::abs(c.t13), std::abs(c.t23),
                   std::abs(c.t123)});
}

}  // namespace

bool component_membership(const CharacterTuple& c, const ComponentLabel& label,
                          double tol, bool* boundary) {
  double m = char_scale(c);
  MembershipCheck chk{tol * m, tol * m * m, tol * m * m * m};
  int i = label.index;

  switch (label.kind) {
    case ComponentKind::X1Plus:
    case ComponentKind::X1Minus: {
      double sgn = label.kind == ComponentKind::X1Plus ? 1.0 : -1.0;
      chk.eq(c.t(i) - 2.0 * sgn, chk.tol_lin);
      chk.eq(c.pair(i, i + 1) - sgn * c.t(i + 1), chk.tol_lin);
      chk.eq(c.pair(i, i - 1) - sgn * c.t(i - 1), chk.tol_lin);
      chk.eq(c.t123 - sgn * c.pair(i - 1, i + 1), chk.tol_lin);
      chk.ne(f_ij(c, i - 1, i + 1) - 2.0, chk.tol_q);
      break;
    }
    case ComponentKind::X2: {
      chk.eq(c.t(i), chk.tol_lin);
      chk.eq(c.pair(i, i + 1), chk.tol_lin);
      chk.eq(c.pair(i, i - 1), chk.tol_lin);
      chk.eq(c.t123, chk.tol_lin);
      chk.eq(f_ij(c, i - 1, i + 1) - 2.0, chk.tol_q);
      chk.ne(c.t(i + 1) * c.t(i + 1) - 4.0, chk.tol_q);
      chk.ne(c.t(i - 1) * c.t(i - 1) - 4.0, chk.tol_q);
      break;
    }
    case ComponentKind::X3: {
      chk.eq(c.t(i + 1), chk.tol_lin);
      chk.eq(c.t(i - 1), chk.tol_lin);
      chk.eq(c.pair(i - 1, i + 1), chk.tol_lin);
      chk.eq(c.t(i) * c.t123 - c.pair(i, i - 1) * c.pair(i, i + 1), chk.tol_q);
      cx sum = c.pair(i, i - 1) * c.pair(i, i - 1) +
               c.pair(i, i + 1) * c.pair(i, i + 1) + c.t123 * c.t123;
      chk.eq(sum - (4.0 - c.t(i) * c.t(i)), chk.tol_q);
      chk.ne(4.0 - c.t(i) * c.t(i), chk.tol_q);
      break;
    }
    case ComponentKind::X4: {
      if (std::abs(c.t1) <= chk.tol_lin || std::abs(c.t2) <= chk.tol_lin ||
          std::abs(c.t3) <= chk.tol_lin)
        return false;
      cx theta = theta_from_character(c);
      cx h = (theta + 1.0) / 2.0;
      chk.eq(c.t13 - h * c.t1 * c.t3, chk.tol_q);
      chk.eq(c.t23 - h * c.t2 * c.t3, chk.tol_q);
      chk.eq(c.t123 - h * h * c.t1 * c.t2 * c.t3, chk.tol_cub);
      double thm = std::max(1.0, std::abs(theta));
      chk.eq(theta_quartic_residual(c.t1, c.t2, c.t3, theta),
             tol * m * thm * thm * thm * thm);
      chk.ne(theta, chk.tol_lin);
      break;
    }
    case ComponentKind::Custom:
      return false;
  }
  if (boundary) *boundary = chk.boundary;
  return chk.ok;
}

std::vector<ClassifiedLabel> classify(const CharacterTuple& c, double tol) {
  std::vector<ClassifiedLabel> out;
  std::vector<ComponentLabel> all;
  for (int i = 1; i <= 3; ++i) {
    all.push_back({ComponentKind::X1Plus, i});
    all.push_back({ComponentKind::X1Minus, i});
    all.push_back({ComponentKind::X2, i});
    all.push_back({ComponentKind::X3, i});
  }
  all.push_back({ComponentKind::X4, 0});
  for (const ComponentLabel& label : all) {
    bool boundary = false;
    if (component_membership(c, label, tol, &boundary))
      out.push_back({label, boundary});
  }
  if (out.empty())
    throw UnclassifiedError("character matches no irreducible component");
  return out;
}

// --- irreducibility ----------------------------------------------------------

namespace {

struct Vec2 {
  cx a, b;
  double norm() const { return std::hypot(std::abs(a), std::abs(b)); }
};

bool is_eigenvector(const Mat2C& m, const Vec2& v, double tol) {
  Vec2 w{m.a11 * v.a + m.a12 * v.b, m.a21 * v.a + m.a22 * v.b};
  cx cross = w.a * v.b - w.b * v.a;
  return std::abs(cross) <= tol * std::max(1.0, w.norm() * v.norm());
}

std::vector<Vec2> eigenvectors(const Mat2C& m, double tol) {
  std::vector<Vec2> out;
  cx t = m.trace();
  cx disc = std::sqrt(t * t - 4.0 * m.det());
  for (const cx& lam : {(t + disc) / 2.0, (t - disc) / 2.0}) {
    Vec2 v1{m.a12, lam - m.a11};
    Vec2 v2{lam - m.a22, m.a21};
    Vec2 v = v1.norm() >= v2.norm() ? v1 : v2;
    if (v.norm() > tol) out.push_back(v);
    if (std::abs(disc) <= tol) break;  // parabolic: single fixed direction
  }
  return out;
}

bool is_central(const Mat2C& m, double tol) {
  Mat2C e = Mat2C::identity();
  return (m - e).max_norm() <= tol || (m + e).max_norm() <= tol;
}

}  // namespace

bool irreducibility_check(const Mat2C& x1, const Mat2C& x2, const Mat2C& x3,
                          double tol) {
  std::vector<Mat2C> gens;
  for (const Mat2C& g : {x1, x2, x3})
    if (!is_central(g, tol)) gens.push_back(g);
  if (gens.empty()) return false;  // everything scalar

  // Any pair without a common eigenvector makes the triple irreducible.
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      cx f = commutator(gens[a], gens[b]).trace();
      double s = 1.0 + gens[a].max_norm() * gens[b].max_norm();
      if (std::abs(f - 2.0) > tol * s * s) return true;
    }

  // All pairs share eigenvectors; look for one vector fixed by everybody,
  // starting from the generator with the best separated eigenvalues.
  std::size_t best = 0;
  double best_sep = -1.0;
  for (std::size_t a = 0; a < gens.size(); ++a) {
    cx t = gens[a].trace();
    double sep = std::abs(t * t - 4.0);
    if (sep > best_sep) {
      best_sep = sep;
      best = a;
    }
  }
  for (const Vec2& v : eigenvectors(gens[best], tol)) {
    bool common = true;
    for (const Mat2C& g : gens)
      if (!is_eigenvector(g, v, tol)) {
        common = false;
        break;
      }
    if (common) return false;
  }
  return true;
}

bool irreducibility_check(const Representation& rho, double tol) {
  return irreducibility_check(rho.x1, rho.x2, rho.x3, tol);
}

bool commutator_minus_e_check(const Mat2C& a, const Mat2C& b, double tol) {
  double s = 1.0 + std::max(a.max_norm(), b.max_norm());
  return std::abs(a.trace()) <= tol * s && std::abs(b.trace()) <= tol * s &&
         std::abs((a * b).trace()) <= tol * s * s;
}

double relation_implication_check(const Representation& rho, double tol) {
  return relation_implication_check(rho.x1, rho.x2, rho.x3, tol);
}

// --- conjugation ---------------------------------------------------------------

Representation conjugated(const Representation& rho, const Mat2C& g) {
  Representation r = rho;
  r.x1 = conjugated_by(g, rho.x1);
  r.x2 = conjugated_by(g, rho.x2);
  r.x3 = conjugated_by(g, rho.x3);
  return r;
}

Representation balanced(const Representation& rho) {
  double up = 0.0, down = 0.0;
  for (const Mat2C& m : rho.matrices()) {
    up = std::max(up, std::abs(m.a12));
    down = std::max(down, std::abs(m.a21));
  }
  if (up <= 0.0 || down <= 0.0) return rho;
  double c = std::pow(down / up, 0.25);
  if (!(c > 0.0) || !std::isfinite(c)) return rho;
  return conjugated(rho, mk_d(c));
}

VerificationReport verify_representation(const Representation& rho,
                                         double tol) {
  VerificationReport rep;
  rep.relation = relation_residuals(rho.x1, rho.x2, rho.x3);
  rep.implication = relation_residual(1, rho.x1, rho.x2, rho.x3);
  int k = 0;
  for (const Mat2C& m : rho.matrices())
    rep.unimodular[k++] = std::abs(m.det() - cx(1.0));
  rep.irreducible = irreducibility_check(rho, tol);
  CharacterTuple c = character_of(rho);
  double m = char_scale(c);
  rep.f3 = f3_residual(c) / (m * m * m);
  return rep;
}

bool VerificationReport::pass(double tol) const {
  for (double r : relation)
    if (r > tol) return false;
  for (double u : unimodular)
    if (u > tol) return false;
  return irreducible && implication <= 10.0 * tol && f3 <= 10.0 * tol;
}

}  // namespace brm
