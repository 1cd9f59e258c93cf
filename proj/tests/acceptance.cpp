// Acceptance suite: end-to-end checks of the component realizers, the trace
// identities, the theta cover, and the equality of the Fox-calculus and
// closed-form twisted Alexander polynomials.  Prints one line per criterion.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "brm/sampling.hpp"
#include "brm/tap.hpp"

using namespace brm;

namespace {

constexpr cx kI{0.0, 1.0};

std::vector<ComponentLabel> all_components() {
  std::vector<ComponentLabel> ls;
  for (int i = 1; i <= 3; ++i) {
    ls.push_back({ComponentKind::X1Plus, i});
    ls.push_back({ComponentKind::X1Minus, i});
    ls.push_back({ComponentKind::X2, i});
    ls.push_back({ComponentKind::X3, i});
  }
  ls.push_back({ComponentKind::X4, 0});
  return ls;
}

struct Stats {
  double max = 0.0;
  void add(double v) {
    if (v > max) max = v;
  }
};

std::vector<Representation> g_relation_samples;  // reused by criterion 9

bool criterion1(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  Rng rng(1001);
  Stats rel, imp;
  for (const ComponentLabel& label : all_components()) {
    for (int k = 0; k < 1000; ++k) {
      Representation rho = sample_component(label, rng);
      auto r = relation_residuals(rho.x1, rho.x2, rho.x3);
      rel.add(std::max({r[0], r[1], r[2]}));
      imp.add(r[0]);
      g_relation_samples.push_back(rho);
    }
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "max relation %.2e (<=1e-9), max implication %.2e (<=1e-8), "
                "%.1fs (<30s)",
                rel.max, imp.max, secs);
  detail = buf;
  return rel.max <= 1e-9 && imp.max <= 1e-8 && secs < 30.0;
}

bool criterion2(std::string& detail) {
  Rng rng(1002);
  Stats res;
  for (int k = 0; k < 500; ++k) {
    Representation rho = sample_x4(rng);
    CharacterTuple c = character_of(rho);
    cx h = (rho.params.at("theta") + 1.0) / 2.0;
    res.add(std::abs(c.t12 - h * c.t1 * c.t2));
    res.add(std::abs(c.t13 - h * c.t1 * c.t3));
    res.add(std::abs(c.t23 - h * c.t2 * c.t3));
    res.add(std::abs(c.t123 - h * h * c.t1 * c.t2 * c.t3));
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "max residual %.2e (<=1e-8)", res.max);
  detail = buf;
  return res.max <= 1e-8;
}

bool criterion3(std::string& detail) {
  Rng rng(1003);
  Stats f3, fc;
  for (int k = 0; k < 1000; ++k) {
    Mat2C a = random_unimodular(rng), b = random_unimodular(rng),
          c = random_unimodular(rng);
    f3.add(f3_residual(character_of(a, b, c)));
  }
  for (int k = 0; k < 1000; ++k) {
    Mat2C a = random_unimodular(rng), b = random_unimodular(rng);
    cx f = f_from_traces(a.trace(), b.trace(), (a * b).trace());
    fc.add(std::abs(f - commutator(a, b).trace()));
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf),
                "max F3 residual %.2e (<=1e-8), max f-vs-trace %.2e (<=1e-10)",
                f3.max, fc.max);
  detail = buf;
  return f3.max <= 1e-8 && fc.max <= 1e-10;
}

bool criterion4(std::string& detail) {
  Rng rng(1004);
  std::vector<ComponentLabel> classes = {{ComponentKind::X1Plus, 1},
                                         {ComponentKind::X1Minus, 1},
                                         {ComponentKind::X2, 1},
                                         {ComponentKind::X3, 1},
                                         {ComponentKind::X4, 0}};
  Stats scale_err;
  int mismatches = 0;
  for (ComponentLabel label : classes) {
    for (int k = 0; k < 100; ++k) {
      if (label.kind != ComponentKind::X4) label.index = 1 + k % 3;
      Representation rho = sample_component(label, rng);
      CharacterTuple c = character_of(rho);
      TapResult closed = tap_closed(c, label);
      TapResult fox[3];
      for (int v = 1; v <= 3; ++v) {
        fox[v - 1] = tap_fox(rho, v);
        if (!equal_up_to_unit(fox[v - 1].delta, closed.delta, 1e-8).equal)
          ++mismatches;
        scale_err.add(
            std::abs(std::abs(fox[v - 1].scale / closed.scale) - 1.0));
      }
      for (int v = 0; v < 3; ++v)
        if (!equal_up_to_unit(fox[v].delta, fox[(v + 1) % 3].delta, 1e-8)
                 .equal)
          ++mismatches;
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf),
                "500 samples x 3 columns, %d mismatches, max ||scale|-1| "
                "%.2e (<=1e-7)",
                mismatches, scale_err.max);
  detail = buf;
  return mismatches == 0 && scale_err.max <= 1e-7;
}

bool criterion5(std::string& detail) {
  auto roots = solve_theta(2.0, 2.0, 2.0);
  bool ok = roots.size() == 2 && std::abs(roots[0] - kI) <= 1e-12 &&
            std::abs(roots[1] + kI) <= 1e-12;

  double char_err = 0.0;
  for (int eps : {1, -1}) {
    cx ei{0.0, static_cast<double>(eps)};
    Representation rho = realize_x4(2.0, 2.0, 2.0, ei);
    CharacterTuple c = character_of(rho);
    // parabolic matrices with the same character, written out entry by entry
    Mat2C y1{1.0, 0.0, 2.0, 1.0};
    Mat2C y2{ei, ei, 2.0, 2.0 - ei};
    Mat2C y3{1.0, ei, 0.0, 1.0};
    CharacterTuple ce = character_of(y1, y2, y3);
    for (double d :
         {std::abs(c.t1 - ce.t1), std::abs(c.t2 - ce.t2),
          std::abs(c.t3 - ce.t3), std::abs(c.t12 - ce.t12),
          std::abs(c.t13 - ce.t13), std::abs(c.t23 - ce.t23),
          std::abs(c.t123 - ce.t123)})
      char_err = std::max(char_err, d);
  }
  ok = ok && char_err <= 1e-10;

  Representation rho = realize_x4(2.0, 2.0, 2.0, kI);
  TapResult fox = tap_fox(rho, 3);
  CharacterTuple c;
  c.t1 = c.t2 = c.t3 = 2.0;
  LaurentPoly3 expect = tap_closed_raw(c, {ComponentKind::X2, 1}) +
                        LaurentPoly3::constant(-8.0);
  ok = ok && equal_up_to_unit(fox.delta, expect, 1e-9).equal;

  SpanInfo span = span_degree(fox.delta);
  ok = ok && span.per_variable == std::array<int, 3>{2, 2, 2} &&
       span.total == 4 * 1 + 2 * (3 - 2);

  char buf[128];
  std::snprintf(buf, sizeof(buf),
                "theta = +-i, character residual %.2e (<=1e-10), "
                "delta matches, spans (%d,%d,%d)",
                char_err, span.per_variable[0], span.per_variable[1],
                span.per_variable[2]);
  detail = buf;
  return ok;
}

bool criterion6(std::string& detail) {
  Rng rng(1006);
  Stats rel_err;
  for (int k = 0; k < 100; ++k) {
    auto [t1, t2, t3] = sample_theta_domain(rng);
    for (const cx& theta : solve_theta(t1, t2, t3)) {
      auto [p, m] = cover_t3(t1, t2, theta);
      double err = std::min(std::abs(p - t3), std::abs(m - t3)) / std::abs(t3);
      rel_err.add(err);
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "max relative error %.2e (<=1e-9)",
                rel_err.max);
  detail = buf;
  return rel_err.max <= 1e-9;
}

bool criterion7(std::string& detail) {
  Rng rng(1007);
  Stats h_err, k_err, d_fwd, d_bwd, hc;

  // h_t^lambda(mu) h_t^lambda(-mu/lambda) = d(lambda)
  int done = 0;
  while (done < 1000) {
    cx t = rng.cnormal();
    cx lambda = rng.cnormal();
    cx mu = rng.cnormal();
    if (std::abs(t) > 1.8) continue;
    if (std::abs(lambda) < 0.5 || std::abs(lambda) > 2.0) continue;
    if (std::abs(lambda + 1.0) < 0.8 || std::abs(lambda - 1.0) < 0.1) continue;
    cx sum = lambda + 1.0 / lambda;
    if (std::abs(sum - (t * t - 2.0)) < 0.1) continue;
    double am = std::abs(mu);
    if (am < 0.7 || am > 1.5) continue;
    Mat2C prod = mk_h(t, lambda, mu) * mk_h(t, lambda, -mu / lambda);
    h_err.add((prod - mk_d(lambda)).max_norm());
    ++done;
  }

  // k_t(alpha) k_t(alpha - t) = -p
  done = 0;
  Mat2C minus_p = -mk_p();
  while (done < 1000) {
    cx t = rng.cnormal(), alpha = rng.cnormal();
    if (std::abs(t) < 0.5 || std::abs(t) > 2.5 || std::abs(alpha) > 1.5)
      continue;
    k_err.add((mk_k(t, alpha) * mk_k(t, alpha - t) - minus_p).max_norm());
    ++done;
  }

  // Lemma (d), forward: t1 = t2 = tr(ab) = 0 forces [a,b] = -e
  done = 0;
  while (done < 1000) {
    cx alpha = rng.cnormal(), beta = rng.cnormal(), d = rng.cnormal();
    if (std::abs(beta) < 0.4 || std::abs(alpha) > 1.5 || std::abs(d) > 1.5)
      continue;
    cx gamma = -(1.0 + alpha * alpha) / beta;
    if (std::abs(gamma) < 0.3 || std::abs(gamma) > 4.0) continue;
    // gamma e^2 + 2 alpha d e - beta (1 + d^2) = 0
    cx disc = std::sqrt(alpha * alpha * d * d + gamma * beta * (1.0 + d * d));
    cx e = (-alpha * d + disc) / gamma;
    if (std::abs(e) < 0.2) e = (-alpha * d - disc) / gamma;
    if (std::abs(e) < 0.2 || std::abs(e) > 4.0) continue;
    cx f = -(1.0 + d * d) / e;
    if (std::abs(f) > 4.0) continue;
    Mat2C a{alpha, beta, gamma, -alpha};
    Mat2C b{d, e, f, -d};
    d_fwd.add((commutator(a, b) + Mat2C::identity()).max_norm());
    ++done;
  }

  // Lemma (d), backward: [a,b] = -e forces the three traces to vanish
  done = 0;
  while (done < 1000) {
    Mat2C g = random_unimodular(rng, 2.5);
    Mat2C a = conjugated_by(g, mk_d(kI));
    Mat2C b = conjugated_by(g, mk_w());
    d_bwd.add(std::abs(a.trace()));
    d_bwd.add(std::abs(b.trace()));
    d_bwd.add(std::abs((a * b).trace()));
    ++done;
  }

  for (int k = 0; k < 1000; ++k)
    hc.add(hamilton_cayley_check(random_unimodular(rng, 4.0)));

  double worst = std::max({h_err.max, k_err.max, d_fwd.max, d_bwd.max, hc.max});
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "h-pair %.2e, k-pair %.2e, (d)-fwd %.2e, (d)-bwd %.2e, "
                "H-C %.2e (all <=1e-12)",
                h_err.max, k_err.max, d_fwd.max, d_bwd.max, hc.max);
  detail = buf;
  return worst <= 1e-12;
}

bool criterion8(std::string& detail) {
  auto has = [](const std::vector<ClassifiedLabel>& ls, ComponentKind k,
                int index) {
    for (const ClassifiedLabel& l : ls)
      if (l.label.kind == k && l.label.index == index) return true;
    return false;
  };
  bool ok = true;
  for (int i = 1; i <= 3; ++i) {
    int ip1 = i % 3 + 1;
    int im1 = (i + 1) % 3 + 1;
    cx ti = 1.0;
    cx tpair = std::sqrt(cx(4.0) - ti * ti);

    auto la = classify(character_of(realize_x3(i, ti, tpair, 0.0, 0.0)));
    ok = ok && has(la, ComponentKind::X3, i) && has(la, ComponentKind::X2, ip1);

    auto lb = classify(character_of(realize_x3(i, ti, 0.0, tpair, 0.0)));
    ok = ok && has(lb, ComponentKind::X3, i) && has(lb, ComponentKind::X2, im1);

    cx s2 = std::sqrt(cx(2.0));
    auto lc = classify(character_of(realize_x3(im1, 0.0, s2, 0.0, s2)));
    ok = ok && has(lc, ComponentKind::X3, im1) && has(lc, ComponentKind::X3, ip1);
  }
  detail = ok ? "all X3^X2 and X3^X3 intersection points dual-classified"
              : "an intersection point missed a label";
  return ok;
}

bool criterion9(std::string& detail) {
  Stats xi_err, eta_err, xi_x4, xi_x3;
  for (const Representation& rho : g_relation_samples) {
    xi_err.add(xi_cross_check(rho));
    eta_err.add(eta_cross_check(rho));
    CharacterTuple c = character_of(rho);
    if (rho.label.kind == ComponentKind::X4) {
      cx theta = rho.params.at("theta");
      xi_x4.add(std::abs(xi_traces(rho.x1, rho.x2, rho.x3) -
                         (1.0 - theta * theta) * c.t1 * c.t2 * c.t3));
    }
    if (rho.label.kind == ComponentKind::X3) {
      xi_x3.add(std::abs(xi_traces(rho.x1, rho.x2, rho.x3) + 4.0 * c.t123));
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "xi %.2e, eta %.2e, xi|X4 %.2e, xi|X3 %.2e (all <=1e-8, "
                "%zu samples)",
                xi_err.max, eta_err.max, xi_x4.max, xi_x3.max,
                g_relation_samples.size());
  detail = buf;
  return std::max({xi_err.max, eta_err.max, xi_x4.max, xi_x3.max}) <= 1e-8;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    bool (*run)(std::string&);
  };
  const Criterion criteria[] = {
      {1, "relation suite over all components", criterion1},
      {2, "X4 trace expressions", criterion2},
      {3, "universal F3 and commutator-trace identities", criterion3},
      {4, "fox vs closed-form TAP across columns", criterion4},
      {5, "holonomy character and its TAP", criterion5},
      {6, "theta/cover round trip", criterion6},
      {7, "pairing-lemma and Hamilton-Cayley identities", criterion7},
      {8, "intersection loci dual classification", criterion8},
      {9, "xi and eta identities", criterion9},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] criterion %d: %s: %s\n", ok ? "PASS" : "FAIL", c.id,
                c.name, detail.c_str());
    if (!ok) ++failures;
  }
  return failures;
}
