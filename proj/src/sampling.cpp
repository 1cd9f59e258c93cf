#include "brm/sampling.hpp"

#include <cmath>

namespace brm {

namespace {

constexpr int kMaxDraws = 10000;

[[noreturn]] void exhausted(const char* what) {
  throw Error(std::string("sampler failed to find a valid draw: ") + what);
}

bool well_conditioned(const Representation& rho, double max_norm) {
  for (const Mat2C& m : rho.matrices())
    if (m.max_norm() > max_norm) return false;
  return true;
}

}  // namespace

Mat2C random_unimodular(Rng& rng, double max_norm) {
  for (int k = 0; k < kMaxDraws; ++k) {
    cx a = rng.cnormal(), b = rng.cnormal(), c = rng.cnormal();
    if (std::abs(a) < 1e-3) continue;
    cx d = (1.0 + b * c) / a;
    Mat2C m{a, b, c, d};
    if (m.max_norm() > max_norm) continue;
    return m;
  }
  exhausted("random_unimodular");
}

cx random_trace(Rng& rng, double lo, double hi, double margin2) {
  for (int k = 0; k < kMaxDraws; ++k) {
    cx t = rng.cnormal() * 1.5;
    double a = std::abs(t);
    if (a < lo || a > hi) continue;
    if (std::abs(t - 2.0) < margin2 || std::abs(t + 2.0) < margin2) continue;
    return t;
  }
  exhausted("random_trace");
}

Representation sample_x1(int i, int sign, Rng& rng) {
  for (int k = 0; k < kMaxDraws; ++k) {
    Mat2C a = random_unimodular(rng, 3.0);
    Mat2C b = random_unimodular(rng, 3.0);
    cx f = commutator(a, b).trace();
    if (std::abs(f - 2.0) < 0.1) continue;  // stay clear of reducibles
    return realize_x1(i, sign, a, b);
  }
  exhausted("sample_x1");
}

Representation sample_x2(int i, Rng& rng) {
  auto draw_kappa = [&]() {
    for (int k = 0; k < kMaxDraws; ++k) {
      cx kappa = rng.cnormal();
      double a = std::abs(kappa);
      if (a < 0.4 || a > 2.5) continue;
      if (std::abs(kappa - 1.0) < 0.2 || std::abs(kappa + 1.0) < 0.2) continue;
      return kappa;
    }
    exhausted("sample_x2 kappa");
  };
  return realize_x2(i, draw_kappa(), draw_kappa());
}

Representation sample_x3(int i, Rng& rng) {
  // Draw the trace parameters from a random matrix obeying
  // a11 a12 + a21 a22 = 0, so the two constraints hold by construction.
  for (int k = 0; k < kMaxDraws; ++k) {
    cx a11 = rng.cnormal(), a21 = rng.cnormal();
    cx q = a11 * a11 + a21 * a21;
    if (std::abs(q) < 0.3) continue;
    cx a22 = a11 / q;
    cx a12 = -a21 / q;
    cx ti = a11 + a22;
    if (std::abs(4.0 - ti * ti) < 0.1) continue;
    cx t_prev = a21 - a12;                  // tr(w x_i)
    cx t_next = (a11 - a22) * cx(0.0, 1.0); // tr(x_i d(sqrt(-1)))
    cx t123 = (a12 + a21) * cx(0.0, 1.0);
    Representation rho = realize_x3(i, ti, t_prev, t_next, t123, 1e-6);
    if (!well_conditioned(rho, 6.0)) continue;
    return rho;
  }
  exhausted("sample_x3");
}

Representation sample_x4(Rng& rng) {
  for (int k = 0; k < kMaxDraws; ++k) {
    cx t1 = random_trace(rng);
    cx t2 = random_trace(rng);
    cx t3 = random_trace(rng);
    std::vector<cx> thetas;
    try {
      thetas = solve_theta(t1, t2, t3);
    } catch (const DomainError&) {
      continue;
    }
    if (thetas.empty()) continue;
    cx theta = thetas[rng.uniform_int(0, static_cast<int>(thetas.size()) - 1)];
    if (std::abs(theta) < 0.3 || std::abs(theta) > 4.0) continue;
    Representation rho;
    try {
      rho = realize_x4(t1, t2, t3, theta, 0, 1e-6);
    } catch (const Error&) {
      continue;
    }
    rho = balanced(rho);
    if (!well_conditioned(rho, 8.0)) continue;
    return rho;
  }
  exhausted("sample_x4");
}

Representation sample_component(const ComponentLabel& label, Rng& rng) {
  switch (label.kind) {
    case ComponentKind::X1Plus: return sample_x1(label.index, 1, rng);
    case ComponentKind::X1Minus: return sample_x1(label.index, -1, rng);
    case ComponentKind::X2: return sample_x2(label.index, rng);
    case ComponentKind::X3: return sample_x3(label.index, rng);
    case ComponentKind::X4: return sample_x4(rng);
    case ComponentKind::Custom: break;
  }
  throw DomainError("cannot sample the Custom component");
}

std::array<cx, 3> sample_theta_domain(Rng& rng) {
  for (int k = 0; k < kMaxDraws; ++k) {
    cx t1 = random_trace(rng);
    cx t2 = random_trace(rng);
    cx t3 = random_trace(rng);
    // keep the quartic roots away from zero and the excluded sets
    bool ok = true;
    try {
      for (const cx& th : solve_theta(t1, t2, t3)) {
        if (std::abs(th) < 0.2) ok = false;
        cx e1 = 1.0 - 4.0 / (t1 * t1), e2 = 1.0 - 4.0 / (t2 * t2);
        cx th2 = th * th;
        if (std::abs(th2 - e1) < 1e-3 || std::abs(th2 - e2) < 1e-3 ||
            std::abs(th2 - e1 * e2) < 1e-3)
          ok = false;
      }
    } catch (const DomainError&) {
      ok = false;
    }
    if (ok) return {t1, t2, t3};
  }
  exhausted("sample_theta_domain");
}

}  // namespace brm
