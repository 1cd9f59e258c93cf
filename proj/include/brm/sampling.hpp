#pragma once

#include <cstdint>
#include <random>

#include "brm/charvar.hpp"

namespace brm {

// Seeded random source; all samplers take one explicitly so batch runs are
// reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double normal() { return normal_(eng_); }
  cx cnormal() { return {normal(), normal()}; }
  double uniform(double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(eng_);
  }
  int uniform_int(int a, int b) {
    return std::uniform_int_distribution<int>(a, b)(eng_);
  }

 private:
  std::mt19937_64 eng_;
  std::normal_distribution<double> normal_;
};

// Random element of SL(2,C): a,b,c standard complex normal, d = (1+bc)/a,
// redrawn while |a| < 1e-3 or the entries exceed max_norm.
Mat2C random_unimodular(Rng& rng, double max_norm = 8.0);

// Trace bounded away from 0 and from +-2 (by the given margins).
cx random_trace(Rng& rng, double lo = 0.8, double hi = 3.5,
                double margin2 = 0.15);

Representation sample_x1(int i, int sign, Rng& rng);
Representation sample_x2(int i, Rng& rng);
Representation sample_x3(int i, Rng& rng);
Representation sample_x4(Rng& rng);

// Sample from the component named by the label (index ignored for X4).
Representation sample_component(const ComponentLabel& label, Rng& rng);

// Random character triple suitable for solve_theta / cover round trips:
// stays off t_i = 0, t_i^2 = 4 and the excluded hypersurfaces.
std::array<cx, 3> sample_theta_domain(Rng& rng);

}  // namespace brm
