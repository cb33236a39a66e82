#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace nuc {

/// mt19937 with hand-rolled output transforms. The standard distributions are
/// implementation-defined, so sampling goes through these to keep seeded runs
/// identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint32_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return engine_() * (1.0 / 4294967296.0); }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

  /// Uniform integer in [lo, hi] (both inclusive).
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(uniform() * (double(hi) - lo + 1.0));
  }

  /// Standard normal via Box-Muller (one draw per call, cosine branch).
  double gaussian() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  double gaussian(double mean, double sigma) { return mean + sigma * gaussian(); }

 private:
  std::mt19937 engine_;
};

}  // namespace nuc
