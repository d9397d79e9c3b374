#pragma once

// Seeded value generators for the property tests. Every test draws from its
// own fixed seed so failures reproduce exactly.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace singh::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  std::uint64_t u64() { return rng_(); }

  // Shape parameter spanning the tiny, moderate and large regimes.
  double shape() {
    switch (index(0, 2)) {
      case 0: return log_uniform(1e-3, 1.0);
      case 1: return uniform(1.0, 50.0);
      default: return log_uniform(50.0, 5e4);
    }
  }

  std::vector<double> binary(std::size_t n, double p) {
    std::vector<double> out(n);
    for (auto& x : out) x = uniform(0.0, 1.0) < p ? 1.0 : 0.0;
    return out;
  }

  std::vector<double> reals(std::size_t n, double lo, double hi) {
    std::vector<double> out(n);
    for (auto& x : out) x = uniform(lo, hi);
    return out;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace singh::testing
