#pragma once

#include <cmath>
#include <cstdint>

namespace motkit {

// Counter-based pseudo-random stream (splitmix64 over an incrementing
// counter). Pure integer mixing, so a given seed produces the same stream
// on every platform. Every stochastic routine in the toolkit takes an
// explicit Rng; there is no global generator.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), counter_(0) {}

  std::uint64_t next_u64() {
    std::uint64_t z = seed_ + (++counter_) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n) { return next_u64() % n; }

  // Standard normal via Box-Muller (cached pair kept out on purpose: a
  // stateless draw keeps forked streams independent of call parity).
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

  // Standard normal truncated to |z| < 2, by rejection.
  double truncated_normal() {
    for (;;) {
      double z = normal();
      if (z > -2.0 && z < 2.0) return z;
    }
  }

  // Derive an independent stream; mixing the tag keeps sibling forks apart.
  Rng fork(std::uint64_t tag) {
    std::uint64_t z = next_u64();
    return Rng(z ^ (tag * 0xD1342543DE82EF95ULL));
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_;
};

}  // namespace motkit
