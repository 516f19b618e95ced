#pragma once

#include <cstdint>
#include <random>

#include "pathwise/specfun.hpp"

namespace pathwise {

// Deterministic RNG stream.  Uniform and normal draws are generated from the
// raw engine output so results do not depend on the standard library's
// distribution implementations.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0) {
    std::seed_seq seq{seed, stream, std::uint64_t{0x9e3779b97f4a7c15ULL}};
    eng_.seed(seq);
  }

  // uniform on (0, 1), never exactly 0 or 1
  double uniform() {
    const std::uint64_t bits = eng_() >> 11;  // 53 random bits
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal() { return specfun::std_normal_quantile(uniform()); }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace pathwise
