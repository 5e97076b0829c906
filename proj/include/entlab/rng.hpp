#pragma once

#include <cstdint>

namespace entlab {

// splitmix64 (Steele, Lea, Flood 2014). Chosen for reproducibility: the
// algorithm is fully specified here, so a seed produces the same stream on
// every platform. std::uniform_int_distribution is deliberately avoided; its
// output is not pinned by the standard.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Unbiased draw from [0, bound) via rejection sampling. bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

 private:
  std::uint64_t state_;
};

}  // namespace entlab
