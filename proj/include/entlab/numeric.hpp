#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>

namespace entlab {

// Neumaier's variant of Kahan summation. All entropy and bound accumulations
// run through this so that results stay stable to ~1e-12 even at 1e7 terms.
class NeumaierSum {
 public:
  void add(double v) {
    double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Bits needed to store a count in [0, n], i.e. ceil(log2(n+1)).
constexpr unsigned count_bits(std::uint64_t n) { return std::bit_width(n); }

// Bits needed to store a symbol index in [0, sigma), i.e. ceil(log2(sigma)).
// A one-symbol alphabet needs zero bits.
constexpr unsigned symbol_bits(std::uint64_t sigma) {
  return sigma <= 1 ? 0 : std::bit_width(sigma - 1);
}

// base^exp, or nullopt on uint64 overflow.
constexpr std::optional<std::uint64_t> checked_pow(std::uint64_t base,
                                                   unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return std::nullopt;
    r *= base;
  }
  return r;
}

constexpr std::optional<std::uint64_t> checked_mul(std::uint64_t a,
                                                   std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return std::nullopt;
  return a * b;
}

}  // namespace entlab
