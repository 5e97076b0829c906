#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace entlab {

// Index of a symbol within an Alphabet. Values at or above the alphabet size
// appear only inside compressor internals (e.g. the BWT sentinel).
using Symbol = std::uint32_t;

// An explicit, ordered set of distinct byte symbols. The ordering is the
// symbol ordering used everywhere: entropy contexts, BWT rotations, MTF
// initial list, bound formulas. Immutable after construction and shared
// between sequences, so concurrent readers are safe.
class Alphabet {
 public:
  // All 256 byte values, identity-ordered.
  static std::shared_ptr<const Alphabet> bytes();

  // Caller-declared symbols, order significant. Throws std::invalid_argument
  // on duplicates or an empty set.
  static std::shared_ptr<const Alphabet> from_symbols(
      std::span<const std::uint8_t> symbols);

  // Convenience mode: the distinct bytes observed in data, sorted ascending.
  static std::shared_ptr<const Alphabet> inferred(
      std::span<const std::uint8_t> data);

  std::size_t size() const { return symbols_.size(); }
  std::uint8_t symbol(Symbol index) const { return symbols_[index]; }
  std::span<const std::uint8_t> symbols() const { return symbols_; }

  // Index of a byte, or -1 if the byte is not in the alphabet.
  int index_of(std::uint8_t byte) const { return lookup_[byte]; }

 private:
  explicit Alphabet(std::vector<std::uint8_t> symbols);

  std::vector<std::uint8_t> symbols_;
  std::array<std::int16_t, 256> lookup_;
};

}  // namespace entlab
