#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "entlab/alphabet.hpp"

namespace entlab {

// A string over an explicit alphabet, stored as symbol indices. Immutable
// after construction; copies share the alphabet.
class Sequence {
 public:
  // Maps bytes to symbol indices. Throws UndeclaredSymbolError (with byte and
  // offset) when a byte is not covered by the alphabet.
  static Sequence ingest(std::span<const std::uint8_t> bytes,
                         std::shared_ptr<const Alphabet> alphabet);

  // Convenience: ingest ASCII text against an inferred or given alphabet.
  static Sequence from_string(const std::string& text,
                              std::shared_ptr<const Alphabet> alphabet = {});

  // Pre-mapped indices; validates each index against the alphabet size.
  static Sequence from_indices(std::shared_ptr<const Alphabet> alphabet,
                               std::vector<Symbol> indices);

  std::uint64_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }
  Symbol operator[](std::uint64_t i) const { return data_[i]; }
  std::span<const Symbol> data() const { return data_; }
  const Alphabet& alphabet() const { return *alphabet_; }
  const std::shared_ptr<const Alphabet>& alphabet_ptr() const {
    return alphabet_;
  }
  std::size_t sigma() const { return alphabet_->size(); }

  // Inverse of ingest: reproduces the original byte stream exactly.
  std::vector<std::uint8_t> to_bytes() const;

 private:
  Sequence(std::shared_ptr<const Alphabet> alphabet, std::vector<Symbol> data)
      : alphabet_(std::move(alphabet)), data_(std::move(data)) {}

  std::shared_ptr<const Alphabet> alphabet_;
  std::vector<Symbol> data_;
};

// Per-symbol occurrence counts over a sequence's alphabet.
struct FrequencyVector {
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;
};

FrequencyVector frequencies(const Sequence& s);

}  // namespace entlab
