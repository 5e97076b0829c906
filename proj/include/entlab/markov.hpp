#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "entlab/entropy.hpp"
#include "entlab/sequence.hpp"

namespace entlab {

// An order-k Markov model with maximum-likelihood conditional probabilities
// p(c|w) = count(c after w) / |s_w|, fitted from a sequence. Counts are kept
// sparse; the dense sigma^(k+1) table exists only in the serialized form.
class MarkovModel {
 public:
  // Requires n > k. The model keeps the fitted sequence's length n because
  // the serialized count width is ceil(log2(n+1)).
  static MarkovModel fit(const Sequence& s, unsigned k);

  // Assemble a model directly from a table (tests, deserialization).
  MarkovModel(std::shared_ptr<const Alphabet> alphabet, unsigned k,
              std::uint64_t n, ContextTable table);

  unsigned order() const { return k_; }
  std::size_t sigma() const { return alphabet_->size(); }
  std::uint64_t fitted_length() const { return n_; }
  const ContextTable& table() const { return table_; }
  const std::shared_ptr<const Alphabet>& alphabet_ptr() const {
    return alphabet_;
  }

  // count(c|w) and |s_w|; {0, 0} when the context never occurs.
  std::pair<std::uint64_t, std::uint64_t> transition_counts(
      const ContextKey& w, Symbol c) const;

  // Serialized size in bits: sigma^(k+1) * ceil(log2(n+1)) + 128.
  // nullopt when sigma^(k+1) overflows the accounting range.
  std::optional<std::uint64_t> table_bits() const;

 private:
  std::shared_ptr<const Alphabet> alphabet_;
  unsigned k_;
  std::uint64_t n_;
  ContextTable table_;
};

MarkovModel fit_markov(const Sequence& s, unsigned k);

// Serialized size of a dense order-k model without building one:
// sigma^(k+1) * ceil(log2(n+1)) + 128, nullopt on overflow.
std::optional<std::uint64_t> model_table_bits(std::uint64_t sigma, unsigned k,
                                              std::uint64_t n);

// sum over positions i >= k of log2(1/p(s_i | s_{i-k..i})), in bits. The
// first k positions contribute zero. Throws ZeroProbabilityError (with the
// position) when the model assigns probability zero to an observed
// transition. For the MLE model of s itself this equals n * hk(s, k).
double self_information(const Sequence& s, const MarkovModel& m);

// Bit-exact model serialization. Layout, all little-endian:
//   bytes 0..3   magic "EMK1" (the trailing '1' is the format version)
//   bytes 4..5   sigma, u16
//   bytes 6..7   k, u16
//   bytes 8..15  n, u64
// then a dense table of sigma^(k+1) counts in lexicographic (context, symbol)
// order, each packed in ceil(log2(n+1)) bits, LSB-first. Contexts that never
// occur serialize as zero counts. The final byte is zero-padded.
struct SerializedModel {
  std::vector<std::uint8_t> bytes;
  std::uint64_t bits;  // exact size before padding: table_bits()
};

// Throws MemoryCapError when the dense table would exceed the memory budget.
SerializedModel serialize_model(const MarkovModel& m);

// Inverse of serialize_model. The alphabet is not part of the format; the
// caller may supply one (size must equal sigma), otherwise identity bytes
// 0..sigma-1 are assumed.
MarkovModel deserialize_model(std::span<const std::uint8_t> bytes,
                              std::shared_ptr<const Alphabet> alphabet = {});

}  // namespace entlab
