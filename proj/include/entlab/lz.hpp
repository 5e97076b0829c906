#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "entlab/blob.hpp"
#include "entlab/sequence.hpp"

namespace entlab {

// The 1976 production complexity: parse left to right, each phrase the
// shortest prefix of the remainder not reproducible by copying from an
// earlier start position (self-overlap allowed); the final phrase may remain
// reproducible. Returns the phrase count. Exhaustive search; intended for
// desk-scale inputs.
std::uint64_t lz76_complexity(const Sequence& s);

// Greedy longest-match phrase: copy `length` symbols from `offset` positions
// back (0 length = literal), then emit `next` explicitly. Ties in length go
// to the smallest offset. Self-overlapping copies are allowed.
struct Lz77Phrase {
  std::uint64_t offset = 0;
  std::uint64_t length = 0;
  Symbol next = 0;
};

std::vector<Lz77Phrase> lz77_parse(const Sequence& s);

// Dictionary phrase: previously emitted phrase `parent` (0 = empty phrase)
// extended by one symbol. The final phrase may end flush with the input and
// carry no extension.
struct Lz78Phrase {
  std::uint64_t parent = 0;
  std::optional<Symbol> extension;
};

std::vector<Lz78Phrase> lz78_parse(const Sequence& s);

// Encodings. Each LZ77 phrase costs 2*ceil(log2(n+1)) + ceil(log2 sigma)
// bits; LZ78 phrase number t costs ceil(log2 t) + ceil(log2 sigma) bits (the
// extension field is absent on a final no-extension phrase, flagged by the
// payload's leading bit). Inputs must be nonempty.
CompressedBlob lz77_encode(const Sequence& s);
CompressedBlob lz78_encode(const Sequence& s);

Sequence lz77_decode(std::span<const std::uint8_t> blob);
Sequence lz78_decode(std::span<const std::uint8_t> blob);

}  // namespace entlab
