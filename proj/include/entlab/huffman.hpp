#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace entlab {

// Optimal prefix-free code lengths for the given nonnegative weights.
// Zero-weight symbols take no part in the tree and get length 0; when only
// one symbol has positive weight its code is empty (length 0). Ties between
// equal weights break toward the lowest-index symbol, then toward earlier
// created internal nodes, so builds are reproducible.
std::vector<unsigned> huffman_code_lengths(std::span<const double> weights);

// Canonical code assignment for the given lengths: shorter codes first,
// ties by symbol index; codewords returned MSB-first in the low `length`
// bits. Lengths must be realizable (Kraft sum <= 1).
std::vector<std::uint64_t> canonical_codes(std::span<const unsigned> lengths);

// Expected codeword length sum(p_i * len_i) in bits per symbol, with the
// weights normalized to a distribution.
double huffman_expected_length(std::span<const double> weights);

}  // namespace entlab
