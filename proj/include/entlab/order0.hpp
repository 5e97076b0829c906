#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "entlab/bitio.hpp"
#include "entlab/blob.hpp"
#include "entlab/sequence.hpp"

namespace entlab {

// Semi-static order-0 entropy coder: exact symbol counts in a header, then a
// byte-oriented range coder (64-bit range, carry-propagating, renormalized a
// byte at a time) coding each symbol with its exact empirical probability.
//
// Coded size is n*H_0(s) + 2 bits plus framing: one leading byte plus eight
// flush bytes plus per-symbol rounding below total/2^56 per symbol. The
// documented constant below caps everything beyond n*H_0 + 2; tests assert
// payload_bits <= n*H_0 + 2 + kCoderOverheadBits.
inline constexpr std::uint64_t kCoderOverheadBits = 128;

// Counts header (sigma * ceil(log2(m+1)) bits) plus coder output appended to
// `out`. m is data.size(), which the decoder must learn elsewhere.
struct Order0Payload {
  std::uint64_t counts_bits = 0;
  std::uint64_t coder_bits = 0;
  double input_information = 0.0;  // m * H_0 of the coded stream
};
Order0Payload order0_encode_stream(std::span<const Symbol> data,
                                   std::uint64_t sigma, BitWriter& out);

// Reads a stream written by order0_encode_stream: `count` symbols over
// `sigma` codes.
std::vector<Symbol> order0_decode_stream(BitReader& r, std::uint64_t sigma,
                                         std::uint64_t count);

// Container-level entry points. Requires a nonempty input.
CompressedBlob order0_encode(const Sequence& s);
Sequence order0_decode(std::span<const std::uint8_t> blob);

}  // namespace entlab
