#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "entlab/sequence.hpp"

namespace entlab {

// The Burrows-Wheeler transform of s with a sentinel appended. The sentinel
// sorts below every alphabet symbol, so the transform works over the extended
// alphabet {sentinel} + alphabet: code 0 is the sentinel and code v+1 is
// alphabet index v. last_column is a permutation of the input symbols plus
// exactly one sentinel.
struct BwtResult {
  std::vector<Symbol> last_column;           // over sigma+1 codes
  std::uint64_t sentinel_pos = 0;            // index of code 0 in last_column
  std::shared_ptr<const Alphabet> alphabet;  // the original alphabet

  // Rendering for inspection/tests: alphabet bytes, sentinel as the given char.
  std::string to_string(char sentinel = '$') const;
};

// Requires n >= 1. Computed via the suffix array of s + sentinel (rotation
// order equals suffix order when the sentinel is unique and smallest).
BwtResult bwt(const Sequence& s);

// Inverse transform. Throws std::invalid_argument unless the input contains
// exactly one sentinel.
Sequence ibwt(const BwtResult& r);

// Move-to-front over an alphabet of `sigma` codes, initial list 0..sigma-1 in
// alphabet order. Output ranks are in [0, sigma).
std::vector<Symbol> mtf(std::span<const Symbol> data, std::uint64_t sigma);

// Inverse MTF; throws FormatError on a rank outside [0, sigma).
std::vector<Symbol> imtf(std::span<const Symbol> ranks, std::uint64_t sigma);

// Zero-run coding of MTF output with the 1-2 code: a run of L zeros becomes
// digits d_0, d_1, ... in {1,2} with L = sum d_i * 2^i, emitted as RUNA/RUNB
// tokens; a nonzero rank r becomes token r+1. Token alphabet size: sigma+1.
inline constexpr Symbol kRunA = 0;
inline constexpr Symbol kRunB = 1;
std::vector<Symbol> rle0(std::span<const Symbol> ranks, std::uint64_t sigma);

// Inverse; expected_len is the exact pre-encoding length, and decoding must
// land on it or a FormatError is thrown.
std::vector<Symbol> irle0(std::span<const Symbol> tokens, std::uint64_t sigma,
                          std::uint64_t expected_len);

}  // namespace entlab
