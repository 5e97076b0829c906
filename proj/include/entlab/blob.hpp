#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "entlab/sequence.hpp"

namespace entlab {

enum class Algo : std::uint8_t {
  kLz77 = 1,
  kLz78 = 2,
  kBwtPipeline = 3,
  kOrder0 = 4,
};

// One (label, bits) line of the bit-exact size breakdown. The labeled bits
// always sum to 8 * container size.
struct AccountingLine {
  std::string label;
  std::uint64_t bits;
};

// Stage statistics the BWT pipeline exposes for bound verification.
struct PipelineStats {
  std::uint64_t bwt_symbols = 0;     // n + 1 (sentinel included)
  std::uint64_t rle_tokens = 0;      // coder input length m
  std::uint64_t coder_payload_bits = 0;
  double coder_input_information = 0.0;  // m * H_0(token stream), bits
};

// A self-describing compressed container:
//   magic "ELB1" (4B) | algo u8 | original length u64 | sigma u16 |
//   sigma alphabet bytes | payload bit-length u64 | payload, zero-padded.
// All integers little-endian; payload is bit-packed LSB-first.
struct CompressedBlob {
  Algo algo;
  std::uint64_t original_length = 0;
  std::vector<std::uint8_t> bytes;  // the full container
  std::uint64_t payload_bits = 0;
  std::vector<AccountingLine> accounting;
  PipelineStats pipeline;  // meaningful for kBwtPipeline only

  std::uint64_t total_bits() const { return 8 * bytes.size(); }
};

// Container plumbing shared by the encoders.
class BitWriter;
CompressedBlob finish_blob(Algo algo, std::uint64_t original_length,
                           const Alphabet& alphabet, BitWriter&& payload,
                           std::vector<AccountingLine> extra_lines);

struct BlobHeader {
  Algo algo;
  std::uint64_t original_length;
  std::shared_ptr<const Alphabet> alphabet;
  std::uint64_t payload_bits;
  std::uint64_t header_bits;
};

// Parses and validates the container header; throws FormatError with the
// offending bit offset on bad magic, unknown algorithm, or truncation.
BlobHeader parse_blob_header(std::span<const std::uint8_t> blob);

// Dispatches to the right decoder by algorithm id.
Sequence decode_blob(std::span<const std::uint8_t> blob);

}  // namespace entlab
