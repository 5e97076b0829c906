#include "entlab/blob.hpp"

#include <stdexcept>

#include "entlab/bitio.hpp"
#include "entlab/errors.hpp"
#include "entlab/lz.hpp"
#include "entlab/order0.hpp"
#include "entlab/pipeline.hpp"

namespace entlab {

CompressedBlob finish_blob(Algo algo, std::uint64_t original_length,
                           const Alphabet& alphabet, BitWriter&& payload,
                           std::vector<AccountingLine> extra_lines) {
  const std::uint64_t payload_bits = payload.bit_count();
  BitWriter w;
  w.write_byte('E');
  w.write_byte('L');
  w.write_byte('B');
  w.write_byte('1');
  w.write_byte((std::uint8_t)algo);
  w.write_u64(original_length);
  w.write_u16((std::uint16_t)alphabet.size());
  for (std::uint8_t b : alphabet.symbols()) w.write_byte(b);
  w.write_u64(payload_bits);
  const std::uint64_t header_bits = w.bit_count();

  // Re-emit the payload bit stream behind the header. The header is a whole
  // number of bytes, so this is a byte copy.
  for (std::uint8_t b : payload.bytes()) w.write_byte(b);
  std::uint64_t padded_bits = 8 * w.bytes().size();

  CompressedBlob blob;
  blob.algo = algo;
  blob.original_length = original_length;
  blob.payload_bits = payload_bits;
  blob.accounting.push_back({"container_header", header_bits});
  for (auto& line : extra_lines) blob.accounting.push_back(std::move(line));
  blob.accounting.push_back(
      {"padding", padded_bits - header_bits - payload_bits});
  blob.bytes = w.take();
  return blob;
}

BlobHeader parse_blob_header(std::span<const std::uint8_t> blob) {
  BitReader r(blob);
  if (r.read_byte() != 'E' || r.read_byte() != 'L' || r.read_byte() != 'B' ||
      r.read_byte() != '1')
    throw FormatError("blob: bad magic", 0);
  std::uint8_t algo = r.read_byte();
  if (algo < 1 || algo > 4)
    throw FormatError("blob: unknown algorithm id", 32);
  BlobHeader h;
  h.algo = (Algo)algo;
  h.original_length = r.read_u64();
  std::uint64_t sigma = r.read_u16();
  if (sigma == 0) throw FormatError("blob: empty alphabet", 104);
  std::vector<std::uint8_t> symbols(sigma);
  for (std::uint64_t i = 0; i < sigma; ++i) symbols[i] = r.read_byte();
  try {
    h.alphabet = Alphabet::from_symbols(symbols);
  } catch (const std::invalid_argument&) {
    throw FormatError("blob: invalid alphabet descriptor", 120);
  }
  h.payload_bits = r.read_u64();
  h.header_bits = r.position();
  if (h.payload_bits > 8 * blob.size() - h.header_bits)
    throw FormatError("blob: payload length exceeds container",
                      h.header_bits - 64);
  return h;
}

Sequence decode_blob(std::span<const std::uint8_t> blob) {
  BlobHeader h = parse_blob_header(blob);
  switch (h.algo) {
    case Algo::kLz77:
      return lz77_decode(blob);
    case Algo::kLz78:
      return lz78_decode(blob);
    case Algo::kBwtPipeline:
      return bwt_pipeline_decode(blob);
    case Algo::kOrder0:
      return order0_decode(blob);
  }
  throw FormatError("blob: unknown algorithm id", 32);
}

}  // namespace entlab
