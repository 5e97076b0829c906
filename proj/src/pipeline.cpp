#include "entlab/pipeline.hpp"

#include <stdexcept>

#include "entlab/bitio.hpp"
#include "entlab/bwt.hpp"
#include "entlab/errors.hpp"
#include "entlab/order0.hpp"

namespace entlab {

CompressedBlob bwt_pipeline_encode(const Sequence& s) {
  if (s.empty()) throw std::invalid_argument("bwt pipeline: empty input");
  const std::uint64_t sigma = s.sigma();

  BwtResult b = bwt(s);
  std::vector<Symbol> ranks = mtf(b.last_column, sigma + 1);
  std::vector<Symbol> tokens = rle0(ranks, sigma + 1);

  BitWriter payload;
  payload.write_u64(tokens.size());
  Order0Payload info = order0_encode_stream(tokens, sigma + 2, payload);

  std::vector<AccountingLine> lines{
      {"token_count", 64},
      {"counts_header", info.counts_bits},
      {"coder_payload", info.coder_bits},
  };
  CompressedBlob blob = finish_blob(Algo::kBwtPipeline, s.size(), s.alphabet(),
                                    std::move(payload), std::move(lines));
  blob.pipeline.bwt_symbols = b.last_column.size();
  blob.pipeline.rle_tokens = tokens.size();
  blob.pipeline.coder_payload_bits = info.coder_bits;
  blob.pipeline.coder_input_information = info.input_information;
  return blob;
}

Sequence bwt_pipeline_decode(std::span<const std::uint8_t> blob) {
  BlobHeader h = parse_blob_header(blob);
  if (h.algo != Algo::kBwtPipeline)
    throw FormatError("bwt pipeline: wrong algorithm id", 32);
  const std::uint64_t sigma = h.alphabet->size();

  BitReader r(blob);
  r.skip_bits(h.header_bits);
  std::uint64_t token_count = r.read_u64();
  std::vector<Symbol> tokens =
      order0_decode_stream(r, sigma + 2, token_count);

  std::vector<Symbol> ranks = irle0(tokens, sigma + 1, h.original_length + 1);
  std::vector<Symbol> last_column = imtf(ranks, sigma + 1);

  BwtResult b;
  b.last_column = std::move(last_column);
  b.alphabet = h.alphabet;
  for (std::uint64_t i = 0; i < b.last_column.size(); ++i)
    if (b.last_column[i] == 0) b.sentinel_pos = i;
  return ibwt(b);
}

}  // namespace entlab
