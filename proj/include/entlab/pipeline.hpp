#pragma once

#include <cstdint>
#include <span>

#include "entlab/blob.hpp"
#include "entlab/sequence.hpp"

namespace entlab {

// The block-sorting chain: BWT (over sigma+1 codes, sentinel included), then
// move-to-front, then zero-run 1-2 coding (tokens over sigma+2), then the
// exact-count order-0 range coder. The payload is the token count (u64), the
// token frequency table, and the coder bytes; the stats needed for bound
// checks (token count, coder bits, coder input information) come back in
// blob.pipeline.
CompressedBlob bwt_pipeline_encode(const Sequence& s);

Sequence bwt_pipeline_decode(std::span<const std::uint8_t> blob);

}  // namespace entlab
