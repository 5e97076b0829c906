#pragma once

#include <cstdint>

namespace entlab {

// Memory budget in bytes for dense table materialization (model serialization,
// de Bruijn construction, tuple-frequency tables). Defaults to 2 GiB; the
// ENTROPY_LAB_MEM_CAP environment variable (bytes) overrides it. Read once,
// at first use.
std::uint64_t mem_cap_bytes();

}  // namespace entlab
