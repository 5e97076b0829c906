#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace entlab {

// Suffix array by prefix doubling with counting sort, O(n log n). Text values
// are arbitrary uint32; ties are resolved by position as usual.
std::vector<std::uint32_t> suffix_array(std::span<const std::uint32_t> text);

}  // namespace entlab
