#include "entlab/config.hpp"

#include <cstdlib>
#include <string>

namespace entlab {

std::uint64_t mem_cap_bytes() {
  static const std::uint64_t cap = [] {
    constexpr std::uint64_t kDefault = 2ull << 30;
    const char* env = std::getenv("ENTROPY_LAB_MEM_CAP");
    if (env == nullptr || *env == '\0') return kDefault;
    try {
      std::size_t pos = 0;
      unsigned long long v = std::stoull(env, &pos);
      if (pos == std::string(env).size() && v > 0) return (std::uint64_t)v;
    } catch (...) {
    }
    return kDefault;
  }();
  return cap;
}

}  // namespace entlab
