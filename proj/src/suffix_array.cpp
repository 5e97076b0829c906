#include "entlab/suffix_array.hpp"

#include <algorithm>
#include <numeric>

namespace entlab {

std::vector<std::uint32_t> suffix_array(std::span<const std::uint32_t> text) {
  const std::uint32_t n = (std::uint32_t)text.size();
  std::vector<std::uint32_t> sa(n), rank(n), tmp(n), cnt;
  if (n == 0) return sa;

  // Initial ranks: sort positions by symbol, then group equal symbols.
  std::iota(sa.begin(), sa.end(), 0);
  std::sort(sa.begin(), sa.end(), [&](std::uint32_t a, std::uint32_t b) {
    return text[a] < text[b];
  });
  rank[sa[0]] = 0;
  for (std::uint32_t j = 1; j < n; ++j)
    rank[sa[j]] = rank[sa[j - 1]] + (text[sa[j]] != text[sa[j - 1]] ? 1 : 0);

  for (std::uint32_t h = 1; h < n; h <<= 1) {
    // Order by the second key rank[i+h] (suffixes without one come first),
    // exploiting that sa is already ordered to keep the pass stable.
    std::uint32_t idx = 0;
    for (std::uint32_t i = n - h; i < n; ++i) tmp[idx++] = i;
    for (std::uint32_t j = 0; j < n; ++j)
      if (sa[j] >= h) tmp[idx++] = sa[j] - h;

    // Stable counting sort by the first key rank[i].
    cnt.assign(rank[sa[n - 1]] + 2, 0);
    for (std::uint32_t i = 0; i < n; ++i) ++cnt[rank[i] + 1];
    for (std::size_t i = 1; i < cnt.size(); ++i) cnt[i] += cnt[i - 1];
    for (std::uint32_t j = 0; j < n; ++j) sa[cnt[rank[tmp[j]]]++] = tmp[j];

    // Recompute ranks from the (first, second) key pairs.
    auto second = [&](std::uint32_t i) -> std::uint64_t {
      return i + h < n ? (std::uint64_t)rank[i + h] + 1 : 0;
    };
    tmp[sa[0]] = 0;
    for (std::uint32_t j = 1; j < n; ++j) {
      bool diff = rank[sa[j]] != rank[sa[j - 1]] ||
                  second(sa[j]) != second(sa[j - 1]);
      tmp[sa[j]] = tmp[sa[j - 1]] + (diff ? 1 : 0);
    }
    rank.swap(tmp);
    if (rank[sa[n - 1]] == n - 1) break;
  }
  return sa;
}

}  // namespace entlab
