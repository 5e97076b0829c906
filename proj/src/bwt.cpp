#include "entlab/bwt.hpp"

#include <algorithm>
#include <stdexcept>

#include "entlab/errors.hpp"
#include "entlab/suffix_array.hpp"

namespace entlab {

std::string BwtResult::to_string(char sentinel) const {
  std::string out;
  out.reserve(last_column.size());
  for (Symbol v : last_column)
    out.push_back(v == 0 ? sentinel : (char)alphabet->symbol(v - 1));
  return out;
}

BwtResult bwt(const Sequence& s) {
  if (s.empty()) throw std::invalid_argument("bwt: empty input");
  const std::uint64_t n = s.size();
  std::vector<std::uint32_t> t(n + 1);
  for (std::uint64_t i = 0; i < n; ++i) t[i] = s[i] + 1;
  t[n] = 0;

  std::vector<std::uint32_t> sa = suffix_array(t);
  BwtResult r;
  r.alphabet = s.alphabet_ptr();
  r.last_column.resize(n + 1);
  for (std::uint64_t j = 0; j <= n; ++j) {
    std::uint32_t p = sa[j];
    r.last_column[j] = p == 0 ? t[n] : t[p - 1];
    if (p == 0) r.sentinel_pos = j;
  }
  return r;
}

Sequence ibwt(const BwtResult& r) {
  const std::vector<Symbol>& L = r.last_column;
  const std::uint64_t m = L.size();
  const std::uint64_t sigma_ext = r.alphabet->size() + 1;

  std::uint64_t sentinels = 0, sentinel_row = 0;
  for (std::uint64_t i = 0; i < m; ++i) {
    if (L[i] >= sigma_ext)
      throw std::invalid_argument("ibwt: symbol outside extended alphabet");
    if (L[i] == 0) {
      ++sentinels;
      sentinel_row = i;
    }
  }
  if (sentinels != 1)
    throw std::invalid_argument("ibwt: sentinel count must be exactly 1");

  // LF mapping: LF(i) = C[L[i]] + rank of L[i] among L[0..i].
  std::vector<std::uint64_t> count(sigma_ext + 1, 0);
  for (Symbol v : L) ++count[v + 1];
  for (std::uint64_t c = 1; c <= sigma_ext; ++c) count[c] += count[c - 1];
  std::vector<std::uint64_t> lf(m);
  std::vector<std::uint64_t> seen(sigma_ext, 0);
  for (std::uint64_t i = 0; i < m; ++i) lf[i] = count[L[i]] + seen[L[i]]++;

  // The row whose last symbol is the sentinel is the original string; walk
  // backwards through LF to spell it right to left.
  std::vector<Symbol> out(m - 1);
  std::uint64_t row = sentinel_row;
  for (std::uint64_t j = m - 1; j-- > 0;) {
    row = lf[row];
    Symbol v = L[row];
    if (v == 0) throw std::invalid_argument("ibwt: malformed transform");
    out[j] = v - 1;
  }
  return Sequence::from_indices(r.alphabet, std::move(out));
}

std::vector<Symbol> mtf(std::span<const Symbol> data, std::uint64_t sigma) {
  std::vector<Symbol> list(sigma);
  for (std::uint64_t i = 0; i < sigma; ++i) list[i] = (Symbol)i;
  std::vector<Symbol> out;
  out.reserve(data.size());
  for (Symbol v : data) {
    if (v >= sigma) throw std::invalid_argument("mtf: symbol out of range");
    std::uint64_t rank = 0;
    while (list[rank] != v) ++rank;
    out.push_back((Symbol)rank);
    list.erase(list.begin() + rank);
    list.insert(list.begin(), v);
  }
  return out;
}

std::vector<Symbol> imtf(std::span<const Symbol> ranks, std::uint64_t sigma) {
  std::vector<Symbol> list(sigma);
  for (std::uint64_t i = 0; i < sigma; ++i) list[i] = (Symbol)i;
  std::vector<Symbol> out;
  out.reserve(ranks.size());
  for (std::uint64_t i = 0; i < ranks.size(); ++i) {
    Symbol rank = ranks[i];
    if (rank >= sigma) throw FormatError("imtf: rank out of range", i);
    Symbol v = list[rank];
    out.push_back(v);
    list.erase(list.begin() + rank);
    list.insert(list.begin(), v);
  }
  return out;
}

std::vector<Symbol> rle0(std::span<const Symbol> ranks, std::uint64_t sigma) {
  std::vector<Symbol> out;
  std::uint64_t run = 0;
  auto flush_run = [&] {
    while (run > 0) {
      std::uint64_t digit = ((run - 1) & 1) + 1;  // 1 => RUNA, 2 => RUNB
      out.push_back(digit == 1 ? kRunA : kRunB);
      run = (run - digit) / 2;
    }
  };
  for (Symbol v : ranks) {
    if (v == 0) {
      ++run;
      continue;
    }
    if (v >= sigma) throw std::invalid_argument("rle0: rank out of range");
    flush_run();
    out.push_back(v + 1);
  }
  flush_run();
  return out;
}

std::vector<Symbol> irle0(std::span<const Symbol> tokens, std::uint64_t sigma,
                          std::uint64_t expected_len) {
  std::vector<Symbol> out;
  out.reserve(expected_len);
  std::uint64_t weight = 1;
  auto overflow = [&](std::uint64_t i) {
    return FormatError("irle0: expansion exceeds expected length", i);
  };
  for (std::uint64_t i = 0; i < tokens.size(); ++i) {
    Symbol t = tokens[i];
    if (t >= sigma + 1) throw FormatError("irle0: token out of range", i);
    if (t == kRunA || t == kRunB) {
      std::uint64_t zeros = (t == kRunA ? 1 : 2) * weight;
      weight *= 2;
      if (out.size() + zeros > expected_len) throw overflow(i);
      out.insert(out.end(), zeros, 0);
    } else {
      weight = 1;
      if (out.size() + 1 > expected_len) throw overflow(i);
      out.push_back(t - 1);
    }
  }
  if (out.size() != expected_len)
    throw FormatError("irle0: expansion shorter than expected", tokens.size());
  return out;
}

}  // namespace entlab
