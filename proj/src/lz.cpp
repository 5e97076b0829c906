#include "entlab/lz.hpp"

#include <map>
#include <stdexcept>

#include "entlab/bitio.hpp"
#include "entlab/errors.hpp"
#include "entlab/numeric.hpp"

namespace entlab {

std::uint64_t lz76_complexity(const Sequence& s) {
  const std::uint64_t n = s.size();
  if (n == 0) throw std::invalid_argument("lz76: empty input");
  std::uint64_t phrases = 0;
  std::uint64_t i = 0;
  while (i < n) {
    // Longest prefix of s[i..] reproducible from a start position before i,
    // copies may run into the phrase itself.
    std::uint64_t best = 0;
    for (std::uint64_t p = 0; p < i; ++p) {
      std::uint64_t len = 0;
      while (i + len < n && s[p + len] == s[i + len]) ++len;
      best = std::max(best, len);
      if (i + best == n) break;
    }
    i += std::min(best + 1, n - i);
    ++phrases;
  }
  return phrases;
}

std::vector<Lz77Phrase> lz77_parse(const Sequence& s) {
  const std::uint64_t n = s.size();
  if (n == 0) throw std::invalid_argument("lz77: empty input");
  std::vector<Lz77Phrase> phrases;
  // Positions of each symbol seen so far, for candidate match starts.
  std::vector<std::vector<std::uint64_t>> occ(s.sigma());

  std::uint64_t i = 0;
  while (i < n) {
    std::uint64_t best_len = 0, best_off = 0;
    const std::uint64_t max_len = n - i - 1;  // a next symbol must remain
    if (max_len > 0) {
      const auto& cands = occ[s[i]];
      // Most recent first: on equal length the first (smallest) offset wins.
      for (auto it = cands.rbegin(); it != cands.rend(); ++it) {
        std::uint64_t p = *it;
        // A longer match must extend where the current best ends. In-range:
        // p + best_len < i + best_len <= n - 1.
        if (best_len > 0 && s[p + best_len] != s[i + best_len]) continue;
        std::uint64_t len = 0;
        while (len < max_len && s[p + len] == s[i + len]) ++len;
        if (len > best_len) {
          best_len = len;
          best_off = i - p;
          if (best_len == max_len) break;
        }
      }
    }
    Lz77Phrase ph;
    ph.offset = best_len == 0 ? 0 : best_off;
    ph.length = best_len;
    ph.next = s[i + best_len];
    phrases.push_back(ph);
    for (std::uint64_t j = i; j <= i + best_len; ++j) occ[s[j]].push_back(j);
    i += best_len + 1;
  }
  return phrases;
}

std::vector<Lz78Phrase> lz78_parse(const Sequence& s) {
  const std::uint64_t n = s.size();
  if (n == 0) throw std::invalid_argument("lz78: empty input");
  std::vector<Lz78Phrase> phrases;
  // Trie over (node, symbol); node 0 is the empty phrase.
  std::map<std::pair<std::uint64_t, Symbol>, std::uint64_t> children;
  std::uint64_t next_id = 1;

  std::uint64_t i = 0;
  while (i < n) {
    std::uint64_t node = 0;
    while (i < n) {
      auto it = children.find({node, s[i]});
      if (it == children.end()) break;
      node = it->second;
      ++i;
    }
    if (i < n) {
      children[{node, s[i]}] = next_id++;
      phrases.push_back({node, s[i]});
      ++i;
    } else {
      phrases.push_back({node, std::nullopt});  // ended inside a known phrase
    }
  }
  return phrases;
}

namespace {

void check_symbol(std::uint64_t v, std::uint64_t sigma, std::uint64_t offset) {
  if (v >= sigma) throw FormatError("decode: symbol out of range", offset);
}

}  // namespace

CompressedBlob lz77_encode(const Sequence& s) {
  std::vector<Lz77Phrase> phrases = lz77_parse(s);
  const std::uint64_t n = s.size();
  const unsigned field = count_bits(n);
  const unsigned sym = symbol_bits(s.sigma());

  BitWriter payload;
  for (const Lz77Phrase& ph : phrases) {
    payload.write_bits(ph.offset, field);
    payload.write_bits(ph.length, field);
    payload.write_bits(ph.next, sym);
  }
  std::vector<AccountingLine> lines{
      {"phrases", payload.bit_count()},
  };
  CompressedBlob blob = finish_blob(Algo::kLz77, n, s.alphabet(),
                                    std::move(payload), std::move(lines));
  return blob;
}

Sequence lz77_decode(std::span<const std::uint8_t> blob) {
  BlobHeader h = parse_blob_header(blob);
  if (h.algo != Algo::kLz77)
    throw FormatError("lz77_decode: wrong algorithm id", 32);
  BitReader r(blob);
  r.skip_bits(h.header_bits);
  const std::uint64_t n = h.original_length;
  const unsigned field = count_bits(n);
  const unsigned sym = symbol_bits(h.alphabet->size());

  std::vector<Symbol> out;
  out.reserve(n);
  const std::uint64_t payload_end = h.header_bits + h.payload_bits;
  while (out.size() < n) {
    if (r.position() + 2 * field + sym > payload_end)
      throw FormatError("lz77_decode: truncated phrase", r.position());
    std::uint64_t offset = r.read_bits(field);
    std::uint64_t length = r.read_bits(field);
    Symbol next = (Symbol)r.read_bits(sym);
    check_symbol(next, h.alphabet->size(), r.position() - sym);
    if (offset > out.size() || (offset == 0 && length > 0) ||
        out.size() + length + 1 > n)
      throw FormatError("lz77_decode: invalid phrase", r.position());
    for (std::uint64_t j = 0; j < length; ++j)
      out.push_back(out[out.size() - offset]);
    out.push_back(next);
  }
  return Sequence::from_indices(h.alphabet, std::move(out));
}

CompressedBlob lz78_encode(const Sequence& s) {
  std::vector<Lz78Phrase> phrases = lz78_parse(s);
  const unsigned sym = symbol_bits(s.sigma());

  BitWriter payload;
  bool truncated = !phrases.back().extension.has_value();
  payload.write_bits(truncated ? 1 : 0, 1);
  for (std::uint64_t t = 1; t <= phrases.size(); ++t) {
    const Lz78Phrase& ph = phrases[t - 1];
    unsigned parent_field = t <= 1 ? 0 : count_bits(t - 1);  // ceil(log2 t)
    payload.write_bits(ph.parent, parent_field);
    if (ph.extension) payload.write_bits(*ph.extension, sym);
  }
  std::vector<AccountingLine> lines{
      {"truncation_flag", 1},
      {"phrases", payload.bit_count() - 1},
  };
  return finish_blob(Algo::kLz78, s.size(), s.alphabet(), std::move(payload),
                     std::move(lines));
}

Sequence lz78_decode(std::span<const std::uint8_t> blob) {
  BlobHeader h = parse_blob_header(blob);
  if (h.algo != Algo::kLz78)
    throw FormatError("lz78_decode: wrong algorithm id", 32);
  BitReader r(blob);
  r.skip_bits(h.header_bits);
  const std::uint64_t n = h.original_length;
  const unsigned sym = symbol_bits(h.alphabet->size());
  const std::uint64_t payload_end = h.header_bits + h.payload_bits;

  bool truncated = r.read_bits(1) != 0;
  // Phrase t copies dict[parent] and appends the extension; store phrases as
  // (start, length) into the output to expand copies cheaply.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> dict{{0, 0}};
  std::vector<Symbol> out;
  out.reserve(n);
  while (out.size() < n) {
    std::uint64_t t = dict.size();  // 1-based phrase number
    unsigned parent_field = t <= 1 ? 0 : count_bits(t - 1);
    if (r.position() + parent_field > payload_end)
      throw FormatError("lz78_decode: truncated phrase", r.position());
    std::uint64_t parent = r.read_bits(parent_field);
    if (parent >= t)
      throw FormatError("lz78_decode: parent out of range", r.position());
    auto [pstart, plen] = dict[parent];
    bool final_no_ext = truncated && out.size() + plen == n;
    if (!final_no_ext && out.size() + plen + 1 > n)
      throw FormatError("lz78_decode: phrase overruns output", r.position());
    std::uint64_t start = out.size();
    for (std::uint64_t j = 0; j < plen; ++j) out.push_back(out[pstart + j]);
    if (final_no_ext) break;
    if (r.position() + sym > payload_end)
      throw FormatError("lz78_decode: truncated extension", r.position());
    Symbol ext = (Symbol)r.read_bits(sym);
    check_symbol(ext, h.alphabet->size(), r.position() - sym);
    out.push_back(ext);
    dict.push_back({start, plen + 1});
  }
  return Sequence::from_indices(h.alphabet, std::move(out));
}

}  // namespace entlab
