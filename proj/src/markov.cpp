#include "entlab/markov.hpp"

#include <cmath>
#include <stdexcept>

#include "entlab/bitio.hpp"
#include "entlab/config.hpp"
#include "entlab/errors.hpp"
#include "entlab/numeric.hpp"

namespace entlab {

MarkovModel::MarkovModel(std::shared_ptr<const Alphabet> alphabet, unsigned k,
                         std::uint64_t n, ContextTable table)
    : alphabet_(std::move(alphabet)), k_(k), n_(n), table_(std::move(table)) {}

MarkovModel MarkovModel::fit(const Sequence& s, unsigned k) {
  if (s.size() <= k)
    throw std::invalid_argument("fit_markov: need n > k");
  return MarkovModel(s.alphabet_ptr(), k, s.size(),
                     ContextTable::build(s.data(), s.sigma(), k));
}

MarkovModel fit_markov(const Sequence& s, unsigned k) {
  return MarkovModel::fit(s, k);
}

std::pair<std::uint64_t, std::uint64_t> MarkovModel::transition_counts(
    const ContextKey& w, Symbol c) const {
  const ContextTable::Row* row = table_.find(w);
  if (row == nullptr) return {0, 0};
  std::uint64_t total = ContextTable::row_total(*row);
  for (const auto& [sym, cnt] : *row)
    if (sym == c) return {cnt, total};
  return {0, total};
}

std::optional<std::uint64_t> model_table_bits(std::uint64_t sigma, unsigned k,
                                              std::uint64_t n) {
  auto cells = checked_pow(sigma, k + 1);
  if (!cells) return std::nullopt;
  auto bits = checked_mul(*cells, count_bits(n));
  if (!bits || *bits > UINT64_MAX - 128) return std::nullopt;
  return *bits + 128;
}

std::optional<std::uint64_t> MarkovModel::table_bits() const {
  return model_table_bits(sigma(), k_, n_);
}

double self_information(const Sequence& s, const MarkovModel& m) {
  const unsigned k = m.order();
  const std::uint64_t n = s.size();
  NeumaierSum sum;
  if (n <= k) return 0.0;
  ContextKey key(s.data().begin(), s.data().begin() + k);
  for (std::uint64_t i = k; i < n; ++i) {
    auto [cnt, total] = m.transition_counts(key, s[i]);
    if (cnt == 0) throw ZeroProbabilityError(i);
    // Same expression hk() accumulates, so the identity n*hk = SI holds to
    // summation-order error only.
    sum.add(std::log2((double)total / (double)cnt));
    if (k > 0) {
      key.erase(key.begin());
      key.push_back((char32_t)s[i]);
    }
  }
  return sum.value();
}

SerializedModel serialize_model(const MarkovModel& m) {
  const std::uint64_t sigma = m.sigma();
  const unsigned k = m.order();
  const std::uint64_t n = m.fitted_length();
  if (sigma > 0xFFFF)
    throw std::invalid_argument("serialize_model: sigma exceeds format");
  if (k > 0xFFFF)
    throw std::invalid_argument("serialize_model: k exceeds format");

  auto cells = checked_pow(sigma, k + 1);
  const unsigned width = count_bits(n);
  auto total_bits =
      cells ? checked_mul(*cells, width) : std::optional<std::uint64_t>{};
  if (!cells || !total_bits || *total_bits / 8 + 16 > mem_cap_bytes())
    throw MemoryCapError("serialize_model: dense table exceeds memory cap");

  BitWriter w;
  w.write_byte('E');
  w.write_byte('M');
  w.write_byte('K');
  w.write_byte('1');
  w.write_u16((std::uint16_t)sigma);
  w.write_u16((std::uint16_t)k);
  w.write_u64(n);

  // Dense rows in lexicographic context order: the cell for context
  // (c_1..c_k) and symbol c sits at index ((c_1*sigma + c_2)*sigma + ...)*sigma + c.
  std::vector<ContextKey> contexts = m.table().sorted_contexts();
  std::size_t next = 0;
  auto context_rank = [&](const ContextKey& w_) {
    std::uint64_t r = 0;
    for (char32_t c : w_) r = r * sigma + (std::uint64_t)c;
    return r;
  };
  std::uint64_t cell = 0;
  auto pad_zero_rows_until = [&](std::uint64_t target_cell) {
    for (; cell < target_cell; ++cell) w.write_bits(0, width);
  };
  for (; next < contexts.size(); ++next) {
    const ContextKey& ctx = contexts[next];
    pad_zero_rows_until(context_rank(ctx) * sigma);
    const ContextTable::Row& row = *m.table().find(ctx);
    std::size_t ri = 0;
    for (std::uint64_t c = 0; c < sigma; ++c, ++cell) {
      std::uint64_t cnt = 0;
      if (ri < row.size() && row[ri].first == c) cnt = row[ri++].second;
      w.write_bits(cnt, width);
    }
  }
  pad_zero_rows_until(*cells);

  SerializedModel out;
  out.bits = w.bit_count();
  out.bytes = w.take();
  return out;
}

MarkovModel deserialize_model(std::span<const std::uint8_t> bytes,
                              std::shared_ptr<const Alphabet> alphabet) {
  BitReader r(bytes);
  if (r.read_byte() != 'E' || r.read_byte() != 'M' || r.read_byte() != 'K' ||
      r.read_byte() != '1')
    throw FormatError("model: bad magic", 0);
  const std::uint64_t sigma = r.read_u16();
  const unsigned k = (unsigned)r.read_u16();
  const std::uint64_t n = r.read_u64();
  if (sigma == 0) throw FormatError("model: sigma = 0", 32);

  if (!alphabet) {
    if (sigma > 256)
      throw std::invalid_argument(
          "deserialize_model: sigma > 256 needs an explicit alphabet");
    std::vector<std::uint8_t> ident(sigma);
    for (std::uint64_t i = 0; i < sigma; ++i) ident[i] = (std::uint8_t)i;
    alphabet = Alphabet::from_symbols(ident);
  }
  if (alphabet->size() != sigma)
    throw std::invalid_argument("deserialize_model: alphabet size mismatch");

  auto cells = checked_pow(sigma, k + 1);
  const unsigned width = count_bits(n);
  if (!cells || !checked_mul(*cells, width))
    throw FormatError("model: table size overflows", 32);

  // Reassemble the sparse table from the dense cells.
  std::vector<std::pair<ContextKey, ContextTable::Row>> rows;
  std::uint64_t contexts_total = *cells / sigma;
  ContextKey key(k, char32_t(0));
  for (std::uint64_t w_rank = 0; w_rank < contexts_total; ++w_rank) {
    std::uint64_t rem = w_rank;
    for (unsigned j = 0; j < k; ++j) {
      key[k - 1 - j] = (char32_t)(rem % sigma);
      rem /= sigma;
    }
    ContextTable::Row row;
    for (std::uint64_t c = 0; c < sigma; ++c) {
      std::uint64_t cnt = r.read_bits(width);
      if (cnt > n) throw FormatError("model: count exceeds n", r.position());
      if (cnt > 0) row.push_back({(Symbol)c, cnt});
    }
    if (!row.empty()) rows.push_back({key, std::move(row)});
  }
  return MarkovModel(std::move(alphabet), k, n,
                     ContextTable::from_rows(k, sigma, std::move(rows)));
}

}  // namespace entlab
