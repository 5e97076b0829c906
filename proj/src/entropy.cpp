#include "entlab/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "entlab/numeric.hpp"

namespace entlab {

Distribution Distribution::from_probs(std::vector<double> p) {
  NeumaierSum sum;
  for (double v : p) {
    if (!(v >= 0.0))
      throw std::invalid_argument("distribution: negative entry");
    sum.add(v);
  }
  if (std::abs(sum.value() - 1.0) > 1e-12)
    throw std::invalid_argument("distribution: entries must sum to 1");
  return Distribution(std::move(p));
}

Distribution Distribution::from_frequencies(const FrequencyVector& fv) {
  if (fv.total == 0)
    throw std::invalid_argument("distribution: empty frequency vector");
  std::vector<double> p(fv.counts.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    p[i] = (double)fv.counts[i] / (double)fv.total;
  return Distribution(std::move(p));
}

double shannon_entropy(const Distribution& p) {
  NeumaierSum sum;
  for (double v : p.probs())
    if (v > 0.0) sum.add(v * std::log2(1.0 / v));
  return sum.value();
}

double information_from_counts(std::span<const std::uint64_t> counts,
                               std::uint64_t total) {
  if (total == 0) return 0.0;
  NeumaierSum sum;
  for (std::uint64_t c : counts)
    if (c > 0) sum.add((double)c * std::log2((double)total / (double)c));
  return sum.value();
}

double h0(const Sequence& s) {
  if (s.empty()) return 0.0;
  FrequencyVector fv = frequencies(s);
  return information_from_counts(fv.counts, fv.total) / (double)fv.total;
}

ContextTable ContextTable::build(std::span<const Symbol> s, std::size_t sigma,
                                 unsigned k) {
  ContextTable t(k, sigma);
  const std::uint64_t n = s.size();
  if (n < (std::uint64_t)k + 1) return t;

  ContextKey key(s.begin(), s.begin() + k);
  for (std::uint64_t i = k; i < n; ++i) {
    Row& row = t.rows_[key];
    Symbol c = s[i];
    auto it = std::lower_bound(
        row.begin(), row.end(), c,
        [](const auto& e, Symbol v) { return e.first < v; });
    if (it != row.end() && it->first == c)
      ++it->second;
    else
      row.insert(it, {c, 1});
    ++t.positions_;
    if (k > 0) {
      key.erase(key.begin());
      key.push_back((char32_t)c);
    }
  }
  return t;
}

ContextTable ContextTable::from_rows(
    unsigned k, std::size_t sigma,
    std::vector<std::pair<ContextKey, Row>> rows) {
  ContextTable t(k, sigma);
  for (auto& [w, row] : rows) {
    t.positions_ += row_total(row);
    t.rows_.emplace(w, std::move(row));
  }
  return t;
}

const ContextTable::Row* ContextTable::find(const ContextKey& w) const {
  auto it = rows_.find(w);
  return it == rows_.end() ? nullptr : &it->second;
}

std::vector<ContextKey> ContextTable::sorted_contexts() const {
  std::vector<ContextKey> keys;
  keys.reserve(rows_.size());
  for (const auto& [w, row] : rows_) keys.push_back(w);
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::uint64_t ContextTable::row_total(const Row& row) {
  std::uint64_t t = 0;
  for (const auto& [c, cnt] : row) t += cnt;
  return t;
}

double ContextTable::row_information(const Row& row) {
  std::uint64_t total = row_total(row);
  NeumaierSum sum;
  for (const auto& [c, cnt] : row)
    sum.add((double)cnt * std::log2((double)total / (double)cnt));
  return sum.value();
}

double hk(const Sequence& s, unsigned k) {
  if (k == 0) return h0(s);
  const std::uint64_t n = s.size();
  if (n <= k) return 0.0;
  ContextTable t = ContextTable::build(s.data(), s.sigma(), k);
  NeumaierSum sum;
  for (const auto& [w, row] : t.rows()) sum.add(ContextTable::row_information(row));
  return sum.value() / (double)n;
}

Sequence context_string(const Sequence& s, const Sequence& w) {
  if (w.empty()) throw std::invalid_argument("context_string: empty context");
  const std::uint64_t n = s.size();
  const std::uint64_t k = w.size();
  std::vector<Symbol> followers;
  if (n > k) {
    for (std::uint64_t i = 0; i + k < n; ++i) {
      bool match = true;
      for (std::uint64_t j = 0; j < k; ++j)
        if (s[i + j] != w[j]) {
          match = false;
          break;
        }
      if (match) followers.push_back(s[i + k]);
    }
  }
  return Sequence::from_indices(s.alphabet_ptr(), std::move(followers));
}

std::vector<double> entropy_profile(const Sequence& s, unsigned kmax) {
  std::vector<double> h;
  h.reserve(kmax + 1);
  for (unsigned k = 0; k <= kmax; ++k) h.push_back(hk(s, k));
  return h;
}

}  // namespace entlab
