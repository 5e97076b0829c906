#include "entlab/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "entlab/config.hpp"
#include "entlab/errors.hpp"
#include "entlab/numeric.hpp"
#include "entlab/rng.hpp"

namespace entlab {
namespace {

std::shared_ptr<const Alphabet> digit_alphabet(std::uint64_t base) {
  if (base < 2 || base > 256)
    throw std::invalid_argument("generator: base must be in [2, 256]");
  std::vector<std::uint8_t> symbols(base);
  for (std::uint64_t i = 0; i < base; ++i) symbols[i] = (std::uint8_t)i;
  return Alphabet::from_symbols(symbols);
}

// Appends the base-b digits of v, most significant first.
void append_digits(std::uint64_t v, std::uint64_t base,
                   std::vector<Symbol>& out) {
  Symbol buf[64];
  int len = 0;
  while (v > 0) {
    buf[len++] = (Symbol)(v % base);
    v /= base;
  }
  for (int i = len - 1; i >= 0; --i) out.push_back(buf[i]);
}

// Incremental sieve of Eratosthenes: yields primes in order, extending the
// sieved range by doubling segments as needed.
class PrimeStream {
 public:
  std::uint64_t next() {
    while (queue_pos_ >= primes_.size()) extend();
    return primes_[queue_pos_++];
  }

 private:
  void extend() {
    std::uint64_t lo = limit_ + 1;
    std::uint64_t hi = limit_ == 0 ? 1u << 16 : limit_ * 2;
    std::vector<bool> composite(hi - lo + 1, false);
    for (std::uint64_t p = 2; p * p <= hi; ++p) {
      // Base primes below sqrt(hi) are already in primes_ once limit_ >= sqrt(hi);
      // the first segment sieves itself.
      bool is_base_prime;
      if (p <= limit_) {
        is_base_prime =
            std::binary_search(primes_.begin(), primes_.end(), p);
      } else {
        is_base_prime = true;
        for (std::uint64_t q = 2; q * q <= p; ++q)
          if (p % q == 0) {
            is_base_prime = false;
            break;
          }
      }
      if (!is_base_prime) continue;
      std::uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
      for (std::uint64_t m = start; m <= hi; m += p) composite[m - lo] = true;
    }
    for (std::uint64_t v = std::max<std::uint64_t>(lo, 2); v <= hi; ++v)
      if (!composite[v - lo]) primes_.push_back(v);
    limit_ = hi;
  }

  std::vector<std::uint64_t> primes_;
  std::uint64_t limit_ = 0;
  std::size_t queue_pos_ = 0;
};

}  // namespace

Sequence de_bruijn(std::uint64_t sigma, unsigned k) {
  if (sigma < 2) throw std::invalid_argument("de_bruijn: sigma >= 2 required");
  if (k < 1) throw std::invalid_argument("de_bruijn: k >= 1 required");
  auto cycle_len = checked_pow(sigma, k);
  if (!cycle_len || *cycle_len + k > mem_cap_bytes() / sizeof(Symbol))
    throw MemoryCapError("de_bruijn: sigma^k exceeds memory cap");

  // Lyndon-word concatenation (the classic recursive construction, run
  // iteratively on an explicit stack would obscure it; depth is k+1).
  std::vector<Symbol> seq;
  seq.reserve(*cycle_len + k - 1);
  std::vector<Symbol> a(k + 1, 0);
  auto db = [&](auto&& self, unsigned t, unsigned p) -> void {
    if (t > k) {
      if (k % p == 0)
        for (unsigned j = 1; j <= p; ++j) seq.push_back(a[j]);
      return;
    }
    a[t] = a[t - p];
    self(self, t + 1, p);
    for (Symbol c = a[t - p] + 1; c < sigma; ++c) {
      a[t] = c;
      self(self, t + 1, t);
    }
  };
  db(db, 1, 1);

  for (unsigned i = 0; i + 1 < k; ++i) seq.push_back(seq[i]);
  return Sequence::from_indices(digit_alphabet(sigma), std::move(seq));
}

Sequence champernowne_digits(std::uint64_t base, std::uint64_t n) {
  auto alphabet = digit_alphabet(base);
  std::vector<Symbol> out;
  out.reserve(n);
  for (std::uint64_t v = 1; out.size() < n; ++v) append_digits(v, base, out);
  out.resize(n);
  return Sequence::from_indices(std::move(alphabet), std::move(out));
}

Sequence copeland_erdos_digits(std::uint64_t base, std::uint64_t n) {
  auto alphabet = digit_alphabet(base);
  std::vector<Symbol> out;
  out.reserve(n);
  PrimeStream primes;
  constexpr std::uint64_t kPrimeCap = 10'000'000;
  std::uint64_t used = 0;
  while (out.size() < n) {
    if (++used > kPrimeCap)
      throw std::invalid_argument(
          "copeland_erdos: exceeded the 1e7-prime cap");
    append_digits(primes.next(), base, out);
  }
  out.resize(n);
  return Sequence::from_indices(std::move(alphabet), std::move(out));
}

SampleResult markov_sample(const MarkovModel& m, std::uint64_t n,
                           std::uint64_t seed,
                           std::optional<ContextKey> start_context) {
  const ContextTable& table = m.table();
  if (table.context_count() == 0)
    throw std::invalid_argument("markov_sample: model has no contexts");
  const unsigned k = m.order();

  std::vector<ContextKey> contexts = table.sorted_contexts();
  SplitMix64 rng(seed);
  auto random_context = [&]() -> const ContextKey& {
    return contexts[rng.below(contexts.size())];
  };

  ContextKey ctx;
  if (start_context) {
    ctx = *start_context;
    if (ctx.size() != k || table.find(ctx) == nullptr)
      throw std::invalid_argument(
          "markov_sample: start context does not occur in the model");
  } else {
    ctx = random_context();
  }

  SampleResult result{Sequence::from_indices(m.alphabet_ptr(), {}), 0, ctx};
  std::vector<Symbol> out;
  out.reserve(n);
  while (out.size() < n) {
    const ContextTable::Row* row = table.find(ctx);
    if (row == nullptr) {
      ++result.restarts;
      ctx = random_context();
      continue;
    }
    std::uint64_t total = ContextTable::row_total(*row);
    std::uint64_t r = rng.below(total);
    Symbol drawn = 0;
    for (const auto& [sym, cnt] : *row) {
      if (r < cnt) {
        drawn = sym;
        break;
      }
      r -= cnt;
    }
    out.push_back(drawn);
    if (k > 0) {
      ctx.erase(ctx.begin());
      ctx.push_back((char32_t)drawn);
    }
  }
  result.sequence = Sequence::from_indices(m.alphabet_ptr(), std::move(out));
  return result;
}

double normality_deviation(const Sequence& s, unsigned k) {
  if (k < 1) throw std::invalid_argument("normality_deviation: k >= 1");
  if (s.size() < k)
    throw std::invalid_argument("normality_deviation: need n >= k");
  const std::uint64_t sigma = s.sigma();
  auto tuples = checked_pow(sigma, k);
  if (!tuples || *tuples > mem_cap_bytes() / sizeof(std::uint64_t))
    throw MemoryCapError("normality_deviation: sigma^k exceeds memory cap");

  std::vector<std::uint64_t> counts(*tuples, 0);
  std::uint64_t idx = 0;
  const std::uint64_t wrap = *tuples / sigma;  // sigma^(k-1)
  for (std::uint64_t i = 0; i < s.size(); ++i) {
    idx = (idx % wrap) * sigma + s[i];
    if (i + 1 >= k) ++counts[idx];
  }

  const double windows = (double)(s.size() - k + 1);
  const double ideal = 1.0 / (double)*tuples;
  double worst = 0.0;
  for (std::uint64_t c : counts)
    worst = std::max(worst, std::abs((double)c / windows - ideal));
  return worst;
}

}  // namespace entlab
