#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "entlab/sequence.hpp"

namespace entlab {

// A probability vector: nonnegative entries summing to 1 within 1e-12.
class Distribution {
 public:
  static Distribution from_probs(std::vector<double> p);
  static Distribution from_frequencies(const FrequencyVector& fv);

  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }
  std::span<const double> probs() const { return p_; }

 private:
  explicit Distribution(std::vector<double> p) : p_(std::move(p)) {}
  std::vector<double> p_;
};

// H(P) = sum p_i log2(1/p_i), with 0 log(1/0) taken as 0.
double shannon_entropy(const Distribution& p);

// Context keys are the k preceding symbols, packed into a u32string so any
// alphabet size and order hash uniformly.
using ContextKey = std::u32string;

// Follower counts for every length-k context occurring in a sequence. Rows
// are sparse: only contexts that occur are present, and each row lists only
// followers with nonzero count (sorted by symbol). For each context w the row
// total equals the number of occurrences of w, minus one when w is a suffix
// of s (the final occurrence has no follower).
class ContextTable {
 public:
  using Row = std::vector<std::pair<Symbol, std::uint64_t>>;

  static ContextTable build(std::span<const Symbol> s, std::size_t sigma,
                            unsigned k);

  // Assemble from prebuilt rows (deserialization); rows must be sorted by
  // symbol within each row.
  static ContextTable from_rows(unsigned k, std::size_t sigma,
                                std::vector<std::pair<ContextKey, Row>> rows);

  unsigned order() const { return k_; }
  std::size_t sigma() const { return sigma_; }
  // Total follower count across all rows: max(n - k, 0).
  std::uint64_t positions() const { return positions_; }
  std::size_t context_count() const { return rows_.size(); }

  const Row* find(const ContextKey& w) const;
  // Contexts in lexicographic order (deterministic iteration).
  std::vector<ContextKey> sorted_contexts() const;

  const std::unordered_map<ContextKey, Row>& rows() const { return rows_; }

  // n * H_0 of a row, i.e. sum over followers of c * log2(total/c).
  static double row_information(const Row& row);
  static std::uint64_t row_total(const Row& row);

 private:
  ContextTable(unsigned k, std::size_t sigma) : k_(k), sigma_(sigma) {}

  unsigned k_;
  std::size_t sigma_;
  std::uint64_t positions_ = 0;
  std::unordered_map<ContextKey, Row> rows_;
};

// Zeroth-order empirical entropy: (1/n) sum_i n_i log2(n/n_i); 0 for n = 0.
double h0(const Sequence& s);

// Order-k empirical entropy: (1/n) sum over contexts |s_w| H_0(s_w).
// k = 0 reduces to h0; k >= n gives 0.
double hk(const Sequence& s, unsigned k);

// The followers of context w in s, in occurrence order: one symbol per
// occurrence of w except an occurrence that ends the string. |w| >= 1.
Sequence context_string(const Sequence& s, const Sequence& w);

// H_0 .. H_kmax. Non-increasing, bounded by log2 sigma.
std::vector<double> entropy_profile(const Sequence& s, unsigned kmax);

// n * H_0 given raw counts; shared by entropy and the coder accounting.
double information_from_counts(std::span<const std::uint64_t> counts,
                               std::uint64_t total);

}  // namespace entlab
