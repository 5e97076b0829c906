#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "entlab/markov.hpp"
#include "entlab/sequence.hpp"

namespace entlab {

// A de Bruijn sequence of order k over sigma symbols, linearized: the cyclic
// sequence of length sigma^k with its first k-1 symbols appended, so each of
// the sigma^k k-tuples occurs exactly once among the sliding windows.
// Lyndon-word concatenation; sigma >= 2, k >= 1, table within the memory cap.
Sequence de_bruijn(std::uint64_t sigma, unsigned k);

// First n digits of 0.123456789101112... in base b: the positive integers in
// order, most significant digit first, starting from 1. b >= 2.
Sequence champernowne_digits(std::uint64_t base, std::uint64_t n);

// Same, concatenating the primes 2, 3, 5, 7, 11, ... Primes come from a
// segmented sieve (no probabilistic tests), capped at the first 1e7 primes.
Sequence copeland_erdos_digits(std::uint64_t base, std::uint64_t n);

struct SampleResult {
  Sequence sequence;
  std::uint64_t restarts = 0;   // dead-end context resets during the walk
  ContextKey start_context;     // the context the walk began from
};

// Draw n symbols from the model's MLE conditionals, seeded and reproducible
// (SplitMix64; see rng.hpp). The walk starts from start_context when given
// (must occur in the model), otherwise from a uniformly random occurring
// context. A walk reaching a context with no followers restarts from a
// random occurring context; restarts are counted.
SampleResult markov_sample(const MarkovModel& m, std::uint64_t n,
                           std::uint64_t seed,
                           std::optional<ContextKey> start_context = {});

// max over all sigma^k tuples of |frequency - sigma^(-k)|, frequencies taken
// over the n-k+1 sliding windows. Requires n >= k >= 1; the dense tuple
// table must fit the memory cap.
double normality_deviation(const Sequence& s, unsigned k);

}  // namespace entlab
