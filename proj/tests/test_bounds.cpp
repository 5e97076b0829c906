#include "doctest.h"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "entlab/bounds.hpp"
#include "entlab/entropy.hpp"
#include "entlab/huffman.hpp"
#include "entlab/pipeline.hpp"
#include "entlab/rng.hpp"
#include "entlab/sequence.hpp"

using namespace entlab;

namespace {

double terms_total(const BoundReport& r) {
  double sum = 0;
  for (const BoundTerm& t : r.terms) sum += t.bits;
  return sum;
}

}  // namespace

TEST_CASE("zeta hits the closed forms") {
  const double pi = std::numbers::pi;
  CHECK(zeta(2.0) == doctest::Approx(pi * pi / 6.0).epsilon(1e-11));
  CHECK(zeta(4.0) == doctest::Approx(pi * pi * pi * pi / 90.0).epsilon(1e-11));
  CHECK(zeta(1000.0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("zeta decreases toward 1") {
  double lambdas[] = {1.5, 2.0, 3.0, 4.0, 8.0, 16.0};
  double prev = zeta(lambdas[0]);
  for (std::size_t i = 1; i < 6; ++i) {
    double z = zeta(lambdas[i]);
    CHECK(z < prev);
    CHECK(z > 1.0);
    prev = z;
  }
}

TEST_CASE("zeta validates its arguments") {
  CHECK_THROWS_AS((void)zeta(1.0), std::invalid_argument);
  CHECK_THROWS_AS((void)zeta(0.5), std::invalid_argument);
  CHECK_THROWS_AS((void)zeta(2.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS((void)zeta(2.0, -1e-9), std::invalid_argument);
}

TEST_CASE("the per-character zeta cost at lambda=2 is about 0.7181") {
  double cost = std::log2(zeta(2.0));
  CHECK(cost == doctest::Approx(0.7181).epsilon(1e-4));
  CHECK(cost ==
        doctest::Approx(std::log2(std::numbers::pi * std::numbers::pi / 6.0))
            .epsilon(1e-12));
}

TEST_CASE("the 8nH_k + (mu+2/25)n + table bound on the worked example") {
  Sequence s = Sequence::from_string("TORONTO");
  BoundReport r = manzini_bound(s, 1, 0.01, 100.0);
  // 8 * (2/7) * 7 = 16, (0.01 + 0.08) * 7 = 0.63, 4 * (8*2 + 9) = 100.
  CHECK(r.formula_bits == doctest::Approx(116.63).epsilon(1e-9));
  REQUIRE(r.terms.size() == 3);
  CHECK(r.terms[0].bits == doctest::Approx(16.0).epsilon(1e-9));
  CHECK(r.terms[1].bits == doctest::Approx(0.63).epsilon(1e-12));
  CHECK(r.terms[2].bits == doctest::Approx(100.0).epsilon(1e-12));
  CHECK(terms_total(r) == doctest::Approx(r.formula_bits).epsilon(1e-12));
  CHECK(r.measured_bits == 100.0);
  CHECK(r.slack_bits == doctest::Approx(16.63).epsilon(1e-9));
  CHECK(r.satisfied);

  BoundReport tight = manzini_bound(s, 1, 0.01, 117.0);
  CHECK_FALSE(tight.satisfied);
  CHECK(tight.slack_bits < 0);

  CHECK_THROWS_AS((void)manzini_bound(s, 1, -0.5, 0.0), std::invalid_argument);
}

TEST_CASE("the entropy term shrinks and the table term grows with k") {
  std::string text;
  SplitMix64 rng(89);
  for (int i = 0; i < 4000; ++i) text.push_back((char)('a' + rng.below(4)));
  Sequence s = Sequence::from_string(text);

  double prev_entropy = 1e300, prev_table = -1.0;
  for (unsigned k = 0; k <= 3; ++k) {
    BoundReport r = manzini_bound(s, k, 0.01, 0.0);
    CHECK(r.terms[0].bits <= prev_entropy + 1e-9);
    CHECK(r.terms[2].bits > prev_table);
    prev_entropy = r.terms[0].bits;
    prev_table = r.terms[2].bits;
  }
}

TEST_CASE("the lambda-scaled bound reduces to n*log2(zeta) on constants") {
  Sequence s = Sequence::from_string(std::string(100, 'A'));
  BoundReport r = klv_bound(s, 0, 2.0, 0.0, 50.0);
  // H_0 = 0 and sigma = 1 kill the entropy and table terms.
  CHECK(r.formula_bits ==
        doctest::Approx(100.0 * std::log2(zeta(2.0))).epsilon(1e-12));
  CHECK(terms_total(r) == doctest::Approx(r.formula_bits).epsilon(1e-12));
  CHECK(r.satisfied);

  CHECK_THROWS_AS((void)klv_bound(s, 0, 1.0, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS((void)klv_bound(s, 0, 2.0, -1.0, 0.0),
                  std::invalid_argument);
}

TEST_CASE("the lambda-scaled bound on the worked example") {
  Sequence s = Sequence::from_string("TORONTO");
  BoundReport r = klv_bound(s, 1, 2.0, 1.0, 0.0);
  REQUIRE(r.terms.size() == 3);
  CHECK(r.terms[0].bits == doctest::Approx(4.0).epsilon(1e-9));  // 2*(2/7)*7
  CHECK(r.terms[1].bits ==
        doctest::Approx(7.0 * std::log2(zeta(2.0))).epsilon(1e-12));
  CHECK(r.terms[2].bits == doctest::Approx(32.0).epsilon(1e-12));  // 16*log2(4)
  CHECK(terms_total(r) == doctest::Approx(r.formula_bits).epsilon(1e-12));
}

TEST_CASE("the measured per-symbol coder overhead is small and nonnegative") {
  std::string text;
  SplitMix64 rng(97);
  for (int i = 0; i < 20000; ++i)
    text.push_back((char)('a' + rng.below(3) * rng.below(2)));
  CompressedBlob blob = bwt_pipeline_encode(Sequence::from_string(text));
  double mu = measured_mu(blob.pipeline);
  CHECK(mu >= 0.0);
  // Far tighter than the nominal 1/100 once framing is spread over the input.
  CHECK(mu < 1.0);

  PipelineStats empty;
  CHECK_THROWS_AS((void)measured_mu(empty), std::invalid_argument);
}

TEST_CASE("optimal code lengths on a dyadic distribution") {
  double w[] = {1.0, 1.0, 2.0, 4.0};
  std::vector<unsigned> lengths = huffman_code_lengths(w);
  CHECK(lengths == std::vector<unsigned>{3, 3, 2, 1});
  CHECK(huffman_expected_length(w) == doctest::Approx(1.75).epsilon(1e-12));

  std::vector<std::uint64_t> codes = canonical_codes(lengths);
  CHECK(codes == std::vector<std::uint64_t>{6, 7, 2, 0});
}

TEST_CASE("code construction handles edge weights") {
  double zero_mixed[] = {0.0, 1.0, 1.0};
  CHECK(huffman_code_lengths(zero_mixed) == std::vector<unsigned>{0, 1, 1});

  double single[] = {0.0, 3.0};
  CHECK(huffman_code_lengths(single) == std::vector<unsigned>{0, 0});
  CHECK(huffman_expected_length(single) == 0.0);

  double negative[] = {1.0, -1.0};
  CHECK_THROWS_AS((void)huffman_code_lengths(negative), std::invalid_argument);
  double none[] = {0.0, 0.0};
  CHECK_THROWS_AS((void)huffman_code_lengths(none), std::invalid_argument);
  CHECK_THROWS_AS((void)huffman_code_lengths({}), std::invalid_argument);
}

TEST_CASE("canonical codes are prefix-free and reject bad lengths") {
  SplitMix64 rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> w(2 + rng.below(40));
    for (double& x : w) x = (double)(1 + rng.below(1000));
    std::vector<unsigned> lengths = huffman_code_lengths(w);
    std::vector<std::uint64_t> codes = canonical_codes(lengths);

    for (std::size_t a = 0; a < w.size(); ++a)
      for (std::size_t b = 0; b < w.size(); ++b) {
        if (a == b) continue;
        // No codeword may be a prefix of another (read MSB-first).
        if (lengths[a] > lengths[b]) continue;
        CHECK((codes[b] >> (lengths[b] - lengths[a])) != codes[a]);
      }
  }

  std::vector<unsigned> overfull{1, 1, 1};
  CHECK_THROWS_AS((void)canonical_codes(overfull), std::invalid_argument);
}

TEST_CASE("expected code length lies within one bit of the entropy") {
  SplitMix64 rng(103);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t sigma = 2 + rng.below(63);
    std::vector<double> w(sigma);
    double total = 0;
    for (double& x : w) {
      x = (double)(1 + rng.below(10000));
      total += x;
    }
    std::vector<double> p(sigma);
    for (std::size_t i = 0; i < sigma; ++i) p[i] = w[i] / total;

    double h = shannon_entropy(Distribution::from_probs(p));
    double e = huffman_expected_length(w);
    CHECK(e >= h - 1e-9);
    CHECK(e < h + 1.0);
  }
}

TEST_CASE("the interval check accepts optimal codes") {
  std::vector<double> uniform8(8, 0.125);
  BoundReport dyadic =
      noiseless_interval_check(Distribution::from_probs(uniform8));
  CHECK(dyadic.measured_bits == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(dyadic.formula_bits == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(dyadic.satisfied);

  BoundReport skewed =
      noiseless_interval_check(Distribution::from_probs({0.9, 0.1}));
  CHECK(skewed.measured_bits == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(skewed.satisfied);

  BoundReport trivial =
      noiseless_interval_check(Distribution::from_probs({1.0}));
  CHECK(trivial.measured_bits == 0.0);
  CHECK(trivial.satisfied);
}

TEST_CASE("ratio rows track sizes against the entropy") {
  std::vector<Sequence> family;
  for (std::uint64_t n : {64, 256, 1024})
    family.push_back(Sequence::from_string(std::string(n, 'A')));
  std::vector<ConvergenceRow> rows = convergence_experiment(family, 0);
  REQUIRE(rows.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(rows[i].n == family[i].size());
    CHECK(rows[i].hk == 0.0);
  }
  for (std::size_t i = 1; i < 3; ++i) {
    // Fixed header cost spread over more symbols: every ratio falls.
    CHECK(rows[i].lz77_ratio < rows[i - 1].lz77_ratio);
    CHECK(rows[i].lz78_ratio < rows[i - 1].lz78_ratio);
    CHECK(rows[i].bwt_ratio < rows[i - 1].bwt_ratio);
  }
}

TEST_CASE("ratio experiments require strictly growing members") {
  std::vector<Sequence> flat;
  flat.push_back(Sequence::from_string("ABAB"));
  flat.push_back(Sequence::from_string("BABA"));
  CHECK_THROWS_AS((void)convergence_experiment(flat, 0),
                  std::invalid_argument);

  std::vector<Sequence> shrinking;
  shrinking.push_back(Sequence::from_string("ABABAB"));
  shrinking.push_back(Sequence::from_string("AB"));
  CHECK_THROWS_AS((void)convergence_experiment(shrinking, 0),
                  std::invalid_argument);
}
