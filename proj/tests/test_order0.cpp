#include "doctest.h"

#include <cmath>
#include <string>
#include <vector>

#include "entlab/bitio.hpp"
#include "entlab/blob.hpp"
#include "entlab/entropy.hpp"
#include "entlab/errors.hpp"
#include "entlab/order0.hpp"
#include "entlab/rng.hpp"
#include "entlab/sequence.hpp"

using namespace entlab;

namespace {

std::vector<Symbol> stream_roundtrip(const std::vector<Symbol>& data,
                                     std::uint64_t sigma,
                                     Order0Payload* info = nullptr) {
  BitWriter w;
  Order0Payload p = order0_encode_stream(data, sigma, w);
  if (info) *info = p;
  std::vector<std::uint8_t> bytes = w.take();
  BitReader r(bytes);
  return order0_decode_stream(r, sigma, data.size());
}

}  // namespace

TEST_CASE("stream coding round-trips across shapes") {
  SplitMix64 rng(71);

  SUBCASE("uniform random") {
    for (int trial = 0; trial < 50; ++trial) {
      std::uint64_t sigma = 2 + rng.below(30);
      std::vector<Symbol> data(1 + rng.below(2000));
      for (Symbol& v : data) v = (Symbol)rng.below(sigma);
      CHECK(stream_roundtrip(data, sigma) == data);
    }
  }
  SUBCASE("skewed") {
    for (int trial = 0; trial < 50; ++trial) {
      std::uint64_t sigma = 3 + rng.below(6);
      std::vector<Symbol> data(1 + rng.below(2000));
      for (Symbol& v : data)
        v = rng.below(20) == 0 ? (Symbol)(1 + rng.below(sigma - 1)) : 0;
      CHECK(stream_roundtrip(data, sigma) == data);
    }
  }
  SUBCASE("degenerate") {
    CHECK(stream_roundtrip({0}, 1) == std::vector<Symbol>{0});
    CHECK(stream_roundtrip({5}, 9) == std::vector<Symbol>{5});
    CHECK(stream_roundtrip(std::vector<Symbol>(5000, 2), 4) ==
          std::vector<Symbol>(5000, 2));
  }
  SUBCASE("long input") {
    std::vector<Symbol> data(100000);
    for (Symbol& v : data) v = (Symbol)rng.below(5);
    CHECK(stream_roundtrip(data, 5) == data);
  }
}

TEST_CASE("coded size sits in the proven window around the information") {
  SplitMix64 rng(73);
  for (int trial = 0; trial < 60; ++trial) {
    std::uint64_t sigma = 1 + rng.below(12);
    std::vector<Symbol> data(1 + rng.below(5000));
    for (Symbol& v : data) v = (Symbol)rng.below(sigma);

    Order0Payload info;
    (void)stream_roundtrip(data, sigma, &info);
    CHECK(info.coder_bits >= info.input_information - 1e-6);
    CHECK((double)info.coder_bits <=
          info.input_information + 2.0 + (double)kCoderOverheadBits);
  }
}

TEST_CASE("reported information equals n times the empirical entropy") {
  Sequence s = Sequence::from_string("TORONTO");
  std::vector<Symbol> data(s.data().begin(), s.data().end());
  Order0Payload info;
  (void)stream_roundtrip(data, s.alphabet().size(), &info);
  CHECK(info.input_information ==
        doctest::Approx(7.0 * h0(s)).epsilon(1e-12));
  CHECK(info.counts_bits == 4 * 3);  // four counts, ceil(log2 8) bits each
}

TEST_CASE("encoding is deterministic") {
  std::vector<Symbol> data;
  SplitMix64 rng(79);
  for (int i = 0; i < 3000; ++i) data.push_back((Symbol)rng.below(7));
  BitWriter w1, w2;
  (void)order0_encode_stream(data, 7, w1);
  (void)order0_encode_stream(data, 7, w2);
  CHECK(w1.take() == w2.take());
}

TEST_CASE("stream encoding validates its input") {
  BitWriter w;
  CHECK_THROWS_AS((void)order0_encode_stream({}, 3, w), std::invalid_argument);
  std::vector<Symbol> bad{0, 4};
  CHECK_THROWS_AS((void)order0_encode_stream(bad, 3, w),
                  std::invalid_argument);
}

TEST_CASE("decoding rejects counts that disagree with the length") {
  std::vector<Symbol> data{0, 1, 2, 0, 1, 0};
  BitWriter w;
  (void)order0_encode_stream(data, 3, w);
  std::vector<std::uint8_t> bytes = w.take();
  BitReader r(bytes);
  CHECK_THROWS_AS((void)order0_decode_stream(r, 3, data.size() + 1),
                  FormatError);
}

TEST_CASE("container round-trip with exact accounting") {
  SplitMix64 rng(83);
  for (int trial = 0; trial < 40; ++trial) {
    std::uint64_t sigma = 1 + rng.below(8);
    std::string text;
    std::size_t n = 1 + rng.below(800);
    for (std::size_t i = 0; i < n; ++i)
      text.push_back((char)('a' + rng.below(sigma)));
    Sequence s = Sequence::from_string(text);

    CompressedBlob blob = order0_encode(s);
    CHECK(order0_decode(blob.bytes).to_bytes() == s.to_bytes());

    std::uint64_t sum = 0;
    for (const AccountingLine& line : blob.accounting) sum += line.bits;
    CHECK(sum == blob.total_bits());
  }

  CompressedBlob blob = order0_encode(Sequence::from_string("TORONTO"));
  REQUIRE(blob.accounting.size() >= 3);
  CHECK(blob.accounting[0].label == "container_header");
  CHECK(blob.accounting[1].label == "counts_header");
  CHECK(blob.accounting[2].label == "coder_payload");
}

TEST_CASE("container decode rejects foreign blobs") {
  CompressedBlob blob = order0_encode(Sequence::from_string("ABAB"));
  std::vector<std::uint8_t> tampered = blob.bytes;
  tampered[4] = 1;  // relabel as a different algorithm
  CHECK_THROWS_AS((void)order0_decode(tampered), FormatError);
}
