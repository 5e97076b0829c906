#include "doctest.h"

#include <string>
#include <vector>

#include "entlab/bitio.hpp"
#include "entlab/blob.hpp"
#include "entlab/errors.hpp"
#include "entlab/lz.hpp"
#include "entlab/order0.hpp"
#include "entlab/pipeline.hpp"
#include "entlab/rng.hpp"
#include "entlab/sequence.hpp"

using namespace entlab;

TEST_CASE("bits pack least significant first") {
  BitWriter w;
  w.write_bits(0b1011, 4);
  w.write_bits(0b01, 2);
  CHECK(w.bit_count() == 6);
  REQUIRE(w.bytes().size() == 1);
  // Bit 0 of the stream is bit 0 of the byte: 1011 then 01 -> 01'1011.
  CHECK(w.bytes()[0] == 0b011011);

  BitReader r(w.bytes());
  CHECK(r.read_bits(4) == 0b1011);
  CHECK(r.read_bits(2) == 0b01);
}

TEST_CASE("random width/value streams round-trip") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::pair<std::uint64_t, unsigned>> fields;
    BitWriter w;
    for (int i = 0; i < 200; ++i) {
      unsigned width = (unsigned)rng.below(65);
      std::uint64_t value =
          width == 64 ? rng.next() : rng.next() & ((1ull << width) - 1);
      fields.push_back({value, width});
      w.write_bits(value, width);
    }
    BitReader r(w.bytes());
    for (auto& [value, width] : fields) CHECK(r.read_bits(width) == value);
  }
}

TEST_CASE("writer rejects values wider than the field") {
  BitWriter w;
  CHECK_THROWS_AS(w.write_bits(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(w.write_bits(0, 65), std::invalid_argument);
  w.write_bits(3, 2);  // still usable
  CHECK(w.bit_count() == 2);
}

TEST_CASE("reading past the end reports the bit position") {
  BitWriter w;
  w.write_bits(0xFF, 8);
  BitReader r(w.bytes());
  (void)r.read_bits(6);
  try {
    (void)r.read_bits(3);
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(e.bit_offset == 6);
  }
}

TEST_CASE("u64 halves round-trip and byte-or-zero pads") {
  BitWriter w;
  w.write_u64(0xDEADBEEFCAFEF00Dull);
  BitReader r(w.bytes());
  CHECK(r.read_u64() == 0xDEADBEEFCAFEF00Dull);
  CHECK(r.read_byte_or_zero() == 0);
  CHECK(r.read_byte_or_zero() == 0);
}

TEST_CASE("skip_bits advances over wide headers") {
  BitWriter w;
  for (int i = 0; i < 20; ++i) w.write_u64(i);
  w.write_bits(0b101, 3);
  BitReader r(w.bytes());
  r.skip_bits(20 * 64);
  CHECK(r.read_bits(3) == 0b101);
  CHECK_THROWS_AS(r.skip_bits(1000), FormatError);
}

TEST_CASE("containers parse back their own header") {
  Sequence s = Sequence::from_string("TORONTO");
  CompressedBlob blob = lz78_encode(s);
  BlobHeader h = parse_blob_header(blob.bytes);
  CHECK(h.algo == Algo::kLz78);
  CHECK(h.original_length == 7);
  REQUIRE(h.alphabet != nullptr);
  CHECK(h.alphabet->size() == 4);
  CHECK(h.alphabet->symbol(0) == 'N');
  CHECK(h.payload_bits == blob.payload_bits);
  // magic(32) + algo(8) + length(64) + sigma(16) + alphabet(32) + payload
  // length(64).
  CHECK(h.header_bits == 32 + 8 + 64 + 16 + 32 + 64);
}

TEST_CASE("the accounting lines sum to the container size exactly") {
  SplitMix64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    std::string text;
    std::size_t n = 1 + rng.below(300);
    for (std::size_t i = 0; i < n; ++i)
      text.push_back((char)('a' + rng.below(6)));
    Sequence s = Sequence::from_string(text);
    for (int algo = 0; algo < 4; ++algo) {
      CompressedBlob blob = algo == 0   ? lz77_encode(s)
                            : algo == 1 ? lz78_encode(s)
                            : algo == 2 ? bwt_pipeline_encode(s)
                                        : order0_encode(s);
      std::uint64_t sum = 0;
      for (const AccountingLine& line : blob.accounting) sum += line.bits;
      CHECK(sum == blob.total_bits());
      CHECK(blob.original_length == n);
    }
  }
}

TEST_CASE("the dispatcher routes each algorithm id") {
  Sequence s = Sequence::from_string("ABRACADABRA");
  for (int algo = 0; algo < 4; ++algo) {
    CompressedBlob blob = algo == 0   ? lz77_encode(s)
                          : algo == 1 ? lz78_encode(s)
                          : algo == 2 ? bwt_pipeline_encode(s)
                                      : order0_encode(s);
    Sequence back = decode_blob(blob.bytes);
    CHECK(back.to_bytes() == s.to_bytes());
  }
}

TEST_CASE("malformed containers are rejected with offsets") {
  Sequence s = Sequence::from_string("TORONTO");
  CompressedBlob blob = lz77_encode(s);

  auto bad_magic = blob.bytes;
  bad_magic[0] = 'X';
  try {
    (void)parse_blob_header(bad_magic);
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(e.bit_offset == 0);
  }

  auto bad_algo = blob.bytes;
  bad_algo[4] = 9;
  try {
    (void)parse_blob_header(bad_algo);
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(e.bit_offset == 32);
  }

  auto truncated = blob.bytes;
  truncated.resize(8);
  CHECK_THROWS_AS((void)parse_blob_header(truncated), FormatError);

  // Declared payload length beyond the container.
  auto overrun = blob.bytes;
  // payload_bits field sits after magic+algo+length+sigma+alphabet.
  std::size_t payload_len_byte = (32 + 8 + 64 + 16 + 32) / 8;
  overrun[payload_len_byte] = 0xFF;
  overrun[payload_len_byte + 1] = 0xFF;
  CHECK_THROWS_AS((void)parse_blob_header(overrun), FormatError);

  // A duplicate symbol in the stored alphabet.
  auto dup = blob.bytes;
  std::size_t alpha_byte = (32 + 8 + 64 + 16) / 8;
  dup[alpha_byte + 1] = dup[alpha_byte];
  CHECK_THROWS_AS((void)parse_blob_header(dup), FormatError);
}
