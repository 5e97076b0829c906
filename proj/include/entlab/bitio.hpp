#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "entlab/errors.hpp"

namespace entlab {

// Little-endian bit packing: bit i of the stream lives in byte i/8 at bit
// position i%8. Fields are written value-LSB-first.
class BitWriter {
 public:
  void write_bits(std::uint64_t value, unsigned width);
  void write_byte(std::uint8_t b) { write_bits(b, 8); }
  void write_u16(std::uint16_t v) { write_bits(v, 16); }
  void write_u32(std::uint32_t v) { write_bits(v, 32); }
  void write_u64(std::uint64_t v);

  std::uint64_t bit_count() const { return bits_; }
  // The backing store, zero-padded to a whole byte.
  const std::vector<std::uint8_t>& bytes() const { return bytes_; }
  std::vector<std::uint8_t> take() { return std::move(bytes_); }

 private:
  std::vector<std::uint8_t> bytes_;
  std::uint64_t bits_ = 0;
};

class BitReader {
 public:
  explicit BitReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  // Throws FormatError (with the bit offset) past the end of the stream.
  std::uint64_t read_bits(unsigned width);
  std::uint8_t read_byte() { return (std::uint8_t)read_bits(8); }
  std::uint16_t read_u16() { return (std::uint16_t)read_bits(16); }
  std::uint32_t read_u32() { return (std::uint32_t)read_bits(32); }
  std::uint64_t read_u64();

  // Like read_byte, but yields 0 past the end; the range decoder's tail
  // reads land here.
  std::uint8_t read_byte_or_zero();

  // Advances past `width` bits without decoding them (any width).
  void skip_bits(std::uint64_t width);

  std::uint64_t position() const { return pos_; }
  std::uint64_t bits_remaining() const { return 8 * bytes_.size() - pos_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::uint64_t pos_ = 0;
};

}  // namespace entlab
