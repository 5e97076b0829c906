#include "entlab/bitio.hpp"

#include <stdexcept>

namespace entlab {

void BitWriter::write_bits(std::uint64_t value, unsigned width) {
  if (width > 64) throw std::invalid_argument("write_bits: width > 64");
  if (width < 64 && (value >> width) != 0)
    throw std::invalid_argument("write_bits: value does not fit width");
  for (unsigned i = 0; i < width; ++i) {
    unsigned bit_pos = bits_ & 7;
    if (bit_pos == 0) bytes_.push_back(0);
    if ((value >> i) & 1) bytes_.back() |= (std::uint8_t)(1u << bit_pos);
    ++bits_;
  }
}

void BitWriter::write_u64(std::uint64_t v) {
  write_bits(v & 0xFFFFFFFFull, 32);
  write_bits(v >> 32, 32);
}

std::uint64_t BitReader::read_bits(unsigned width) {
  if (width > 64) throw std::invalid_argument("read_bits: width > 64");
  if (pos_ + width > 8 * bytes_.size())
    throw FormatError("truncated stream", pos_);
  std::uint64_t value = 0;
  for (unsigned i = 0; i < width; ++i) {
    std::uint64_t p = pos_ + i;
    if ((bytes_[p >> 3] >> (p & 7)) & 1) value |= 1ull << i;
  }
  pos_ += width;
  return value;
}

std::uint64_t BitReader::read_u64() {
  std::uint64_t lo = read_bits(32);
  return lo | (read_bits(32) << 32);
}

void BitReader::skip_bits(std::uint64_t width) {
  if (pos_ + width > 8 * bytes_.size())
    throw FormatError("truncated stream", pos_);
  pos_ += width;
}

std::uint8_t BitReader::read_byte_or_zero() {
  if (pos_ + 8 > 8 * bytes_.size()) {
    pos_ += 8;
    return 0;
  }
  return read_byte();
}

}  // namespace entlab
