#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace entlab {

// I/O failures (unreadable file, short write). The CLI maps these to exit code 2.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed serialized input (bad magic, truncation, out-of-range field).
// bit_offset points at the first offending bit of the input stream.
struct FormatError : std::runtime_error {
  std::uint64_t bit_offset;
  FormatError(const std::string& msg, std::uint64_t offset)
      : std::runtime_error(msg + " (bit offset " + std::to_string(offset) + ")"),
        bit_offset(offset) {}
};

// Input byte not covered by the declared alphabet.
struct UndeclaredSymbolError : std::runtime_error {
  std::uint8_t byte;
  std::uint64_t offset;
  UndeclaredSymbolError(std::uint8_t b, std::uint64_t off)
      : std::runtime_error("undeclared symbol 0x" + hex(b) + " at byte offset " +
                           std::to_string(off)),
        byte(b),
        offset(off) {}

 private:
  static std::string hex(std::uint8_t b) {
    static const char* digits = "0123456789abcdef";
    return std::string{digits[b >> 4], digits[b & 0xf]};
  }
};

// Evaluating a model on a transition it assigns probability zero.
struct ZeroProbabilityError : std::runtime_error {
  std::uint64_t position;
  explicit ZeroProbabilityError(std::uint64_t pos)
      : std::runtime_error("zero-probability transition at position " +
                           std::to_string(pos)),
        position(pos) {}
};

// A requested table or buffer would exceed the configured memory budget.
struct MemoryCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace entlab
