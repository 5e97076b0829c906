#include "entlab/order0.hpp"

#include <stdexcept>

#include "entlab/entropy.hpp"
#include "entlab/errors.hpp"
#include "entlab/numeric.hpp"

namespace entlab {
namespace {

constexpr std::uint64_t kTop = 1ull << 56;  // renormalize below this range

// Carry-propagating range encoder. low_ needs one bit beyond 64: a pending
// run of 0xFF bytes (cache_size_) absorbs the carry when it arrives.
class RangeEncoder {
 public:
  explicit RangeEncoder(std::vector<std::uint8_t>& out) : out_(out) {}

  void encode(std::uint64_t cum, std::uint64_t freq, std::uint64_t total) {
    std::uint64_t r = range_ / total;
    low_ += (unsigned __int128)r * cum;
    range_ = r * freq;
    while (range_ < kTop) {
      shift_low();
      range_ <<= 8;
    }
  }

  // Ships the 64-bit window; exactly eight meaningful bytes plus the cache.
  void flush() {
    for (int i = 0; i < 9; ++i) shift_low();
  }

 private:
  void shift_low() {
    std::uint64_t low64 = (std::uint64_t)low_;
    std::uint8_t carry = (std::uint8_t)(low_ >> 64);
    if (low64 < 0xFF00000000000000ull || carry) {
      out_.push_back((std::uint8_t)(cache_ + carry));
      while (--cache_size_) out_.push_back((std::uint8_t)(0xFF + carry));
      cache_ = (std::uint8_t)(low64 >> 56);
    }
    ++cache_size_;
    low_ = (unsigned __int128)(low64 << 8);
  }

  std::vector<std::uint8_t>& out_;
  unsigned __int128 low_ = 0;
  std::uint64_t range_ = ~0ull;
  std::uint8_t cache_ = 0;
  std::uint64_t cache_size_ = 1;  // the first emitted byte is a leading zero
};

class RangeDecoder {
 public:
  explicit RangeDecoder(BitReader& r) : r_(r) {
    r_.read_byte_or_zero();  // the encoder's leading byte
    for (int i = 0; i < 8; ++i) code_ = (code_ << 8) | r_.read_byte_or_zero();
  }

  std::uint64_t decode_target(std::uint64_t total) {
    step_ = range_ / total;
    std::uint64_t t = code_ / step_;
    return t < total ? t : total - 1;
  }

  void consume(std::uint64_t cum, std::uint64_t freq) {
    code_ -= step_ * cum;
    range_ = step_ * freq;
    while (range_ < kTop) {
      code_ = (code_ << 8) | r_.read_byte_or_zero();
      range_ <<= 8;
    }
  }

 private:
  BitReader& r_;
  std::uint64_t range_ = ~0ull;
  std::uint64_t code_ = 0;
  std::uint64_t step_ = 0;
};

}  // namespace

Order0Payload order0_encode_stream(std::span<const Symbol> data,
                                   std::uint64_t sigma, BitWriter& out) {
  const std::uint64_t m = data.size();
  if (m == 0) throw std::invalid_argument("order0: empty input");
  if (m >= kTop) throw std::invalid_argument("order0: input too long");

  std::vector<std::uint64_t> counts(sigma, 0);
  for (Symbol v : data) {
    if (v >= sigma) throw std::invalid_argument("order0: symbol out of range");
    ++counts[v];
  }
  std::vector<std::uint64_t> cum(sigma + 1, 0);
  for (std::uint64_t c = 0; c < sigma; ++c) cum[c + 1] = cum[c] + counts[c];

  Order0Payload info;
  info.input_information = information_from_counts(counts, m);

  const unsigned width = count_bits(m);
  for (std::uint64_t c = 0; c < sigma; ++c) out.write_bits(counts[c], width);
  info.counts_bits = (std::uint64_t)sigma * width;

  std::vector<std::uint8_t> coded;
  RangeEncoder enc(coded);
  for (Symbol v : data) enc.encode(cum[v], counts[v], m);
  enc.flush();
  for (std::uint8_t b : coded) out.write_bits(b, 8);
  info.coder_bits = 8 * coded.size();
  return info;
}

std::vector<Symbol> order0_decode_stream(BitReader& r, std::uint64_t sigma,
                                         std::uint64_t count) {
  const unsigned width = count_bits(count);
  std::vector<std::uint64_t> counts(sigma);
  std::uint64_t total = 0;
  for (std::uint64_t c = 0; c < sigma; ++c) {
    counts[c] = r.read_bits(width);
    total += counts[c];
  }
  if (total != count)
    throw FormatError("order0: counts do not sum to length", r.position());
  std::vector<std::uint64_t> cum(sigma + 1, 0);
  for (std::uint64_t c = 0; c < sigma; ++c) cum[c + 1] = cum[c] + counts[c];

  std::vector<Symbol> out;
  out.reserve(count);
  RangeDecoder dec(r);
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint64_t target = dec.decode_target(count);
    // The symbol whose [cum, cum+count) interval contains target.
    std::uint64_t lo = 0, hi = sigma;
    while (lo + 1 < hi) {
      std::uint64_t mid = (lo + hi) / 2;
      if (cum[mid] <= target)
        lo = mid;
      else
        hi = mid;
    }
    dec.consume(cum[lo], counts[lo]);
    out.push_back((Symbol)lo);
  }
  return out;
}

CompressedBlob order0_encode(const Sequence& s) {
  if (s.empty()) throw std::invalid_argument("order0: empty input");
  BitWriter payload;
  Order0Payload info = order0_encode_stream(s.data(), s.sigma(), payload);
  std::vector<AccountingLine> lines{
      {"counts_header", info.counts_bits},
      {"coder_payload", info.coder_bits},
  };
  return finish_blob(Algo::kOrder0, s.size(), s.alphabet(), std::move(payload),
                     std::move(lines));
}

Sequence order0_decode(std::span<const std::uint8_t> blob) {
  BlobHeader h = parse_blob_header(blob);
  if (h.algo != Algo::kOrder0)
    throw FormatError("order0_decode: wrong algorithm id", 32);
  BitReader r(blob);
  r.skip_bits(h.header_bits);
  std::vector<Symbol> data =
      order0_decode_stream(r, h.alphabet->size(), h.original_length);
  return Sequence::from_indices(h.alphabet, std::move(data));
}

}  // namespace entlab
