#include "entlab/alphabet.hpp"

#include <algorithm>
#include <stdexcept>

namespace entlab {

Alphabet::Alphabet(std::vector<std::uint8_t> symbols)
    : symbols_(std::move(symbols)) {
  lookup_.fill(-1);
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (lookup_[symbols_[i]] != -1)
      throw std::invalid_argument("alphabet: duplicate symbol");
    lookup_[symbols_[i]] = (std::int16_t)i;
  }
  if (symbols_.empty()) throw std::invalid_argument("alphabet: empty");
}

std::shared_ptr<const Alphabet> Alphabet::bytes() {
  static const std::shared_ptr<const Alphabet> instance = [] {
    std::vector<std::uint8_t> all(256);
    for (int i = 0; i < 256; ++i) all[i] = (std::uint8_t)i;
    return std::shared_ptr<const Alphabet>(new Alphabet(std::move(all)));
  }();
  return instance;
}

std::shared_ptr<const Alphabet> Alphabet::from_symbols(
    std::span<const std::uint8_t> symbols) {
  return std::shared_ptr<const Alphabet>(
      new Alphabet(std::vector<std::uint8_t>(symbols.begin(), symbols.end())));
}

std::shared_ptr<const Alphabet> Alphabet::inferred(
    std::span<const std::uint8_t> data) {
  bool seen[256] = {};
  for (std::uint8_t b : data) seen[b] = true;
  std::vector<std::uint8_t> symbols;
  for (int i = 0; i < 256; ++i)
    if (seen[i]) symbols.push_back((std::uint8_t)i);
  if (symbols.empty())
    throw std::invalid_argument("alphabet: cannot infer from empty input");
  return std::shared_ptr<const Alphabet>(new Alphabet(std::move(symbols)));
}

}  // namespace entlab
