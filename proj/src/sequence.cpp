#include "entlab/sequence.hpp"

#include <stdexcept>

#include "entlab/errors.hpp"

namespace entlab {

Sequence Sequence::ingest(std::span<const std::uint8_t> bytes,
                          std::shared_ptr<const Alphabet> alphabet) {
  if (!alphabet) throw std::invalid_argument("ingest: null alphabet");
  std::vector<Symbol> data;
  data.reserve(bytes.size());
  for (std::uint64_t i = 0; i < bytes.size(); ++i) {
    int idx = alphabet->index_of(bytes[i]);
    if (idx < 0) throw UndeclaredSymbolError(bytes[i], i);
    data.push_back((Symbol)idx);
  }
  return Sequence(std::move(alphabet), std::move(data));
}

Sequence Sequence::from_string(const std::string& text,
                               std::shared_ptr<const Alphabet> alphabet) {
  std::span<const std::uint8_t> bytes((const std::uint8_t*)text.data(),
                                      text.size());
  if (!alphabet) alphabet = Alphabet::inferred(bytes);
  return ingest(bytes, std::move(alphabet));
}

Sequence Sequence::from_indices(std::shared_ptr<const Alphabet> alphabet,
                                std::vector<Symbol> indices) {
  if (!alphabet) throw std::invalid_argument("from_indices: null alphabet");
  for (Symbol v : indices)
    if (v >= alphabet->size())
      throw std::invalid_argument("from_indices: index out of range");
  return Sequence(std::move(alphabet), std::move(indices));
}

std::vector<std::uint8_t> Sequence::to_bytes() const {
  std::vector<std::uint8_t> out;
  out.reserve(data_.size());
  for (Symbol v : data_) out.push_back(alphabet_->symbol(v));
  return out;
}

FrequencyVector frequencies(const Sequence& s) {
  FrequencyVector fv;
  fv.counts.assign(s.sigma(), 0);
  for (Symbol v : s.data()) ++fv.counts[v];
  fv.total = s.size();
  return fv;
}

}  // namespace entlab
