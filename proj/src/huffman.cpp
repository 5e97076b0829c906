#include "entlab/huffman.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <stdexcept>

#include "entlab/numeric.hpp"

namespace entlab {
namespace {

struct Node {
  double weight;
  std::size_t tie;  // symbol index for leaves, sigma + counter for internals
  std::size_t id;   // index into the node pool
};

struct HeapOrder {
  bool operator()(const Node& a, const Node& b) const {
    if (a.weight != b.weight) return a.weight > b.weight;
    return a.tie > b.tie;  // min-heap: lowest tie id wins
  }
};

}  // namespace

std::vector<unsigned> huffman_code_lengths(std::span<const double> weights) {
  const std::size_t sigma = weights.size();
  std::vector<unsigned> lengths(sigma, 0);

  // Node pool: children[id] = {left, right}, leaves hold their symbol.
  std::vector<std::array<std::size_t, 2>> children;
  std::vector<std::size_t> leaf_symbol;
  std::priority_queue<Node, std::vector<Node>, HeapOrder> heap;

  for (std::size_t i = 0; i < sigma; ++i) {
    if (weights[i] < 0)
      throw std::invalid_argument("huffman: negative weight");
    if (weights[i] == 0) continue;
    std::size_t id = children.size();
    children.push_back({id, id});  // self-loop marks a leaf
    leaf_symbol.push_back(i);
    heap.push({weights[i], i, id});
  }
  if (heap.empty()) throw std::invalid_argument("huffman: empty support");
  if (heap.size() == 1) return lengths;  // single symbol: empty code

  std::size_t next_tie = sigma;
  while (heap.size() > 1) {
    Node a = heap.top();
    heap.pop();
    Node b = heap.top();
    heap.pop();
    std::size_t id = children.size();
    children.push_back({a.id, b.id});
    leaf_symbol.push_back(sigma);  // not a leaf
    heap.push({a.weight + b.weight, next_tie++, id});
  }

  // Depth-first walk from the root assigns depths.
  std::vector<std::pair<std::size_t, unsigned>> stack{{heap.top().id, 0}};
  while (!stack.empty()) {
    auto [id, depth] = stack.back();
    stack.pop_back();
    if (children[id][0] == id) {
      lengths[leaf_symbol[id]] = depth;
    } else {
      stack.push_back({children[id][0], depth + 1});
      stack.push_back({children[id][1], depth + 1});
    }
  }
  return lengths;
}

std::vector<std::uint64_t> canonical_codes(std::span<const unsigned> lengths) {
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < lengths.size(); ++i)
    if (lengths[i] > 0) order.push_back(i);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (lengths[a] != lengths[b]) return lengths[a] < lengths[b];
    return a < b;
  });

  std::vector<std::uint64_t> codes(lengths.size(), 0);
  std::uint64_t code = 0;
  unsigned prev_len = 0;
  for (std::size_t i : order) {
    code <<= (lengths[i] - prev_len);
    prev_len = lengths[i];
    codes[i] = code++;
    if (prev_len < 64 && code > (1ull << prev_len))
      throw std::invalid_argument("canonical_codes: lengths violate Kraft");
  }
  return codes;
}

double huffman_expected_length(std::span<const double> weights) {
  std::vector<unsigned> lengths = huffman_code_lengths(weights);
  NeumaierSum num, den;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    num.add(weights[i] * lengths[i]);
    den.add(weights[i]);
  }
  return num.value() / den.value();
}

}  // namespace entlab
