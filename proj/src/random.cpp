#include "strongcolor/random.hpp"

#include <limits>
#include <string>
#include <vector>

#include "strongcolor/errors.hpp"

namespace strongcolor {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

Graph tree_from_prufer(std::size_t n, std::span<const Vertex> sequence) {
  if (n < 2 || sequence.size() != n - 2) {
    throw InputError("a Pruefer sequence for " + std::to_string(n) + " vertices must have length " +
                     (n >= 2 ? std::to_string(n - 2) : std::string("n-2 with n >= 2")));
  }
  std::vector<std::size_t> degree(n, 1);
  for (Vertex x : sequence) {
    if (x >= n) throw InputError("Pruefer entry " + std::to_string(x) + " out of range");
    ++degree[x];
  }
  // Linear decoding: `leaf` is the smallest current leaf, `pointer` the
  // smallest index not yet examined as a candidate.
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::size_t pointer = 0;
  while (degree[pointer] != 1) ++pointer;
  Vertex leaf = pointer;
  for (Vertex x : sequence) {
    edges.push_back({leaf, x});
    --degree[leaf];
    if (--degree[x] == 1 && x < pointer) {
      leaf = x;
    } else {
      ++pointer;
      while (degree[pointer] != 1) ++pointer;
      leaf = pointer;
    }
  }
  Vertex last = n - 1;
  edges.push_back({leaf, last});
  return build_graph(n, std::move(edges));
}

Graph random_labeled_tree(Rng& rng, std::size_t n) {
  if (n == 0) throw InputError("a tree needs at least one vertex");
  if (n == 1) return build_graph(1, {});
  std::vector<Vertex> sequence(n - 2);
  for (Vertex& x : sequence) x = rng.below(n);
  return tree_from_prufer(n, sequence);
}

}  // namespace strongcolor
