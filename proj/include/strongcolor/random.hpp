#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "strongcolor/graph.hpp"

namespace strongcolor {

/// Seeded source for every generator in the library. Bounded draws are
/// computed from raw mt19937_64 output so sequences are identical across
/// standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return (engine_() >> 63) != 0; }
  /// True with probability numerator / denominator.
  bool chance(std::uint64_t numerator, std::uint64_t denominator) {
    return below(denominator) < numerator;
  }

 private:
  std::mt19937_64 engine_;
};

/// Decodes a Pruefer sequence of length n-2 over 0..n-1 into the labeled tree
/// on n vertices it encodes. Edges are listed in decoding order. n >= 2.
Graph tree_from_prufer(std::size_t n, std::span<const Vertex> sequence);

/// Uniformly random labeled tree on n >= 1 vertices.
Graph random_labeled_tree(Rng& rng, std::size_t n);

}  // namespace strongcolor
