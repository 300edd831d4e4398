#include "strongcolor/induced_matching.hpp"

#include <algorithm>
#include <array>
#include <span>
#include <vector>

#include "strongcolor/errors.hpp"

namespace strongcolor {

namespace {

constexpr std::int64_t kImpossible = -1;

// Per-vertex states of the tree program, rooted at vertex 0:
//   free:     v unmatched and no child matched, so v may match its parent;
//   blocked:  v unmatched, children unconstrained;
//   matched:  v matched to one of its children.
// A vertex whose parent is matched (to anyone) must itself be unmatched,
// and a vertex matched to its parent needs every child unmatched.
enum State : std::size_t { kFree = 0, kBlocked = 1, kMatched = 2 };

class TreeProgram {
 public:
  std::uint64_t solve(const Graph& t) {
    const std::size_t n = t.vertex_count();
    order_.resize(n);
    parent_.assign(n, n);
    partner_.assign(n, n);
    best_.assign(n, {0, 0, kImpossible});

    order_[0] = 0;
    for (std::size_t head = 0, tail = 1; head < tail; ++head) {
      const Vertex v = order_[head];
      for (Vertex w : t.neighbors(v)) {
        if (w == parent_[v]) continue;
        parent_[w] = v;
        order_[tail++] = w;
      }
    }

    for (std::size_t i = n; i-- > 0;) {
      const Vertex v = order_[i];
      std::int64_t unmatched_sum = 0;
      std::int64_t unconstrained_sum = 0;
      std::int64_t best_gain = kImpossible;
      for (Vertex c : t.neighbors(v)) {
        if (c == parent_[v]) continue;
        const auto& s = best_[c];
        const std::int64_t unmatched = std::max(s[kFree], s[kBlocked]);
        unmatched_sum += unmatched;
        unconstrained_sum += std::max({s[kFree], s[kBlocked], s[kMatched]});
        const std::int64_t gain = 1 + s[kFree] - unmatched;
        if (gain > best_gain) {
          best_gain = gain;
          partner_[v] = c;
        }
      }
      best_[v][kFree] = unmatched_sum;
      best_[v][kBlocked] = unconstrained_sum;
      best_[v][kMatched] = best_gain == kImpossible ? kImpossible : unmatched_sum + best_gain;
    }
    const auto& root = best_[0];
    return static_cast<std::uint64_t>(std::max({root[kFree], root[kBlocked], root[kMatched]}));
  }

  /// Matched edges of an optimal solution; call after solve().
  std::vector<Edge> witness(const Graph& t) {
    const std::size_t n = t.vertex_count();
    state_.resize(n);
    state_[0] = argmax(0, {kFree, kBlocked, kMatched});
    std::vector<Edge> matched;
    for (std::size_t i = 0; i < n; ++i) {
      const Vertex v = order_[i];
      if (state_[v] == kMatched) {
        matched.push_back(t.edge(*t.find_edge(v, partner_[v])));
      }
      for (Vertex c : t.neighbors(v)) {
        if (c == parent_[v]) continue;
        if (state_[v] == kBlocked) {
          state_[c] = argmax(c, {kFree, kBlocked, kMatched});
        } else if (state_[v] == kMatched && c == partner_[v]) {
          state_[c] = kFree;
        } else {
          state_[c] = argmax(c, {kFree, kBlocked});
        }
      }
    }
    return matched;
  }

 private:
  template <std::size_t N>
  State argmax(Vertex v, const State (&candidates)[N]) const {
    State pick = candidates[0];
    for (State s : candidates) {
      if (best_[v][s] > best_[v][pick]) pick = s;
    }
    return pick;
  }

  std::vector<Vertex> order_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> partner_;
  std::vector<std::array<std::int64_t, 3>> best_;
  std::vector<State> state_;
};

// The tree program on a leaf shape, values only. Children come after their
// parent, so a reverse scan sees every child before its parent.
class ShapeProgram {
 public:
  std::uint64_t solve(std::span<const std::uint32_t> parent) {
    const std::size_t n = parent.size();
    free_.assign(n, 0);
    blocked_.assign(n, 0);
    gain_.assign(n, kImpossible);
    for (std::size_t c = n; c-- > 1;) {
      const std::uint32_t p = parent[c];
      const std::int64_t unmatched = std::max(free_[c], blocked_[c]);
      free_[p] += unmatched;
      blocked_[p] += std::max(unmatched, matched(c));
      gain_[p] = std::max(gain_[p], 1 + free_[c] - unmatched);
    }
    return static_cast<std::uint64_t>(std::max({free_[0], blocked_[0], matched(0)}));
  }

 private:
  std::int64_t matched(std::size_t v) const { return gain_[v] == kImpossible ? kImpossible : free_[v] + gain_[v]; }

  std::vector<std::int64_t> free_;
  std::vector<std::int64_t> blocked_;
  std::vector<std::int64_t> gain_;
};

bool edge_less(const Edge& a, const Edge& b) {
  return std::pair(a.u, a.v) < std::pair(b.u, b.v);
}

std::uint64_t cotree_value(std::uint64_t n) { return n >= 3 ? 1 : 0; }

// Smallest nonedge of a tree with at least three vertices.
Edge smallest_nonedge(const Graph& tree) {
  const std::size_t n = tree.vertex_count();
  Vertex expected = 1;
  for (Vertex w : tree.neighbors(0)) {
    if (w != expected) break;
    ++expected;
  }
  if (expected < n) return {0, expected};
  // Vertex 0 is the center of a star, so 1 and 2 are nonadjacent leaves.
  return {1, 2};
}

struct Fold {
  std::vector<std::uint64_t> value;

  explicit Fold(const DecompositionTree& t) : value(t.size(), 0) {
    ShapeProgram program;
    const auto plan = t.fold_plan();
    for (std::size_t id = 0; id < plan.size(); ++id) {
      const FoldStep& step = plan[id];
      switch (step.kind) {
        case NodeKind::tree_leaf:
          value[id] = program.solve(t.leaf_shape(step));
          break;
        case NodeKind::cotree_leaf:
          value[id] = cotree_value(step.n);
          break;
        case NodeKind::disjoint_union:
          value[id] = value[step.a] + value[step.b];
          break;
        case NodeKind::join:
          value[id] = std::max({value[step.a], value[step.b], std::uint64_t{1}});
          break;
      }
    }
  }
};

}  // namespace

InducedMatchingResult im_tree(const Graph& t) {
  if (!is_tree(t)) throw InputError("im_tree expects a tree");
  TreeProgram program;
  InducedMatchingResult result;
  result.value = program.solve(t);
  result.witness = program.witness(t);
  std::sort(result.witness.begin(), result.witness.end(), edge_less);
  return result;
}

std::uint64_t im_value(const DecompositionTree& t) {
  return Fold(t).value[t.root()];
}

InducedMatchingResult im(const DecompositionTree& t) {
  const Fold fold(t);
  TreeProgram program;
  InducedMatchingResult result;
  result.value = fold.value[t.root()];

  // Top-down: mark the subtrees whose witnesses make up the answer.
  std::vector<bool> selected(t.size(), false);
  selected[t.root()] = true;
  for (NodeId id = t.size(); id-- > 0;) {
    if (!selected[id]) continue;
    const DecompNode& node = t.node(id);
    const NodeSummary& here = node.summary;
    switch (node.kind) {
      case NodeKind::disjoint_union:
        selected[node.left] = selected[node.right] = true;
        break;
      case NodeKind::join: {
        const std::uint64_t left = fold.value[node.left];
        const std::uint64_t right = fold.value[node.right];
        if (left >= 1 && left >= right) {
          selected[node.left] = true;
        } else if (right >= 1) {
          selected[node.right] = true;
        } else {
          const Vertex u = here.global_offset;
          const Vertex v = here.global_offset + t.node(node.left).summary.n;
          result.witness.push_back({u, v});
        }
        break;
      }
      case NodeKind::tree_leaf: {
        const Graph& tree = t.leaf_tree(id);
        program.solve(tree);
        for (const Edge& e : program.witness(tree)) {
          result.witness.push_back({here.global_offset + e.u, here.global_offset + e.v});
        }
        break;
      }
      case NodeKind::cotree_leaf:
        if (cotree_value(here.n) == 1) {
          const Edge e = smallest_nonedge(t.leaf_tree(id));
          result.witness.push_back({here.global_offset + e.u, here.global_offset + e.v});
        }
        break;
    }
  }
  std::sort(result.witness.begin(), result.witness.end(), edge_less);
  return result;
}

}  // namespace strongcolor
