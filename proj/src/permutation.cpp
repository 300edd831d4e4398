#include "strongcolor/permutation.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>

#include "strongcolor/errors.hpp"

namespace strongcolor {

PermutationDiagram::PermutationDiagram(std::vector<std::size_t> pi) : pi_(std::move(pi)) {
  std::vector<char> seen(pi_.size(), 0);
  for (std::size_t k = 0; k < pi_.size(); ++k) {
    if (pi_[k] >= pi_.size()) {
      throw InputError("position " + std::to_string(pi_[k]) + " of label " + std::to_string(k) +
                       " is outside 0.." + std::to_string(pi_.size() - 1));
    }
    if (seen[pi_[k]]) {
      throw InputError("position " + std::to_string(pi_[k]) + " appears twice; not a permutation");
    }
    seen[pi_[k]] = 1;
  }
}

PermutationDiagram parse_permutation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::size_t> pi;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
      if (token.front() == '-') throw std::invalid_argument(token);
      value = std::stoull(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) {
      throw InputError("permutation entry " + std::to_string(pi.size()) + " is not a non-negative integer: '" +
                       token + "'");
    }
    pi.push_back(static_cast<std::size_t>(value));
  }
  return PermutationDiagram(std::move(pi));
}

bool intersects(const Trapezoid& a, const Trapezoid& b) {
  const bool a_left = a.top_hi < b.top_lo && a.bot_hi < b.bot_lo;
  const bool b_left = b.top_hi < a.top_lo && b.bot_hi < a.bot_lo;
  return !a_left && !b_left;
}

Graph permutation_graph(const PermutationDiagram& d) {
  const std::size_t n = d.size();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (d.bottom(i) > d.bottom(j)) edges.push_back({i, j});
    }
  }
  return build_graph(n, std::move(edges));
}

namespace {

std::size_t inversion_count(std::span<const std::size_t> pi) {
  // Fenwick tree over bottom positions seen so far.
  std::vector<std::size_t> tree(pi.size() + 1, 0);
  std::size_t inversions = 0;
  for (std::size_t k = 0; k < pi.size(); ++k) {
    std::size_t not_greater = 0;
    for (std::size_t i = pi[k] + 1; i > 0; i -= i & (~i + 1)) not_greater += tree[i];
    inversions += k - not_greater;
    for (std::size_t i = pi[k] + 1; i <= pi.size(); i += i & (~i + 1)) ++tree[i];
  }
  return inversions;
}

}  // namespace

std::vector<Trapezoid> trapezoid_model(const PermutationDiagram& d, const Graph& g) {
  if (g.vertex_count() != d.size()) {
    throw InputError("graph has " + std::to_string(g.vertex_count()) + " vertices, diagram has " +
                     std::to_string(d.size()));
  }
  if (g.edge_count() != inversion_count(d.pi())) {
    throw InputError("graph has " + std::to_string(g.edge_count()) + " edges but the diagram has " +
                     std::to_string(inversion_count(d.pi())) + " crossings");
  }
  std::vector<Trapezoid> traps;
  traps.reserve(g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto [i, j] = g.edge(e);
    const std::size_t pi_i = d.bottom(i);
    const std::size_t pi_j = d.bottom(j);
    if ((i < j) == (pi_i < pi_j)) {
      throw InputError("edge " + std::to_string(e) + " {" + std::to_string(i) + "," + std::to_string(j) +
                       "} joins segments that do not cross");
    }
    traps.push_back({std::min(i, j), std::max(i, j), std::min(pi_i, pi_j), std::max(pi_i, pi_j), e});
  }
  return traps;
}

namespace {

// Indices of `trapezoids` sorted by (top_lo, bot_lo, edge_index), after
// checking that the edge indices are exactly 0..k-1.
std::vector<std::size_t> sweep_order(std::span<const Trapezoid> trapezoids) {
  const std::size_t k = trapezoids.size();
  std::vector<std::size_t> order(k);
  std::vector<char> seen(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    const EdgeIndex e = trapezoids[i].edge_index;
    if (e >= k || seen[e]) throw InputError("trapezoid edge indices must be exactly 0..k-1");
    seen[e] = 1;
    order[i] = i;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Trapezoid& x = trapezoids[a];
    const Trapezoid& y = trapezoids[b];
    return std::tie(x.top_lo, x.bot_lo, x.edge_index) < std::tie(y.top_lo, y.bot_lo, y.edge_index);
  });
  return order;
}

}  // namespace

StrongEdgeColoring greedy_trapezoid_coloring(std::span<const Trapezoid> trapezoids) {
  const std::vector<std::size_t> order = sweep_order(trapezoids);
  std::vector<std::size_t> by_top_hi = order;
  std::sort(by_top_hi.begin(), by_top_hi.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(trapezoids[a].top_hi, trapezoids[a].edge_index) <
           std::tie(trapezoids[b].top_hi, trapezoids[b].edge_index);
  });

  // Last members of classes that end on the top line before the sweep
  // position, keyed by their bottom right corner. Every later trapezoid
  // starts to their right on top, so only the bottom corner still matters.
  std::set<std::pair<std::size_t, Color>> finished;
  std::vector<Color> color_of(trapezoids.size());
  Color palette = 0;
  std::size_t next_finish = 0;
  for (std::size_t i : order) {
    const Trapezoid& t = trapezoids[i];
    for (; next_finish < by_top_hi.size() && trapezoids[by_top_hi[next_finish]].top_hi < t.top_lo; ++next_finish) {
      const std::size_t j = by_top_hi[next_finish];
      finished.emplace(trapezoids[j].bot_hi, color_of[j]);
    }
    // Best fit: the finished class whose bottom corner is closest on the left.
    auto fit = finished.lower_bound({t.bot_lo, 0});
    if (fit == finished.begin()) {
      color_of[i] = palette++;
    } else {
      --fit;
      color_of[i] = fit->second;
      finished.erase(fit);
    }
  }
  std::vector<Color> colors(trapezoids.size());
  for (std::size_t i = 0; i < trapezoids.size(); ++i) colors[trapezoids[i].edge_index] = color_of[i];
  return StrongEdgeColoring(std::move(colors));
}

StrongEdgeColoring first_fit_trapezoid_coloring(std::span<const Trapezoid> trapezoids) {
  // Within a class every member lies left of the next on both lines, so a
  // class accepts a new trapezoid iff its rightmost corners are left of it.
  std::vector<std::size_t> frontier_top;
  std::vector<std::size_t> frontier_bot;
  std::vector<Color> colors(trapezoids.size());
  for (std::size_t i : sweep_order(trapezoids)) {
    const Trapezoid& t = trapezoids[i];
    Color c = 0;
    while (c < frontier_top.size() && !(frontier_top[c] < t.top_lo && frontier_bot[c] < t.bot_lo)) ++c;
    if (c == frontier_top.size()) {
      frontier_top.push_back(t.top_hi);
      frontier_bot.push_back(t.bot_hi);
    } else {
      frontier_top[c] = std::max(frontier_top[c], t.top_hi);
      frontier_bot[c] = std::max(frontier_bot[c], t.bot_hi);
    }
    colors[t.edge_index] = c;
  }
  return StrongEdgeColoring(std::move(colors));
}

StrongEdgeColoring strong_color_permutation(const PermutationDiagram& d, TrapezoidColoring backend) {
  const Graph g = permutation_graph(d);
  const std::vector<Trapezoid> traps = trapezoid_model(d, g);
  return backend(traps);
}

}  // namespace strongcolor
