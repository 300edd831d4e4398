#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "strongcolor/chordal.hpp"
#include "strongcolor/graph.hpp"
#include "strongcolor/random.hpp"
#include "test_support.hpp"

using namespace strongcolor;
using namespace strongcolor::testing;

namespace {

bool is_permutation_of_vertices(const std::vector<Vertex>& order, std::size_t n) {
  std::vector<Vertex> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Vertex> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  return sorted == identity;
}

}  // namespace

TEST_CASE("Lex-BFS visits every vertex once") {
  Rng rng(1);
  for (int round = 0; round < 100; ++round) {
    const Graph g = random_graph(rng, rng.below(15), 1, 3);
    const auto order = lex_bfs_order(g);
    CHECK(is_permutation_of_vertices(order, g.vertex_count()));
  }
  CHECK(lex_bfs_order(build_graph(0, {})).empty());
}

TEST_CASE("Lex-BFS on a path keeps adjacent vertices together") {
  const auto order = lex_bfs_order(path_graph(5));
  REQUIRE(order.size() == 5);
  CHECK(order.front() == 0);
  CHECK(order == std::vector<Vertex>{0, 1, 2, 3, 4});
}

TEST_CASE("perfect elimination orderings exist exactly for chordal graphs") {
  CHECK(perfect_elimination_ordering(path_graph(6)).has_value());
  CHECK(perfect_elimination_ordering(complete_graph(5)).has_value());
  CHECK_FALSE(perfect_elimination_ordering(cycle_graph(4)).has_value());
  CHECK_FALSE(perfect_elimination_ordering(cycle_graph(7)).has_value());

  Rng rng(2);
  for (int round = 0; round < 300; ++round) {
    const Graph g = random_graph(rng, 1 + rng.below(9), rng.between(1, 3), 4);
    const bool chordal = !enumerate_induced_cycle_at_least(g, 4);
    const auto peo = perfect_elimination_ordering(g);
    CHECK(peo.has_value() == chordal);
    if (peo) CHECK(is_perfect_elimination_ordering(g, *peo));
  }
}

TEST_CASE("PEO checker rejects bad orders") {
  // Eliminating the middle of P3 first leaves its two nonadjacent neighbors.
  const Graph p3 = path_graph(3);
  const std::vector<Vertex> bad{1, 0, 2};
  const std::vector<Vertex> good{0, 1, 2};
  CHECK_FALSE(is_perfect_elimination_ordering(p3, bad));
  CHECK(is_perfect_elimination_ordering(p3, good));
  const std::vector<Vertex> short_order{0, 1};
  CHECK_FALSE(is_perfect_elimination_ordering(p3, short_order));
}

TEST_CASE("greedy coloring along reversed PEO is optimal on squared tree linegraphs") {
  Rng rng(4);
  for (int round = 0; round < 200; ++round) {
    const Graph t = random_labeled_tree(rng, 2 + rng.below(8));
    const Graph square = square_of_linegraph(t).graph();
    const auto peo = perfect_elimination_ordering(square);
    REQUIRE(peo.has_value());
    std::vector<Vertex> order(peo->rbegin(), peo->rend());
    const auto colors = greedy_coloring(square, order);
    for (const Edge& e : square.edges()) CHECK(colors[e.u] != colors[e.v]);
    const auto used = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
    CHECK(used == enumerate_largest_uniform_subset(adjacency_matrix(square), true));
  }
}
