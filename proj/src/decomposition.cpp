#include "strongcolor/decomposition.hpp"

#include <string>
#include <utility>

#include <json.hpp>

#include "strongcolor/errors.hpp"
#include "strongcolor/random.hpp"

namespace strongcolor {

namespace {

std::uint64_t cotree_edge_count(std::uint64_t n) { return n * (n - 1) / 2 - (n - 1); }

}  // namespace

NodeId DecompositionTree::Builder::leaf(NodeKind kind, Graph t) {
  if (t.vertex_count() >= UINT32_MAX) throw InputError("leaf has too many vertices");
  if (!is_tree(t)) {
    throw InputError("leaf is not a tree (" + std::to_string(t.vertex_count()) + " vertices, " +
                     std::to_string(t.edge_count()) + " edges" +
                     (t.vertex_count() >= 1 && t.edge_count() + 1 == t.vertex_count()
                          ? ", disconnected)"
                          : ")"));
  }
  DecompNode node;
  node.kind = kind;
  node.leaf = tree_.leaves_.size();
  node.summary.n = t.vertex_count();
  node.summary.m = kind == NodeKind::tree_leaf ? t.edge_count() : cotree_edge_count(t.vertex_count());
  tree_.leaves_.push_back(std::move(t));
  tree_.nodes_.push_back(node);
  used_.push_back(0);
  return tree_.nodes_.size() - 1;
}

NodeId DecompositionTree::Builder::tree_leaf(Graph t) { return leaf(NodeKind::tree_leaf, std::move(t)); }

NodeId DecompositionTree::Builder::cotree_leaf(Graph t) {
  return leaf(NodeKind::cotree_leaf, std::move(t));
}

NodeId DecompositionTree::Builder::internal(NodeKind kind, NodeId left, NodeId right) {
  const std::size_t count = tree_.nodes_.size();
  if (left >= count || right >= count || left == right) {
    throw InputError("internal node needs two distinct existing children");
  }
  if (used_[left] || used_[right]) throw InputError("a node may have only one parent");
  used_[left] = used_[right] = 1;
  const NodeSummary& a = tree_.nodes_[left].summary;
  const NodeSummary& b = tree_.nodes_[right].summary;
  DecompNode node;
  node.kind = kind;
  node.left = left;
  node.right = right;
  node.summary.n = a.n + b.n;
  node.summary.m = a.m + b.m + (kind == NodeKind::join ? a.n * b.n : 0);
  tree_.nodes_.push_back(node);
  used_.push_back(0);
  return count;
}

NodeId DecompositionTree::Builder::join(NodeId left, NodeId right) {
  return internal(NodeKind::join, left, right);
}

NodeId DecompositionTree::Builder::disjoint_union(NodeId left, NodeId right) {
  return internal(NodeKind::disjoint_union, left, right);
}

DecompositionTree DecompositionTree::Builder::build() && {
  auto& nodes = tree_.nodes_;
  if (nodes.empty()) throw InputError("decomposition tree has no nodes");
  for (NodeId id = 0; id + 1 < nodes.size(); ++id) {
    if (!used_[id]) throw InputError("node " + std::to_string(id) + " is not attached to the root");
  }

  // Renumber in post-order so that folds read children from nearby slots.
  const std::size_t count = nodes.size();
  std::vector<NodeId> order;
  order.reserve(count);
  std::vector<std::pair<NodeId, bool>> stack{{count - 1, false}};
  while (!stack.empty()) {
    auto [id, expanded] = stack.back();
    stack.pop_back();
    if (expanded || nodes[id].is_leaf()) {
      order.push_back(id);
      continue;
    }
    stack.push_back({id, true});
    stack.push_back({nodes[id].right, false});
    stack.push_back({nodes[id].left, false});
  }
  std::vector<NodeId> renamed(count);
  for (NodeId i = 0; i < count; ++i) renamed[order[i]] = i;
  std::vector<DecompNode> sorted_nodes;
  std::vector<Graph> sorted_leaves;
  sorted_nodes.reserve(count);
  sorted_leaves.reserve(tree_.leaves_.size());
  for (NodeId old : order) {
    DecompNode node = nodes[old];
    if (node.is_leaf()) {
      sorted_leaves.push_back(std::move(tree_.leaves_[node.leaf]));
      node.leaf = sorted_leaves.size() - 1;
    } else {
      node.left = renamed[node.left];
      node.right = renamed[node.right];
    }
    sorted_nodes.push_back(node);
  }
  nodes = std::move(sorted_nodes);
  tree_.leaves_ = std::move(sorted_leaves);

  constexpr std::uint32_t unseen = UINT32_MAX;
  std::vector<std::uint32_t> position;
  std::vector<Vertex> bfs;
  tree_.shape_start_.clear();
  tree_.shapes_.clear();
  for (const Graph& leaf : tree_.leaves_) {
    const std::size_t n = leaf.vertex_count();
    tree_.shape_start_.push_back(tree_.shapes_.size());
    position.assign(n, unseen);
    bfs.assign(1, 0);
    position[0] = 0;
    tree_.shapes_.push_back(0);
    for (std::size_t head = 0; head < bfs.size(); ++head) {
      for (Vertex w : leaf.neighbors(bfs[head])) {
        if (position[w] != unseen) continue;
        position[w] = static_cast<std::uint32_t>(bfs.size());
        bfs.push_back(w);
        tree_.shapes_.push_back(static_cast<std::uint32_t>(head));
      }
    }
  }
  if (tree_.shapes_.size() >= UINT32_MAX || nodes.size() >= UINT32_MAX) {
    throw InputError("decomposition too large");
  }
  tree_.plan_.clear();
  tree_.plan_.reserve(nodes.size());
  for (const DecompNode& node : nodes) {
    FoldStep step;
    step.n = node.summary.n;
    step.kind = node.kind;
    if (node.is_leaf()) {
      step.a = static_cast<std::uint32_t>(tree_.shape_start_[node.leaf]);
    } else {
      step.a = static_cast<std::uint32_t>(node.left);
      step.b = static_cast<std::uint32_t>(node.right);
    }
    tree_.plan_.push_back(step);
  }

  nodes.back().summary.global_offset = 0;
  for (NodeId id = nodes.size(); id-- > 0;) {
    const DecompNode& node = nodes[id];
    if (node.is_leaf()) continue;
    nodes[node.left].summary.global_offset = node.summary.global_offset;
    nodes[node.right].summary.global_offset = node.summary.global_offset + nodes[node.left].summary.n;
  }
  used_.clear();
  return std::move(tree_);
}

namespace {

using nlohmann::json;

std::uint64_t read_count(const json& value, const std::string& what) {
  if (!value.is_number_integer() || (!value.is_number_unsigned() && value.get<std::int64_t>() < 0)) {
    throw InputError(what + " must be a non-negative integer");
  }
  return value.get<std::uint64_t>();
}

Graph read_leaf_tree(const json& node) {
  if (!node.contains("n")) throw InputError("leaf is missing \"n\"");
  if (!node.contains("edges")) throw InputError("leaf is missing \"edges\"");
  const std::uint64_t n = read_count(node["n"], "\"n\"");
  const json& list = node["edges"];
  if (!list.is_array()) throw InputError("\"edges\" must be an array");
  std::vector<Edge> edges;
  edges.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json& pair = list[i];
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!pair.is_array() || pair.size() != 2) throw InputError(where + " must be a pair [u,v]");
    edges.push_back({read_count(pair[0], where), read_count(pair[1], where)});
  }
  return build_graph(n, std::move(edges));
}

NodeId read_node(const json& node, const std::string& path, DecompositionTree::Builder& builder) {
  if (!node.is_object()) throw InputError(path + ": expected an object");
  if (!node.contains("type") || !node["type"].is_string()) {
    throw InputError(path + ": missing string field \"type\"");
  }
  const auto type = node["type"].get<std::string>();
  if (type == "tree" || type == "cotree") {
    try {
      Graph t = read_leaf_tree(node);
      return type == "tree" ? builder.tree_leaf(std::move(t)) : builder.cotree_leaf(std::move(t));
    } catch (const InputError& e) {
      throw InputError(path + ": " + e.what());
    }
  }
  if (type != "join" && type != "union") {
    throw InputError(path + ": unknown node type \"" + type + "\"");
  }
  if (!node.contains("children") || !node["children"].is_array()) {
    throw InputError(path + ": " + type + " node is missing the \"children\" array");
  }
  const json& children = node["children"];
  if (children.size() < 2) {
    throw InputError(path + ": " + type + " node needs at least two children, got " +
                     std::to_string(children.size()));
  }
  NodeId acc = read_node(children[0], path + ".children[0]", builder);
  for (std::size_t i = 1; i < children.size(); ++i) {
    const NodeId next = read_node(children[i], path + ".children[" + std::to_string(i) + "]", builder);
    acc = type == "join" ? builder.join(acc, next) : builder.disjoint_union(acc, next);
  }
  return acc;
}

nlohmann::ordered_json write_node(const DecompositionTree& t, NodeId id) {
  const DecompNode& node = t.node(id);
  nlohmann::ordered_json out;
  switch (node.kind) {
    case NodeKind::tree_leaf:
    case NodeKind::cotree_leaf: {
      const Graph& leaf = t.leaf_tree(id);
      out["type"] = node.kind == NodeKind::tree_leaf ? "tree" : "cotree";
      out["n"] = leaf.vertex_count();
      auto edges = nlohmann::ordered_json::array();
      for (const Edge& e : leaf.edges()) edges.push_back({e.u, e.v});
      out["edges"] = std::move(edges);
      break;
    }
    case NodeKind::join:
    case NodeKind::disjoint_union:
      out["type"] = node.kind == NodeKind::join ? "join" : "union";
      out["children"] = nlohmann::ordered_json::array({write_node(t, node.left), write_node(t, node.right)});
      break;
  }
  return out;
}

}  // namespace

DecompositionTree parse_decomposition(std::string_view text) {
  json document;
  try {
    document = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  DecompositionTree::Builder builder;
  read_node(document, "root", builder);
  return std::move(builder).build();
}

std::string serialize_decomposition(const DecompositionTree& t) { return write_node(t, t.root()).dump(); }

std::vector<std::uint64_t> edge_offsets(const DecompositionTree& t) {
  std::vector<std::uint64_t> offset(t.size(), 0);
  for (NodeId id = t.size(); id-- > 0;) {
    const DecompNode& node = t.node(id);
    if (node.is_leaf()) continue;
    offset[node.left] = offset[id];
    offset[node.right] = offset[id] + t.node(node.left).summary.m;
  }
  return offset;
}

Graph realize(const DecompositionTree& t) {
  const std::vector<std::uint64_t> offset = edge_offsets(t);
  std::vector<Edge> edges(t.edge_count());
  for (NodeId id = 0; id < t.size(); ++id) {
    const DecompNode& node = t.node(id);
    const std::uint64_t base = node.summary.global_offset;
    std::uint64_t slot = offset[id];
    switch (node.kind) {
      case NodeKind::tree_leaf:
        for (const Edge& e : t.leaf_tree(id).edges()) edges[slot++] = {base + e.u, base + e.v};
        break;
      case NodeKind::cotree_leaf: {
        const Graph leaf = complement(t.leaf_tree(id));
        for (const Edge& e : leaf.edges()) edges[slot++] = {base + e.u, base + e.v};
        break;
      }
      case NodeKind::join: {
        const NodeSummary& a = t.node(node.left).summary;
        const NodeSummary& b = t.node(node.right).summary;
        slot += a.m + b.m;
        for (Vertex u = a.global_offset; u < a.global_offset + a.n; ++u) {
          for (Vertex v = b.global_offset; v < b.global_offset + b.n; ++v) edges[slot++] = {u, v};
        }
        break;
      }
      case NodeKind::disjoint_union:
        break;
    }
  }
  return build_graph(t.vertex_count(), std::move(edges));
}

namespace {

NodeId random_leaf(Rng& rng, int max_leaf_size, DecompositionTree::Builder& builder) {
  Graph t = random_labeled_tree(rng, rng.between(1, static_cast<std::uint64_t>(max_leaf_size)));
  return rng.coin() ? builder.tree_leaf(std::move(t)) : builder.cotree_leaf(std::move(t));
}

NodeId random_subtree(Rng& rng, int depth, int max_leaf_size, DecompositionTree::Builder& builder) {
  if (depth == 0 || !rng.chance(3, 4)) return random_leaf(rng, max_leaf_size, builder);
  const bool is_join = rng.coin();
  const NodeId left = random_subtree(rng, depth - 1, max_leaf_size, builder);
  const NodeId right = random_subtree(rng, depth - 1, max_leaf_size, builder);
  return is_join ? builder.join(left, right) : builder.disjoint_union(left, right);
}

void check_generator_arguments(int max_depth, int max_leaf_size) {
  if (max_depth < 0) throw InputError("max_depth must be non-negative");
  if (max_leaf_size < 1) throw InputError("max_leaf_size must be at least 1");
}

}  // namespace

DecompositionTree random_tree_cograph(std::uint64_t seed, int max_depth, int max_leaf_size) {
  check_generator_arguments(max_depth, max_leaf_size);
  Rng rng(seed);
  DecompositionTree::Builder builder;
  random_subtree(rng, max_depth, max_leaf_size, builder);
  return std::move(builder).build();
}

DecompositionTree random_tree_cograph_with_size(std::uint64_t seed, std::uint64_t vertex_count,
                                                int max_leaf_size) {
  check_generator_arguments(0, max_leaf_size);
  if (vertex_count == 0) throw InputError("vertex_count must be positive");
  Rng rng(seed);
  DecompositionTree::Builder builder;
  std::vector<NodeId> pending;
  for (std::uint64_t remaining = vertex_count; remaining > 0;) {
    const std::uint64_t size =
        std::min<std::uint64_t>(remaining, rng.between(1, static_cast<std::uint64_t>(max_leaf_size)));
    Graph t = random_labeled_tree(rng, size);
    pending.push_back(rng.coin() ? builder.tree_leaf(std::move(t)) : builder.cotree_leaf(std::move(t)));
    remaining -= size;
  }
  // Merge random pairs until one root remains.
  while (pending.size() > 1) {
    const std::size_t i = rng.below(pending.size());
    std::swap(pending[i], pending.back());
    const NodeId a = pending.back();
    pending.pop_back();
    const std::size_t j = rng.below(pending.size());
    const NodeId b = pending[j];
    pending[j] = rng.coin() ? builder.join(a, b) : builder.disjoint_union(a, b);
  }
  return std::move(builder).build();
}

}  // namespace strongcolor
