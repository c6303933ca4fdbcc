#ifndef LANDO_TREE_HPP
#define LANDO_TREE_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lando/edge_set.hpp"

namespace lando {

/// Raised when an edge list does not describe a finite free tree.
class TreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Parity { even, odd };

struct Edge {
  VertexId u;
  VertexId v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// An immutable free tree on vertices 0..vertex_count-1.
///
/// Edge ids are positions in the edge list given at construction. Every
/// query is answered from tables built once in the constructor: a rooted
/// parent structure at vertex 0, the edge set of each root path, and the
/// incident-edge set of each vertex. The path between a and b is the
/// symmetric difference of their root paths.
class Tree {
 public:
  Tree(std::size_t vertex_count, std::vector<Edge> edges)
      : vertex_count_{vertex_count}, edges_{std::move(edges)} {
    validate();
    build_tables();
  }

  /// The one-vertex tree.
  Tree() : Tree(1, {}) {}

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  const Edge& edge(EdgeId e) const {
    if (e >= edges_.size()) throw std::out_of_range("edge id out of range");
    return edges_[e];
  }

  /// Every edge id of this tree.
  EdgeSet all_edges() const noexcept { return EdgeSet::first(edges_.size()); }

  bool contains(EdgeSet s) const noexcept { return (s & all_edges()) == s; }

  const std::vector<std::pair<VertexId, EdgeId>>& neighbors(VertexId v) const {
    check_vertex(v);
    return adjacency_[v];
  }

  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  /// Edges on the unique a-b path.
  EdgeSet path_edges(VertexId a, VertexId b) const {
    check_vertex(a);
    check_vertex(b);
    return root_path_[a] ^ root_path_[b];
  }

  Parity parity(VertexId a, VertexId b) const {
    check_vertex(a);
    check_vertex(b);
    return ((depth_[a] + depth_[b]) & 1U) == 0 ? Parity::even : Parity::odd;
  }

  std::size_t distance(VertexId a, VertexId b) const { return path_edges(a, b).size(); }

  /// Edges incident to v.
  EdgeSet delta(VertexId v) const {
    check_vertex(v);
    return incident_[v];
  }

  /// Edges on the path from vertex 0 to v.
  EdgeSet root_path(VertexId v) const {
    check_vertex(v);
    return root_path_[v];
  }

  std::vector<std::size_t> degree_sequence() const;

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(VertexId v) const {
    if (v >= vertex_count_) {
      throw std::out_of_range("vertex id " + std::to_string(v) + " out of range [0, " +
                              std::to_string(vertex_count_) + ")");
    }
  }

  void validate() const;
  void build_tables();

  std::size_t vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adjacency_;
  std::vector<EdgeSet> root_path_;
  std::vector<EdgeSet> incident_;
  std::vector<std::size_t> depth_;
};

inline void Tree::validate() const {
  if (vertex_count_ == 0) throw TreeError("tree must have at least one vertex");
  if (edges_.size() > kMaxEdges) {
    throw TreeError("tree has " + std::to_string(edges_.size()) + " edges; at most " +
                    std::to_string(kMaxEdges) + " are supported");
  }

  // Union-find: the first edge joining two already-connected vertices
  // closes a cycle.
  std::vector<VertexId> root(vertex_count_);
  std::iota(root.begin(), root.end(), VertexId{0});
  auto find = [&](VertexId x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };

  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [u, v] = edges_[i];
    const std::string where = "edge " + std::to_string(i) + " (" + std::to_string(u) + "," +
                              std::to_string(v) + ")";
    if (u >= vertex_count_ || v >= vertex_count_) throw TreeError(where + ": vertex id out of range");
    if (u == v) throw TreeError(where + ": self-loop");
    for (std::size_t j = 0; j < i; ++j) {
      const auto [x, y] = edges_[j];
      if ((x == u && y == v) || (x == v && y == u)) throw TreeError(where + ": duplicate edge");
    }
    const VertexId ru = find(u);
    const VertexId rv = find(v);
    if (ru == rv) throw TreeError(where + ": closes a cycle (not acyclic)");
    root[ru] = rv;
  }

  if (edges_.size() + 1 != vertex_count_) {
    throw TreeError("not connected: " + std::to_string(vertex_count_) + " vertices but " +
                    std::to_string(edges_.size()) + " edges");
  }
}

inline void Tree::build_tables() {
  adjacency_.assign(vertex_count_, {});
  incident_.assign(vertex_count_, EdgeSet{});
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    adjacency_[u].emplace_back(v, e);
    adjacency_[v].emplace_back(u, e);
    incident_[u].insert(e);
    incident_[v].insert(e);
  }

  root_path_.assign(vertex_count_, EdgeSet{});
  depth_.assign(vertex_count_, 0);
  std::vector<bool> seen(vertex_count_, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (const auto& [y, e] : adjacency_[x]) {
      if (seen[y]) continue;
      seen[y] = true;
      depth_[y] = depth_[x] + 1;
      root_path_[y] = root_path_[x] | EdgeSet::single(e);
      stack.push_back(y);
    }
  }
}

inline std::vector<std::size_t> Tree::degree_sequence() const {
  std::vector<std::size_t> out;
  out.reserve(vertex_count_);
  for (const auto& adj : adjacency_) out.push_back(adj.size());
  std::sort(out.begin(), out.end(), std::greater<>{});
  return out;
}

/// Same tree with vertex v renamed to perm[v]; edge order is kept.
inline Tree relabel_vertices(const Tree& t, const std::vector<VertexId>& perm) {
  if (perm.size() != t.vertex_count()) throw std::invalid_argument("relabeling has wrong size");
  std::vector<Edge> edges;
  edges.reserve(t.edge_count());
  for (const auto& [u, v] : t.edges()) edges.push_back({perm[u], perm[v]});
  return Tree{t.vertex_count(), std::move(edges)};
}

/// Same tree with the edge list reordered: new edge i is old edge order[i].
inline Tree reorder_edges(const Tree& t, const std::vector<EdgeId>& order) {
  if (order.size() != t.edge_count()) throw std::invalid_argument("edge order has wrong size");
  std::vector<Edge> edges;
  edges.reserve(order.size());
  for (EdgeId e : order) edges.push_back(t.edge(e));
  return Tree{t.vertex_count(), std::move(edges)};
}

inline Tree make_path(std::size_t edge_count) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < edge_count; ++i) edges.push_back({i, i + 1});
  return Tree{edge_count + 1, std::move(edges)};
}

inline Tree make_star(std::size_t edge_count) {
  std::vector<Edge> edges;
  for (VertexId i = 1; i <= edge_count; ++i) edges.push_back({0, i});
  return Tree{edge_count + 1, std::move(edges)};
}

}  // namespace lando

#endif  // LANDO_TREE_HPP
