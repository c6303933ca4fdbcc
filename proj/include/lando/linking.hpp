#ifndef LANDO_LINKING_HPP
#define LANDO_LINKING_HPP

#include <stdexcept>
#include <vector>

#include "lando/tree.hpp"

namespace lando {

namespace detail {

inline void check_edge_sets(const Tree& t, EdgeSet p, EdgeSet q) {
  if (!t.contains(p) || !t.contains(q)) throw std::out_of_range("edge set refers to an edge id outside the tree");
}

/// Parity of the number of q-edges between vertex 0 and v.
inline bool side_of(const Tree& t, VertexId v, EdgeSet q) {
  return ((t.root_path(v) & q).size() & 1U) != 0;
}

}  // namespace detail

/// p is on the same side of q: the sets are disjoint and every path
/// between two endpoints of p-edges crosses q an even number of times.
///
/// Removing q splits the tree into components, and coloring each vertex by
/// the parity of q-crossings from vertex 0 two-colors them. The path x-y
/// crosses q an odd number of times iff x and y get different colors, so
/// the condition is that all endpoints of p share one color.
inline bool same_side(const Tree& t, EdgeSet p, EdgeSet q) {
  detail::check_edge_sets(t, p, q);
  if (!(p & q).empty()) return false;
  if (p.empty() || q.empty()) return true;

  const auto& edges = t.edges();
  bool first = true;
  bool color = false;
  bool ok = true;
  p.for_each([&](EdgeId e) {
    if (!ok) return;
    // e is not in q, so both endpoints share a color; one suffices.
    const bool c = detail::side_of(t, edges[e].u, q);
    if (first) {
      color = c;
      first = false;
    } else if (c != color) {
      ok = false;
    }
  });
  return ok;
}

inline bool unlinked(const Tree& t, EdgeSet p, EdgeSet q) {
  return same_side(t, p, q) && same_side(t, q, p);
}

/// Endpoints of the edges in p, ascending and without repeats.
inline std::vector<VertexId> endpoints(const Tree& t, EdgeSet p) {
  std::vector<bool> mark(t.vertex_count(), false);
  p.for_each([&](EdgeId e) {
    mark[t.edge(e).u] = true;
    mark[t.edge(e).v] = true;
  });
  std::vector<VertexId> out;
  for (VertexId v = 0; v < mark.size(); ++v) {
    if (mark[v]) out.push_back(v);
  }
  return out;
}

/// Literal evaluation of same_side: count q-edges on the path between every
/// unordered pair of distinct endpoints of p. Quadratic; kept as the
/// reference the fast version is tested against.
///
/// With `include_same_edge_pairs` false, the two endpoints of a single
/// p-edge are not paired with each other.
inline bool same_side_bruteforce(const Tree& t, EdgeSet p, EdgeSet q, bool include_same_edge_pairs = true) {
  detail::check_edge_sets(t, p, q);
  if (!(p & q).empty()) return false;
  const auto ends = endpoints(t, p);
  for (std::size_t i = 0; i < ends.size(); ++i) {
    for (std::size_t j = i + 1; j < ends.size(); ++j) {
      const VertexId x = ends[i];
      const VertexId y = ends[j];
      if (!include_same_edge_pairs) {
        bool joined = false;
        p.for_each([&](EdgeId e) {
          const auto& [u, v] = t.edge(e);
          joined = joined || (u == x && v == y) || (u == y && v == x);
        });
        if (joined) continue;
      }
      std::size_t crossings = 0;
      const EdgeSet path = t.path_edges(x, y);
      q.for_each([&](EdgeId e) { crossings += path.contains(e) ? 1 : 0; });
      if (crossings % 2 != 0) return false;
    }
  }
  return true;
}

inline bool unlinked_bruteforce(const Tree& t, EdgeSet p, EdgeSet q) {
  return same_side_bruteforce(t, p, q) && same_side_bruteforce(t, q, p);
}

}  // namespace lando

#endif  // LANDO_LINKING_HPP
