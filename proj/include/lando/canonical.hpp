#ifndef LANDO_CANONICAL_HPP
#define LANDO_CANONICAL_HPP

#include <algorithm>
#include <compare>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "lando/tree.hpp"

namespace lando {

/// Balanced-parenthesis code of a free tree; equal codes iff isomorphic.
struct CanonicalCode {
  std::string code;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend std::ostream& operator<<(std::ostream& os, const CanonicalCode& c) { return os << c.code; }
};

/// Vertices minimizing the largest component left after their removal.
/// Always one vertex or two adjacent vertices.
inline std::vector<VertexId> centroids(const Tree& t) {
  const std::size_t n = t.vertex_count();
  std::vector<VertexId> order;
  std::vector<VertexId> parent(n, n);
  order.reserve(n);
  order.push_back(0);
  parent[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& [y, e] : t.neighbors(order[i])) {
      if (parent[y] == n) {
        parent[y] = order[i];
        order.push_back(y);
      }
    }
  }

  std::vector<std::size_t> size(n, 1);
  std::vector<std::size_t> largest(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId v = *it;
    largest[v] = std::max(largest[v], n - size[v]);
    if (v != 0) {
      size[parent[v]] += size[v];
      largest[parent[v]] = std::max(largest[parent[v]], size[v]);
    }
  }

  const std::size_t best = *std::min_element(largest.begin(), largest.end());
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n; ++v) {
    if (largest[v] == best) out.push_back(v);
  }
  return out;
}

namespace detail {

inline std::string rooted_code(const Tree& t, VertexId v, VertexId parent) {
  std::vector<std::string> children;
  for (const auto& [y, e] : t.neighbors(v)) {
    if (y != parent) children.push_back(rooted_code(t, y, v));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  out += ')';
  return out;
}

}  // namespace detail

/// AHU code of `t` rooted at `root`: a leaf is "()", an inner vertex is
/// "(" + its children's codes in ascending order + ")".
inline std::string rooted_code(const Tree& t, VertexId root) {
  t.degree(root);  // range check
  return detail::rooted_code(t, root, std::numeric_limits<VertexId>::max());
}

/// Centroid-rooted AHU code; with two centroids, the smaller of the two codes.
inline CanonicalCode canonical_code(const Tree& t) {
  std::string best;
  for (VertexId c : centroids(t)) {
    std::string code = rooted_code(t, c);
    if (best.empty() || code < best) best = std::move(code);
  }
  return CanonicalCode{std::move(best)};
}

inline bool is_isomorphic(const Tree& a, const Tree& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  return canonical_code(a) == canonical_code(b);
}

/// Rebuilds a tree from a rooted code. Vertices are numbered in preorder
/// (root = 0) and edges are listed in discovery order as (parent, child).
inline Tree tree_from_code(const CanonicalCode& c) {
  const std::string& s = c.code;
  if (s.size() < 2 || s.size() % 2 != 0 || s.front() != '(') {
    throw std::invalid_argument("malformed canonical code '" + s + "'");
  }
  std::vector<Edge> edges;
  std::vector<VertexId> open;
  VertexId next = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') {
      if (open.empty() && i != 0) throw std::invalid_argument("canonical code has more than one root");
      if (!open.empty()) edges.push_back({open.back(), next});
      open.push_back(next++);
    } else if (s[i] == ')') {
      if (open.empty()) throw std::invalid_argument("unbalanced canonical code '" + s + "'");
      open.pop_back();
    } else {
      throw std::invalid_argument("canonical code may contain only '(' and ')'");
    }
  }
  if (!open.empty()) throw std::invalid_argument("unbalanced canonical code '" + s + "'");
  return Tree{next, std::move(edges)};
}

}  // namespace lando

#endif  // LANDO_CANONICAL_HPP
