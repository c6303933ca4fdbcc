#ifndef LANDO_ENUMERATION_HPP
#define LANDO_ENUMERATION_HPP

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lando/canonical.hpp"

namespace lando {

inline constexpr std::size_t kMaxCatalogEdges = 12;

/// All free trees with a fixed number of edges, one per isomorphism class,
/// in ascending canonical-code order. Each tree is tree_from_code(codes[i]).
struct TreeCatalog {
  std::size_t edge_count = 0;
  std::vector<CanonicalCode> codes;
  std::vector<Tree> trees;

  std::size_t size() const noexcept { return trees.size(); }

  /// Index of the class isomorphic to t; size() if absent.
  std::size_t index_of(const Tree& t) const {
    const auto code = canonical_code(t);
    const auto it = std::lower_bound(codes.begin(), codes.end(), code);
    return (it != codes.end() && *it == code) ? static_cast<std::size_t>(it - codes.begin()) : size();
  }
};

/// Grows every tree with n-1 edges by one leaf in every position and keeps
/// one tree per canonical code.
inline TreeCatalog enumerate_trees(std::size_t edge_count) {
  if (edge_count > kMaxCatalogEdges) {
    throw std::out_of_range("enumeration supports 0.." + std::to_string(kMaxCatalogEdges) + " edges");
  }
  std::set<std::string> level{canonical_code(Tree{}).code};
  for (std::size_t m = 1; m <= edge_count; ++m) {
    std::set<std::string> next;
    for (const auto& code : level) {
      const Tree t = tree_from_code(CanonicalCode{code});
      for (VertexId v = 0; v < t.vertex_count(); ++v) {
        std::vector<Edge> edges = t.edges();
        edges.push_back({v, t.vertex_count()});
        next.insert(canonical_code(Tree{t.vertex_count() + 1, std::move(edges)}).code);
      }
    }
    level = std::move(next);
  }

  TreeCatalog out;
  out.edge_count = edge_count;
  for (const auto& code : level) {
    out.codes.push_back(CanonicalCode{code});
    out.trees.push_back(tree_from_code(out.codes.back()));
  }
  return out;
}

}  // namespace lando

#endif  // LANDO_ENUMERATION_HPP
