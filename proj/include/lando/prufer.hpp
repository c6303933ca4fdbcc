#ifndef LANDO_PRUFER_HPP
#define LANDO_PRUFER_HPP

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "lando/canonical.hpp"

namespace lando {

/// Decodes a Prüfer sequence over {0..n-1} (length n-2) into the labeled
/// tree on n vertices.
inline Tree prufer_decode(const std::vector<VertexId>& seq) {
  const std::size_t n = seq.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (VertexId v : seq) {
    if (v >= n) throw std::invalid_argument("Prüfer entry out of range");
    ++degree[v];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (VertexId v : seq) {
    VertexId leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.push_back({leaf, v});
    --degree[leaf];
    --degree[v];
  }
  VertexId u = n;
  for (VertexId x = 0; x < n; ++x) {
    if (degree[x] == 1) {
      if (u == n) {
        u = x;
      } else {
        edges.push_back({u, x});
        break;
      }
    }
  }
  return Tree{n, std::move(edges)};
}

/// Number of isomorphism classes of trees with `edge_count` edges, found by
/// decoding every Prüfer sequence on edge_count+1 vertices and bucketing
/// the results by canonical code. Exponential; an oracle for small sizes.
inline std::size_t prufer_oracle_count(std::size_t edge_count) {
  if (edge_count < 1 || edge_count > 8) throw std::out_of_range("Prüfer oracle supports 1..8 edges");
  const std::size_t n = edge_count + 1;
  std::set<std::string> classes;
  std::vector<VertexId> seq(n - 2, 0);
  while (true) {
    classes.insert(canonical_code(prufer_decode(seq)).code);
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  return classes.size();
}

}  // namespace lando

#endif  // LANDO_PRUFER_HPP
