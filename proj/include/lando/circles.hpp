#ifndef LANDO_CIRCLES_HPP
#define LANDO_CIRCLES_HPP

#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lando/tree.hpp"
#include "lando/tree_io.hpp"

namespace lando {

/// Containment structure of disjoint circles on the sphere. parent[i] is
/// the smallest circle properly containing circle i; outermost circles
/// have no parent.
struct NestingForest {
  std::vector<std::optional<std::size_t>> parent;

  std::size_t size() const noexcept { return parent.size(); }

  friend bool operator==(const NestingForest&, const NestingForest&) = default;
};

/// Throws std::invalid_argument for dangling parents or containment cycles.
inline void validate(const NestingForest& f) {
  const std::size_t n = f.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (f.parent[i] && *f.parent[i] >= n) {
      throw std::invalid_argument("circle " + std::to_string(i) + " has dangling parent " +
                                  std::to_string(*f.parent[i]));
    }
  }
  // 0 = unvisited, 1 = on the current chain, 2 = reaches a root
  std::vector<int> state(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<std::size_t> chain;
    std::optional<std::size_t> cur = start;
    while (cur && state[*cur] == 0) {
      state[*cur] = 1;
      chain.push_back(*cur);
      cur = f.parent[*cur];
    }
    if (cur && state[*cur] == 1) {
      throw std::invalid_argument("containment cycle through circle " + std::to_string(*cur));
    }
    for (std::size_t c : chain) state[c] = 2;
  }
}

/// Region-adjacency tree of the circles. Vertex 0 is the outer region,
/// vertex i+1 the region just inside circle i; edge i crosses circle i and
/// joins its region to its parent's region.
inline Tree dual_tree(const NestingForest& f) {
  validate(f);
  std::vector<Edge> edges;
  edges.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    edges.push_back({f.parent[i] ? *f.parent[i] + 1 : 0, i + 1});
  }
  return Tree{f.size() + 1, std::move(edges)};
}

/// A tree with n edges is the dual of a system of n circles.
inline std::size_t circle_count_of_tree(const Tree& t) { return t.edge_count(); }

/// Reads `t` as a dual tree with `outer` as the outer region. Every other
/// vertex becomes a circle, numbered in ascending vertex order.
inline NestingForest nesting_of_tree(const Tree& t, VertexId outer) {
  const std::size_t n = t.vertex_count();
  t.degree(outer);  // range check
  std::vector<std::size_t> circle_of(n, 0);
  for (VertexId v = 0, next = 0; v < n; ++v) {
    if (v != outer) circle_of[v] = next++;
  }

  NestingForest f;
  f.parent.assign(n - 1, std::nullopt);
  std::vector<VertexId> stack{outer};
  std::vector<bool> seen(n, false);
  seen[outer] = true;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (const auto& [y, e] : t.neighbors(x)) {
      if (seen[y]) continue;
      seen[y] = true;
      if (x != outer) f.parent[circle_of[y]] = circle_of[x];
      stack.push_back(y);
    }
  }
  return f;
}

/// Nesting file: one line `C <id> <parent-id|->` per circle, ids dense
/// from 0 (lines in any order), `-` marking an outermost circle.
inline NestingForest parse_nesting(std::istream& in) {
  std::vector<std::optional<std::optional<std::size_t>>> slots;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls{line};
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag != "C") throw ParseError("line " + std::to_string(line_no) + ": unknown record '" + tag + "'");
    std::string id_tok;
    std::string parent_tok;
    std::string extra;
    if (!(ls >> id_tok >> parent_tok) || (ls >> extra)) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'C <id> <parent-id|->'");
    }
    const std::size_t id = detail::parse_index(id_tok, line_no);
    std::optional<std::size_t> parent;
    if (parent_tok != "-") parent = detail::parse_index(parent_tok, line_no);
    if (id >= slots.size()) slots.resize(id + 1);
    if (slots[id]) throw ParseError("line " + std::to_string(line_no) + ": circle " + id_tok + " declared twice");
    slots[id] = parent;
  }

  NestingForest f;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) throw ParseError("circle ids are not dense: " + std::to_string(i) + " is missing");
    f.parent.push_back(*slots[i]);
  }
  try {
    validate(f);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return f;
}

inline NestingForest parse_nesting(const std::string& text) {
  std::istringstream in{text};
  return parse_nesting(in);
}

inline NestingForest read_nesting_file(const std::string& path) {
  std::ifstream in{path};
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return parse_nesting(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline void write_nesting(std::ostream& out, const NestingForest& f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    out << "C " << i << ' ';
    if (f.parent[i]) {
      out << *f.parent[i];
    } else {
      out << '-';
    }
    out << '\n';
  }
}

}  // namespace lando

#endif  // LANDO_CIRCLES_HPP
