#ifndef LANDO_TREE_IO_HPP
#define LANDO_TREE_IO_HPP

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "lando/tree.hpp"

namespace lando {

/// Malformed text input (tree, nesting, certificate or report files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::size_t parse_index(const std::string& token, std::size_t line_no) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    if (token.empty() || token[0] == '-' || token[0] == '+') throw std::invalid_argument(token);
    value = std::stoull(token, &pos);
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                     token + "'");
  }
  if (pos != token.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": trailing characters in '" + token + "'");
  }
  return static_cast<std::size_t>(value);
}

}  // namespace detail

/// Reads the tree text format:
///
///     V <vertex_count>
///     E <u> <v>        (one line per edge, in edge-id order)
///
/// Blank lines are ignored. Throws ParseError for syntax problems and
/// TreeError when the edges do not form a tree.
inline Tree parse_tree(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t vertex_count = 0;
  bool have_header = false;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls{line};
    std::string tag;
    if (!(ls >> tag)) continue;

    std::vector<std::string> args;
    for (std::string tok; ls >> tok;) args.push_back(tok);

    if (tag == "V") {
      if (have_header) throw ParseError("line " + std::to_string(line_no) + ": duplicate V line");
      if (args.size() != 1) throw ParseError("line " + std::to_string(line_no) + ": expected 'V <count>'");
      vertex_count = detail::parse_index(args[0], line_no);
      have_header = true;
    } else if (tag == "E") {
      if (!have_header) throw ParseError("line " + std::to_string(line_no) + ": E line before V line");
      if (args.size() != 2) throw ParseError("line " + std::to_string(line_no) + ": expected 'E <u> <v>'");
      edges.push_back({detail::parse_index(args[0], line_no), detail::parse_index(args[1], line_no)});
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown record '" + tag + "'");
    }
  }
  if (!have_header) throw ParseError("missing 'V <count>' line");
  return Tree{vertex_count, std::move(edges)};
}

inline Tree parse_tree(const std::string& text) {
  std::istringstream in{text};
  return parse_tree(in);
}

inline Tree read_tree_file(const std::string& path) {
  std::ifstream in{path};
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return parse_tree(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const TreeError& e) {
    throw TreeError(path + ": " + e.what());
  }
}

inline void write_tree(std::ostream& out, const Tree& t) {
  out << "V " << t.vertex_count() << '\n';
  for (const auto& [u, v] : t.edges()) out << "E " << u << ' ' << v << '\n';
}

inline std::string format_tree(const Tree& t) {
  std::ostringstream out;
  write_tree(out, t);
  return out.str();
}

}  // namespace lando

#endif  // LANDO_TREE_IO_HPP
