#ifndef LANDO_CERTIFICATE_IO_HPP
#define LANDO_CERTIFICATE_IO_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "lando/realizability.hpp"
#include "lando/tree_io.hpp"

namespace lando {

inline void write_witness(std::ostream& out, const EdgeBijection& h) {
  for (std::size_t i = 0; i < h.size(); ++i) out << (i == 0 ? "" : " ") << h.image[i];
}

/// Certificate text:
///
///     VERDICT friendly|unfriendly
///     WITNESS i0 i1 ... i(n-1)      (friendly only, when requested)
///     STATS nodes=<int> checked=<int>
inline void write_certificate(std::ostream& out, const Certificate& c, bool with_witness = true) {
  out << "VERDICT " << to_string(c.verdict) << '\n';
  if (with_witness && c.witness) {
    out << "WITNESS";
    if (c.witness->size() != 0) {
      out << ' ';
      write_witness(out, *c.witness);
    }
    out << '\n';
  }
  out << "STATS nodes=" << c.stats.nodes << " checked=" << c.stats.checked << '\n';
}

inline std::string format_certificate(const Certificate& c, bool with_witness = true) {
  std::ostringstream out;
  write_certificate(out, c, with_witness);
  return out.str();
}

namespace detail {

inline std::uint64_t parse_keyed(const std::string& token, const std::string& key, std::size_t line_no) {
  const std::string prefix = key + "=";
  if (token.rfind(prefix, 0) != 0) {
    throw ParseError("line " + std::to_string(line_no) + ": expected '" + prefix + "<int>', got '" + token + "'");
  }
  return parse_index(token.substr(prefix.size()), line_no);
}

inline Verdict parse_verdict(const std::string& token, std::size_t line_no) {
  if (token == "friendly") return Verdict::friendly;
  if (token == "unfriendly") return Verdict::unfriendly;
  throw ParseError("line " + std::to_string(line_no) + ": unknown verdict '" + token + "'");
}

}  // namespace detail

inline Certificate parse_certificate(std::istream& in) {
  Certificate c;
  std::string line;
  std::size_t line_no = 0;
  bool have_verdict = false;
  bool have_stats = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls{line};
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "VERDICT") {
      std::string v;
      if (!(ls >> v)) throw ParseError("line " + std::to_string(line_no) + ": missing verdict");
      c.verdict = detail::parse_verdict(v, line_no);
      have_verdict = true;
    } else if (tag == "WITNESS") {
      EdgeBijection h;
      for (std::string tok; ls >> tok;) h.image.push_back(detail::parse_index(tok, line_no));
      c.witness = std::move(h);
    } else if (tag == "STATS") {
      std::string nodes;
      std::string checked;
      if (!(ls >> nodes >> checked)) throw ParseError("line " + std::to_string(line_no) + ": malformed STATS");
      c.stats.nodes = detail::parse_keyed(nodes, "nodes", line_no);
      c.stats.checked = detail::parse_keyed(checked, "checked", line_no);
      have_stats = true;
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown record '" + tag + "'");
    }
  }
  if (!have_verdict || !have_stats) throw ParseError("certificate needs VERDICT and STATS lines");
  return c;
}

inline Certificate parse_certificate(const std::string& text) {
  std::istringstream in{text};
  return parse_certificate(in);
}

}  // namespace lando

#endif  // LANDO_CERTIFICATE_IO_HPP
