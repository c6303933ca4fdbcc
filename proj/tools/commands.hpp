#ifndef LANDO_TOOLS_COMMANDS_HPP
#define LANDO_TOOLS_COMMANDS_HPP

#include <cstdlib>
#include <exception>
#include <optional>
#include <ostream>
#include <string>

#include "lando/lando.hpp"

namespace lando::cli {

/// Process exit codes.
enum Exit : int {
  kOk = 0,
  kError = 1,              ///< bad input, I/O failure, failed recheck
  kAcceptanceFailure = 2,  ///< verify-theorem1 found a friendly direction
};

/// Default worker count: $LANDO_JOBS when set to a positive integer, else 1.
inline std::size_t default_jobs() {
  if (const char* env = std::getenv("LANDO_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

struct CliConfig {
  std::size_t edges = 0;
  std::string tree_a;
  std::string tree_b;
  std::string out;
  std::string nesting;
  std::size_t jobs = 1;
  bool witness = false;
  bool recheck = false;
  bool timing = true;
  std::string fixture_g;  ///< test hook: replaces build_G()
  std::string fixture_h;  ///< test hook: replaces build_H()
};

inline int cmd_enumerate(const CliConfig& cfg, std::ostream& out) {
  const TreeCatalog catalog = enumerate_trees(cfg.edges);
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    out << "--- " << i << '\n' << catalog.codes[i] << '\n';
    write_tree(out, catalog.trees[i]);
  }
  return kOk;
}

inline int cmd_check(const CliConfig& cfg, std::ostream& out) {
  const Tree a = read_tree_file(cfg.tree_a);
  const Tree b = read_tree_file(cfg.tree_b);
  const Certificate cert = find_realizable_bijection(a, b);
  write_certificate(out, cert, cfg.witness);
  return kOk;
}

inline int cmd_survey(const CliConfig& cfg, std::ostream& out) {
  const SurveyReport report = survey_pairs(cfg.edges, SurveyOptions{cfg.jobs, cfg.recheck});
  write_file_atomically(cfg.out, format_report(report, cfg.timing));
  out << "survey edges=" << report.edge_count << " trees=" << report.tree_count << " pairs=" << report.rows.size()
      << " friendly=" << report.friendly << " unfriendly=" << report.unfriendly << '\n';
  for (const auto& row : report.unfriendly_rows()) {
    out << "UNFRIENDLY " << row.index_a << ' ' << row.index_b << ' ' << row.code_a << ' ' << row.code_b
        << " nodes=" << row.nodes << (row.rechecked ? " rechecked=exhaustive" : " rechecked=no") << '\n';
  }
  return kOk;
}

inline int cmd_verify_theorem1(const CliConfig& cfg, std::ostream& out) {
  const Tree g = cfg.fixture_g.empty() ? build_G() : read_tree_file(cfg.fixture_g);
  const Tree h = cfg.fixture_h.empty() ? build_H() : read_tree_file(cfg.fixture_h);
  if (g.edge_count() != 7 || h.edge_count() != 7) {
    out << "fixtures must have 7 edges\n";
    return kAcceptanceFailure;
  }
  const Theorem1Result r = verify_theorem1(cfg.recheck, g, h);
  out << "G " << canonical_code(g) << '\n';
  out << "H " << canonical_code(h) << '\n';
  out << "forward " << to_string(r.forward.verdict) << " nodes=" << r.forward.stats.nodes
      << " checked=" << r.forward.stats.checked << '\n';
  out << "reverse " << to_string(r.reverse.verdict) << " nodes=" << r.reverse.stats.nodes
      << " checked=" << r.reverse.stats.checked << '\n';
  if (r.exhaustive) {
    out << "recheck bijections=" << r.exhaustive->checked << " realizable=" << r.exhaustive->realizable << '\n';
  }
  out << (r.holds() ? "THEOREM1 holds" : "THEOREM1 FAILED") << '\n';
  return r.holds() ? kOk : kAcceptanceFailure;
}

inline int cmd_dual(const CliConfig& cfg, std::ostream& out) {
  write_tree(out, dual_tree(read_nesting_file(cfg.nesting)));
  return kOk;
}

/// Runs `fn`, turning exceptions into a diagnostic on `err` and kError.
template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
}

}  // namespace lando::cli

#endif  // LANDO_TOOLS_COMMANDS_HPP
