#ifndef LANDO_SURVEY_HPP
#define LANDO_SURVEY_HPP

#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <istream>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "lando/canonical.hpp"
#include "lando/certificate_io.hpp"
#include "lando/enumeration.hpp"
#include "lando/realizability.hpp"

namespace lando {

inline constexpr const char* kVersion = "1.0.0";

/// Vertex and edge names of the two-star tree G: stars at A and A' with
/// leaves C1..C3 and C1'..C3', joined by the edge C3-C3'.
struct GraphG {
  static constexpr VertexId A = 0, C1 = 1, C2 = 2, C3 = 3;
  static constexpr VertexId A_ = 4, C1_ = 5, C2_ = 6, C3_ = 7;
  static constexpr EdgeId AC1 = 0, AC2 = 1, AC3 = 2;
  static constexpr EdgeId A_C1_ = 3, A_C2_ = 4, A_C3_ = 5;
  static constexpr EdgeId C3C3_ = 6;
};

/// Vertex and edge names of the spider H: center B with pendant edge BD
/// and legs B-Pi-Qi.
struct GraphH {
  static constexpr VertexId B = 0, D = 1, P1 = 2, P2 = 3, P3 = 4, Q1 = 5, Q2 = 6, Q3 = 7;
  static constexpr EdgeId BD = 0, BP1 = 1, BP2 = 2, BP3 = 3, P1Q1 = 4, P2Q2 = 5, P3Q3 = 6;
};

inline Tree build_G() {
  using G = GraphG;
  return Tree{8,
              {{G::A, G::C1}, {G::A, G::C2}, {G::A, G::C3}, {G::A_, G::C1_}, {G::A_, G::C2_}, {G::A_, G::C3_},
               {G::C3, G::C3_}}};
}

inline Tree build_H() {
  using H = GraphH;
  return Tree{8,
              {{H::B, H::D}, {H::B, H::P1}, {H::B, H::P2}, {H::B, H::P3}, {H::P1, H::Q1}, {H::P2, H::Q2},
               {H::P3, H::Q3}}};
}

// --------------------------------------------------------------------------
// G and H are unfriendly

struct Theorem1Result {
  Certificate forward;  ///< G -> H
  Certificate reverse;  ///< H -> G
  std::optional<Exhaustion> exhaustive;  ///< unpruned G -> H pass, when requested
  double seconds = 0.0;

  bool holds() const {
    const bool searched = forward.verdict == Verdict::unfriendly && reverse.verdict == Verdict::unfriendly;
    const bool rechecked =
        !exhaustive || (exhaustive->realizable == 0 && exhaustive->checked == detail::saturating_factorial(7));
    return searched && rechecked;
  }
};

/// Searches both directions between g and h (by default the fixtures) and,
/// with `recheck`, runs the unpruned enumerator over all bijections g -> h.
inline Theorem1Result verify_theorem1(bool recheck = false, const Tree& g = build_G(), const Tree& h = build_H()) {
  const auto start = std::chrono::steady_clock::now();
  Theorem1Result r;
  r.forward = find_realizable_bijection(g, h);
  r.reverse = find_realizable_bijection(h, g);
  if (recheck) r.exhaustive = enumerate_all_bijections(g, h);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// --------------------------------------------------------------------------
// Pairwise surveys

struct SurveyRow {
  std::size_t index_a = 0;
  std::size_t index_b = 0;
  CanonicalCode code_a;
  CanonicalCode code_b;
  Verdict verdict = Verdict::unfriendly;
  std::optional<EdgeBijection> witness;
  std::uint64_t nodes = 0;
  bool rechecked = false;  ///< unfriendly row confirmed by the unpruned enumerator

  friend bool operator==(const SurveyRow& a, const SurveyRow& b) {
    return a.index_a == b.index_a && a.index_b == b.index_b && a.code_a == b.code_a && a.code_b == b.code_b &&
           a.verdict == b.verdict && a.witness == b.witness && (a.witness || a.nodes == b.nodes);
  }
};

struct SurveyReport {
  std::size_t edge_count = 0;
  std::size_t tree_count = 0;
  std::vector<SurveyRow> rows;  ///< every (a <= b), sorted by (a, b)
  std::size_t friendly = 0;
  std::size_t unfriendly = 0;
  double seconds = 0.0;
  std::string version = kVersion;

  std::vector<SurveyRow> unfriendly_rows() const {
    std::vector<SurveyRow> out;
    for (const auto& r : rows) {
      if (r.verdict == Verdict::unfriendly) out.push_back(r);
    }
    return out;
  }
};

inline constexpr std::size_t kMaxSurveyEdges = 8;

/// Unfriendly rows up to this size are always confirmed by the unpruned
/// enumerator before the report is returned.
inline constexpr std::size_t kAutoRecheckEdges = 7;

struct SurveyOptions {
  std::size_t jobs = 1;
  bool recheck = false;  ///< confirm unfriendly rows at every size
};

/// Raised when a search result fails re-verification.
class RecheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline SurveyRow evaluate_pair(const TreeCatalog& catalog, std::size_t ia, std::size_t ib, bool recheck) {
  const Tree& a = catalog.trees[ia];
  const Tree& b = catalog.trees[ib];
  const Certificate cert = find_realizable_bijection(a, b);

  SurveyRow row;
  row.index_a = ia;
  row.index_b = ib;
  row.code_a = catalog.codes[ia];
  row.code_b = catalog.codes[ib];
  row.verdict = cert.verdict;
  row.witness = cert.witness;
  row.nodes = cert.stats.nodes;

  const std::string label = "pair (" + std::to_string(ia) + "," + std::to_string(ib) + ")";
  if (cert.verdict == Verdict::friendly) {
    if (!is_realizable(a, b, *cert.witness)) throw RecheckFailure(label + ": witness is not realizable");
  } else {
    if (cert.stats.covered != detail::saturating_factorial(a.edge_count())) {
      throw RecheckFailure(label + ": search did not account for every bijection");
    }
    if (recheck) {
      if (!recheck_certificate(a, b, cert)) throw RecheckFailure(label + ": unpruned pass found a realizable bijection");
      row.rechecked = true;
    }
  }
  return row;
}

/// Friendliness verdict for every unordered pair (including self-pairs) of
/// trees with `edge_count` edges. Rows are identical for any `jobs`.
inline SurveyReport survey_pairs(std::size_t edge_count, const SurveyOptions& options = {}) {
  if (edge_count > kMaxSurveyEdges) {
    throw std::out_of_range("survey supports 0.." + std::to_string(kMaxSurveyEdges) + " edges");
  }
  const auto start = std::chrono::steady_clock::now();
  const TreeCatalog catalog = enumerate_trees(edge_count);
  const bool recheck = options.recheck || edge_count <= kAutoRecheckEdges;

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < catalog.size(); ++a) {
    for (std::size_t b = a; b < catalog.size(); ++b) pairs.emplace_back(a, b);
  }

  std::vector<SurveyRow> rows(pairs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < pairs.size();) {
      try {
        rows[i] = evaluate_pair(catalog, pairs[i].first, pairs[i].second, recheck);
      } catch (...) {
        std::lock_guard lock{failure_mutex};
        if (!failure) failure = std::current_exception();
        next = pairs.size();
      }
    }
  };

  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, pairs.size()));
  {
    std::vector<std::jthread> pool;
    for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  SurveyReport report;
  report.edge_count = edge_count;
  report.tree_count = catalog.size();
  report.rows = std::move(rows);
  for (const auto& r : report.rows) {
    (r.verdict == Verdict::friendly ? report.friendly : report.unfriendly) += 1;
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// --------------------------------------------------------------------------
// Report file

/// Report text:
///
///     SURVEY edges=<n> trees=<k> pairs=<m>
///     PAIR <ia> <ib> <code_a> <code_b> friendly <witness...>
///     PAIR <ia> <ib> <code_a> <code_b> unfriendly nodes=<int>
///     SUMMARY friendly=<int> unfriendly=<int> seconds=<float>
///
/// With `with_timing` false the seconds field is written as 0.000, which
/// makes the whole file a pure function of the edge count.
inline void write_report(std::ostream& out, const SurveyReport& r, bool with_timing = true) {
  out << "SURVEY edges=" << r.edge_count << " trees=" << r.tree_count << " pairs=" << r.rows.size() << '\n';
  for (const auto& row : r.rows) {
    out << "PAIR " << row.index_a << ' ' << row.index_b << ' ' << row.code_a << ' ' << row.code_b << ' '
        << to_string(row.verdict);
    if (row.verdict == Verdict::friendly) {
      if (row.witness && row.witness->size() != 0) {
        out << ' ';
        write_witness(out, *row.witness);
      }
    } else {
      out << " nodes=" << row.nodes;
    }
    out << '\n';
  }
  std::ostringstream secs;
  secs << std::fixed << std::setprecision(3) << (with_timing ? r.seconds : 0.0);
  out << "SUMMARY friendly=" << r.friendly << " unfriendly=" << r.unfriendly << " seconds=" << secs.str() << '\n';
}

inline std::string format_report(const SurveyReport& r, bool with_timing = true) {
  std::ostringstream out;
  write_report(out, r, with_timing);
  return out.str();
}

inline SurveyReport parse_report(std::istream& in) {
  SurveyReport r;
  std::string line;
  std::size_t line_no = 0;
  std::size_t declared_pairs = 0;
  bool have_header = false;
  bool have_summary = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls{line};
    std::string tag;
    if (!(ls >> tag)) continue;
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    const auto fail = [&](const std::string& what) {
      return ParseError("line " + std::to_string(line_no) + ": " + what);
    };

    if (tag == "SURVEY") {
      if (tok.size() != 3) throw fail("malformed SURVEY header");
      r.edge_count = detail::parse_keyed(tok[0], "edges", line_no);
      r.tree_count = detail::parse_keyed(tok[1], "trees", line_no);
      declared_pairs = detail::parse_keyed(tok[2], "pairs", line_no);
      have_header = true;
    } else if (tag == "PAIR") {
      if (!have_header) throw fail("PAIR before SURVEY header");
      if (tok.size() < 5) throw fail("malformed PAIR row");
      SurveyRow row;
      row.index_a = detail::parse_index(tok[0], line_no);
      row.index_b = detail::parse_index(tok[1], line_no);
      row.code_a = CanonicalCode{tok[2]};
      row.code_b = CanonicalCode{tok[3]};
      row.verdict = detail::parse_verdict(tok[4], line_no);
      if (row.verdict == Verdict::friendly) {
        EdgeBijection h;
        for (std::size_t i = 5; i < tok.size(); ++i) h.image.push_back(detail::parse_index(tok[i], line_no));
        row.witness = std::move(h);
      } else {
        if (tok.size() != 6) throw fail("unfriendly row needs nodes=<int>");
        row.nodes = detail::parse_keyed(tok[5], "nodes", line_no);
      }
      r.rows.push_back(std::move(row));
    } else if (tag == "SUMMARY") {
      if (tok.size() != 3) throw fail("malformed SUMMARY");
      r.friendly = detail::parse_keyed(tok[0], "friendly", line_no);
      r.unfriendly = detail::parse_keyed(tok[1], "unfriendly", line_no);
      if (tok[2].rfind("seconds=", 0) != 0) throw fail("expected seconds=<float>");
      try {
        r.seconds = std::stod(tok[2].substr(8));
      } catch (const std::exception&) {
        throw fail("bad seconds value");
      }
      have_summary = true;
    } else {
      throw fail("unknown record '" + tag + "'");
    }
  }
  if (!have_header || !have_summary) throw ParseError("report needs SURVEY and SUMMARY lines");
  if (declared_pairs != r.rows.size()) throw ParseError("report declares a different number of pairs than it lists");
  return r;
}

inline SurveyReport parse_report(const std::string& text) {
  std::istringstream in{text};
  return parse_report(in);
}

/// Writes `content` to `path` through a sibling temporary file and a rename,
/// so `path` never holds a partial report.
inline void write_file_atomically(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out{tmp, std::ios::binary | std::ios::trunc};
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot move report into '" + path.string() + "': " + ec.message());
  }
}

/// Checks a reloaded report against a fresh catalog: the row set is
/// complete and ordered, codes match catalog indices, and every friendly
/// witness passes is_realizable. Returns a list of problems (empty = ok).
inline std::vector<std::string> audit_report(const SurveyReport& r) {
  std::vector<std::string> problems;
  const TreeCatalog catalog = enumerate_trees(r.edge_count);
  if (r.tree_count != catalog.size()) problems.push_back("tree count differs from the catalog");
  std::size_t i = 0;
  std::size_t friendly = 0;
  for (std::size_t a = 0; a < catalog.size(); ++a) {
    for (std::size_t b = a; b < catalog.size(); ++b, ++i) {
      const std::string label = "row (" + std::to_string(a) + "," + std::to_string(b) + ")";
      if (i >= r.rows.size()) {
        problems.push_back(label + " missing");
        continue;
      }
      const SurveyRow& row = r.rows[i];
      if (row.index_a != a || row.index_b != b) {
        problems.push_back(label + " out of order");
        continue;
      }
      if (row.code_a != catalog.codes[a] || row.code_b != catalog.codes[b]) problems.push_back(label + " code mismatch");
      if (row.verdict == Verdict::friendly) {
        ++friendly;
        const auto& h = row.witness;
        if (!h || h->size() != r.edge_count || !h->is_bijective() ||
            !is_realizable(catalog.trees[a], catalog.trees[b], *h)) {
          problems.push_back(label + " witness fails is_realizable");
        }
      }
    }
  }
  if (i != r.rows.size()) problems.push_back("report has extra rows");
  if (friendly != r.friendly || r.rows.size() - friendly != r.unfriendly) problems.push_back("summary counts disagree");
  return problems;
}

// --------------------------------------------------------------------------
// No unfriendly pair with few edges

struct ConjectureResult {
  std::size_t max_edge_count = 0;
  std::vector<SurveyReport> reports;  ///< edge counts 1..max_edge_count
  std::vector<SurveyRow> counterexamples;  ///< unfriendly rows, each rechecked

  bool holds() const { return counterexamples.empty(); }
};

/// Surveys every edge count 1..max_edge_count. Unfriendly pairs are
/// collected (never suppressed) with their unpruned recheck done.
inline ConjectureResult verify_conjecture(std::size_t max_edge_count = 6, std::size_t jobs = 1) {
  ConjectureResult out;
  out.max_edge_count = max_edge_count;
  for (std::size_t n = 1; n <= max_edge_count; ++n) {
    out.reports.push_back(survey_pairs(n, SurveyOptions{jobs, true}));
    for (auto& row : out.reports.back().unfriendly_rows()) out.counterexamples.push_back(std::move(row));
  }
  return out;
}

}  // namespace lando

#endif  // LANDO_SURVEY_HPP
