#ifndef LANDO_TESTS_TEST_SUPPORT_HPP
#define LANDO_TESTS_TEST_SUPPORT_HPP

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "lando/lando.hpp"

namespace lando::testing {

/// Uniform-ish random tree: vertex i attaches to a random earlier vertex,
/// then vertex labels and edge order are shuffled.
inline Tree random_tree(std::mt19937_64& rng, std::size_t edge_count) {
  const std::size_t n = edge_count + 1;
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) {
    edges.push_back({std::uniform_int_distribution<VertexId>(0, v - 1)(rng), v});
  }
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), VertexId{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& e : edges) {
    e = {perm[e.u], perm[e.v]};
    if (rng() & 1U) std::swap(e.u, e.v);
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return Tree{n, std::move(edges)};
}

inline std::vector<VertexId> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<VertexId> p(n);
  std::iota(p.begin(), p.end(), VertexId{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Random relabeling of vertices plus a random edge order.
inline Tree scramble(std::mt19937_64& rng, const Tree& t) {
  return reorder_edges(relabel_vertices(t, random_permutation(rng, t.vertex_count())),
                       random_permutation(rng, t.edge_count()));
}

inline EdgeSet random_edge_set(std::mt19937_64& rng, const Tree& t, double density = 0.5) {
  std::bernoulli_distribution coin(density);
  EdgeSet s;
  for (EdgeId e = 0; e < t.edge_count(); ++e) {
    if (coin(rng)) s.insert(e);
  }
  return s;
}

/// Path edges by breadth-first search from a, independent of Tree's tables.
inline EdgeSet bfs_path(const Tree& t, VertexId a, VertexId b) {
  std::vector<std::ptrdiff_t> via(t.vertex_count(), -1);
  std::vector<VertexId> from(t.vertex_count(), a);
  std::vector<bool> seen(t.vertex_count(), false);
  std::vector<VertexId> queue{a};
  seen[a] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (EdgeId e = 0; e < t.edge_count(); ++e) {
      const auto [u, v] = t.edges()[e];
      const VertexId x = queue[i];
      const VertexId y = u == x ? v : (v == x ? u : t.vertex_count());
      if (y == t.vertex_count() || seen[y]) continue;
      seen[y] = true;
      via[y] = static_cast<std::ptrdiff_t>(e);
      from[y] = x;
      queue.push_back(y);
    }
  }
  EdgeSet out;
  for (VertexId x = b; x != a; x = from[x]) out.insert(static_cast<EdgeId>(via[x]));
  return out;
}

/// Isomorphism by trying every vertex permutation.
inline bool brute_force_isomorphic(const Tree& a, const Tree& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  const std::size_t n = a.vertex_count();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : b.edges()) adj[u][v] = adj[v][u] = true;
  std::vector<VertexId> p(n);
  std::iota(p.begin(), p.end(), VertexId{0});
  do {
    bool ok = true;
    for (const auto& [u, v] : a.edges()) {
      if (!adj[p[u]][p[v]]) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Every labeled tree on n vertices (via Prüfer sequences; n >= 2).
inline std::vector<Tree> all_labeled_trees(std::size_t n) {
  std::vector<Tree> out;
  std::vector<VertexId> seq(n - 2, 0);
  while (true) {
    out.push_back(prufer_decode(seq));
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  return out;
}

struct CliResult {
  int status = -1;
  std::string out;
};

/// Runs the CLI binary with `args` (shell syntax), capturing stdout and,
/// with `merge_stderr`, stderr too.
inline CliResult run_cli(const std::string& args, bool merge_stderr = false) {
#ifdef LANDO_CLI_PATH
  const std::string binary = std::string{"'"} + LANDO_CLI_PATH + "'";
#else
  const std::string binary = "lando";
#endif
  const std::string cmd = binary + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  CliResult r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = ::pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() / ("lando-" + tag + "-" + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::filesystem::path file(const std::string& name, const std::string& content = {}) const {
    const auto p = path_ / name;
    std::ofstream{p} << content;
    return p;
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in{p, std::ios::binary};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace lando::testing

#endif  // LANDO_TESTS_TEST_SUPPORT_HPP
