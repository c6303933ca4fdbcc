#ifndef LANDO_REALIZABILITY_HPP
#define LANDO_REALIZABILITY_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lando/linking.hpp"
#include "lando/tree.hpp"

namespace lando {

/// Edge correspondence between two trees: edge i of the source maps to
/// edge image[i] of the target.
struct EdgeBijection {
  std::vector<EdgeId> image;

  static EdgeBijection identity(std::size_t n) {
    EdgeBijection h;
    h.image.resize(n);
    std::iota(h.image.begin(), h.image.end(), EdgeId{0});
    return h;
  }

  std::size_t size() const noexcept { return image.size(); }
  EdgeId operator[](EdgeId e) const { return image.at(e); }

  /// Total and injective onto {0..size-1}.
  bool is_bijective() const {
    std::vector<bool> hit(image.size(), false);
    for (EdgeId e : image) {
      if (e >= image.size() || hit[e]) return false;
      hit[e] = true;
    }
    return true;
  }

  EdgeBijection inverse() const {
    if (!is_bijective()) throw std::invalid_argument("cannot invert a non-bijective edge map");
    EdgeBijection inv;
    inv.image.resize(image.size());
    for (EdgeId e = 0; e < image.size(); ++e) inv.image[image[e]] = e;
    return inv;
  }

  EdgeSet apply(EdgeSet s) const {
    EdgeSet out;
    s.for_each([&](EdgeId e) { out.insert(image.at(e)); });
    return out;
  }

  friend bool operator==(const EdgeBijection&, const EdgeBijection&) = default;
};

enum class Verdict { friendly, unfriendly };

inline const char* to_string(Verdict v) { return v == Verdict::friendly ? "friendly" : "unfriendly"; }

struct SearchStats {
  std::uint64_t nodes = 0;    ///< partial assignments tried
  std::uint64_t checked = 0;  ///< complete bijections reached
  std::uint64_t covered = 0;  ///< bijections accounted for, pruned or checked (saturates)
  double seconds = 0.0;
};

/// Outcome of a friendliness search. A friendly certificate carries the
/// realizable bijection found; an unfriendly one records that the whole
/// bijection space was exhausted.
struct Certificate {
  Verdict verdict = Verdict::unfriendly;
  std::optional<EdgeBijection> witness;
  SearchStats stats;
};

namespace detail {

inline void require_same_size(const Tree& k, const Tree& k2) {
  if (k.edge_count() != k2.edge_count()) {
    throw std::invalid_argument("edge-count mismatch: " + std::to_string(k.edge_count()) + " vs " +
                                std::to_string(k2.edge_count()));
  }
}

inline std::uint64_t saturating_factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    if (f > UINT64_MAX / i) return UINT64_MAX;
    f *= i;
  }
  return f;
}

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

struct VertexPair {
  VertexId a;
  VertexId b;
};

/// Unordered pairs of distinct vertices at even distance.
inline std::vector<VertexPair> even_pairs(const Tree& t) {
  std::vector<VertexPair> out;
  for (VertexId a = 0; a < t.vertex_count(); ++a) {
    for (VertexId b = a + 1; b < t.vertex_count(); ++b) {
      if (t.parity(a, b) == Parity::even) out.push_back({a, b});
    }
  }
  return out;
}

inline EdgeSet image_of(EdgeSet s, const std::vector<EdgeId>& image) {
  std::uint64_t bits = 0;
  s.for_each([&](EdgeId e) { bits |= std::uint64_t{1} << image[e]; });
  return EdgeSet{bits};
}

}  // namespace detail

/// h is realizable when, for every two distinct vertices A, B of k at even
/// distance, h(delta A) and h(delta B) are unlinked in k2.
inline bool is_realizable(const Tree& k, const Tree& k2, const EdgeBijection& h) {
  detail::require_same_size(k, k2);
  if (h.size() != k.edge_count() || !h.is_bijective()) {
    throw std::invalid_argument("edge map is not a bijection between the two edge sets");
  }
  for (const auto& [a, b] : detail::even_pairs(k)) {
    if (!unlinked(k2, h.apply(k.delta(a)), h.apply(k.delta(b)))) return false;
  }
  return true;
}

/// Order in which the search assigns source edges: vertices by descending
/// degree (ties by id), each contributing its not-yet-placed incident edges.
inline std::vector<EdgeId> search_edge_order(const Tree& k) {
  std::vector<VertexId> vertices(k.vertex_count());
  std::iota(vertices.begin(), vertices.end(), VertexId{0});
  std::stable_sort(vertices.begin(), vertices.end(),
                   [&](VertexId x, VertexId y) { return k.degree(x) > k.degree(y); });
  std::vector<EdgeId> order;
  EdgeSet placed;
  for (VertexId v : vertices) {
    k.delta(v).for_each([&](EdgeId e) {
      if (!placed.contains(e)) {
        placed.insert(e);
        order.push_back(e);
      }
    });
  }
  return order;
}

namespace detail {

/// Backtracking over source edges in search_edge_order. Each even pair is
/// checked at the first depth where both incident sets are fully mapped;
/// a failed check discards the whole subtree, which can only contain
/// bijections violating that same pair.
class BijectionSearch {
 public:
  BijectionSearch(const Tree& k, const Tree& k2) : k2_{k2}, m_{k.edge_count()} {
    order_ = search_edge_order(k);
    std::vector<std::size_t> position(m_);
    for (std::size_t i = 0; i < m_; ++i) position[order_[i]] = i;

    due_.assign(m_, {});
    for (const auto& [a, b] : even_pairs(k)) {
      const EdgeSet both = k.delta(a) | k.delta(b);
      std::size_t last = 0;
      both.for_each([&](EdgeId e) { last = std::max(last, position[e]); });
      due_[last].push_back({k.delta(a), k.delta(b)});
    }
    remaining_.resize(m_ + 1);
    for (std::size_t i = 0; i <= m_; ++i) remaining_[i] = saturating_factorial(m_ - i);
  }

  Certificate run() {
    const auto start = std::chrono::steady_clock::now();
    image_.assign(m_, 0);
    Certificate cert;
    if (descend(0, EdgeSet{})) {
      cert.verdict = Verdict::friendly;
      cert.witness = EdgeBijection{image_};
    }
    cert.stats = stats_;
    cert.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return cert;
  }

 private:
  struct Constraint {
    EdgeSet first;
    EdgeSet second;
  };

  bool descend(std::size_t depth, EdgeSet used) {
    if (depth == m_) {
      ++stats_.checked;
      stats_.covered = saturating_add(stats_.covered, 1);
      return true;
    }
    const EdgeId source = order_[depth];
    for (EdgeId target = 0; target < m_; ++target) {
      if (used.contains(target)) continue;
      ++stats_.nodes;
      image_[source] = target;
      if (!consistent(depth)) {
        stats_.covered = saturating_add(stats_.covered, remaining_[depth + 1]);
        continue;
      }
      if (descend(depth + 1, used | EdgeSet{std::uint64_t{1} << target})) return true;
    }
    return false;
  }

  bool consistent(std::size_t depth) const {
    for (const auto& c : due_[depth]) {
      if (!unlinked(k2_, image_of(c.first, image_), image_of(c.second, image_))) return false;
    }
    return true;
  }

  const Tree& k2_;
  std::size_t m_;
  std::vector<EdgeId> order_;
  std::vector<std::vector<Constraint>> due_;
  std::vector<std::uint64_t> remaining_;
  std::vector<EdgeId> image_;
  SearchStats stats_;
};

}  // namespace detail

/// Searches for a realizable bijection from k to k2.
///
/// Deterministic: the witness is the first realizable bijection in
/// lexicographic order of (h[order[0]], h[order[1]], ...) where order is
/// search_edge_order(k).
inline Certificate find_realizable_bijection(const Tree& k, const Tree& k2) {
  detail::require_same_size(k, k2);
  return detail::BijectionSearch{k, k2}.run();
}

inline bool are_friendly(const Tree& k, const Tree& k2) {
  return find_realizable_bijection(k, k2).verdict == Verdict::friendly;
}

/// Largest edge count the unpruned enumerator accepts (10! bijections).
inline constexpr std::size_t kMaxExhaustiveEdges = 10;

struct Exhaustion {
  std::uint64_t checked = 0;
  std::uint64_t realizable = 0;
  std::optional<EdgeBijection> first_realizable;
};

/// Runs is_realizable on every one of the m! bijections, in lexicographic
/// order of the image array, with no pruning. `on_realizable` (optional) is
/// called for each realizable bijection.
inline Exhaustion enumerate_all_bijections(const Tree& k, const Tree& k2,
                                           const std::function<void(const EdgeBijection&)>& on_realizable = {}) {
  detail::require_same_size(k, k2);
  if (k.edge_count() > kMaxExhaustiveEdges) {
    throw std::invalid_argument("unpruned enumeration supports at most " + std::to_string(kMaxExhaustiveEdges) +
                                " edges");
  }
  Exhaustion out;
  EdgeBijection h = EdgeBijection::identity(k.edge_count());
  do {
    ++out.checked;
    if (is_realizable(k, k2, h)) {
      ++out.realizable;
      if (!out.first_realizable) out.first_realizable = h;
      if (on_realizable) on_realizable(h);
    }
  } while (std::next_permutation(h.image.begin(), h.image.end()));
  return out;
}

/// Re-verifies a certificate for (k, k2): a friendly witness is run through
/// is_realizable; an unfriendly verdict is confirmed by the unpruned
/// enumerator. Throws std::invalid_argument when the certificate cannot
/// belong to this pair of trees.
inline bool recheck_certificate(const Tree& k, const Tree& k2, const Certificate& c) {
  detail::require_same_size(k, k2);
  if (c.verdict == Verdict::friendly) {
    if (!c.witness) throw std::invalid_argument("friendly certificate without a witness");
    if (c.witness->size() != k.edge_count()) {
      throw std::invalid_argument("witness has " + std::to_string(c.witness->size()) + " entries, trees have " +
                                  std::to_string(k.edge_count()) + " edges");
    }
    return c.witness->is_bijective() && is_realizable(k, k2, *c.witness);
  }
  if (c.witness) throw std::invalid_argument("unfriendly certificate carries a witness");
  const Exhaustion ex = enumerate_all_bijections(k, k2);
  return ex.realizable == 0 && ex.checked == detail::saturating_factorial(k.edge_count());
}

}  // namespace lando

#endif  // LANDO_REALIZABILITY_HPP
