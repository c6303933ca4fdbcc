#ifndef LANDO_EDGE_SET_HPP
#define LANDO_EDGE_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace lando {

using VertexId = std::size_t;
using EdgeId = std::size_t;

/// Largest number of edges an EdgeSet (and therefore a Tree) can hold.
inline constexpr std::size_t kMaxEdges = 64;

/// A subset of the edges of one tree, stored as a bitmask over edge ids.
class EdgeSet {
 public:
  constexpr EdgeSet() noexcept = default;
  constexpr explicit EdgeSet(std::uint64_t bits) noexcept : bits_{bits} {}

  static EdgeSet single(EdgeId e) {
    check_id(e);
    return EdgeSet{std::uint64_t{1} << e};
  }

  static EdgeSet of(std::initializer_list<EdgeId> ids) {
    EdgeSet s;
    for (EdgeId e : ids) s.insert(e);
    return s;
  }

  /// The set {0, 1, ..., n-1}.
  static constexpr EdgeSet first(std::size_t n) noexcept {
    return EdgeSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::size_t size() const noexcept {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(EdgeId e) const noexcept {
    return e < kMaxEdges && ((bits_ >> e) & 1U) != 0;
  }

  void insert(EdgeId e) {
    check_id(e);
    bits_ |= std::uint64_t{1} << e;
  }
  void erase(EdgeId e) {
    check_id(e);
    bits_ &= ~(std::uint64_t{1} << e);
  }

  /// Highest member id plus one; zero for the empty set.
  constexpr std::size_t span() const noexcept {
    return bits_ == 0 ? 0 : 64 - static_cast<std::size_t>(std::countl_zero(bits_));
  }

  std::vector<EdgeId> ids() const {
    std::vector<EdgeId> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<EdgeId>(std::countr_zero(b)));
    }
    return out;
  }

  /// Calls f(EdgeId) for every member in ascending order.
  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      f(static_cast<EdgeId>(std::countr_zero(b)));
    }
  }

  friend constexpr EdgeSet operator|(EdgeSet a, EdgeSet b) noexcept { return EdgeSet{a.bits_ | b.bits_}; }
  friend constexpr EdgeSet operator&(EdgeSet a, EdgeSet b) noexcept { return EdgeSet{a.bits_ & b.bits_}; }
  friend constexpr EdgeSet operator^(EdgeSet a, EdgeSet b) noexcept { return EdgeSet{a.bits_ ^ b.bits_}; }
  constexpr EdgeSet& operator|=(EdgeSet o) noexcept { bits_ |= o.bits_; return *this; }
  constexpr EdgeSet& operator&=(EdgeSet o) noexcept { bits_ &= o.bits_; return *this; }
  constexpr EdgeSet& operator^=(EdgeSet o) noexcept { bits_ ^= o.bits_; return *this; }
  friend constexpr bool operator==(EdgeSet, EdgeSet) noexcept = default;

 private:
  static void check_id(EdgeId e) {
    if (e >= kMaxEdges) throw std::out_of_range("edge id exceeds EdgeSet capacity");
  }

  std::uint64_t bits_ = 0;
};

}  // namespace lando

#endif  // LANDO_EDGE_SET_HPP
