#ifndef ZFPD_VERTEX_SET_HPP
#define ZFPD_VERTEX_SET_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace zfpd {

using Vertex = unsigned;

/// Largest graph order representable with a single 64-bit adjacency word.
inline constexpr std::size_t kMaxOrder = 64;

/// A set of vertex indices packed into one machine word.
///
/// The set carries no reference to the graph it belongs to; callers keep
/// every member below the owning graph's order.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Vertex operator*() const { return static_cast<Vertex>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }

  static constexpr VertexSet singleton(Vertex v) { return VertexSet(std::uint64_t{1} << v); }

  /// {0, ..., n-1}
  static constexpr VertexSet first(std::size_t n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Vertex v) const { return v < 64 && ((bits_ >> v) & 1U) != 0; }

  /// Lowest member; undefined on the empty set.
  constexpr Vertex lowest() const { return static_cast<Vertex>(std::countr_zero(bits_)); }
  /// One past the highest member (0 for the empty set).
  constexpr std::size_t span() const { return 64 - static_cast<std::size_t>(std::countl_zero(bits_)); }

  constexpr void insert(Vertex v) {
    if (v >= kMaxOrder) throw std::out_of_range("vertex index " + std::to_string(v) + " exceeds 63");
    bits_ |= std::uint64_t{1} << v;
  }
  constexpr void erase(Vertex v) {
    if (v < kMaxOrder) bits_ &= ~(std::uint64_t{1} << v);
  }
  constexpr VertexSet with(Vertex v) const {
    VertexSet s = *this;
    s.insert(v);
    return s;
  }
  constexpr VertexSet without(Vertex v) const {
    VertexSet s = *this;
    s.erase(v);
    return s;
  }

  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return a |= b; }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return a &= b; }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return a -= b; }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// Renders a set as "{0,2,5}".
inline std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

/// Visits every k-subset of {0..n-1} in increasing bitmask order. The visitor
/// returns true to stop early; the function then returns true as well.
template <typename Visitor>
bool for_each_subset_of_size(std::size_t n, std::size_t k, Visitor&& visit) {
  if (k > n) return false;
  if (k == 0) return visit(VertexSet{});
  if (n > 64) throw std::out_of_range("subset enumeration limited to 64 elements");
  const std::uint64_t limit_bit = n == 64 ? 0 : std::uint64_t{1} << n;
  std::uint64_t s = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  while (true) {
    if (visit(VertexSet(s))) return true;
    // Gosper's hack: next integer with the same popcount.
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    if (r == 0) return false;
    s = (((r ^ s) >> 2) / c) | r;
    if (limit_bit != 0 && s >= limit_bit) return false;
  }
}

}  // namespace zfpd

#endif  // ZFPD_VERTEX_SET_HPP
