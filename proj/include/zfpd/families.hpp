#ifndef ZFPD_FAMILIES_HPP
#define ZFPD_FAMILIES_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zfpd/graph.hpp"

namespace zfpd {

/// Part sizes r1 <= r2 <= ... <= rk of a complete multipartite graph, k >= 2.
class PartiteSpec {
 public:
  explicit PartiteSpec(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
    if (parts_.size() < 2) throw std::invalid_argument("complete multipartite graph needs at least two parts");
    if (std::find(parts_.begin(), parts_.end(), 0) != parts_.end()) {
      throw std::invalid_argument("every part must contain at least one vertex");
    }
    if (!std::is_sorted(parts_.begin(), parts_.end())) {
      throw std::invalid_argument("part sizes must be non-decreasing");
    }
  }

  const std::vector<std::size_t>& parts() const { return parts_; }
  std::size_t order() const { return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0}); }
  std::size_t smallest() const { return parts_.front(); }

  /// Vertices of part i; parts are laid out consecutively from vertex 0.
  VertexSet part(std::size_t i) const {
    std::size_t start = std::accumulate(parts_.begin(), parts_.begin() + static_cast<std::ptrdiff_t>(i), std::size_t{0});
    return VertexSet(VertexSet::first(start + parts_.at(i)).bits() & ~VertexSet::first(start).bits());
  }

  /// Every sorted spec with k >= 2 parts and total order in [2, max_order].
  static std::vector<PartiteSpec> all_up_to(std::size_t max_order) {
    std::vector<PartiteSpec> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t min_part, std::size_t remaining) -> void {
      if (cur.size() >= 2) out.emplace_back(cur);
      for (std::size_t r = min_part; r <= remaining; ++r) {
        cur.push_back(r);
        self(self, r, remaining - r);
        cur.pop_back();
      }
    };
    rec(rec, 1, max_order);
    return out;
  }

  std::string to_string() const {
    std::string s = "K_{";
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s + "}";
  }

 private:
  std::vector<std::size_t> parts_;
};

namespace detail {

inline void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace detail

inline Graph path_graph(std::size_t n) {
  detail::require(n >= 1, "path needs n >= 1");
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

inline Graph cycle_graph(std::size_t n) {
  detail::require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph::from_edges(n, e);
}

inline Graph complete_graph(std::size_t n) {
  detail::require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

inline Graph complete_multipartite(const PartiteSpec& spec) {
  std::vector<std::size_t> part_of;
  for (std::size_t i = 0; i < spec.parts().size(); ++i) part_of.insert(part_of.end(), spec.parts()[i], i);
  std::vector<Edge> e;
  for (Vertex u = 0; u < part_of.size(); ++u)
    for (Vertex v = u + 1; v < part_of.size(); ++v)
      if (part_of[u] != part_of[v]) e.emplace_back(u, v);
  return Graph::from_edges(part_of.size(), e);
}

/// W_n: hub 0 joined to the cycle 1..n-1, order n.
inline Graph wheel_graph(std::size_t n) {
  detail::require(n >= 4, "wheel needs n >= 4");
  std::vector<Edge> e;
  const auto rim = static_cast<Vertex>(n - 1);
  for (Vertex i = 0; i < rim; ++i) {
    e.emplace_back(0, i + 1);
    e.emplace_back(i + 1, (i + 1) % rim + 1);
  }
  return Graph::from_edges(n, e);
}

/// K_{1,n-1} with centre 0.
inline Graph star_graph(std::size_t n) {
  detail::require(n >= 2, "star needs n >= 2");
  std::vector<Edge> e;
  for (Vertex i = 1; i < n; ++i) e.emplace_back(0, i);
  return Graph::from_edges(n, e);
}

/// Spider with centre 0 and the given leg lengths; legs are numbered outward.
inline Graph spider_graph(const std::vector<std::size_t>& legs) {
  detail::require(legs.size() >= 3, "spider needs at least three legs");
  std::vector<Edge> e;
  Vertex next = 1;
  for (std::size_t len : legs) {
    detail::require(len >= 1, "spider legs must have length >= 1");
    Vertex prev = 0;
    for (std::size_t i = 0; i < len; ++i) {
      e.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph::from_edges(next, e);
}

/// Two P3's (0-1-2 and 3-4-5) with their centres 1 and 4 joined.
inline Graph h_graph() { return Graph::from_edges(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {1, 4}}); }

/// Möbius ladder on 8 vertices: the 8-cycle plus the four long diagonals.
inline Graph wagner_graph() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 8; ++i) e.emplace_back(i, (i + 1) % 8);
  for (Vertex i = 0; i < 4; ++i) e.emplace_back(i, i + 4);
  return Graph::from_edges(8, e);
}

/// P_m □ P_n laid out row-major: vertex r*n + c.
inline Graph grid_graph(std::size_t m, std::size_t n) {
  detail::require(m >= 1 && n >= 1, "grid needs positive dimensions");
  std::vector<Edge> e;
  for (Vertex r = 0; r < m; ++r) {
    for (Vertex c = 0; c < n; ++c) {
      const auto v = static_cast<Vertex>(r * n + c);
      if (c + 1 < n) e.emplace_back(v, v + 1);
      if (r + 1 < m) e.emplace_back(v, static_cast<Vertex>(v + n));
    }
  }
  return Graph::from_edges(m * n, e);
}

enum class Family { kPath, kCycle, kComplete, kMultipartite, kWheel, kStar, kSpider, kHGraph, kWagner };

inline std::optional<Family> family_from_name(std::string_view name) {
  if (name == "path") return Family::kPath;
  if (name == "cycle") return Family::kCycle;
  if (name == "complete") return Family::kComplete;
  if (name == "multipartite") return Family::kMultipartite;
  if (name == "wheel") return Family::kWheel;
  if (name == "star") return Family::kStar;
  if (name == "spider") return Family::kSpider;
  if (name == "h" || name == "hgraph" || name == "h-graph") return Family::kHGraph;
  if (name == "wagner") return Family::kWagner;
  return std::nullopt;
}

struct FamilyParams {
  std::size_t n = 0;
  std::vector<std::size_t> parts;  // multipartite
  std::vector<std::size_t> legs;   // spider
};

inline Graph generate(Family family, const FamilyParams& p) {
  switch (family) {
    case Family::kPath: return path_graph(p.n);
    case Family::kCycle: return cycle_graph(p.n);
    case Family::kComplete: return complete_graph(p.n);
    case Family::kMultipartite: return complete_multipartite(PartiteSpec(p.parts));
    case Family::kWheel: return wheel_graph(p.n);
    case Family::kStar: return star_graph(p.n);
    case Family::kSpider: return spider_graph(p.legs);
    case Family::kHGraph: return h_graph();
    case Family::kWagner: return wagner_graph();
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace zfpd

#endif  // ZFPD_FAMILIES_HPP
