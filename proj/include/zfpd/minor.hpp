#ifndef ZFPD_MINOR_HPP
#define ZFPD_MINOR_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zfpd/families.hpp"
#include "zfpd/graph.hpp"

namespace zfpd {

/// Largest pattern order accepted by has_minor.
inline constexpr std::size_t kMaxPatternOrder = 6;
/// Largest host order accepted by is_planar.
inline constexpr std::size_t kMaxPlanarityOrder = 12;

/// branch_sets[x] is the host vertex set contracted onto pattern vertex x.
struct MinorWitness {
  std::vector<VertexSet> branch_sets;
};

/// Empty string when `w` is a valid model of `pattern` in `g`, else a reason.
inline std::string check_minor_witness(const Graph& g, const Graph& pattern, const MinorWitness& w) {
  if (w.branch_sets.size() != pattern.order()) return "wrong number of branch sets";
  VertexSet used;
  for (VertexSet b : w.branch_sets) {
    if (!b.is_subset_of(g.vertices())) return "branch set outside host";
    if (b.intersects(used)) return "branch sets overlap";
    if (!induces_connected(g, b)) return "branch set is empty or disconnected";
    used |= b;
  }
  for (auto [x, y] : pattern.edges()) {
    if (!g.neighbors(w.branch_sets[x]).intersects(w.branch_sets[y])) {
      return "no host edge between branch sets " + std::to_string(x) + " and " + std::to_string(y);
    }
  }
  return {};
}

namespace detail {

/// Assigns host vertices to at most p unlabelled blocks (restricted growth
/// order), optionally deleting vertices, and at each complete assignment tries
/// to map the pattern into the quotient graph.
class MinorSearch {
 public:
  MinorSearch(const Graph& g, VertexSet host, const Graph& pattern, bool allow_delete)
      : g_(g), pattern_(pattern), p_(pattern.order()), allow_delete_(allow_delete) {
    // BFS order inside each component of the host keeps early blocks grown
    // from adjacent vertices.
    VertexSet rest = host;
    while (!rest.empty()) {
      VertexSet seen = VertexSet::singleton(rest.lowest());
      std::vector<Vertex> queue{rest.lowest()};
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (Vertex w : (g.neighbors(queue[i]) & rest) - seen) {
          seen.insert(w);
          queue.push_back(w);
        }
      }
      order_.insert(order_.end(), queue.begin(), queue.end());
      rest -= seen;
    }
    for (Vertex x = 0; x < p_; ++x) pattern_degree_[x] = pattern.degree(x);
  }

  std::optional<MinorWitness> run() {
    if (p_ == 0) return MinorWitness{};
    blocks_.assign(p_, VertexSet{});
    VertexSet unassigned;
    for (Vertex v : order_) unassigned.insert(v);
    if (assign(0, 0, unassigned)) return witness_;
    return std::nullopt;
  }

 private:
  bool blocks_can_connect(std::size_t opened, VertexSet unassigned) const {
    for (std::size_t b = 0; b < opened; ++b) {
      const VertexSet room = blocks_[b] | unassigned;
      if ((reachable_within(g_, blocks_[b].lowest(), room) & blocks_[b]) != blocks_[b]) return false;
    }
    return true;
  }

  bool assign(std::size_t i, std::size_t opened, VertexSet unassigned) {
    if (i == order_.size()) return opened == p_ && match_pattern();
    const std::size_t remaining = order_.size() - i;
    if (p_ - opened > remaining) return false;
    const Vertex v = order_[i];
    const VertexSet after = unassigned.without(v);
    const std::size_t choices = std::min(opened + 1, p_);
    for (std::size_t b = 0; b < choices; ++b) {
      blocks_[b].insert(v);
      const std::size_t now_open = std::max(opened, b + 1);
      if (blocks_can_connect(now_open, after) && assign(i + 1, now_open, after)) return true;
      blocks_[b].erase(v);
    }
    if (allow_delete_ && p_ - opened <= remaining - 1) {
      if (blocks_can_connect(opened, after) && assign(i + 1, opened, after)) return true;
    }
    return false;
  }

  bool match_pattern() {
    for (std::size_t a = 0; a < p_; ++a) {
      quotient_[a] = 0;
      for (std::size_t b = 0; b < p_; ++b) {
        if (a != b && g_.neighbors(blocks_[a]).intersects(blocks_[b])) quotient_[a] |= 1U << b;
      }
    }
    used_blocks_ = 0;
    return map_vertex(0);
  }

  bool map_vertex(std::size_t x) {
    if (x == p_) {
      witness_.branch_sets.assign(p_, VertexSet{});
      for (std::size_t y = 0; y < p_; ++y) witness_.branch_sets[y] = blocks_[image_[y]];
      return true;
    }
    for (std::size_t b = 0; b < p_; ++b) {
      if (used_blocks_ & (1U << b)) continue;
      if (static_cast<std::size_t>(std::popcount(quotient_[b])) < pattern_degree_[x]) continue;
      bool ok = true;
      for (std::size_t y = 0; y < x && ok; ++y) {
        if (pattern_.has_edge(static_cast<Vertex>(x), static_cast<Vertex>(y))) ok = (quotient_[b] >> image_[y]) & 1U;
      }
      if (!ok) continue;
      image_[x] = b;
      used_blocks_ |= 1U << b;
      if (map_vertex(x + 1)) return true;
      used_blocks_ &= ~(1U << b);
    }
    return false;
  }

  const Graph& g_;
  const Graph& pattern_;
  std::size_t p_;
  bool allow_delete_;
  std::vector<Vertex> order_;
  std::vector<VertexSet> blocks_;
  std::array<std::size_t, kMaxPatternOrder> pattern_degree_{};
  std::array<unsigned, kMaxPatternOrder> quotient_{};
  std::array<std::size_t, kMaxPatternOrder> image_{};
  unsigned used_blocks_ = 0;
  MinorWitness witness_;
};

}  // namespace detail

/// A model of `pattern` as a minor of `g`, or nullopt.
///
/// For a connected pattern the search runs per component of g and uses every
/// vertex of the component: a deleted vertex can always be merged into an
/// adjacent branch set without breaking the model.
inline std::optional<MinorWitness> has_minor(const Graph& g, const Graph& pattern) {
  if (pattern.order() > kMaxPatternOrder) {
    throw std::invalid_argument("has_minor supports patterns of order <= " + std::to_string(kMaxPatternOrder));
  }
  if (pattern.order() == 0) return MinorWitness{};
  if (pattern.order() > g.order() || pattern.edge_count() > g.edge_count()) return std::nullopt;
  if (!is_connected(pattern)) return detail::MinorSearch(g, g.vertices(), pattern, true).run();
  for (VertexSet comp : components(g)) {
    if (comp.size() < pattern.order()) continue;
    std::size_t twice_edges = 0;
    for (Vertex v : comp) twice_edges += g.degree(v);
    if (twice_edges / 2 < pattern.edge_count()) continue;
    if (auto w = detail::MinorSearch(g, comp, pattern, false).run()) return w;
  }
  return std::nullopt;
}

/// No K4 and no K_{2,3} minor. Graphs with more than 2n-3 edges (n >= 2) are
/// rejected without a search.
inline bool is_outerplanar(const Graph& g) {
  const std::size_t n = g.order();
  if (n >= 2 && g.edge_count() > 2 * n - 3) return false;
  return !has_minor(g, complete_graph(4)) && !has_minor(g, complete_multipartite(PartiteSpec({2, 3})));
}

/// No K5 and no K_{3,3} minor. Graphs with more than 3n-6 edges (n >= 3) are
/// rejected without a search.
inline bool is_planar(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxPlanarityOrder) {
    throw std::invalid_argument("is_planar supports order <= " + std::to_string(kMaxPlanarityOrder));
  }
  if (n >= 3 && g.edge_count() > 3 * n - 6) return false;
  return !has_minor(g, complete_graph(5)) && !has_minor(g, complete_multipartite(PartiteSpec({3, 3})));
}

}  // namespace zfpd

#endif  // ZFPD_MINOR_HPP
