#ifndef ZFPD_ENUMERATE_HPP
#define ZFPD_ENUMERATE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "zfpd/canonical.hpp"
#include "zfpd/graph.hpp"

namespace zfpd {

/// Largest order served by the built-in connected-graph enumerator.
inline constexpr std::size_t kMaxEnumeratedOrder = 8;
/// Largest order served by the built-in tree enumerator.
inline constexpr std::size_t kMaxTreeOrder = kMaxCanonicalOrder;

namespace detail {

/// Adds vertex n-1 adjacent to `attach` in a copy of g.
inline Graph extend_by_vertex(const Graph& g, VertexSet attach) {
  const auto n = static_cast<Vertex>(g.order());
  std::vector<VertexSet> adj(g.adjacency().begin(), g.adjacency().end());
  adj.push_back(attach);
  for (Vertex v : attach) adj[v].insert(n);
  return Graph::from_adjacency(std::move(adj));
}

/// Canonical representatives of all one-vertex extensions of `base` whose new
/// vertex attaches to one of the subsets produced by `attachments`.
template <typename Attachments>
std::vector<Graph> extend_and_dedup(const std::vector<Graph>& base, Attachments&& attachments) {
  std::map<std::uint64_t, Graph> seen;
  for (const Graph& g : base) {
    for (VertexSet s : attachments(g)) {
      Graph h = extend_by_vertex(g, s);
      auto form = canonical_form(h);
      if (!seen.contains(form.code)) seen.emplace(form.code, canonical_graph(h));
    }
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (auto& [_, g] : seen) out.push_back(std::move(g));
  return out;
}

inline std::vector<VertexSet> nonempty_subsets(const Graph& g) {
  std::vector<VertexSet> out;
  const std::uint64_t limit = std::uint64_t{1} << g.order();
  for (std::uint64_t s = 1; s < limit; ++s) out.emplace_back(s);
  return out;
}

inline std::vector<VertexSet> singletons(const Graph& g) {
  std::vector<VertexSet> out;
  for (Vertex v = 0; v < g.order(); ++v) out.push_back(VertexSet::singleton(v));
  return out;
}

}  // namespace detail

/// One canonical representative per isomorphism class of connected graphs of
/// order n (1 <= n <= 8), ordered by canonical code. Results are memoised.
///
/// Every connected graph of order n >= 2 has a non-cut vertex, so extending
/// each class of order n-1 by a vertex with every non-empty neighbourhood
/// reaches all classes of order n.
inline const std::vector<Graph>& connected_graphs(std::size_t n) {
  if (n < 1 || n > kMaxEnumeratedOrder) {
    throw std::out_of_range("connected graph enumeration supports 1 <= n <= " + std::to_string(kMaxEnumeratedOrder));
  }
  static std::mutex mu;
  static std::deque<std::vector<Graph>> cache{std::vector<Graph>{}, std::vector<Graph>{Graph(1)}};
  std::lock_guard lock(mu);
  while (cache.size() <= n) cache.push_back(detail::extend_and_dedup(cache.back(), detail::nonempty_subsets));
  return cache[n];
}

/// All trees of order n (1 <= n <= 11) up to isomorphism, by leaf extension.
inline const std::vector<Graph>& trees(std::size_t n) {
  if (n < 1 || n > kMaxTreeOrder) {
    throw std::out_of_range("tree enumeration supports 1 <= n <= " + std::to_string(kMaxTreeOrder));
  }
  static std::mutex mu;
  static std::deque<std::vector<Graph>> cache{std::vector<Graph>{}, std::vector<Graph>{Graph(1)}};
  std::lock_guard lock(mu);
  while (cache.size() <= n) cache.push_back(detail::extend_and_dedup(cache.back(), detail::singletons));
  return cache[n];
}

/// Visits a connected graph of order n for every (class of order n-1,
/// non-empty attachment set) pair, without isomorphism reduction. Every class
/// of order n is visited at least once. Suitable for bounded existence
/// searches one order beyond the memoised enumerator. The visitor returns true
/// to stop; the function then returns true.
template <typename Visitor>
bool for_each_connected_extension(std::size_t n, Visitor&& visit) {
  if (n < 2 || n > kMaxEnumeratedOrder + 1) {
    throw std::out_of_range("extension stream supports 2 <= n <= " + std::to_string(kMaxEnumeratedOrder + 1));
  }
  for (const Graph& g : connected_graphs(n - 1)) {
    const std::uint64_t limit = std::uint64_t{1} << g.order();
    for (std::uint64_t s = 1; s < limit; ++s) {
      if (visit(detail::extend_by_vertex(g, VertexSet(s)))) return true;
    }
  }
  return false;
}

}  // namespace zfpd

#endif  // ZFPD_ENUMERATE_HPP
