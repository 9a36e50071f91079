#ifndef ZFPD_INVARIANTS_HPP
#define ZFPD_INVARIANTS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "zfpd/graph.hpp"
#include "zfpd/propagation.hpp"

namespace zfpd {

/// Value of a graph parameter with a minimum witness.
///
/// Set-valued parameters fill `witness`; partition-valued ones (path cover,
/// spider number) fill `parts`. Among minimum witnesses the one found first
/// in ascending-cardinality, ascending-bitmask order is returned.
struct ParamResult {
  std::size_t value = 0;
  VertexSet witness;
  std::vector<VertexSet> parts;
  std::optional<ForceLog> certificate;
};

/// Largest order accepted by the path-cover subset DP.
inline constexpr std::size_t kMaxPathCoverOrder = 24;
/// Largest order accepted by the spider-number subset DP.
inline constexpr std::size_t kMaxSpiderOrder = 20;

namespace detail {

inline void require_connected(const Graph& g, const char* what) {
  if (g.order() == 0) throw std::invalid_argument(std::string(what) + ": empty graph");
  if (!is_connected(g)) throw std::domain_error(std::string(what) + " requires a connected graph");
}

/// Smallest set (by size, then bitmask) of size in [k_min, k_max] satisfying pred.
template <typename Pred>
std::optional<VertexSet> smallest_set(std::size_t n, std::size_t k_min, std::size_t k_max, Pred&& pred) {
  std::optional<VertexSet> found;
  for (std::size_t k = k_min; k <= std::min(k_max, n) && !found; ++k) {
    for_each_subset_of_size(n, k, [&](VertexSet s) {
      if (pred(s)) found = s;
      return found.has_value();
    });
  }
  return found;
}

/// Minimum partition of {0..n-1} into allowed parts. `parts_by_lowest[v]`
/// lists the allowed parts whose lowest vertex is v, in ascending bitmask order.
inline std::vector<VertexSet> min_partition(std::size_t n, const std::vector<std::vector<VertexSet>>& parts_by_lowest) {
  struct Entry {
    std::size_t count;
    VertexSet choice;
  };
  std::unordered_map<std::uint64_t, Entry> memo;
  constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();
  auto solve = [&](auto&& self, VertexSet rest) -> std::size_t {
    if (rest.empty()) return 0;
    if (auto it = memo.find(rest.bits()); it != memo.end()) return it->second.count;
    Entry best{kUnreachable, {}};
    for (VertexSet part : parts_by_lowest[rest.lowest()]) {
      if (!part.is_subset_of(rest)) continue;
      const std::size_t sub = self(self, rest - part);
      if (sub != kUnreachable && sub + 1 < best.count) best = {sub + 1, part};
    }
    memo.emplace(rest.bits(), best);
    return best.count;
  };
  if (solve(solve, VertexSet::first(n)) == kUnreachable) throw std::logic_error("no admissible partition exists");
  std::vector<VertexSet> out;
  for (VertexSet rest = VertexSet::first(n); !rest.empty();) {
    const VertexSet part = memo.at(rest.bits()).choice;
    out.push_back(part);
    rest -= part;
  }
  return out;
}

inline std::vector<std::vector<VertexSet>> bucket_by_lowest(std::size_t n, std::vector<VertexSet> parts) {
  std::sort(parts.begin(), parts.end());
  std::vector<std::vector<VertexSet>> out(n);
  for (VertexSet p : parts) out[p.lowest()].push_back(p);
  return out;
}

}  // namespace detail

/// Z(G). Search starts at max(1, δ(G)): a set smaller than the minimum degree
/// cannot force anything.
inline ParamResult zero_forcing_number(const Graph& g) {
  detail::require_connected(g, "zero_forcing_number");
  const std::size_t start = std::max<std::size_t>(1, degree_stats(g).min_degree);
  auto s = detail::smallest_set(g.order(), start, g.order(), [&](VertexSet u) { return is_zero_forcing_set(g, u); });
  ParamResult r;
  r.value = s->size();
  r.witness = *s;
  r.certificate = closure_with_log(g, *s).second;
  return r;
}

inline ParamResult domination_number(const Graph& g) {
  detail::require_connected(g, "domination_number");
  auto s = detail::smallest_set(g.order(), 1, g.order(), [&](VertexSet d) { return is_dominating_set(g, d); });
  return {s->size(), *s, {}, std::nullopt};
}

inline ParamResult total_domination_number(const Graph& g) {
  detail::require_connected(g, "total_domination_number");
  if (g.order() < 2) throw std::domain_error("total domination is undefined for K1");
  auto s = detail::smallest_set(g.order(), 2, g.order(), [&](VertexSet d) { return is_total_dominating_set(g, d); });
  return {s->size(), *s, {}, std::nullopt};
}

/// A minimum power dominating set of size at most `max_size`, if one exists.
/// The certificate is the force log of cl(N[S]).
inline std::optional<ParamResult> power_dominating_set_within(const Graph& g, std::size_t max_size) {
  detail::require_connected(g, "power_domination_number");
  auto s = detail::smallest_set(g.order(), 1, max_size, [&](VertexSet d) { return is_power_dominating_set(g, d); });
  if (!s) return std::nullopt;
  return ParamResult{s->size(), *s, {}, closure_with_log(g, g.closed_neighbors(*s)).second};
}

/// γ_P(G). `upper_bound`, when known (γ_P <= min(γ, Z)), caps the search.
inline ParamResult power_domination_number(const Graph& g, std::optional<std::size_t> upper_bound = std::nullopt) {
  auto r = power_dominating_set_within(g, upper_bound.value_or(g.order()));
  if (!r) throw std::invalid_argument("power_domination_number: upper bound is below the true value");
  return *std::move(r);
}

/// Vertex sets inducing a path (single vertices included).
inline std::vector<VertexSet> induced_paths(const Graph& g) {
  std::unordered_set<std::uint64_t> seen;
  std::vector<VertexSet> out;
  auto extend = [&](auto&& self, VertexSet path, Vertex last) -> void {
    if (seen.insert(path.bits()).second) out.push_back(path);
    const VertexSet interior = path.without(last);
    for (Vertex w : g.neighbors(last) - path) {
      if (!g.neighbors(w).intersects(interior)) self(self, path.with(w), w);
    }
  };
  for (Vertex v = 0; v < g.order(); ++v) extend(extend, VertexSet::singleton(v), v);
  return out;
}

/// P(G): fewest vertex-disjoint induced paths covering V(G).
inline ParamResult path_cover_number(const Graph& g) {
  detail::require_connected(g, "path_cover_number");
  if (g.order() > kMaxPathCoverOrder) {
    throw std::invalid_argument("path_cover_number supports order <= " + std::to_string(kMaxPathCoverOrder));
  }
  ParamResult r;
  r.parts = detail::min_partition(g.order(), detail::bucket_by_lowest(g.order(), induced_paths(g)));
  r.value = r.parts.size();
  return r;
}

/// True iff G[s] is a tree with at most one vertex of degree greater than 2
/// (paths and single vertices count as degenerate spiders).
inline bool induces_spider(const Graph& g, VertexSet s) {
  if (!induces_connected(g, s)) return false;
  std::size_t twice_edges = 0;
  std::size_t branch = 0;
  for (Vertex v : s) {
    const std::size_t d = (g.neighbors(v) & s).size();
    twice_edges += d;
    if (d > 2) ++branch;
  }
  return twice_edges / 2 + 1 == s.size() && branch <= 1;
}

inline bool is_spider(const Graph& t) { return t.order() >= 1 && induces_spider(t, t.vertices()); }

/// sp(T): fewest parts in a partition of V(T) into spider-inducing sets.
inline ParamResult spider_number(const Graph& t) {
  if (!is_tree(t)) throw std::domain_error("spider_number requires a tree");
  if (t.order() > kMaxSpiderOrder) {
    throw std::invalid_argument("spider_number supports order <= " + std::to_string(kMaxSpiderOrder));
  }
  std::vector<VertexSet> spiders;
  const std::uint64_t limit = std::uint64_t{1} << t.order();
  for (std::uint64_t m = 1; m < limit; ++m) {
    if (induces_spider(t, VertexSet(m))) spiders.emplace_back(m);
  }
  ParamResult r;
  r.parts = detail::min_partition(t.order(), detail::bucket_by_lowest(t.order(), std::move(spiders)));
  r.value = r.parts.size();
  return r;
}

}  // namespace zfpd

#endif  // ZFPD_INVARIANTS_HPP
