// Brute-force reference implementations. They share nothing with the library
// beyond Graph/VertexSet storage and deliberately skip every pruning.
#ifndef ZFPD_TESTS_ORACLES_HPP
#define ZFPD_TESTS_ORACLES_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "zfpd/graph.hpp"

namespace oracle {

using zfpd::Graph;
using zfpd::Vertex;
using zfpd::VertexSet;
using Mask = std::uint64_t;

inline bool bit(Mask m, Vertex v) { return (m >> v) & 1U; }

inline Mask full(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Sweeps vertices in `order` repeatedly, applying the colour change rule.
inline Mask closure(const Graph& g, Mask black, const std::vector<Vertex>& order) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v : order) {
      if (!bit(black, v)) continue;
      int white = 0;
      Vertex last = 0;
      for (Vertex w = 0; w < g.order(); ++w) {
        if (w != v && g.has_edge(v, w) && !bit(black, w)) {
          ++white;
          last = w;
        }
      }
      if (white == 1) {
        black |= Mask{1} << last;
        changed = true;
      }
    }
  }
  return black;
}

inline Mask closure(const Graph& g, Mask black) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), 0U);
  return closure(g, black, order);
}

inline Mask closed_nbhd(const Graph& g, Mask s) {
  Mask out = s;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w = 0; w < g.order(); ++w) {
      if (bit(s, v) && w != v && g.has_edge(v, w)) out |= Mask{1} << w;
    }
  }
  return out;
}

inline Mask open_nbhd(const Graph& g, Mask s) {
  Mask out = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w = 0; w < g.order(); ++w) {
      if (bit(s, v) && w != v && g.has_edge(v, w)) out |= Mask{1} << w;
    }
  }
  return out;
}

inline bool zero_forcing(const Graph& g, Mask s) { return closure(g, s) == full(g.order()); }
inline bool power_dominating(const Graph& g, Mask s) { return closure(g, closed_nbhd(g, s)) == full(g.order()); }
inline bool dominating(const Graph& g, Mask s) { return closed_nbhd(g, s) == full(g.order()); }
inline bool total_dominating(const Graph& g, Mask s) { return open_nbhd(g, s) == full(g.order()); }

struct Min {
  std::size_t value;
  Mask witness;
};

/// Minimum popcount mask satisfying pred, ties broken by smallest mask.
inline Min minimum(const Graph& g, const std::function<bool(const Graph&, Mask)>& pred) {
  Min best{std::numeric_limits<std::size_t>::max(), 0};
  for (Mask m = 0; m <= full(g.order()); ++m) {
    const auto k = static_cast<std::size_t>(std::popcount(m));
    if (k < best.value && pred(g, m)) best = {k, m};
    if (m == full(g.order())) break;
  }
  return best;
}

inline std::vector<Vertex> members(Mask m) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < 64; ++v) {
    if (bit(m, v)) out.push_back(v);
  }
  return out;
}

inline bool connected_within(const Graph& g, Mask s) {
  if (s == 0) return false;
  const auto vs = members(s);
  Mask seen = Mask{1} << vs[0];
  bool grew = true;
  while (grew) {
    grew = false;
    for (Vertex a : vs) {
      for (Vertex b : vs) {
        if (bit(seen, a) && !bit(seen, b) && g.has_edge(a, b)) {
          seen |= Mask{1} << b;
          grew = true;
        }
      }
    }
  }
  return seen == s;
}

inline std::vector<std::size_t> induced_degrees(const Graph& g, Mask s) {
  std::vector<std::size_t> d;
  for (Vertex a : members(s)) {
    std::size_t k = 0;
    for (Vertex b : members(s)) k += g.has_edge(a, b) ? 1 : 0;
    d.push_back(k);
  }
  return d;
}

inline bool induces_path(const Graph& g, Mask s) {
  if (!connected_within(g, s)) return false;
  auto d = induced_degrees(g, s);
  const auto sum = std::accumulate(d.begin(), d.end(), std::size_t{0});
  return sum == 2 * (d.size() - 1) && *std::max_element(d.begin(), d.end()) <= 2;
}

inline bool induces_spider(const Graph& g, Mask s) {
  if (!connected_within(g, s)) return false;
  auto d = induced_degrees(g, s);
  const auto sum = std::accumulate(d.begin(), d.end(), std::size_t{0});
  return sum == 2 * (d.size() - 1) && std::count_if(d.begin(), d.end(), [](std::size_t x) { return x > 2; }) <= 1;
}

/// Fewest parts over all set partitions of V into parts satisfying `ok`.
inline std::size_t min_partition(const Graph& g, const std::function<bool(const Graph&, Mask)>& ok) {
  std::function<std::size_t(Mask)> rec = [&](Mask rest) -> std::size_t {
    if (rest == 0) return 0;
    const Mask low = rest & (~rest + 1);
    const Mask others = rest & ~low;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    // every subset of `others` joined with the lowest remaining vertex
    for (Mask sub = others;; sub = (sub - 1) & others) {
      const Mask part = sub | low;
      if (ok(g, part)) {
        const auto r = rec(rest & ~part);
        if (r != std::numeric_limits<std::size_t>::max()) best = std::min(best, r + 1);
      }
      if (sub == 0) break;
    }
    return best;
  };
  return rec(full(g.order()));
}

inline std::size_t path_cover(const Graph& g) { return min_partition(g, induces_path); }
inline std::size_t spider_number(const Graph& g) { return min_partition(g, induces_spider); }

/// Labelled minor test: every map of host vertices to pattern vertices or
/// "deleted", checking connected nonempty branch sets and every pattern edge.
inline bool has_minor(const Graph& host, const Graph& pattern) {
  const std::size_t n = host.order();
  const std::size_t p = pattern.order();
  std::vector<std::size_t> label(n, 0);  // 0 = deleted, x+1 = pattern vertex x
  while (true) {
    std::vector<Mask> blocks(p, 0);
    for (Vertex v = 0; v < n; ++v) {
      if (label[v] > 0) blocks[label[v] - 1] |= Mask{1} << v;
    }
    bool ok = true;
    for (std::size_t x = 0; x < p && ok; ++x) ok = connected_within(host, blocks[x]);
    for (std::size_t x = 0; x < p && ok; ++x) {
      for (std::size_t y = x + 1; y < p && ok; ++y) {
        if (!pattern.has_edge(static_cast<Vertex>(x), static_cast<Vertex>(y))) continue;
        bool joined = false;
        for (Vertex a : members(blocks[x]))
          for (Vertex b : members(blocks[y])) joined = joined || host.has_edge(a, b);
        ok = joined;
      }
    }
    if (ok) return true;
    std::size_t i = 0;
    while (i < n && ++label[i] == p + 1) label[i++] = 0;
    if (i == n) return false;
  }
}

/// Isomorphism by trying every permutation.
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<Vertex> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0U);
  do {
    bool same = true;
    for (Vertex u = 0; u < a.order() && same; ++u)
      for (Vertex v = u + 1; v < a.order() && same; ++v) same = a.has_edge(u, v) == b.has_edge(perm[u], perm[v]);
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// G(n, p) random graph.
inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<zfpd::Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

}  // namespace oracle

#endif  // ZFPD_TESTS_ORACLES_HPP
