#ifndef ZFPD_PROPAGATION_HPP
#define ZFPD_PROPAGATION_HPP

#include <cstddef>
#include <deque>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zfpd/graph.hpp"

namespace zfpd {

struct Force {
  Vertex forcer;
  Vertex forced;
  friend bool operator==(const Force&, const Force&) = default;
};

/// Chronological list of forces together with the forcing chains it induces.
///
/// Chains start at the vertices of the initial set (in increasing order) and
/// follow forcer -> forced; an initial vertex that never forces is a chain of
/// length one. Terminals are the last vertices of the chains.
struct ForceLog {
  std::vector<Force> forces;
  std::vector<std::vector<Vertex>> chains;
  VertexSet terminals;
};

namespace detail {

inline void check_subset(const Graph& g, VertexSet u) {
  if (!u.is_subset_of(g.vertices())) throw std::out_of_range("vertex set exceeds graph order");
}

}  // namespace detail

/// cl(U): the fixed point of "a black vertex with exactly one white neighbour
/// turns that neighbour black". The fixed point does not depend on the order
/// in which forces are applied.
inline VertexSet closure(const Graph& g, VertexSet u) {
  detail::check_subset(g, u);
  const auto adj = g.adjacency();
  // Vertices that may still force; everything else in `black` has no white neighbour.
  VertexSet black = u;
  VertexSet active = u;
  while (!active.empty()) {
    VertexSet next_active;
    for (Vertex v : active) {
      const VertexSet white = adj[v] - black;
      if (white.size() == 1) {
        const Vertex w = white.lowest();
        black.insert(w);
        next_active.insert(w);
        next_active |= adj[w] & black;
      }
    }
    active = next_active;
  }
  return black;
}

/// Closure plus a reproducible force log. Forces are scheduled through a FIFO
/// worklist seeded with U in increasing order; a newly forced vertex is
/// appended, followed by its black neighbours (other than the forcer) in
/// increasing order when they are not already queued.
inline std::pair<VertexSet, ForceLog> closure_with_log(const Graph& g, VertexSet u) {
  detail::check_subset(g, u);
  ForceLog log;
  VertexSet black = u;
  std::deque<Vertex> queue(u.begin(), u.end());
  VertexSet queued = u;
  std::vector<Vertex> successor(g.order(), static_cast<Vertex>(-1));
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    queued.erase(v);
    const VertexSet white = g.neighbors(v) - black;
    if (white.size() != 1) continue;
    const Vertex w = white.lowest();
    black.insert(w);
    log.forces.push_back({v, w});
    successor[v] = w;
    queue.push_back(w);
    queued.insert(w);
    for (Vertex x : (g.neighbors(w) & black).without(v) - queued) {
      queue.push_back(x);
      queued.insert(x);
    }
  }
  for (Vertex start : u) {
    std::vector<Vertex> chain{start};
    while (successor[chain.back()] != static_cast<Vertex>(-1)) chain.push_back(successor[chain.back()]);
    log.terminals.insert(chain.back());
    log.chains.push_back(std::move(chain));
  }
  return {black, std::move(log)};
}

inline bool is_zero_forcing_set(const Graph& g, VertexSet u) { return closure(g, u) == g.vertices(); }

/// S is power dominating iff N[S] is zero forcing.
inline bool is_power_dominating_set(const Graph& g, VertexSet s) {
  detail::check_subset(g, s);
  return closure(g, g.closed_neighbors(s)) == g.vertices();
}

inline bool is_dominating_set(const Graph& g, VertexSet d) {
  detail::check_subset(g, d);
  return g.closed_neighbors(d) == g.vertices();
}

inline bool is_total_dominating_set(const Graph& g, VertexSet d) {
  detail::check_subset(g, d);
  return g.neighbors(d) == g.vertices();
}

/// Checks every ForceLog invariant against the graph and the initial set.
/// Returns an empty string when the log is consistent, otherwise a reason.
inline std::string check_force_log(const Graph& g, VertexSet initial, VertexSet closed, const ForceLog& log) {
  VertexSet black = initial;
  VertexSet forcers;
  for (auto [v, w] : log.forces) {
    if (!black.contains(v)) return "forcer " + std::to_string(v) + " was not black";
    if (black.contains(w)) return "vertex " + std::to_string(w) + " forced twice or was initial";
    if (forcers.contains(v)) return "vertex " + std::to_string(v) + " forced more than once";
    if ((g.neighbors(v) - black) != VertexSet::singleton(w)) {
      return "force " + std::to_string(v) + "->" + std::to_string(w) + " violates the colour change rule";
    }
    black.insert(w);
    forcers.insert(v);
  }
  if (black != closed) return "forces do not reach the closure";
  VertexSet covered;
  VertexSet terminals;
  for (const auto& chain : log.chains) {
    if (chain.empty()) return "empty chain";
    if (!initial.contains(chain.front())) return "chain does not start in the initial set";
    VertexSet members;
    for (std::size_t i = 0; i < chain.size(); ++i) {
      if (covered.contains(chain[i]) || members.contains(chain[i])) return "chains are not disjoint";
      members.insert(chain[i]);
      if (i + 1 < chain.size() && !g.has_edge(chain[i], chain[i + 1])) return "consecutive chain vertices not adjacent";
    }
    // The chain must induce exactly its own path.
    std::size_t induced_edges = 0;
    for (Vertex v : members) induced_edges += (g.neighbors(v) & members).size();
    if (induced_edges / 2 != chain.size() - 1) return "chain does not induce a path";
    covered |= members;
    terminals.insert(chain.back());
  }
  if (covered != closed) return "chains do not partition the closure";
  if (terminals != log.terminals) return "terminal set mismatch";
  return {};
}

}  // namespace zfpd

#endif  // ZFPD_PROPAGATION_HPP
