#ifndef ZFPD_GRAPH_HPP
#define ZFPD_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zfpd/vertex_set.hpp"

namespace zfpd {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency.
///
/// Instances are immutable; every constructor validates symmetry,
/// irreflexivity and the vertex range before returning.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph of the given order.
  explicit Graph(std::size_t n) : adj_(check_order(n)) {}

  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    std::vector<VertexSet> adj(check_order(n));
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) {
        throw std::out_of_range("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") outside graph of order " + std::to_string(n));
      }
      if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
      adj[u].insert(v);
      adj[v].insert(u);
    }
    return Graph(std::move(adj), Validated{});
  }
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Adopts a per-vertex adjacency table after checking the graph invariants.
  static Graph from_adjacency(std::vector<VertexSet> adj) {
    check_order(adj.size());
    const VertexSet all = VertexSet::first(adj.size());
    for (Vertex u = 0; u < adj.size(); ++u) {
      if (!adj[u].is_subset_of(all)) throw std::invalid_argument("adjacency refers to a missing vertex");
      if (adj[u].contains(u)) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
      for (Vertex v : adj[u]) {
        if (!adj[v].contains(u)) throw std::invalid_argument("adjacency is not symmetric");
      }
    }
    return Graph(std::move(adj), Validated{});
  }

  std::size_t order() const { return adj_.size(); }
  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (VertexSet s : adj_) twice += s.size();
    return twice / 2;
  }
  VertexSet vertices() const { return VertexSet::first(order()); }

  VertexSet neighbors(Vertex v) const { return adj_[check_vertex(v)]; }
  VertexSet closed_neighbors(Vertex v) const { return neighbors(v).with(v); }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool has_edge(Vertex u, Vertex v) const { return neighbors(u).contains(check_vertex(v)); }

  /// N(S), the union of open neighbourhoods.
  VertexSet neighbors(VertexSet s) const {
    VertexSet out;
    for (Vertex v : s) out |= neighbors(v);
    return out;
  }
  /// N[S] = N(S) ∪ S.
  VertexSet closed_neighbors(VertexSet s) const { return neighbors(s) | s; }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u) {
      for (Vertex v : adj_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  std::span<const VertexSet> adjacency() const { return adj_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  struct Validated {};
  Graph(std::vector<VertexSet> adj, Validated) : adj_(std::move(adj)) {}

  static std::size_t check_order(std::size_t n) {
    if (n > kMaxOrder) {
      throw std::invalid_argument("graph order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
    }
    return n;
  }
  Vertex check_vertex(Vertex v) const {
    if (v >= adj_.size()) {
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " + std::to_string(order()));
    }
    return v;
  }

  std::vector<VertexSet> adj_;
};

struct DegreeStats {
  std::size_t min_degree;
  std::size_t max_degree;
  friend bool operator==(const DegreeStats&, const DegreeStats&) = default;
};

inline DegreeStats degree_stats(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("degree_stats: empty graph");
  DegreeStats s{std::numeric_limits<std::size_t>::max(), 0};
  for (Vertex v = 0; v < g.order(); ++v) {
    s.min_degree = std::min(s.min_degree, g.degree(v));
    s.max_degree = std::max(s.max_degree, g.degree(v));
  }
  return s;
}

inline std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> seq;
  for (Vertex v = 0; v < g.order(); ++v) seq.push_back(g.degree(v));
  std::sort(seq.rbegin(), seq.rend());
  return seq;
}

/// Vertices reachable from `start` inside the vertex set `within`.
inline VertexSet reachable_within(const Graph& g, Vertex start, VertexSet within) {
  VertexSet seen = VertexSet::singleton(start) & within;
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next = (g.neighbors(frontier) & within) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("is_connected: empty graph");
  return reachable_within(g, 0, g.vertices()) == g.vertices();
}

/// True iff the subgraph induced by `s` is connected (the empty set is not).
inline bool induces_connected(const Graph& g, VertexSet s) {
  if (s.empty()) return false;
  return reachable_within(g, s.lowest(), s) == s;
}

/// Vertex sets of the connected components, ordered by lowest member.
inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet rest = g.vertices();
  while (!rest.empty()) {
    VertexSet c = reachable_within(g, rest.lowest(), rest);
    out.push_back(c);
    rest -= c;
  }
  return out;
}

/// Shortest-path length; std::nullopt encodes "unreachable".
inline std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v) {
  g.neighbors(u);
  g.neighbors(v);
  VertexSet seen = VertexSet::singleton(u);
  VertexSet frontier = seen;
  for (std::size_t d = 0; !frontier.empty(); ++d) {
    if (frontier.contains(v)) return d;
    frontier = g.neighbors(frontier) - seen;
    seen |= frontier;
  }
  return std::nullopt;
}

/// Eccentricity of v, or nullopt when some vertex is unreachable.
inline std::optional<std::size_t> eccentricity(const Graph& g, Vertex v) {
  VertexSet seen = VertexSet::singleton(v);
  VertexSet frontier = seen;
  std::size_t d = 0;
  while (true) {
    VertexSet next = g.neighbors(frontier) - seen;
    if (next.empty()) break;
    seen |= next;
    frontier = next;
    ++d;
  }
  if (seen != g.vertices()) return std::nullopt;
  return d;
}

inline std::size_t diameter(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("diameter: empty graph");
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto e = eccentricity(g, v);
    if (!e) throw std::domain_error("diameter: graph is disconnected");
    best = std::max(best, *e);
  }
  return best;
}

/// Diameter with disconnected graphs mapped to nullopt ("infinite").
inline std::optional<std::size_t> diameter_or_infinite(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("diameter: empty graph");
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto e = eccentricity(g, v);
    if (!e) return std::nullopt;
    best = std::max(best, *e);
  }
  return best;
}

/// Open twins (N(u) = N(v)) or closed twins (N[u] = N[v]).
inline bool are_twins(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("are_twins: u and v must differ");
  return g.neighbors(u) == g.neighbors(v) || g.closed_neighbors(u) == g.closed_neighbors(v);
}

inline bool is_twin_free(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (are_twins(g, u, v)) return false;
    }
  }
  return true;
}

inline Graph complement(const Graph& g) {
  std::vector<VertexSet> adj(g.order());
  const VertexSet all = g.vertices();
  for (Vertex v = 0; v < g.order(); ++v) adj[v] = all - g.closed_neighbors(v);
  return Graph::from_adjacency(std::move(adj));
}

inline Graph delete_edge(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v)) {
    throw std::invalid_argument("delete_edge: (" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  }
  std::vector<VertexSet> adj(g.adjacency().begin(), g.adjacency().end());
  adj[u].erase(v);
  adj[v].erase(u);
  return Graph::from_adjacency(std::move(adj));
}

struct InducedSubgraph {
  Graph graph;
  /// original[i] is the vertex of the host graph that became vertex i.
  std::vector<Vertex> original;
};

/// G[S] relabelled in increasing order of the host indices.
inline InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices())) throw std::out_of_range("induced_subgraph: set exceeds vertex range");
  InducedSubgraph out;
  out.original = s.to_vector();
  std::vector<VertexSet> adj(out.original.size());
  for (Vertex i = 0; i < out.original.size(); ++i) {
    for (Vertex j = 0; j < out.original.size(); ++j) {
      if (g.has_edge(out.original[i], out.original[j])) adj[i].insert(j);
    }
  }
  out.graph = Graph::from_adjacency(std::move(adj));
  return out;
}

inline bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.edge_count() + 1 == g.order() && is_connected(g);
}

inline bool is_regular(const Graph& g, std::size_t degree) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != degree) return false;
  }
  return true;
}

/// True iff g is isomorphic to P_n: a tree whose maximum degree is at most 2.
inline bool is_path_graph(const Graph& g) {
  return is_tree(g) && degree_stats(g).max_degree <= 2;
}

}  // namespace zfpd

#endif  // ZFPD_GRAPH_HPP
