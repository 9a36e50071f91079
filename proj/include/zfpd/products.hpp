#ifndef ZFPD_PRODUCTS_HPP
#define ZFPD_PRODUCTS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zfpd/graph.hpp"

namespace zfpd {

/// Row-major bijection V(G) x V(H) -> {0, ..., nG*nH - 1}: (g, h) -> g*nH + h.
class ProductVertexMap {
 public:
  ProductVertexMap(std::size_t g_order, std::size_t h_order) : g_order_(g_order), h_order_(h_order) {}

  Vertex index(Vertex g, Vertex h) const {
    if (g >= g_order_ || h >= h_order_) throw std::out_of_range("product coordinate out of range");
    return static_cast<Vertex>(g * h_order_ + h);
  }
  std::pair<Vertex, Vertex> coordinates(Vertex i) const {
    if (i >= g_order_ * h_order_) throw std::out_of_range("product vertex out of range");
    return {static_cast<Vertex>(i / h_order_), static_cast<Vertex>(i % h_order_)};
  }
  std::size_t g_order() const { return g_order_; }
  std::size_t h_order() const { return h_order_; }

 private:
  std::size_t g_order_;
  std::size_t h_order_;
};

struct ProductGraph {
  Graph graph;
  ProductVertexMap map;
};

namespace detail {

template <typename Adjacent>
ProductGraph build_product(const Graph& g, const Graph& h, Adjacent&& adjacent) {
  if (g.order() == 0 || h.order() == 0) throw std::invalid_argument("graph product needs non-empty operands");
  if (g.order() * h.order() > kMaxOrder) {
    throw std::invalid_argument("product order " + std::to_string(g.order() * h.order()) + " exceeds " +
                                std::to_string(kMaxOrder));
  }
  ProductVertexMap map(g.order(), h.order());
  std::vector<Edge> edges;
  const auto n = static_cast<Vertex>(g.order() * h.order());
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      auto [ga, ha] = map.coordinates(a);
      auto [gb, hb] = map.coordinates(b);
      if (adjacent(ga, ha, gb, hb)) edges.emplace_back(a, b);
    }
  }
  return {Graph::from_edges(n, edges), map};
}

}  // namespace detail

/// G □ H: (g,h) ~ (g',h') iff g = g' and hh' ∈ E(H), or h = h' and gg' ∈ E(G).
inline ProductGraph cartesian_product(const Graph& g, const Graph& h) {
  return detail::build_product(g, h, [&](Vertex ga, Vertex ha, Vertex gb, Vertex hb) {
    return (ga == gb && h.has_edge(ha, hb)) || (ha == hb && g.has_edge(ga, gb));
  });
}

/// G ∘ H: (g,h) ~ (g',h') iff gg' ∈ E(G), or g = g' and hh' ∈ E(H).
inline ProductGraph lexicographic_product(const Graph& g, const Graph& h) {
  return detail::build_product(g, h, [&](Vertex ga, Vertex ha, Vertex gb, Vertex hb) {
    return g.has_edge(ga, gb) || (ga == gb && h.has_edge(ha, hb));
  });
}

/// Glues vertex hv of H onto vertex gv of G. G keeps its labels; the other
/// vertices of H follow as nG, nG+1, ... in their original order.
inline Graph amalgamate(const Graph& g, Vertex gv, const Graph& h, Vertex hv) {
  if (gv >= g.order() || hv >= h.order()) throw std::out_of_range("amalgamate: vertex out of range");
  const std::size_t n = g.order() + h.order() - 1;
  auto image = [&](Vertex x) -> Vertex {
    if (x == hv) return gv;
    return static_cast<Vertex>(g.order() + (x < hv ? x : x - 1));
  };
  std::vector<Edge> edges = g.edges();
  for (auto [x, y] : h.edges()) edges.emplace_back(image(x), image(y));
  return Graph::from_edges(n, edges);
}

}  // namespace zfpd

#endif  // ZFPD_PRODUCTS_HPP
