#ifndef ZFPD_CANONICAL_HPP
#define ZFPD_CANONICAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "zfpd/graph.hpp"

namespace zfpd {

/// Largest order whose upper-triangle adjacency fits one 64-bit code.
inline constexpr std::size_t kMaxCanonicalOrder = 11;

/// Canonical labelling: the upper-triangle adjacency bitstring (same pair
/// order as graph6, first pair most significant) minimised over every vertex
/// ordering that respects the stable colour-refinement partition.
///
/// Colour refinement is isomorphism-invariant, so the minimum taken over the
/// cell-respecting orderings is a complete invariant just like the minimum
/// over all n! orderings; it is only cheaper to reach.
struct CanonicalForm {
  std::size_t order = 0;
  std::uint64_t code = 0;
  /// position -> vertex of the input graph
  std::vector<Vertex> labelling;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.order == b.order && a.code == b.code;
  }
};

namespace detail {

/// Stable colouring by iterated (colour, sorted neighbour colours) signatures.
inline std::vector<std::size_t> refine_colours(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> colour(n);
  for (Vertex v = 0; v < n; ++v) colour[v] = g.degree(v);
  std::size_t classes = 0;
  while (true) {
    std::vector<std::vector<std::size_t>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].push_back(colour[v]);
      std::vector<std::size_t> nb;
      for (Vertex w : g.neighbors(v)) nb.push_back(colour[w]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<std::size_t>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (Vertex v = 0; v < n; ++v) {
      colour[v] = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    }
    if (distinct.size() == classes) return colour;
    classes = distinct.size();
  }
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()), total_bits_(n_ * (n_ - (n_ ? 1 : 0)) / 2) {
    const auto colour = refine_colours(g);
    std::vector<Vertex> by_colour(n_);
    for (Vertex v = 0; v < n_; ++v) by_colour[v] = v;
    std::stable_sort(by_colour.begin(), by_colour.end(), [&](Vertex a, Vertex b) { return colour[a] < colour[b]; });
    // cell_members_[p]: vertices allowed at position p
    cell_members_.resize(n_);
    for (std::size_t p = 0; p < n_;) {
      std::size_t q = p;
      VertexSet members;
      while (q < n_ && colour[by_colour[q]] == colour[by_colour[p]]) members.insert(by_colour[q++]);
      for (std::size_t r = p; r < q; ++r) cell_members_[r] = members;
      p = q;
    }
    current_.resize(n_);
  }

  CanonicalForm run() {
    CanonicalForm out;
    out.order = n_;
    if (n_ == 0) return out;
    recurse(0, 0, VertexSet{});
    out.code = best_code_;
    out.labelling = best_;
    return out;
  }

 private:
  // Bits for pairs among positions < p occupy the top of the code.
  static std::size_t bits_before(std::size_t p) { return p * (p - (p ? 1 : 0)) / 2; }

  void recurse(std::size_t pos, std::uint64_t prefix, VertexSet used) {
    if (pos == n_) {
      if (!have_best_ || prefix < best_code_) {
        best_code_ = prefix;
        best_ = current_;
        have_best_ = true;
      }
      return;
    }
    const VertexSet candidates = cell_members_[pos] - used;
    for (Vertex v : candidates) {
      std::uint64_t code = prefix;
      for (std::size_t i = 0; i < pos; ++i) {
        const std::size_t k = bits_before(pos) + i;
        if (g_.has_edge(current_[i], v)) code |= std::uint64_t{1} << (total_bits_ - 1 - k);
      }
      const std::size_t fixed = bits_before(pos + 1);
      if (have_best_ && fixed > 0) {
        const std::size_t shift = total_bits_ - fixed;
        if ((code >> shift) > (best_code_ >> shift)) continue;
      }
      current_[pos] = v;
      recurse(pos + 1, code, used.with(v));
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t total_bits_;
  std::vector<VertexSet> cell_members_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
  std::uint64_t best_code_ = 0;
  bool have_best_ = false;
};

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw std::invalid_argument("canonical_form supports order <= " + std::to_string(kMaxCanonicalOrder));
  }
  return detail::CanonicalSearch(g).run();
}

/// The graph relabelled so that vertex i is labelling[i] of the input.
inline Graph canonical_graph(const Graph& g) {
  const auto form = canonical_form(g);
  std::vector<Vertex> position(g.order());
  for (Vertex i = 0; i < g.order(); ++i) position[form.labelling[i]] = i;
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(position[u], position[v]);
  return Graph::from_edges(g.order(), edges);
}

inline bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace zfpd

#endif  // ZFPD_CANONICAL_HPP
