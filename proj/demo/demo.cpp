// Walks through the library on a few small graphs.
#include <iostream>

#include "zfpd/zfpd.hpp"

int main() {
  using namespace zfpd;

  const Graph c5 = cycle_graph(5);
  auto [closed, log] = closure_with_log(c5, {0, 1});
  std::cout << "C5: cl({0,1}) = " << to_string(closed) << ", chains:";
  for (const auto& chain : log.chains) {
    std::cout << " (";
    for (std::size_t i = 0; i < chain.size(); ++i) std::cout << (i ? "," : "") << chain[i];
    std::cout << ")";
  }
  std::cout << "\n";

  const Graph h = h_graph();
  const auto pd = power_domination_number(h);
  std::cout << "H-graph " << write_graph6(h) << ": gamma_P = " << pd.value << " via " << to_string(pd.witness)
            << ", Z = " << zero_forcing_number(h).value << ", gamma = " << domination_number(h).value
            << ", outerplanar = " << std::boolalpha << is_outerplanar(h) << "\n";

  const Graph w = wagner_graph();
  std::cout << "Wagner graph: twin-free = " << is_twin_free(w) << ", planar = " << is_planar(w)
            << ", gamma_P = " << power_domination_number(w).value << "\n";

  const auto grid = cartesian_product(path_graph(4), path_graph(4));
  const auto gp = power_domination_number(grid.graph);
  std::cout << "P4 x P4: gamma_P = " << gp.value << " at";
  for (Vertex v : gp.witness) {
    auto [a, b] = grid.map.coordinates(v);
    std::cout << " (" << a << "," << b << ")";
  }
  std::cout << "\n";

  const auto report = verify("T5");
  std::cout << "\n" << to_table(report);
}
