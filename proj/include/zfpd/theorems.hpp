#ifndef ZFPD_THEOREMS_HPP
#define ZFPD_THEOREMS_HPP

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zfpd/canonical.hpp"
#include "zfpd/enumerate.hpp"
#include "zfpd/families.hpp"
#include "zfpd/graph.hpp"
#include "zfpd/graph6.hpp"
#include "zfpd/invariants.hpp"
#include "zfpd/minor.hpp"
#include "zfpd/parallel.hpp"
#include "zfpd/products.hpp"
#include "zfpd/propagation.hpp"

namespace zfpd {

/// One universe member on which a claim did not hold. `graph6` holds the
/// member's encoding; pairs of graphs are written "G H" (space separated).
struct Failure {
  std::string graph6;
  std::string claim;
  std::string expected;
  std::string observed;
  friend bool operator==(const Failure&, const Failure&) = default;
  friend auto operator<=>(const Failure&, const Failure&) = default;
};

/// Outcome of a bounded existence search.
struct SearchOutcome {
  std::string name;
  std::string cap;
  bool found = false;
  std::string graph6;
  /// The witness was re-evaluated from its graph6 encoding alone.
  bool rechecked = false;
  std::string detail;
};

struct VerifyReport {
  std::string theorem_id;
  std::string claim;
  std::string universe;
  std::size_t graphs_checked = 0;
  /// Universe members rejected by the claim's preconditions.
  std::size_t skipped = 0;
  std::vector<Failure> failures;
  std::vector<std::string> notes;
  std::vector<SearchOutcome> searches;
  double elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
};

struct UniverseParams {
  /// Overrides the verifier's default order bound (checked against its cap).
  std::optional<std::size_t> max_n;
  /// Include the built-in enumerated universe.
  bool builtin = true;
  /// Extra graphs, typically read from a graph6 file.
  std::vector<Graph> extra_graphs;
  std::size_t workers = 1;
};

class UnknownTheoremError : public std::invalid_argument {
 public:
  explicit UnknownTheoremError(const std::string& id) : std::invalid_argument("unknown theorem id: " + id) {}
};

class CapError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

namespace detail {

inline std::string str(std::size_t v) { return std::to_string(v); }

inline bool connected_nonempty(const Graph& g) { return g.order() > 0 && is_connected(g); }

/// Result of checking one universe member.
struct MemberOutcome {
  bool skipped = false;
  std::vector<Failure> failures;
  /// Labels tallied into the report notes; labels starting with "list:" also
  /// list the graph6 encodings that carried them.
  std::vector<std::string> marks;
  std::string key;
};

class ReportBuilder {
 public:
  ReportBuilder(std::string id, std::string claim) : start_(std::chrono::steady_clock::now()) {
    report_.theorem_id = std::move(id);
    report_.claim = std::move(claim);
  }

  VerifyReport& report() { return report_; }

  void absorb(MemberOutcome&& m) {
    if (m.skipped) {
      ++report_.skipped;
      return;
    }
    ++report_.graphs_checked;
    for (auto& f : m.failures) report_.failures.push_back(std::move(f));
    for (auto& label : m.marks) marks_[label].push_back(m.key);
  }

  void fail(std::string key, std::string claim, std::string expected, std::string observed) {
    report_.failures.push_back({std::move(key), std::move(claim), std::move(expected), std::move(observed)});
  }

  template <typename Check>
  void run(const std::vector<Graph>& universe, std::size_t workers, Check&& check) {
    auto outcomes = parallel_map(universe.size(), workers, [&](std::size_t i) {
      MemberOutcome m;
      m.key = write_graph6(universe[i]);
      check(universe[i], m);
      return m;
    });
    for (auto& m : outcomes) absorb(std::move(m));
  }

  VerifyReport finish() {
    for (auto& [label, keys] : marks_) {
      std::sort(keys.begin(), keys.end());
      if (label.starts_with("list:")) {
        std::string line = label.substr(5) + ": " + str(keys.size()) + " [";
        for (std::size_t i = 0; i < keys.size(); ++i) line += (i ? " " : "") + keys[i];
        report_.notes.push_back(line + "]");
      } else {
        report_.notes.push_back(label + ": " + str(keys.size()));
      }
    }
    std::sort(report_.failures.begin(), report_.failures.end());
    report_.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  VerifyReport report_;
  std::map<std::string, std::vector<std::string>> marks_;
  std::chrono::steady_clock::time_point start_;
};

inline void fail(MemberOutcome& m, std::string claim, std::string expected, std::string observed) {
  m.failures.push_back({m.key, std::move(claim), std::move(expected), std::move(observed)});
}

inline std::size_t resolve_max(const UniverseParams& p, std::string_view id, std::size_t fallback, std::size_t cap) {
  const std::size_t n = p.max_n.value_or(fallback);
  if (n > cap) {
    throw CapError(std::string(id) + ": requested bound " + str(n) + " exceeds the cap of " + str(cap));
  }
  return n;
}

/// Built-in connected graphs with lo <= n <= hi, then any extra graphs.
inline std::vector<Graph> graph_universe(const UniverseParams& p, std::size_t lo, std::size_t hi, std::string& label) {
  std::vector<Graph> out;
  label.clear();
  if (p.builtin && lo <= hi) {
    for (std::size_t n = std::max<std::size_t>(lo, 1); n <= hi; ++n) {
      const auto& gs = connected_graphs(n);
      out.insert(out.end(), gs.begin(), gs.end());
    }
    label = "connected graphs " + str(lo) + "<=n<=" + str(hi) + " (built-in)";
  }
  if (!p.extra_graphs.empty()) {
    out.insert(out.end(), p.extra_graphs.begin(), p.extra_graphs.end());
    label += (label.empty() ? "" : " + ") + str(p.extra_graphs.size()) + " supplied graphs";
  }
  return out;
}

inline std::size_t gamma_p(const Graph& g) { return power_domination_number(g).value; }

/// True iff some set of at most k vertices power dominates g.
inline bool gamma_p_at_most(const Graph& g, std::size_t k) { return power_dominating_set_within(g, k).has_value(); }

/// Cached parameters of a factor graph.
struct FactorInfo {
  Graph graph;
  std::string g6;
  std::size_t gamma_p = 0;
  std::size_t gamma = 0;
  std::size_t zf = 0;
  std::size_t gamma_t = 0;
  bool tree = false;
  bool path = false;
};

inline FactorInfo factor_info(const Graph& g) {
  FactorInfo f;
  f.graph = g;
  f.g6 = write_graph6(g);
  f.gamma_p = gamma_p(g);
  f.gamma = domination_number(g).value;
  f.zf = zero_forcing_number(g).value;
  f.gamma_t = g.order() >= 2 ? total_domination_number(g).value : 0;
  f.tree = is_tree(g);
  f.path = is_path_graph(g);
  return f;
}

/// Connected factors of order lo..hi with cached parameters.
inline std::vector<FactorInfo> factors(std::size_t lo, std::size_t hi, std::size_t workers) {
  std::vector<Graph> gs;
  for (std::size_t n = lo; n <= hi; ++n) {
    const auto& c = connected_graphs(n);
    gs.insert(gs.end(), c.begin(), c.end());
  }
  return parallel_map(gs.size(), workers, [&](std::size_t i) { return factor_info(gs[i]); });
}

// ---------------------------------------------------------------------------

inline VerifyReport verify_t1(const UniverseParams& p) {
  ReportBuilder b("T1", "Z(G) = 1 iff G is the path P_n");
  const auto hi = resolve_max(p, "T1", 7, kMaxEnumeratedOrder);
  auto universe = graph_universe(p, 1, hi, b.report().universe);
  b.run(universe, p.workers, [](const Graph& g, MemberOutcome& m) {
    if (!connected_nonempty(g)) {
      m.skipped = true;
      return;
    }
    const auto z = zero_forcing_number(g).value;
    const bool path = is_path_graph(g);
    if ((z == 1) != path) fail(m, "Z(G)=1 iff G is a path", path ? "Z=1 (path)" : "Z>=2 (not a path)", "Z=" + str(z));
  });
  return b.finish();
}

inline VerifyReport verify_t2(const UniverseParams& p) {
  ReportBuilder b("T2", "for n >= 5: Z(G) = 2 iff G is outerplanar and P(G) = 2");
  const auto hi = resolve_max(p, "T2", 7, kMaxEnumeratedOrder);
  auto universe = graph_universe(p, 5, hi, b.report().universe);
  b.run(universe, p.workers, [](const Graph& g, MemberOutcome& m) {
    if (g.order() < 5 || !connected_nonempty(g)) {
      m.skipped = true;
      return;
    }
    m.marks.push_back("graphs of order " + str(g.order()));
    const auto z = zero_forcing_number(g).value;
    const bool outer = is_outerplanar(g);
    const auto pc = path_cover_number(g).value;
    if (z == 2) m.marks.push_back("graphs with Z=2");
    if ((z == 2) != (outer && pc == 2)) {
      fail(m, "Z(G)=2 iff outerplanar and P(G)=2", z == 2 ? "outerplanar and P=2" : "Z=2",
           "Z=" + str(z) + " outerplanar=" + (outer ? "yes" : "no") + " P=" + str(pc));
    }
  });
  return b.finish();
}

inline VerifyReport verify_t3(const UniverseParams& p) {
  ReportBuilder b("T3", "Delta(G) = n-1 iff gamma_P(G) = gamma(G) = 1");
  const auto hi = resolve_max(p, "T3", 7, kMaxEnumeratedOrder);
  auto universe = graph_universe(p, 1, hi, b.report().universe);
  b.run(universe, p.workers, [](const Graph& g, MemberOutcome& m) {
    if (!connected_nonempty(g)) {
      m.skipped = true;
      return;
    }
    const bool universal = degree_stats(g).max_degree + 1 == g.order();
    const auto gp = gamma_p(g);
    const auto gd = domination_number(g).value;
    if (universal != (gp == 1 && gd == 1)) {
      fail(m, "Delta=n-1 iff gamma_P=gamma=1", universal ? "gamma_P=gamma=1" : "not both equal to 1",
           "gamma_P=" + str(gp) + " gamma=" + str(gd));
    }
    // Weaker reading: Delta = n-1 iff gamma_P = gamma (reported, not asserted).
    if (universal != (gp == gd)) m.marks.push_back("list:weaker reading (gamma_P = gamma) violated");
  });
  return b.finish();
}

inline VerifyReport verify_t4(const UniverseParams& p) {
  ReportBuilder b("T4",
                  "gamma_P = 1 for connected n <= 5; the H-graph is the smallest graph with gamma_P = 2; the "
                  "Wagner graph is the smallest twin-free graph with gamma_P = 2");
  const auto twin_hi = resolve_max(p, "T4", 7, kMaxEnumeratedOrder);
  b.report().universe = "connected graphs n<=5; connected order-6 graphs; twin-free connected graphs n<=" +
                        str(twin_hi) + "; H-graph; Wagner graph";

  std::vector<Graph> small;
  for (std::size_t n = 1; n <= 5; ++n) small.insert(small.end(), connected_graphs(n).begin(), connected_graphs(n).end());
  b.run(small, p.workers, [](const Graph& g, MemberOutcome& m) {
    const auto gp = gamma_p(g);
    if (gp != 1) fail(m, "connected graphs of order <= 5 have gamma_P=1", "1", str(gp));
  });

  const Graph h = h_graph();
  const auto h_gp = gamma_p(h);
  ++b.report().graphs_checked;
  if (h_gp != 2) b.fail(write_graph6(h), "H-graph has gamma_P=2", "2", str(h_gp));

  // Order-6 graphs attaining gamma_P = 2; the H-graph must be the only one of
  // minimum size (it is the only non-spider tree of order 6).
  const auto& six = connected_graphs(6);
  auto six_gp = parallel_map(six.size(), p.workers, [&](std::size_t i) { return gamma_p(six[i]); });
  b.report().graphs_checked += six.size();
  std::vector<std::pair<std::size_t, std::string>> attaining;
  for (std::size_t i = 0; i < six.size(); ++i) {
    if (six_gp[i] == 2) attaining.emplace_back(six[i].edge_count(), write_graph6(six[i]));
  }
  std::sort(attaining.begin(), attaining.end());
  std::string listing = "order-6 connected graphs with gamma_P=2: " + str(attaining.size()) + " [";
  for (std::size_t i = 0; i < attaining.size(); ++i) {
    listing += (i ? " " : "") + attaining[i].second + "(m=" + str(attaining[i].first) + ")";
  }
  b.report().notes.push_back(listing + "]");
  const std::string h_canon = write_graph6(canonical_graph(h));
  std::vector<std::string> minimal;
  for (auto& [m_edges, code] : attaining) {
    if (m_edges == attaining.front().first) minimal.push_back(code);
  }
  if (attaining.empty() || minimal.size() != 1 || write_graph6(canonical_graph(parse_graph6(minimal[0]))) != h_canon) {
    std::string seen;
    for (auto& c : minimal) seen += (seen.empty() ? "" : " ") + c;
    b.fail(write_graph6(h), "H-graph is the unique smallest (order, then size) graph with gamma_P=2", h_canon,
           seen.empty() ? "none" : seen);
  }

  const Graph w = wagner_graph();
  ++b.report().graphs_checked;
  if (!is_twin_free(w)) b.fail(write_graph6(w), "Wagner graph is twin-free", "twin-free", "has twins");
  const auto w_gp = gamma_p(w);
  if (w_gp != 2) b.fail(write_graph6(w), "Wagner graph has gamma_P=2", "2", str(w_gp));

  std::vector<Graph> twin_free;
  for (std::size_t n = 1; n <= twin_hi; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      if (is_twin_free(g)) twin_free.push_back(g);
    }
  }
  b.report().notes.push_back("twin-free connected graphs n<=" + str(twin_hi) + ": " + str(twin_free.size()));
  b.run(twin_free, p.workers, [](const Graph& g, MemberOutcome& m) {
    if (gamma_p_at_most(g, 1)) return;
    fail(m, "twin-free connected graphs smaller than the Wagner graph have gamma_P=1", "1", str(gamma_p(g)));
  });
  return b.finish();
}

inline VerifyReport verify_t5(const UniverseParams& p) {
  ReportBuilder b("T5", "power domination, domination and zero forcing numbers of basic families");
  const auto hi = resolve_max(p, "T5", 10, 12);
  b.report().universe = "P_n, C_n, K_n, K_{1,n-1}, K_{2,n-2}, K_{h,n-h} (3<=h<=n-h), W_n for 3<=n<=" + str(hi) +
                        " (all columns read as order-n families; gamma(K_{2,n-2}) checked from n=4)";
  struct Row {
    std::string name;
    Graph g;
    std::optional<std::size_t> gp, gd, zf;
  };
  std::vector<Row> rows;
  for (std::size_t n = 3; n <= hi; ++n) {
    const std::size_t dom_path = (n + 2) / 3;
    rows.push_back({"P_" + str(n), path_graph(n), 1, dom_path, 1});
    rows.push_back({"C_" + str(n), cycle_graph(n), 1, dom_path, 2});
    rows.push_back({"K_" + str(n), complete_graph(n), 1, 1, n - 1});
    rows.push_back({"K_{1," + str(n - 1) + "}", star_graph(n), 1, 1, n - 2});
    // K_{2,1} is the star K_{1,2}: its domination number is 1, not 2.
    rows.push_back({"K_{2," + str(n - 2) + "}", complete_multipartite(PartiteSpec({std::min<std::size_t>(2, n - 2), std::max<std::size_t>(2, n - 2)})), 1,
                    n >= 4 ? std::optional<std::size_t>(2) : std::nullopt, n - 2});
    for (std::size_t h = 3; h <= n - h; ++h) {
      rows.push_back({"K_{" + str(h) + "," + str(n - h) + "}", complete_multipartite(PartiteSpec({h, n - h})), 2, 2, n - 2});
    }
    if (n >= 4) rows.push_back({"W_" + str(n), wheel_graph(n), 1, 1, 3});
  }
  auto outcomes = parallel_map(rows.size(), p.workers, [&](std::size_t i) {
    const Row& r = rows[i];
    MemberOutcome m;
    m.key = write_graph6(r.g);
    auto check = [&](const char* param, std::optional<std::size_t> want, std::size_t got) {
      if (want && *want != got) fail(m, std::string(param) + "(" + r.name + ")", str(*want), str(got));
    };
    check("gamma_P", r.gp, gamma_p(r.g));
    check("gamma", r.gd, domination_number(r.g).value);
    check("Z", r.zf, zero_forcing_number(r.g).value);
    return m;
  });
  for (auto& m : outcomes) b.absorb(std::move(m));
  return b.finish();
}

inline VerifyReport verify_t6(const UniverseParams& p) {
  ReportBuilder b("T6", "complete multipartite graphs G and single-edge deletions G_e, items (1)-(5)");
  const auto hi = resolve_max(p, "T6", 10, 12);
  const auto specs = PartiteSpec::all_up_to(hi);
  b.report().universe = str(specs.size()) + " complete multipartite graphs of order <= " + str(hi) +
                        " and one deleted edge per pair of parts";
  struct Item {
    PartiteSpec spec;
    std::optional<std::pair<std::size_t, std::size_t>> parts;  // deleted edge joins these parts
  };
  std::vector<Item> items;
  for (const auto& s : specs) {
    items.push_back({s, std::nullopt});
    for (std::size_t i = 0; i < s.parts().size(); ++i)
      for (std::size_t j = i + 1; j < s.parts().size(); ++j) items.push_back({s, std::make_pair(i, j)});
  }
  auto outcomes = parallel_map(items.size(), p.workers, [&](std::size_t idx) {
    const Item& it = items[idx];
    MemberOutcome m;
    const Graph g = complete_multipartite(it.spec);
    const std::size_t r1 = it.spec.smallest();
    const std::string name = it.spec.to_string();
    if (!it.parts) {
      m.key = write_graph6(g);
      const auto gp = gamma_p(g);
      const std::size_t want = r1 <= 2 ? 1 : 2;
      if (gp != want) fail(m, std::string(r1 <= 2 ? "(1)" : "(2)") + " gamma_P(" + name + ")", str(want), str(gp));
      return m;
    }
    const auto [i, j] = *it.parts;
    const Graph ge = delete_edge(g, it.spec.part(i).lowest(), it.spec.part(j).lowest());
    m.key = write_graph6(ge);
    if (!is_connected(ge)) {
      m.skipped = true;
      return m;
    }
    const auto gp = gamma_p(ge);
    const std::string label = "gamma_P(" + name + " - e), e between parts " + str(i + 1) + "," + str(j + 1);
    if (r1 <= 2) {
      if (gp != 1) fail(m, "(3) " + label, "1", str(gp));
    } else if (r1 == 3) {
      // V_1 is read as any part of minimum size; tied parts are interchangeable.
      const bool touches_min = it.spec.parts()[i] == r1 || it.spec.parts()[j] == r1;
      const std::size_t want = touches_min ? 1 : 2;
      if (gp != want) fail(m, "(4) " + label, str(want), str(gp));
      const std::size_t literal = i == 0 ? 1 : 2;
      if (gp != literal) m.marks.push_back("list:item (4) with V_1 read as the first part only: disagreements");
    } else {
      if (gp != 2) fail(m, "(5) " + label, "2", str(gp));
    }
    return m;
  });
  for (auto& m : outcomes) b.absorb(std::move(m));
  auto report = b.finish();
  if (report.skipped > 0) {
    report.notes.push_back("disconnected G_e skipped (stars K_{1,r} minus an edge): " + str(report.skipped));
  }
  return report;
}

inline VerifyReport verify_t7(const UniverseParams& p) {
  ReportBuilder b("T7", "gamma_P(T) = sp(T) for every tree T; gamma_P(T) = 1 iff T is a spider");
  const auto hi = resolve_max(p, "T7", 9, kMaxTreeOrder);
  std::vector<Graph> universe;
  if (p.builtin) {
    for (std::size_t n = 1; n <= hi; ++n) universe.insert(universe.end(), trees(n).begin(), trees(n).end());
    b.report().universe = "trees 1<=n<=" + str(hi) + " (built-in)";
  }
  if (!p.extra_graphs.empty()) {
    universe.insert(universe.end(), p.extra_graphs.begin(), p.extra_graphs.end());
    b.report().universe += (b.report().universe.empty() ? "" : " + ") + str(p.extra_graphs.size()) + " supplied graphs";
  }
  b.run(universe, p.workers, [](const Graph& t, MemberOutcome& m) {
    if (!is_tree(t) || t.order() > kMaxSpiderOrder) {
      m.skipped = true;
      return;
    }
    const auto gp = gamma_p(t);
    const auto sp = spider_number(t).value;
    if (gp != sp) fail(m, "gamma_P(T)=sp(T)", "sp=" + str(sp), "gamma_P=" + str(gp));
    const bool spider = is_spider(t);
    if (spider != (gp == 1)) fail(m, "gamma_P(T)=1 iff T is a spider", spider ? "gamma_P=1" : "gamma_P>=2", "gamma_P=" + str(gp));
  });
  return b.finish();
}

inline VerifyReport verify_t8(const UniverseParams& p) {
  ReportBuilder b("T8", "planar with diam <= 2 implies gamma_P <= 2; outerplanar with diam <= 3 implies gamma_P = 1");
  const auto hi = resolve_max(p, "T8", 8, kMaxEnumeratedOrder);
  auto universe = graph_universe(p, 1, hi, b.report().universe);
  b.run(universe, p.workers, [](const Graph& g, MemberOutcome& m) {
    if (!connected_nonempty(g) || g.order() > kMaxPlanarityOrder) {
      m.skipped = true;
      return;
    }
    const auto diam = diameter(g);
    if (diam <= 2 && is_planar(g)) {
      m.marks.push_back("planar graphs with diam<=2");
      if (!gamma_p_at_most(g, 2)) fail(m, "planar and diam<=2 implies gamma_P<=2", "<=2", str(gamma_p(g)));
    }
    if (diam <= 3 && is_outerplanar(g)) {
      m.marks.push_back("outerplanar graphs with diam<=3");
      if (!gamma_p_at_most(g, 1)) {
        fail(m, "outerplanar and diam<=3 implies gamma_P=1", "1", str(gamma_p(g)) + " (diam=" + str(diam) + ")");
        if (diam <= 2) m.marks.push_back("list:outerplanar graphs with diam<=2 and gamma_P>=2");
      }
    }
  });
  return b.finish();
}

/// Runs `pred` over connected graphs of order lo..hi (built-in classes up to
/// order 8, extension stream at order 9) and returns the first hit.
template <typename Pred>
std::optional<Graph> first_connected_witness(std::size_t lo, std::size_t hi, Pred&& pred) {
  for (std::size_t n = lo; n <= hi; ++n) {
    if (n <= kMaxEnumeratedOrder) {
      for (const Graph& g : connected_graphs(n)) {
        if (pred(g)) return g;
      }
    } else {
      std::optional<Graph> hit;
      for_each_connected_extension(n, [&](const Graph& g) {
        if (pred(g)) hit = g;
        return hit.has_value();
      });
      if (hit) return canonical_graph(*hit);
    }
  }
  return std::nullopt;
}

inline VerifyReport verify_t9(const UniverseParams& p) {
  ReportBuilder b("T9", "Delta >= n-2 implies gamma_P = 1; Delta >= n-4 implies gamma_P <= 2");
  const auto hi = resolve_max(p, "T9", 8, kMaxEnumeratedOrder);
  auto universe = graph_universe(p, 1, hi, b.report().universe);
  b.run(universe, p.workers, [](const Graph& g, MemberOutcome& m) {
    if (!connected_nonempty(g)) {
      m.skipped = true;
      return;
    }
    const std::size_t n = g.order();
    const std::size_t delta = degree_stats(g).max_degree;
    if (delta + 2 >= n && !gamma_p_at_most(g, 1)) {
      fail(m, "Delta>=n-2 implies gamma_P=1", "1", str(gamma_p(g)) + " (Delta=" + str(delta) + ")");
    }
    if (delta + 4 >= n && !gamma_p_at_most(g, 2)) {
      fail(m, "Delta>=n-4 implies gamma_P<=2", "<=2", str(gamma_p(g)) + " (Delta=" + str(delta) + ")");
    }
  });
  if (p.builtin) {
    constexpr std::size_t kSearchCap = kMaxEnumeratedOrder + 1;
    auto pred = [](const Graph& g) {
      return degree_stats(g).max_degree + 5 == g.order() && !gamma_p_at_most(g, 2);
    };
    SearchOutcome s{"graph with Delta = n-5 and gamma_P >= 3", "n<=" + str(kSearchCap), false, {}, false, {}};
    if (auto w = first_connected_witness(6, kSearchCap, pred)) {
      s.found = true;
      s.graph6 = write_graph6(*w);
      const Graph replay = parse_graph6(s.graph6);
      const auto gp = gamma_p(replay);
      s.rechecked = degree_stats(replay).max_degree + 5 == replay.order() && gp >= 3;
      s.detail = "n=" + str(replay.order()) + " Delta=" + str(degree_stats(replay).max_degree) + " gamma_P=" + str(gp);
    } else {
      s.detail = "no witness up to cap";
    }
    b.report().searches.push_back(std::move(s));
  }
  return b.finish();
}

/// For each vertex u of degree n-3: the two vertices outside N[u].
inline std::vector<std::pair<Vertex, VertexSet>> degree_n_minus_3_vertices(const Graph& g) {
  std::vector<std::pair<Vertex, VertexSet>> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.degree(u) + 3 == g.order()) out.emplace_back(u, g.vertices() - g.closed_neighbors(u));
  }
  return out;
}

inline VerifyReport verify_t10(const UniverseParams& p) {
  ReportBuilder b("T10", "if deg(u) = n-3 and V = N[u] + {w1, w2}: {u} is power dominating iff w1, w2 are not twins");
  const auto hi = resolve_max(p, "T10", 8, kMaxEnumeratedOrder);
  auto universe = graph_universe(p, 4, hi, b.report().universe);
  b.run(universe, p.workers, [](const Graph& g, MemberOutcome& m) {
    if (g.order() < 4 || !connected_nonempty(g)) {
      m.skipped = true;
      return;
    }
    for (auto [u, outside] : degree_n_minus_3_vertices(g)) {
      m.marks.push_back("(graph, u) pairs checked");
      const auto ws = outside.to_vector();
      const bool twins = are_twins(g, ws[0], ws[1]);
      const bool pd = is_power_dominating_set(g, VertexSet::singleton(u));
      if (pd == twins) {
        fail(m, "{u} is a PD-set iff outsiders are not twins (u=" + str(u) + ")",
             twins ? "not a PD-set" : "PD-set", pd ? "PD-set" : "not a PD-set");
      }
    }
  });
  if (p.builtin) {
    constexpr std::size_t kSearchCap = kMaxEnumeratedOrder + 1;
    auto pred = [](const Graph& g) {
      auto us = degree_n_minus_3_vertices(g);
      if (us.empty()) return false;
      for (auto [u, outside] : us) {
        const auto ws = outside.to_vector();
        if (!are_twins(g, ws[0], ws[1])) return false;
      }
      return gamma_p_at_most(g, 1);
    };
    SearchOutcome s{"gamma_P = 1 although every degree-(n-3) vertex has twin outsiders", "4<=n<=" + str(kSearchCap),
                    false, {}, false, {}};
    if (auto w = first_connected_witness(4, kSearchCap, pred)) {
      s.found = true;
      s.graph6 = write_graph6(*w);
      const Graph replay = parse_graph6(s.graph6);
      s.rechecked = pred(replay) && gamma_p(replay) == 1;
      const auto pd = power_domination_number(replay);
      s.detail = "n=" + str(replay.order()) + " PD-set " + to_string(pd.witness);
    } else {
      s.detail = "no witness up to cap";
    }
    b.report().searches.push_back(std::move(s));
  }
  return b.finish();
}

/// Connected (n-3)-regular graphs of order n: complements of 2-regular graphs,
/// i.e. of disjoint unions of cycles, one per partition of n into parts >= 3.
inline std::vector<Graph> co_two_regular_graphs(std::size_t n) {
  std::vector<Graph> out;
  std::vector<std::size_t> parts;
  auto rec = [&](auto&& self, std::size_t min_part, std::size_t remaining) -> void {
    if (remaining == 0) {
      std::vector<Edge> edges;
      Vertex base = 0;
      for (std::size_t len : parts) {
        for (Vertex i = 0; i < len; ++i) edges.emplace_back(base + i, base + static_cast<Vertex>((i + 1) % len));
        base += static_cast<Vertex>(len);
      }
      Graph g = complement(Graph::from_edges(n, edges));
      if (is_connected(g)) out.push_back(std::move(g));
      return;
    }
    for (std::size_t len = min_part; len <= remaining; ++len) {
      if (remaining - len != 0 && remaining - len < 3) continue;
      parts.push_back(len);
      self(self, len, remaining - len);
      parts.pop_back();
    }
  };
  rec(rec, 3, n);
  return out;
}

inline bool has_edge_with_single_private_neighbor(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    if ((g.closed_neighbors(v) - g.closed_neighbors(u)).size() == 1) return true;
    if ((g.closed_neighbors(u) - g.closed_neighbors(v)).size() == 1) return true;
  }
  return false;
}

inline VerifyReport verify_t11(const UniverseParams& p) {
  ReportBuilder b("T11", "(n-3)-regular G, n >= 5: gamma_P = 1 iff some edge uv has |N[v] - N[u]| = 1");
  const auto hi = resolve_max(p, "T11", 10, 16);
  std::vector<Graph> universe;
  if (p.builtin) {
    for (std::size_t n = 5; n <= hi; ++n) {
      auto gs = co_two_regular_graphs(n);
      universe.insert(universe.end(), gs.begin(), gs.end());
    }
    b.report().universe = "connected (n-3)-regular graphs 5<=n<=" + str(hi) + " (complements of 2-regular graphs)";
  }
  if (!p.extra_graphs.empty()) {
    universe.insert(universe.end(), p.extra_graphs.begin(), p.extra_graphs.end());
    b.report().universe += (b.report().universe.empty() ? "" : " + ") + str(p.extra_graphs.size()) + " supplied graphs";
  }
  b.run(universe, p.workers, [](const Graph& g, MemberOutcome& m) {
    if (g.order() < 5 || !connected_nonempty(g) || !is_regular(g, g.order() - 3)) {
      m.skipped = true;
      return;
    }
    const bool one = gamma_p_at_most(g, 1);
    const bool edge = has_edge_with_single_private_neighbor(g);
    if (one != edge) {
      fail(m, "gamma_P=1 iff exists edge uv with |N[v]-N[u]|=1", edge ? "gamma_P=1" : "gamma_P>=2",
           one ? "gamma_P=1" : "gamma_P>=2");
    }
  });
  return b.finish();
}

inline VerifyReport verify_t12(const UniverseParams& p) {
  ReportBuilder b("T12", "gamma_t(G) = 2 iff diam(complement of G) > 2");
  const auto hi = resolve_max(p, "T12", 7, kMaxEnumeratedOrder);
  auto universe = graph_universe(p, 3, hi, b.report().universe);
  b.report().universe += "; a disconnected complement has infinite diameter";
  b.run(universe, p.workers, [](const Graph& g, MemberOutcome& m) {
    if (g.order() < 2 || !connected_nonempty(g)) {
      m.skipped = true;
      return;
    }
    const auto gt = total_domination_number(g).value;
    const auto d = diameter_or_infinite(complement(g));
    const bool far = !d || *d > 2;
    if (!d) m.marks.push_back("graphs with disconnected complement");
    if ((gt == 2) != far) {
      fail(m, "gamma_t=2 iff diam(complement)>2", far ? "gamma_t=2" : "gamma_t>2",
           "gamma_t=" + str(gt) + " diam(complement)=" + (d ? str(*d) : std::string("inf")));
    }
  });
  return b.finish();
}

inline VerifyReport verify_t13(const UniverseParams& p) {
  ReportBuilder b("T13", "gamma_P(G o H) = gamma(G) if gamma_P(H) = 1, else gamma_t(G)");
  const auto hi = resolve_max(p, "T13", 4, 6);
  b.report().universe = "ordered pairs of connected graphs with 2<=n_G,n_H<=" + str(hi);
  const auto fs = factors(2, hi, p.workers);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = 0; j < fs.size(); ++j) pairs.emplace_back(i, j);
  auto outcomes = parallel_map(pairs.size(), p.workers, [&](std::size_t k) {
    const auto& g = fs[pairs[k].first];
    const auto& h = fs[pairs[k].second];
    MemberOutcome m;
    m.key = g.g6 + " " + h.g6;
    const auto prod = lexicographic_product(g.graph, h.graph).graph;
    const std::size_t want = h.gamma_p == 1 ? g.gamma : g.gamma_t;
    const auto got = gamma_p(prod);
    if (h.gamma_p > 1) m.marks.push_back("pairs with gamma_P(H)>1");
    if (got != want) {
      fail(m, h.gamma_p == 1 ? "gamma_P(GoH)=gamma(G) when gamma_P(H)=1" : "gamma_P(GoH)=gamma_t(G) when gamma_P(H)>1",
           str(want), str(got));
    }
    return m;
  });
  for (auto& m : outcomes) b.absorb(std::move(m));
  return b.finish();
}

/// Closed form for gamma_P(P_m □ P_n), 1 <= m <= n.
inline std::size_t grid_power_domination_formula(std::size_t m) {
  return m % 8 == 4 ? (m + 1 + 3) / 4 : (m + 3) / 4;
}

inline VerifyReport verify_t14(const UniverseParams& p) {
  ReportBuilder b("T14", "gamma_P(P_m x P_n) = ceil((m+1)/4) if m = 4 (mod 8), else ceil(m/4), for 1 <= m <= n");
  const auto hi = resolve_max(p, "T14", 8, 10);
  constexpr std::size_t kMaxRows = 5;
  constexpr std::size_t kSearchCap = 3;
  b.report().universe = "grids P_m x P_n with 1<=m<=min(5,n), n<=" + str(hi) + "; search capped at 3 vertices";
  std::vector<std::pair<std::size_t, std::size_t>> dims;
  for (std::size_t n = 1; n <= hi; ++n)
    for (std::size_t m = 1; m <= std::min(kMaxRows, n); ++m) dims.emplace_back(m, n);
  auto values = parallel_map(dims.size(), p.workers, [&](std::size_t k) -> std::optional<std::size_t> {
    auto r = power_dominating_set_within(grid_graph(dims[k].first, dims[k].second), kSearchCap);
    if (!r) return std::nullopt;
    return r->value;
  });
  for (std::size_t k = 0; k < dims.size(); ++k) {
    auto [m, n] = dims[k];
    const auto want = grid_power_domination_formula(m);
    const std::string got = values[k] ? str(*values[k]) : ">" + str(kSearchCap);
    b.report().notes.push_back("P_" + str(m) + " x P_" + str(n) + ": gamma_P=" + got);
    MemberOutcome mo;
    mo.key = write_graph6(grid_graph(m, n));
    if (!values[k] || *values[k] != want) fail(mo, "gamma_P(P_" + str(m) + " x P_" + str(n) + ")", str(want), got);
    b.absorb(std::move(mo));
  }
  return b.finish();
}

/// Ordered factor pairs with both orders >= 2 and product order <= cap.
inline std::vector<std::pair<std::size_t, std::size_t>> product_pairs(const std::vector<FactorInfo>& fs, std::size_t cap,
                                                                      bool unordered) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = unordered ? i : 0; j < fs.size(); ++j) {
      if (fs[i].graph.order() * fs[j].graph.order() <= cap) out.emplace_back(i, j);
    }
  }
  return out;
}

inline VerifyReport verify_t15(const UniverseParams& p) {
  ReportBuilder b("T15", "Cartesian product bounds for power domination");
  const auto cap = resolve_max(p, "T15", 20, 24);
  b.report().universe = "ordered pairs of connected graphs, n_G,n_H>=2, n_G*n_H<=" + str(cap);
  const auto fs = factors(2, std::min(kMaxEnumeratedOrder, cap / 2), p.workers);
  const auto pairs = product_pairs(fs, cap, false);
  auto outcomes = parallel_map(pairs.size(), p.workers, [&](std::size_t k) {
    const auto& g = fs[pairs[k].first];
    const auto& h = fs[pairs[k].second];
    MemberOutcome m;
    m.key = g.g6 + " " + h.g6;
    const auto got = gamma_p(cartesian_product(g.graph, h.graph).graph);
    const std::string obs = "gamma_P(GxH)=" + str(got);
    if (std::max(g.gamma_p, h.gamma_p) > got) {
      fail(m, "max(gamma_P(G),gamma_P(H)) <= gamma_P(GxH)", ">=" + str(std::max(g.gamma_p, h.gamma_p)), obs);
    }
    if (h.tree && g.gamma_p * h.gamma_p > got) {
      fail(m, "gamma_P(G)*gamma_P(T) <= gamma_P(GxT) for a tree T", ">=" + str(g.gamma_p * h.gamma_p), obs);
    }
    if (h.path && got > g.gamma) fail(m, "gamma_P(GxP_n) <= gamma(G)", "<=" + str(g.gamma), obs);
    if (h.gamma == 1 && got > g.zf) fail(m, "gamma_P(GxH) <= Z(G) when gamma(H)=1", "<=" + str(g.zf), obs);
    return m;
  });
  for (auto& m : outcomes) b.absorb(std::move(m));
  return b.finish();
}

inline bool is_complete_graph(const Graph& g) { return g.edge_count() * 2 == g.order() * (g.order() - 1); }

/// H arises by gluing an end vertex of a path P_k (k >= 1) onto any vertex of
/// a graph D that has a dominating vertex.
inline bool is_dominated_graph_with_pendant_path(const Graph& h) {
  auto has_dominating_vertex = [&](VertexSet rest) {
    for (Vertex v : rest) {
      if (rest.is_subset_of(h.closed_neighbors(v))) return true;
    }
    return false;
  };
  if (has_dominating_vertex(h.vertices())) return true;
  for (Vertex leaf = 0; leaf < h.order(); ++leaf) {
    if (h.degree(leaf) != 1) continue;
    VertexSet tail = VertexSet::singleton(leaf);
    Vertex cur = leaf;
    while (true) {
      const VertexSet rest = h.vertices() - tail;
      if (rest.empty()) break;
      if (has_dominating_vertex(rest)) return true;
      const VertexSet next = h.neighbors(cur) - tail;
      if (next.size() != 1) break;
      const Vertex nxt = next.lowest();
      if (h.degree(nxt) != 2) break;
      tail.insert(nxt);
      cur = nxt;
    }
  }
  return false;
}

/// The known characterisation of gamma_P(G □ H) = 1 for nontrivial G, H,
/// applied to every orientation with gamma(first) <= gamma(second).
inline bool cartesian_gamma_p_one_characterised(const FactorInfo& a, const FactorInfo& b) {
  auto holds = [](const FactorInfo& g, const FactorInfo& h) {
    const std::size_t ng = g.graph.order();
    const std::size_t nh = h.graph.order();
    if (ng >= 4 && nh >= 4 && g.gamma == 1 && h.path) return true;
    if ((ng == 2 || (ng == 3 && g.path)) && is_dominated_graph_with_pendant_path(h.graph)) return true;
    if (ng == 3 && is_complete_graph(g.graph) && h.path) return true;
    return false;
  };
  return (a.gamma <= b.gamma && holds(a, b)) || (b.gamma <= a.gamma && holds(b, a));
}

inline VerifyReport verify_t16(const UniverseParams& p) {
  ReportBuilder b("T16", "gamma_P(G) = 1 implies gamma_P(G x P_2) <= 2; characterisation of gamma_P(G x H) = 1");
  const auto hi = resolve_max(p, "T16", 8, kMaxEnumeratedOrder);
  constexpr std::size_t kPairCap = 20;
  b.report().universe = "connected G with n<=" + str(hi) + " (with P_2); unordered pairs of connected graphs with " +
                        "n_G,n_H>=2 and n_G*n_H<=" + str(kPairCap);
  const Graph p2 = path_graph(2);
  std::vector<Graph> universe;
  for (std::size_t n = 1; n <= hi; ++n) universe.insert(universe.end(), connected_graphs(n).begin(), connected_graphs(n).end());
  b.run(universe, p.workers, [&](const Graph& g, MemberOutcome& m) {
    if (!gamma_p_at_most(g, 1)) return;
    m.marks.push_back("graphs with gamma_P=1");
    const Graph prod = cartesian_product(g, p2).graph;
    if (!gamma_p_at_most(prod, 2)) fail(m, "gamma_P(G)=1 implies gamma_P(GxP_2)<=2", "<=2", str(gamma_p(prod)));
  });

  const auto fs = factors(2, kPairCap / 2 < kMaxEnumeratedOrder ? kPairCap / 2 : kMaxEnumeratedOrder, p.workers);
  const auto pairs = product_pairs(fs, kPairCap, true);
  auto outcomes = parallel_map(pairs.size(), p.workers, [&](std::size_t k) {
    const auto& g = fs[pairs[k].first];
    const auto& h = fs[pairs[k].second];
    MemberOutcome m;
    m.key = g.g6 + " " + h.g6;
    const bool one = gamma_p_at_most(cartesian_product(g.graph, h.graph).graph, 1);
    const bool predicted = cartesian_gamma_p_one_characterised(g, h);
    if (one) m.marks.push_back("pairs with gamma_P(GxH)=1");
    if (one != predicted) {
      fail(m, "gamma_P(GxH)=1 iff one of the three product cases applies", predicted ? "gamma_P=1" : "gamma_P>=2",
           one ? "gamma_P=1" : "gamma_P>=2");
    }
    return m;
  });
  for (auto& m : outcomes) b.absorb(std::move(m));

  if (p.builtin) {
    auto pred = [&](const Graph& g) {
      if (gamma_p_at_most(g, 1) || !gamma_p_at_most(g, 2)) return false;
      const Graph prod = cartesian_product(g, p2).graph;
      return !gamma_p_at_most(prod, 2) && gamma_p_at_most(prod, 3);
    };
    SearchOutcome s{"gamma_P(G) = 2 and gamma_P(G x P_2) = 3", "n_G<=" + str(kMaxEnumeratedOrder), false, {}, false, {}};
    if (auto w = first_connected_witness(1, kMaxEnumeratedOrder, pred)) {
      s.found = true;
      s.graph6 = write_graph6(*w);
      const Graph replay = parse_graph6(s.graph6);
      const auto g_gp = gamma_p(replay);
      const auto prod_gp = gamma_p(cartesian_product(replay, p2).graph);
      s.rechecked = g_gp == 2 && prod_gp == 3;
      s.detail = "n=" + str(replay.order()) + " gamma_P(G)=" + str(g_gp) + " gamma_P(GxP_2)=" + str(prod_gp);
    } else {
      s.detail = "no witness up to cap";
    }
    b.report().searches.push_back(std::move(s));
  }
  return b.finish();
}

using Verifier = VerifyReport (*)(const UniverseParams&);

struct VerifierEntry {
  const char* id;
  Verifier run;
  bool accepts_graphs;
};

inline const std::vector<VerifierEntry>& registry() {
  static const std::vector<VerifierEntry> entries{
      {"T1", verify_t1, true},    {"T2", verify_t2, true},    {"T3", verify_t3, true},    {"T4", verify_t4, false},
      {"T5", verify_t5, false},   {"T6", verify_t6, false},   {"T7", verify_t7, true},    {"T8", verify_t8, true},
      {"T9", verify_t9, true},    {"T10", verify_t10, true},  {"T11", verify_t11, true},  {"T12", verify_t12, true},
      {"T13", verify_t13, false}, {"T14", verify_t14, false}, {"T15", verify_t15, false}, {"T16", verify_t16, false},
  };
  return entries;
}

inline const VerifierEntry& find_verifier(std::string_view id) {
  for (const auto& e : registry()) {
    if (id == e.id) return e;
  }
  throw UnknownTheoremError(std::string(id));
}

}  // namespace detail

inline std::vector<std::string> theorem_ids() {
  std::vector<std::string> out;
  for (const auto& e : detail::registry()) out.emplace_back(e.id);
  return out;
}

/// True when the verifier evaluates supplied graphs (graph6 universe files).
inline bool accepts_graph_universe(std::string_view id) { return detail::find_verifier(id).accepts_graphs; }

inline VerifyReport verify(std::string_view id, const UniverseParams& params = {}) {
  return detail::find_verifier(id).run(params);
}

/// Re-evaluates every failure of `report` standalone: on a universe holding
/// only the failing graph when the verifier accepts supplied graphs, otherwise
/// by re-running the verifier. Returns the failures that did not reproduce.
inline std::vector<Failure> replay_failures(const VerifyReport& report, const UniverseParams& original = {}) {
  std::vector<Failure> missing;
  std::optional<VerifyReport> rerun;
  for (const Failure& f : report.failures) {
    const VerifyReport* again = nullptr;
    VerifyReport single;
    if (accepts_graph_universe(report.theorem_id) && f.graph6.find(' ') == std::string::npos) {
      UniverseParams p;
      p.builtin = false;
      p.extra_graphs = {parse_graph6(f.graph6)};
      single = verify(report.theorem_id, p);
      again = &single;
    } else {
      if (!rerun) {
        UniverseParams p = original;
        p.extra_graphs.clear();
        rerun = verify(report.theorem_id, p);
      }
      again = &*rerun;
    }
    if (std::find(again->failures.begin(), again->failures.end(), f) == again->failures.end()) missing.push_back(f);
  }
  return missing;
}

}  // namespace zfpd

#endif  // ZFPD_THEOREMS_HPP
