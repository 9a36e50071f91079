#ifndef ZFPD_CLI_HPP
#define ZFPD_CLI_HPP

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zfpd/families.hpp"
#include "zfpd/graph6.hpp"
#include "zfpd/invariants.hpp"
#include "zfpd/products.hpp"
#include "zfpd/report.hpp"
#include "zfpd/theorems.hpp"

namespace zfpd::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

enum class Format { kAuto, kJson, kTable };

struct RunConfig {
  std::string subcommand;
  Format format = Format::kAuto;
  bool edge_list = false;
  std::size_t workers = default_workers();

  std::string input;
  std::vector<std::string> params{"zf", "pd", "dom"};

  std::string family;
  std::size_t n = 0;
  std::vector<std::size_t> parts;
  std::vector<std::size_t> legs;

  std::string kind;
  std::vector<std::string> operands;
  std::string at = "0,0";

  std::vector<std::string> ids;
  std::optional<std::size_t> max_n;
  std::vector<std::string> universe_files;
  bool no_builtin = false;

  std::string output;
};

/// Streams handed to a CLI run. `interactive` selects the table format when
/// no --format is given.
struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool interactive = false;
};

namespace detail {

inline std::vector<Graph> read_graphs(const std::string& path, bool edge_list, std::istream& stdin_stream) {
  auto parse = [&](std::istream& s) { return edge_list ? read_edge_list_stream(s) : read_graph6_stream(s); };
  if (path == "-") return parse(stdin_stream);
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  try {
    return parse(f);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline Graph read_single_graph(const std::string& path, bool edge_list, std::istream& in) {
  auto gs = read_graphs(path, edge_list, in);
  if (gs.size() != 1) throw std::invalid_argument(path + ": expected exactly one graph, found " + std::to_string(gs.size()));
  return gs.front();
}

inline nlohmann::ordered_json vertex_list(VertexSet s) { return s.to_vector(); }

struct ParamSpec {
  const char* name;
  bool needs_tree;
};

inline const std::vector<ParamSpec>& known_params() {
  static const std::vector<ParamSpec> specs{{"zf", false},  {"pd", false},        {"dom", false},
                                            {"tdom", false}, {"pathcover", false}, {"spider", true}};
  return specs;
}

/// Value, witness and an independent validity check of the witness.
inline nlohmann::ordered_json compute_param(const Graph& g, const std::string& name) {
  nlohmann::ordered_json j;
  if (name == "zf") {
    auto r = zero_forcing_number(g);
    j = {{"value", r.value}, {"witness", vertex_list(r.witness)}, {"valid", is_zero_forcing_set(g, r.witness)}};
  } else if (name == "pd") {
    auto r = power_domination_number(g);
    j = {{"value", r.value}, {"witness", vertex_list(r.witness)}, {"valid", is_power_dominating_set(g, r.witness)}};
  } else if (name == "dom") {
    auto r = domination_number(g);
    j = {{"value", r.value}, {"witness", vertex_list(r.witness)}, {"valid", is_dominating_set(g, r.witness)}};
  } else if (name == "tdom") {
    auto r = total_domination_number(g);
    j = {{"value", r.value}, {"witness", vertex_list(r.witness)}, {"valid", is_total_dominating_set(g, r.witness)}};
  } else {
    const bool spider = name == "spider";
    auto r = spider ? spider_number(g) : path_cover_number(g);
    bool valid = true;
    VertexSet covered;
    nlohmann::ordered_json parts = nlohmann::ordered_json::array();
    for (VertexSet p : r.parts) {
      valid = valid && !p.intersects(covered);
      covered |= p;
      if (spider) {
        valid = valid && induces_spider(g, p);
      } else {
        auto sub = induced_subgraph(g, p).graph;
        valid = valid && is_path_graph(sub);
      }
      parts.push_back(vertex_list(p));
    }
    valid = valid && covered == g.vertices();
    j = {{"value", r.value}, {"parts", parts}, {"valid", valid}};
  }
  return j;
}

inline std::string witness_text(const nlohmann::ordered_json& p) {
  std::ostringstream s;
  auto set_text = [](const nlohmann::ordered_json& xs) {
    std::string t = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) t += (i ? "," : "") + std::to_string(xs[i].get<unsigned>());
    return t + "}";
  };
  if (p.contains("witness")) {
    s << set_text(p["witness"]);
  } else {
    for (std::size_t i = 0; i < p["parts"].size(); ++i) s << (i ? " " : "") << set_text(p["parts"][i]);
  }
  return s.str();
}

inline bool use_json(const RunConfig& c, const Io& io) {
  return c.format == Format::kJson || (c.format == Format::kAuto && !io.interactive);
}

inline std::ostream& sink(const RunConfig& c, Io& io, std::ofstream& file) {
  if (c.output.empty() || c.output == "-") return io.out;
  file.open(c.output);
  if (!file) throw std::runtime_error("cannot write " + c.output);
  return file;
}

}  // namespace detail

inline int cmd_compute(const RunConfig& c, Io& io) {
  for (const auto& p : c.params) {
    bool known = false;
    for (const auto& spec : detail::known_params()) known = known || p == spec.name;
    if (!known) {
      io.err << "error: unknown parameter '" << p << "' (known: zf, pd, dom, tdom, pathcover, spider)\n";
      return kUsage;
    }
  }
  const auto graphs = detail::read_graphs(c.input, c.edge_list, io.in);
  nlohmann::ordered_json report;
  report["graphs"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    nlohmann::ordered_json entry{{"index", i}, {"graph6", write_graph6(g)}, {"order", g.order()}, {"size", g.edge_count()}};
    if (g.order() == 0 || !is_connected(g)) {
      entry["skipped"] = "disconnected graph";
      io.err << "notice: graph " << i << " (" << write_graph6(g) << ") is disconnected; skipped\n";
      report["graphs"].push_back(entry);
      continue;
    }
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& name : c.params) {
      if (name == "spider" && !is_tree(g)) {
        params[name] = {{"skipped", "not a tree"}};
        io.err << "notice: graph " << i << " is not a tree; spider number skipped\n";
      } else if (name == "tdom" && g.order() < 2) {
        params[name] = {{"skipped", "undefined for K1"}};
      } else if ((name == "pathcover" && g.order() > kMaxPathCoverOrder) ||
                 (name == "spider" && g.order() > kMaxSpiderOrder)) {
        params[name] = {{"skipped", "order above solver limit"}};
        io.err << "notice: graph " << i << " exceeds the " << name << " solver limit; skipped\n";
      } else {
        params[name] = detail::compute_param(g, name);
      }
    }
    entry["params"] = params;
    report["graphs"].push_back(entry);
  }

  std::ofstream file;
  std::ostream& out = detail::sink(c, io, file);
  if (detail::use_json(c, io)) {
    out << report.dump(2) << "\n";
    return kOk;
  }
  for (const auto& e : report["graphs"]) {
    out << "#" << e["index"].get<std::size_t>() << "  " << e["graph6"].get<std::string>() << "  n=" << e["order"].get<std::size_t>()
        << " m=" << e["size"].get<std::size_t>() << "\n";
    if (e.contains("skipped")) {
      out << "  skipped: " << e["skipped"].get<std::string>() << "\n";
      continue;
    }
    for (const auto& [name, p] : e["params"].items()) {
      out << "  " << name << " = ";
      if (p.contains("skipped")) {
        out << "skipped (" << p["skipped"].get<std::string>() << ")\n";
      } else {
        out << p["value"].get<std::size_t>() << "  " << detail::witness_text(p) << (p["valid"].get<bool>() ? "" : "  INVALID")
            << "\n";
      }
    }
  }
  return kOk;
}

inline int cmd_gen(const RunConfig& c, Io& io) {
  auto family = family_from_name(c.family);
  if (!family) {
    io.err << "error: unknown family '" << c.family
           << "' (known: path, cycle, complete, multipartite, wheel, star, spider, hgraph, wagner)\n";
    return kUsage;
  }
  const Graph g = generate(*family, {c.n, c.parts, c.legs});
  std::ofstream file;
  detail::sink(c, io, file) << (c.edge_list ? write_edge_list(g) : write_graph6(g) + "\n");
  return kOk;
}

inline int cmd_product(const RunConfig& c, Io& io) {
  if (c.operands.size() != 2) {
    io.err << "error: product needs exactly two operand files\n";
    return kUsage;
  }
  const Graph a = detail::read_single_graph(c.operands[0], c.edge_list, io.in);
  const Graph b = detail::read_single_graph(c.operands[1], c.edge_list, io.in);
  Graph result;
  if (c.kind == "cartesian") {
    result = cartesian_product(a, b).graph;
  } else if (c.kind == "lex" || c.kind == "lexicographic") {
    result = lexicographic_product(a, b).graph;
  } else if (c.kind == "amalgam") {
    Vertex gv = 0;
    Vertex hv = 0;
    char comma = 0;
    std::istringstream at(c.at);
    if (!(at >> gv >> comma >> hv) || comma != ',' || !(at >> std::ws).eof()) {
      io.err << "error: --at expects gv,hv (got '" << c.at << "')\n";
      return kUsage;
    }
    result = amalgamate(a, gv, b, hv);
  } else {
    io.err << "error: unknown product kind '" << c.kind << "' (known: cartesian, lex, amalgam)\n";
    return kUsage;
  }
  std::ofstream file;
  detail::sink(c, io, file) << (c.edge_list ? write_edge_list(result) : write_graph6(result) + "\n");
  return kOk;
}

inline int cmd_verify(const RunConfig& c, Io& io) {
  const auto known = theorem_ids();
  std::vector<std::string> unknown;
  for (const auto& id : c.ids) {
    if (std::find(known.begin(), known.end(), id) == known.end()) unknown.push_back(id);
  }
  if (!unknown.empty()) {
    for (const auto& id : unknown) io.err << "error: unknown theorem id: " << id << "\n";
    return kUsage;
  }

  UniverseParams base;
  base.max_n = c.max_n;
  base.builtin = !c.no_builtin;
  base.workers = std::max<std::size_t>(1, c.workers);
  for (const auto& path : c.universe_files) {
    auto gs = read_graph6_file(path);
    base.extra_graphs.insert(base.extra_graphs.end(), gs.begin(), gs.end());
  }

  const std::vector<std::string> ids = c.ids.empty() ? known : c.ids;
  nlohmann::ordered_json all;
  all["reports"] = nlohmann::ordered_json::array();
  all["errors"] = nlohmann::ordered_json::array();
  bool ok = true;
  bool usage_error = false;
  std::ofstream file;
  std::ostream& out = detail::sink(c, io, file);
  const bool json = detail::use_json(c, io);
  for (const auto& id : ids) {
    UniverseParams p = base;
    if (!accepts_graph_universe(id)) {
      if (!p.extra_graphs.empty()) io.err << "notice: " << id << " does not take a graph universe; --universe ignored\n";
      p.extra_graphs.clear();
    } else if (!p.builtin && p.extra_graphs.empty()) {
      io.err << "error: " << id << ": built-in enumeration is off and no --universe file was given\n";
      all["errors"].push_back({{"theorem_id", id}, {"error", "missing graph6 universe file"}});
      usage_error = true;
      continue;
    }
    try {
      const auto report = verify(id, p);
      ok = ok && report.passed();
      if (json) {
        all["reports"].push_back(to_json(report));
      } else {
        out << to_table(report) << std::flush;
      }
    } catch (const CapError& e) {
      io.err << "error: " << e.what() << "\n";
      all["errors"].push_back({{"theorem_id", id}, {"error", e.what()}});
      usage_error = true;
    }
  }
  all["all_passed"] = ok && !usage_error;
  if (json) out << all.dump(2) << "\n";
  if (usage_error) return kUsage;
  return ok ? kOk : kVerifyFailed;
}

/// Parses argv and dispatches. Never throws: errors are written to io.err
/// and mapped onto exit codes.
inline int run(int argc, const char* const* argv, Io io) {
  RunConfig c;
  CLI::App app{"Zero forcing and power domination toolkit"};
  app.require_subcommand(1, 1);
  std::string format = "auto";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"auto", "json", "table"}));
    sub->add_option("-o,--output", c.output, "Write output to a file instead of stdout");
    sub->add_flag("--edgelist", c.edge_list, "Read and write edge lists instead of graph6");
  };

  auto* compute = app.add_subcommand("compute", "Compute graph parameters with witnesses");
  compute->add_option("--input,-i", c.input, "Graph file (graph6 per line, or - for stdin)")->required();
  compute->add_option("--params,-p", c.params, "zf,pd,dom,tdom,pathcover,spider")->delimiter(',');
  add_common(compute);

  auto* gen = app.add_subcommand("gen", "Generate a graph family member");
  gen->add_option("--family,-f", c.family, "path|cycle|complete|multipartite|wheel|star|spider|hgraph|wagner")->required();
  gen->add_option("--n,-n", c.n, "Order");
  gen->add_option("--parts", c.parts, "Part sizes (multipartite)")->delimiter(',');
  gen->add_option("--legs", c.legs, "Leg lengths (spider)")->delimiter(',');
  add_common(gen);

  auto* product = app.add_subcommand("product", "Build a graph product or amalgamation");
  product->add_option("--kind,-k", c.kind, "cartesian|lex|amalgam")->required();
  product->add_option("operands", c.operands, "Two single-graph files")->expected(2);
  product->add_option("--at", c.at, "gv,hv: vertices glued by amalgam (default 0,0)");
  add_common(product);

  auto* verify_cmd = app.add_subcommand("verify", "Run theorem verifiers");
  verify_cmd->add_option("--ids", c.ids, "Theorem ids (default: all)")->delimiter(',');
  verify_cmd->add_option("--max-n", c.max_n, "Override the default universe bound");
  verify_cmd->add_option("--universe", c.universe_files, "Extra graph6 universe file(s)");
  verify_cmd->add_flag("--no-builtin", c.no_builtin, "Skip the built-in enumerated universe");
  verify_cmd->add_option("--workers,-w", c.workers, "Worker threads");
  add_common(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    io.out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    io.err << "error: " << e.what() << "\n";
    return kUsage;
  }
  c.format = format == "json" ? Format::kJson : format == "table" ? Format::kTable : Format::kAuto;

  try {
    if (compute->parsed()) return cmd_compute(c, io);
    if (gen->parsed()) return cmd_gen(c, io);
    if (product->parsed()) return cmd_product(c, io);
    return cmd_verify(c, io);
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace zfpd::cli

#endif  // ZFPD_CLI_HPP
