#ifndef ZFPD_GRAPH6_HPP
#define ZFPD_GRAPH6_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zfpd/graph.hpp"

namespace zfpd {

/// Malformed input text. `line` is 1-based, or 0 when not tied to a file.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// graph6: N(n) header then the upper triangle x(0,1) x(0,2) x(1,2) x(0,3) ...
// packed big-endian into 6-bit groups, each byte offset by 63.

inline Graph parse_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input");
  for (char c : text) {
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside printable range 63..126");
  }
  auto val = [&](std::size_t i) { return static_cast<std::uint64_t>(text[i] - 63); };

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (text[0] != 126) {
    n = val(0);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != 126) {
    if (text.size() < 4) throw ParseError("graph6: truncated size header");
    n = (val(1) << 12) | (val(2) << 6) | val(3);
    pos = 4;
  } else {
    if (text.size() < 8) throw ParseError("graph6: truncated size header");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | val(i);
    pos = 8;
  }
  if (n > kMaxOrder) throw ParseError("graph6: order " + std::to_string(n) + " exceeds supported maximum 64");

  const std::size_t bits = static_cast<std::size_t>(n * (n - (n > 0 ? 1 : 0)) / 2);
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) throw ParseError("graph6: truncated adjacency payload");
  if (text.size() - pos > bytes) throw ParseError("graph6: trailing bytes after adjacency payload");

  std::vector<VertexSet> adj(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      if ((val(pos + k / 6) >> (5 - k % 6)) & 1U) {
        adj[i].insert(j);
        adj[j].insert(i);
      }
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

inline std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace detail

/// One graph6 encoding per line; blank lines and `#` comments are skipped.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    auto t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    try {
      out.push_back(parse_graph6(t));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    } catch (const std::exception& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  return out;
}

inline std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph6_stream(in);
}

/// Edge-list text: one "u v" pair of non-negative integer labels per line,
/// `#` comments allowed; a blank line ends one graph and starts the next.
/// Labels are mapped densely onto 0..n-1 in increasing numeric order.
inline std::vector<Graph> read_edge_list_stream(std::istream& in) {
  std::vector<Graph> out;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  auto flush = [&] {
    if (raw.empty()) return;
    std::map<std::uint64_t, Vertex> label;
    for (auto [a, b] : raw) {
      label.emplace(a, 0);
      label.emplace(b, 0);
    }
    if (label.size() > kMaxOrder) throw ParseError("edge list has more than 64 distinct vertices");
    Vertex next = 0;
    for (auto& [_, idx] : label) idx = next++;
    std::vector<Edge> edges;
    for (auto [a, b] : raw) {
      if (a == b) throw ParseError("edge list contains a self-loop at " + std::to_string(a));
      edges.emplace_back(label[a], label[b]);
    }
    out.push_back(Graph::from_edges(label.size(), edges));
    raw.clear();
  };

  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    auto t = detail::trim(line);
    if (t.empty()) {
      flush();
      continue;
    }
    if (t.front() == '#') continue;
    std::istringstream fields{std::string(t)};
    long long a = -1;
    long long b = -1;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra) || a < 0 || b < 0) {
      throw ParseError("expected two non-negative vertex labels", lineno);
    }
    raw.emplace_back(a, b);
  }
  flush();
  return out;
}

inline std::string write_edge_list(const Graph& g) {
  std::string out;
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace zfpd

#endif  // ZFPD_GRAPH6_HPP
