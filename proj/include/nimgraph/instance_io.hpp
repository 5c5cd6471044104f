#pragma once

// Line-oriented instance format:
//
//   nimgraph 1
//   vertices <n>
//   start <v>
//   edge <u> <v> <w>      (one per edge, 0-based ids, w >= 1)
//
// '#' starts a comment line. Edge order defines the weight-vector order.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nimgraph/error.hpp"
#include "nimgraph/graph.hpp"

namespace nimgraph {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::uint64_t parse_uint(std::string_view tok, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw parse_error(line, std::string("expected non-negative integer for ") + what + ", got '" +
                                std::string(tok) + "'");
  }
  return value;
}

}  // namespace detail

inline GameGraph parse_instance(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++lineno;
    const auto line = detail::trim(raw);
    if (!line.empty() && line.front() != '#') lines.emplace_back(lineno, line);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }

  auto expect_header = [&](std::size_t idx, std::string_view key) {
    if (idx >= lines.size()) throw parse_error(lineno, "missing '" + std::string(key) + "' line");
    const auto toks = detail::split_ws(lines[idx].second);
    if (toks.size() != 2 || toks[0] != key) {
      throw parse_error(lines[idx].first, "expected '" + std::string(key) + " <value>'");
    }
    return std::pair{lines[idx].first, toks[1]};
  };

  {
    auto [ln, version] = expect_header(0, "nimgraph");
    if (version != "1") throw parse_error(ln, "unsupported format version '" + std::string(version) + "'");
  }
  auto [vln, vtok] = expect_header(1, "vertices");
  const auto n = detail::parse_uint(vtok, vln, "vertex count");
  if (n == 0) throw parse_error(vln, "vertex count must be positive");
  auto [sln, stok] = expect_header(2, "start");
  const auto start = detail::parse_uint(stok, sln, "start vertex");
  if (start >= n) throw parse_error(sln, "start vertex " + std::to_string(start) + " out of range");

  std::vector<Edge> edges;
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  for (std::size_t i = 3; i < lines.size(); ++i) {
    const auto [ln, line] = lines[i];
    const auto toks = detail::split_ws(line);
    if (toks.empty() || toks[0] != "edge") throw parse_error(ln, "expected 'edge <u> <v> <w>'");
    if (toks.size() != 4) throw parse_error(ln, "edge line needs exactly three fields");
    const auto u = detail::parse_uint(toks[1], ln, "edge endpoint");
    const auto v = detail::parse_uint(toks[2], ln, "edge endpoint");
    if (!toks[3].empty() && toks[3].front() == '-') throw parse_error(ln, "edge weight must be positive");
    const auto w = detail::parse_uint(toks[3], ln, "edge weight");
    if (u >= n || v >= n) throw parse_error(ln, "edge endpoint out of range");
    if (u == v) throw parse_error(ln, "loop at vertex " + std::to_string(u));
    if (w == 0) throw parse_error(ln, "edge weight must be positive");
    if (w > UINT32_MAX) throw parse_error(ln, "edge weight too large");
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      throw parse_error(ln, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<Weight>(w)});
  }
  return GameGraph(n, std::move(edges), static_cast<Vertex>(start));
}

inline std::string serialize_instance(const GameGraph& g) {
  std::ostringstream out;
  out << "nimgraph 1\n"
      << "vertices " << g.vertex_count() << "\n"
      << "start " << g.start() << "\n";
  for (const Edge& e : g.edges()) out << "edge " << e.u << " " << e.v << " " << e.weight << "\n";
  return out.str();
}

inline GameGraph load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

}  // namespace nimgraph
