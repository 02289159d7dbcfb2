// Copyright 2026 The compnum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Text formats, all with 1-indexed vertices and `c` comment lines.
//
//   graph:    p <n> <m>      then m lines   e <u> <v>
//   digraph:  d <n> <a>      then a lines   a <u> <v>   then  c topo: <order>

#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "compnum/competition.hpp"
#include "compnum/error.hpp"
#include "compnum/graph.hpp"

namespace compnum {

namespace detail {

[[noreturn]] inline void parse_error(std::size_t line, const std::string& what) {
  throw MalformedInput("line " + std::to_string(line) + ": " + what);
}

inline std::size_t parse_count(std::istringstream& in, std::size_t line, const char* what) {
  std::string tok;
  if (!(in >> tok)) parse_error(line, std::string("missing ") + what);
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    parse_error(line, std::string("expected a non-negative integer for ") + what + ", got '" + tok + "'");
  try {
    return static_cast<std::size_t>(std::stoull(tok));
  } catch (const std::out_of_range&) {
    parse_error(line, std::string(what) + " out of range");
  }
}

struct ParsedLines {
  char header = 0;
  std::size_t n = 0;
  std::size_t count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // 0-indexed
  std::vector<std::string> comments;
};

// Shared reader for both formats: `header` is 'p' or 'd', `item` 'e' or 'a'.
inline ParsedLines parse_lines(std::istream& in, char header, char item) {
  ParsedLines out;
  bool have_header = false;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream ls(raw);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c") {
      std::string rest;
      std::getline(ls, rest);
      auto start = rest.find_first_not_of(" \t");
      out.comments.push_back(start == std::string::npos ? "" : rest.substr(start));
      continue;
    }
    if (tag.size() == 1 && tag[0] == header) {
      if (have_header) parse_error(lineno, "duplicate header line");
      out.n = parse_count(ls, lineno, "vertex count");
      out.count = parse_count(ls, lineno, "edge count");
      have_header = true;
    } else if (tag.size() == 1 && tag[0] == item) {
      if (!have_header) parse_error(lineno, std::string("'") + item + "' line before header");
      std::size_t u = parse_count(ls, lineno, "endpoint");
      std::size_t v = parse_count(ls, lineno, "endpoint");
      if (u < 1 || u > out.n || v < 1 || v > out.n)
        parse_error(lineno, "endpoint outside 1.." + std::to_string(out.n));
      if (u == v) parse_error(lineno, "loop at vertex " + std::to_string(u));
      out.pairs.emplace_back(u - 1, v - 1);
    } else {
      parse_error(lineno, "unknown line type '" + tag + "'");
    }
    std::string extra;
    if (ls >> extra) parse_error(lineno, "unexpected trailing token '" + extra + "'");
  }
  if (!have_header) parse_error(lineno, std::string("missing '") + header + "' header line");
  if (out.pairs.size() != out.count)
    parse_error(lineno, "header declares " + std::to_string(out.count) + " entries but " +
                            std::to_string(out.pairs.size()) + " were given");
  return out;
}

}  // namespace detail

inline Graph read_edge_list(std::istream& in) {
  detail::ParsedLines p = detail::parse_lines(in, 'p', 'e');
  return Graph::from_edge_list(p.n, p.pairs);
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& comments = {}) {
  for (const auto& c : comments) out << "c " << c << '\n';
  out << "p " << g.n() << ' ' << g.m() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

inline void write_digraph(std::ostream& out, const Digraph& d, const std::vector<Vertex>& topo) {
  out << "d " << d.n() << ' ' << d.arcs().size() << '\n';
  for (const auto& a : d.arcs()) out << "a " << a.tail + 1 << ' ' << a.head + 1 << '\n';
  out << "c topo:";
  for (Vertex v : topo) out << ' ' << v + 1;
  out << '\n';
}

inline void write_realization(std::ostream& out, const Realization& r) { write_digraph(out, r.digraph, r.topo_order); }

struct ParsedDigraph {
  Digraph digraph;
  std::optional<std::vector<Vertex>> topo_order;
};

/// Reads the digraph format; the topological order comes from a
/// `c topo:` comment when present.
inline ParsedDigraph read_digraph(std::istream& in) {
  detail::ParsedLines p = detail::parse_lines(in, 'd', 'a');
  std::vector<Arc> arcs;
  for (const auto& [u, v] : p.pairs) arcs.push_back({u, v});
  ParsedDigraph out{Digraph::from_arcs(p.n, std::move(arcs)), std::nullopt};
  for (const auto& c : p.comments) {
    if (c.rfind("topo:", 0) != 0) continue;
    std::istringstream ts(c.substr(5));
    std::vector<Vertex> order;
    std::size_t v;
    while (ts >> v) {
      if (v < 1 || v > p.n) throw MalformedInput("topo order references vertex " + std::to_string(v));
      order.push_back(v - 1);
    }
    out.topo_order = std::move(order);
  }
  return out;
}

}  // namespace compnum
