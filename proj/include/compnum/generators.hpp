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

// Graph families. Where a family is written with vertices v_1..v_N, v_i is
// vertex index i-1.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "compnum/canonical.hpp"
#include "compnum/error.hpp"
#include "compnum/graph.hpp"

namespace compnum {

inline Graph complete(std::size_t n) {
  if (n < 1) throw InvalidArgument("complete: n must be >= 1");
  EdgeList e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, std::move(e));
}

inline Graph edgeless(std::size_t n) {
  if (n < 1) throw InvalidArgument("edgeless: n must be >= 1");
  return Graph::from_edges(n, {});
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle: n must be >= 3");
  EdgeList e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, std::move(e));
}

/// Path on n vertices (n - 1 edges).
inline Graph path(std::size_t n) {
  if (n < 1) throw InvalidArgument("path: n must be >= 1");
  EdgeList e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, std::move(e));
}

/// K_{a,b}: parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  if (a < 1 || b < 1) throw InvalidArgument("complete_bipartite: both parts must be nonempty");
  EdgeList e;
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph::from_edges(a + b, std::move(e));
}

/// Path v_1 ... v_{n-m+1} followed by a clique on v_{n-m+1} ... v_n.
inline Graph path_plus_clique(std::size_t n, std::size_t m) {
  if (m < 2 || m > n) throw InvalidArgument("path_plus_clique: requires 2 <= m <= n");
  const std::size_t joint = n - m;  // index of v_{n-m+1}
  EdgeList e;
  for (Vertex i = 0; i < joint; ++i) e.emplace_back(i, i + 1);
  for (Vertex i = joint; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, std::move(e));
}

/// Hamilton path v_1 ... v_{3tn} plus, for each block b < n, a clique on
/// {v_{3tb+3}, v_{3tb+6}, ..., v_{3tb+3t}}.
inline Graph g_tn(std::size_t t, std::size_t n) {
  if (t < 3 || n < 1) throw InvalidArgument("g_tn: requires t >= 3 and n >= 1");
  const std::size_t size = 3 * t * n;
  EdgeList e;
  for (Vertex i = 0; i + 1 < size; ++i) e.emplace_back(i, i + 1);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t i = 1; i <= t; ++i)
      for (std::size_t j = i + 1; j <= t; ++j) e.emplace_back(3 * t * b + 3 * i - 1, 3 * t * b + 3 * j - 1);
  return Graph::from_edges(size, std::move(e));
}

/// Cayley graph of Z/nZ with connection set {+-1, ..., +-p}. Requires n >= 7
/// and 2 <= p <= floor(n/3).
inline Graph circulant(std::size_t n, std::size_t p) {
  if (n < 7 || p < 2 || 3 * p > n)
    throw InvalidArgument("circulant: requires n >= 7 and 2 <= p <= floor(n/3)");
  EdgeList e;
  for (Vertex i = 0; i < n; ++i)
    for (std::size_t d = 1; d <= p; ++d) e.emplace_back(i, (i + d) % n);
  return Graph::from_edges(n, std::move(e));
}

inline constexpr std::size_t kMaxEnumerationVertices = 7;

/// Visits every graph on n vertices. Without dedup that is all
/// 2^(n choose 2) labeled graphs in bitmask order. With dedup it is one
/// canonical representative per isomorphism class, in canonical-form order;
/// classes are built by adding a vertex to each class on n - 1 vertices.
inline void enumerate_graphs(std::size_t n, bool dedup, const std::function<void(const Graph&)>& visit) {
  if (n > kMaxEnumerationVertices)
    throw UnsupportedSize("enumerate_graphs supports n <= " + std::to_string(kMaxEnumerationVertices));
  if (!dedup) {
    std::vector<Edge> pairs;
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      EdgeList e;
      for (std::size_t b = 0; b < pairs.size(); ++b)
        if (mask >> b & 1U) e.push_back(pairs[b]);
      visit(Graph::from_edges(n, std::move(e)));
    }
    return;
  }
  std::set<std::string> forms{canonical_form(Graph::from_edges(0, {}))};
  for (std::size_t size = 1; size <= n; ++size) {
    std::set<std::string> next;
    for (const auto& f : forms) {
      Graph base = graph_from_canonical(f);
      const std::size_t v = size - 1;
      for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << v); ++nbrs) {
        EdgeList e = base.edges();
        for (Vertex u = 0; u < v; ++u)
          if (nbrs >> u & 1U) e.emplace_back(u, v);
        next.insert(canonical_form(Graph::from_edges(size, std::move(e))));
      }
    }
    forms = std::move(next);
  }
  for (const auto& f : forms) visit(graph_from_canonical(f));
}

inline std::vector<Graph> all_graphs(std::size_t n, bool dedup) {
  std::vector<Graph> out;
  enumerate_graphs(n, dedup, [&](const Graph& g) { out.push_back(g); });
  return out;
}

/// Non-isomorphic graphs with 1 <= n <= max_n vertices, by n then canonical form.
inline std::vector<Graph> all_graphs_up_to(std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n)
    enumerate_graphs(n, true, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace compnum
