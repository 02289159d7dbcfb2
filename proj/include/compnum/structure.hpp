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

// Structural predicates on undirected graphs: triangles, chordality, holes,
// cycles and blocks, degree statistics.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <limits>
#include <vector>

#include "compnum/bitset.hpp"
#include "compnum/graph.hpp"

namespace compnum {

using Triangle = std::array<Vertex, 3>;

/// All 3-cliques as ascending triples, in lexicographic order.
inline std::vector<Triangle> triangles(const Graph& g) {
  std::vector<Triangle> out;
  for (const auto& e : g.edges()) {
    Bitset common = g.neighbors(e.u) & g.neighbors(e.v);
    for (std::size_t w = common.next(e.v + 1); w != Bitset::npos; w = common.next(w + 1))
      out.push_back({e.u, e.v, w});
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// E(G) split into edges lying on some triangle and edges lying on none.
struct EdgePartition {
  EdgeList in_triangle;
  EdgeList not_in_triangle;
};

inline EdgePartition edge_triangle_partition(const Graph& g) {
  EdgePartition p;
  for (const auto& e : g.edges()) {
    if (g.neighbors(e.u).intersects(g.neighbors(e.v)))
      p.in_triangle.push_back(e);
    else
      p.not_in_triangle.push_back(e);
  }
  return p;
}

struct ChordalityResult {
  bool chordal = false;
  /// Perfect elimination ordering when chordal: every vertex's neighbors that
  /// come later in the ordering form a clique.
  std::vector<Vertex> elimination_order;
};

/// Checks that `order` is a permutation of V(G) and a perfect elimination
/// ordering.
inline bool is_perfect_elimination_order(const Graph& g, const std::vector<Vertex>& order) {
  if (order.size() != g.n()) return false;
  std::vector<std::size_t> pos(g.n(), Bitset::npos);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= g.n() || pos[order[i]] != Bitset::npos) return false;
    pos[order[i]] = i;
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    Bitset later(g.n());
    g.neighbors(order[i]).for_each([&](std::size_t w) {
      if (pos[w] > i) later.set(w);
    });
    if (!g.is_clique(later)) return false;
  }
  return true;
}

/// Maximum cardinality search; the reverse visit order is a perfect
/// elimination ordering iff the graph is chordal.
inline ChordalityResult is_chordal(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<std::size_t> weight(n, 0);
  std::vector<bool> visited(n, false);
  std::vector<Vertex> visit;
  visit.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = n;
    for (Vertex v = 0; v < n; ++v)
      if (!visited[v] && (best == n || weight[v] > weight[best])) best = v;
    visited[best] = true;
    visit.push_back(best);
    g.neighbors(best).for_each([&](std::size_t w) {
      if (!visited[w]) ++weight[w];
    });
  }
  std::reverse(visit.begin(), visit.end());
  ChordalityResult r;
  r.chordal = is_perfect_elimination_order(g, visit);
  if (r.chordal) r.elimination_order = std::move(visit);
  return r;
}

inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

/// Induced cycles of length >= 4. Each hole is reported once, as a vertex
/// sequence starting at its smallest vertex and continuing toward the smaller
/// of that vertex's two cycle neighbors. Stops after `cap` holes.
inline std::vector<std::vector<Vertex>> holes(const Graph& g, std::size_t cap = 2) {
  std::vector<std::vector<Vertex>> out;
  if (cap == 0) return out;
  const std::size_t n = g.n();
  std::vector<Vertex> path;
  Bitset on_path(n);

  // Extends an induced path s = path[0], ..., path.back(); all vertices > s.
  auto extend = [&](auto&& self) -> bool {
    const Vertex s = path.front();
    const Vertex last = path.back();
    bool stop = false;
    g.neighbors(last).for_each([&](std::size_t x) {
      if (stop || x <= s || on_path.test(x)) return;
      // x may touch only `last` among path[1..], and possibly s.
      for (std::size_t i = 1; i + 1 < path.size(); ++i)
        if (g.adjacent(x, path[i])) return;
      bool closes = g.adjacent(x, s);
      if (closes) {
        if (path.size() >= 3 && path[1] < x) {
          std::vector<Vertex> cyc = path;
          cyc.push_back(x);
          out.push_back(std::move(cyc));
          if (out.size() >= cap) stop = true;
        }
        return;
      }
      path.push_back(x);
      on_path.set(x);
      if (self(self)) stop = true;
      on_path.reset(x);
      path.pop_back();
    });
    return stop;
  };

  for (Vertex s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path.set(s);
    bool stop = false;
    g.neighbors(s).for_each([&](std::size_t a) {
      if (stop || a <= s) return;
      path.push_back(a);
      on_path.set(a);
      stop = extend(extend);
      on_path.reset(a);
      path.pop_back();
    });
    on_path.reset(s);
    if (stop) break;
  }
  return out;
}

/// Vertex sets of the biconnected components (blocks). Isolated vertices
/// belong to no block; a bridge is a 2-vertex block.
inline std::vector<Bitset> blocks(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::size_t timer = 0;
  std::vector<Edge> stack;
  std::vector<Bitset> out;

  auto dfs = [&](auto&& self, Vertex u, Vertex parent) -> void {
    disc[u] = low[u] = ++timer;
    g.neighbors(u).for_each([&](std::size_t w) {
      if (w == parent) return;
      if (disc[w] == 0) {
        stack.push_back(Edge(u, w));
        self(self, w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          Bitset block(n);
          Edge top;
          do {
            top = stack.back();
            stack.pop_back();
            block.set(top.u);
            block.set(top.v);
          } while (top != Edge(u, w));
          out.push_back(std::move(block));
        }
      } else if (disc[w] < disc[u]) {
        stack.push_back(Edge(u, w));
        low[u] = std::min(low[u], disc[w]);
      }
    });
  };
  for (Vertex v = 0; v < n; ++v)
    if (disc[v] == 0) dfs(dfs, v, n);
  std::sort(out.begin(), out.end());
  return out;
}

/// VC(G): vertices lying on at least one cycle, i.e. members of a block with
/// three or more vertices.
inline Bitset cycle_vertices(const Graph& g) {
  Bitset vc(g.n());
  for (const auto& b : blocks(g))
    if (b.count() >= 3) vc |= b;
  return vc;
}

/// True iff G has a (not necessarily induced) cycle of length >= 4. A block
/// on four or more vertices is 2-connected and always contains one; blocks
/// on three vertices are triangles.
inline bool has_cycle_geq4(const Graph& g) {
  for (const auto& b : blocks(g))
    if (b.count() >= 4) return true;
  return false;
}

/// Connected components as vertex sets, ordered by smallest vertex.
inline std::vector<Bitset> connected_components(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<Bitset> comps;
  Bitset seen(n);
  for (Vertex s = 0; s < n; ++s) {
    if (seen.test(s)) continue;
    Bitset comp(n);
    std::vector<Vertex> todo{s};
    seen.set(s);
    while (!todo.empty()) {
      Vertex v = todo.back();
      todo.pop_back();
      comp.set(v);
      g.neighbors(v).for_each([&](std::size_t w) {
        if (!seen.test(w)) {
          seen.set(w);
          todo.push_back(w);
        }
      });
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

struct BasicStats {
  std::size_t isolated_count = 0;  // i(G)
  std::vector<Vertex> pendant_vertices;
  std::size_t components = 0;
  std::vector<std::size_t> degree_sequence;  // non-increasing
};

inline BasicStats basic_stats(const Graph& g) {
  BasicStats s;
  for (Vertex v = 0; v < g.n(); ++v) {
    std::size_t d = g.degree(v);
    if (d == 0) ++s.isolated_count;
    if (d == 1) s.pendant_vertices.push_back(v);
    s.degree_sequence.push_back(d);
  }
  std::sort(s.degree_sequence.rbegin(), s.degree_sequence.rend());
  s.components = connected_components(g).size();
  return s;
}

inline bool is_complete(const Graph& g) { return g.m() == g.n() * (g.n() - (g.n() > 0 ? 1 : 0)) / 2; }
inline bool is_edgeless(const Graph& g) { return g.m() == 0; }

}  // namespace compnum
