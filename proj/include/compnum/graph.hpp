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

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "compnum/bitset.hpp"
#include "compnum/error.hpp"

namespace compnum {

/// Vertices are dense indices 0..n-1.
using Vertex = std::size_t;

/// Undirected edge, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Directed arc tail -> head.
struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

using EdgeList = std::vector<Edge>;

/// Simple undirected graph. Immutable after construction; edges are kept
/// sorted, so edge ids (positions in edges()) are lexicographic.
class Graph {
 public:
  Graph() = default;

  /// Throws MalformedInput on loops or out-of-range endpoints. Duplicate
  /// pairs (in either orientation) collapse to one edge.
  static Graph from_edge_list(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    EdgeList edges;
    edges.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
      if (a >= n || b >= n)
        throw MalformedInput("edge (" + std::to_string(a) + "," + std::to_string(b) +
                             ") references a vertex outside 0.." + std::to_string(n) + "-1");
      if (a == b) throw MalformedInput("loop at vertex " + std::to_string(a));
      edges.emplace_back(a, b);
    }
    return Graph(n, std::move(edges));
  }

  static Graph from_edges(std::size_t n, EdgeList edges) {
    for (const auto& e : edges) {
      if (e.v >= n)
        throw MalformedInput("edge references a vertex outside 0.." + std::to_string(n) + "-1");
      if (e.u == e.v) throw MalformedInput("loop at vertex " + std::to_string(e.u));
    }
    return Graph(n, std::move(edges));
  }

  std::size_t n() const { return n_; }
  std::size_t m() const { return edges_.size(); }
  const EdgeList& edges() const { return edges_; }
  const Edge& edge(std::size_t id) const { return edges_[id]; }

  bool adjacent(Vertex a, Vertex b) const { return a != b && adj_[a].test(b); }
  const Bitset& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].count(); }

  std::optional<std::size_t> edge_id(Vertex a, Vertex b) const {
    Edge e(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  Bitset empty_vertex_set() const { return Bitset(n_); }
  Bitset empty_edge_set() const { return Bitset(edges_.size()); }
  Bitset all_edges() const {
    Bitset b(edges_.size());
    b.set_all();
    return b;
  }

  /// Edge-id bitset of the given edges; throws InvalidArgument if one is
  /// not an edge of this graph.
  Bitset edge_set(const EdgeList& f) const {
    Bitset b(edges_.size());
    for (const auto& e : f) {
      auto id = edge_id(e.u, e.v);
      if (!id)
        throw InvalidArgument("{" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              "} is not an edge of the graph");
      b.set(*id);
    }
    return b;
  }
  EdgeList edges_of(const Bitset& ids) const {
    EdgeList out;
    ids.for_each([&](std::size_t i) { out.push_back(edges_[i]); });
    return out;
  }

  bool is_clique(const Bitset& vs) const {
    bool ok = true;
    vs.for_each([&](std::size_t v) {
      if (ok) {
        Bitset rest = vs;
        rest.reset(v);
        ok = rest.is_subset_of(adj_[v]);
      }
    });
    return ok;
  }

  /// Edge ids of edges with both endpoints in `vs`.
  Bitset edges_within(const Bitset& vs) const {
    Bitset out(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (vs.test(edges_[i].u) && vs.test(edges_[i].v)) out.set(i);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Graph(std::size_t n, EdgeList edges) : n_(n), edges_(std::move(edges)), adj_(n, Bitset(n)) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const auto& e : edges_) {
      adj_[e.u].set(e.v);
      adj_[e.v].set(e.u);
    }
  }

  std::size_t n_ = 0;
  EdgeList edges_;
  std::vector<Bitset> adj_;
};

inline Graph from_edge_list(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  return Graph::from_edge_list(n, pairs);
}

/// G together with t new isolated vertices n..n+t-1.
inline Graph add_isolated(const Graph& g, std::size_t t) {
  return Graph::from_edges(g.n() + t, g.edges());
}

/// Same vertex set with the edges in `f` deleted. Throws InvalidArgument if
/// some edge of `f` is not in g.
inline Graph remove_edges(const Graph& g, const EdgeList& f) {
  Bitset keep = g.all_edges() - g.edge_set(f);
  return Graph::from_edges(g.n(), g.edges_of(keep));
}

/// Subgraph induced by `vs`, relabeled to 0..|vs|-1 in increasing order.
inline Graph induced_subgraph(const Graph& g, const Bitset& vs) {
  std::vector<std::size_t> index(g.n(), Bitset::npos);
  std::size_t k = 0;
  vs.for_each([&](std::size_t v) { index[v] = k++; });
  EdgeList edges;
  for (const auto& e : g.edges())
    if (vs.test(e.u) && vs.test(e.v)) edges.emplace_back(index[e.u], index[e.v]);
  return Graph::from_edges(k, std::move(edges));
}

inline Graph remove_vertex(const Graph& g, Vertex v) {
  Bitset keep(g.n());
  keep.set_all();
  keep.reset(v);
  return induced_subgraph(g, keep);
}

/// Simple digraph (no loops, no parallel arcs). Immutable after construction.
class Digraph {
 public:
  Digraph() = default;

  static Digraph from_arcs(std::size_t n, std::vector<Arc> arcs) {
    for (const auto& a : arcs) {
      if (a.tail >= n || a.head >= n)
        throw MalformedInput("arc references a vertex outside 0.." + std::to_string(n) + "-1");
      if (a.tail == a.head) throw MalformedInput("loop at vertex " + std::to_string(a.tail));
    }
    return Digraph(n, std::move(arcs));
  }

  std::size_t n() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Bitset& out_neighbors(Vertex v) const { return out_[v]; }
  const Bitset& in_neighbors(Vertex v) const { return in_[v]; }
  bool has_arc(Vertex t, Vertex h) const { return out_[t].test(h); }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  Digraph(std::size_t n, std::vector<Arc> arcs)
      : n_(n), arcs_(std::move(arcs)), out_(n, Bitset(n)), in_(n, Bitset(n)) {
    std::sort(arcs_.begin(), arcs_.end());
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
    for (const auto& a : arcs_) {
      out_[a.tail].set(a.head);
      in_[a.head].set(a.tail);
    }
  }

  std::size_t n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<Bitset> out_;
  std::vector<Bitset> in_;
};

}  // namespace compnum
