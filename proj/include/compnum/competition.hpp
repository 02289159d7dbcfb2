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

// Competition graphs of digraphs and exact competition numbers.
//
// A realization of G with k extra vertices is an acyclic digraph D on
// n + k vertices (0..n-1 are G's vertices, n..n+k-1 the added isolated ones)
// whose competition graph is exactly G plus k isolated vertices.

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <queue>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "compnum/bitset.hpp"
#include "compnum/clique_cover.hpp"
#include "compnum/error.hpp"
#include "compnum/graph.hpp"
#include "compnum/structure.hpp"

namespace compnum {

inline constexpr std::size_t kDefaultSolverCap = 12;

/// C(D): x ~ y iff x != y have a common out-neighbor.
inline Graph competition_graph(const Digraph& d) {
  EdgeList edges;
  for (Vertex prey = 0; prey < d.n(); ++prey) {
    std::vector<std::size_t> preds = d.in_neighbors(prey).to_vector();
    for (std::size_t i = 0; i < preds.size(); ++i)
      for (std::size_t j = i + 1; j < preds.size(); ++j) edges.emplace_back(preds[i], preds[j]);
  }
  return Graph::from_edges(d.n(), std::move(edges));
}

/// Topological order (smallest available vertex first) if D is acyclic.
inline std::optional<std::vector<Vertex>> is_acyclic(const Digraph& d) {
  std::vector<std::size_t> indeg(d.n(), 0);
  for (const auto& a : d.arcs()) ++indeg[a.head];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < d.n(); ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<Vertex> order;
  while (!ready.empty()) {
    Vertex v = ready.top();
    ready.pop();
    order.push_back(v);
    d.out_neighbors(v).for_each([&](std::size_t w) {
      if (--indeg[w] == 0) ready.push(w);
    });
  }
  if (order.size() != d.n()) return std::nullopt;
  return order;
}

struct Realization {
  Digraph digraph;
  std::size_t extra = 0;
  std::vector<Vertex> topo_order;
};

/// True iff r.digraph is acyclic with r.topo_order as a topological order and
/// C(r.digraph) equals G plus r.extra isolated vertices.
inline bool verify_realization(const Graph& g, const Realization& r) {
  const Digraph& d = r.digraph;
  if (d.n() != g.n() + r.extra) return false;
  if (r.topo_order.size() != d.n()) return false;
  std::vector<std::size_t> pos(d.n(), Bitset::npos);
  for (std::size_t i = 0; i < r.topo_order.size(); ++i) {
    Vertex v = r.topo_order[i];
    if (v >= d.n() || pos[v] != Bitset::npos) return false;
    pos[v] = i;
  }
  for (const auto& a : d.arcs())
    if (pos[a.tail] >= pos[a.head]) return false;
  return competition_graph(d) == add_isolated(g, r.extra);
}

namespace detail {

// Depth-first search over orderings of G's vertices. The i-th placed vertex
// is the prey of a clique S_i drawn from the vertices placed before it; the k
// extra vertices come last and take arbitrary cliques of G. Each S_i is a
// maximal clique of the subgraph induced by the already-placed vertices.
class RealizationSearch {
 public:
  RealizationSearch(const Graph& g, std::size_t k) : g_(g), k_(k), cover_(g) {}

  std::optional<Realization> run() {
    order_.clear();
    chosen_.clear();
    if (!dfs(g_.empty_vertex_set(), g_.empty_edge_set())) return std::nullopt;
    return build();
  }

 private:
  struct StateKey {
    Bitset placed;
    Bitset covered;
    friend bool operator==(const StateKey&, const StateKey&) = default;
  };
  struct StateHash {
    std::size_t operator()(const StateKey& s) const { return s.placed.hash() * 31 + s.covered.hash(); }
  };
  struct Option {
    Bitset clique;
    Bitset covered;
  };

  const std::vector<Bitset>& cliques_within(const Bitset& placed) {
    auto it = clique_cache_.find(placed);
    if (it != clique_cache_.end()) return it->second;
    std::vector<Bitset> mapped;
    std::vector<std::size_t> members = placed.to_vector();
    Graph sub = induced_subgraph(g_, placed);
    for (const auto& c : maximal_cliques(sub)) {
      if (c.count() < 2) continue;
      Bitset full(g_.n());
      c.for_each([&](std::size_t i) { full.set(members[i]); });
      mapped.push_back(std::move(full));
    }
    return clique_cache_.emplace(placed, std::move(mapped)).first->second;
  }

  bool leaf(const Bitset& covered) {
    Bitset uncovered = g_.all_edges() - covered;
    auto it = leaf_cache_.find(uncovered);
    if (it != leaf_cache_.end()) {
      if (it->second) leaf_cover_ = leaf_witness_.at(uncovered);
      return it->second;
    }
    auto res = cover_.within(uncovered, k_);
    leaf_cache_.emplace(uncovered, res.has_value());
    if (res) {
      leaf_witness_.emplace(uncovered, res->witness.cliques);
      leaf_cover_ = res->witness.cliques;
    }
    return res.has_value();
  }

  bool dfs(const Bitset& placed, const Bitset& covered) {
    const std::size_t count = placed.count();
    if (count == g_.n()) return leaf(covered);
    Bitset uncovered = g_.all_edges() - covered;
    if (cover_.independent_edge_bound(uncovered) > k_ + (g_.n() - count)) return false;
    StateKey key{placed, covered};
    if (failed_.count(key)) return false;

    // Options depend only on the placed set; keep the undominated ones.
    std::vector<Option> options;
    for (const auto& c : cliques_within(placed)) options.push_back({c, covered | g_.edges_within(c)});
    if (options.empty()) options.push_back({g_.empty_vertex_set(), covered});
    std::vector<Option> kept;
    for (std::size_t i = 0; i < options.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < options.size() && !dominated; ++j) {
        if (i == j) continue;
        if (options[i].covered == options[j].covered)
          dominated = j < i;
        else
          dominated = options[i].covered.is_subset_of(options[j].covered);
      }
      if (!dominated) kept.push_back(options[i]);
    }

    for (Vertex v = 0; v < g_.n(); ++v) {
      if (placed.test(v)) continue;
      Bitset next = placed;
      next.set(v);
      for (const auto& opt : kept) {
        order_.push_back(v);
        chosen_.push_back(opt.clique);
        if (dfs(next, opt.covered)) return true;
        order_.pop_back();
        chosen_.pop_back();
      }
    }
    failed_.insert(std::move(key));
    return false;
  }

  Realization build() const {
    const std::size_t n = g_.n();
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < order_.size(); ++i)
      chosen_[i].for_each([&](std::size_t x) { arcs.push_back({x, order_[i]}); });
    for (std::size_t j = 0; j < leaf_cover_.size(); ++j)
      leaf_cover_[j].for_each([&](std::size_t x) { arcs.push_back({x, n + j}); });
    Realization r;
    r.extra = k_;
    r.digraph = Digraph::from_arcs(n + k_, std::move(arcs));
    r.topo_order = order_;
    for (std::size_t j = 0; j < k_; ++j) r.topo_order.push_back(n + j);
    return r;
  }

  const Graph& g_;
  std::size_t k_;
  EdgeCoverSolver cover_;
  std::unordered_map<Bitset, std::vector<Bitset>, BitsetHash> clique_cache_;
  std::unordered_map<Bitset, bool, BitsetHash> leaf_cache_;
  std::unordered_map<Bitset, std::vector<Bitset>, BitsetHash> leaf_witness_;
  std::unordered_set<StateKey, StateHash> failed_;
  std::vector<Vertex> order_;
  std::vector<Bitset> chosen_;
  std::vector<Bitset> leaf_cover_;
};

inline void check_cap(std::size_t n, std::size_t k, std::size_t cap) {
  if (n + k > cap)
    throw UnsupportedSize("exact search needs n + k = " + std::to_string(n + k) + " > cap " +
                          std::to_string(cap));
}

}  // namespace detail

/// A realization of G with exactly k extra vertices, if one exists. Throws
/// UnsupportedSize when n + k exceeds `cap`.
inline std::optional<Realization> decide_k(const Graph& g, std::size_t k, std::size_t cap = kDefaultSolverCap) {
  detail::check_cap(g.n(), k, cap);
  return detail::RealizationSearch(g, k).run();
}

/// max(0, theta_E - n + 2) for n >= 2. A single vertex has k = 0 although
/// the formula gives 1, so graphs with n <= 1 get 0.
inline std::size_t clique_cover_lower_bound(std::size_t theta, std::size_t n) {
  if (n <= 1) return 0;
  return theta + 2 >= n ? theta + 2 - n : 0;
}

struct CompetitionResult {
  std::size_t k = 0;
  Realization witness;
};

/// k(G) with a witness, scanning k upward from clique_cover_lower_bound().
inline CompetitionResult competition_number_exact(const Graph& g, std::size_t cap = kDefaultSolverCap) {
  for (std::size_t k = clique_cover_lower_bound(theta_E(g).size, g.n());; ++k) {
    auto r = decide_k(g, k, cap);
    if (r) return {k, std::move(*r)};
  }
}

/// Realization with r - 1 extra vertices from a full edge clique cover
/// {S_1, ..., S_r}: S_1 preys on a vertex outside S_1, and each other S_i on
/// its own new vertex. Requires G neither complete nor edgeless.
inline Realization construct_opsut(const Graph& g, const CliqueCover& cover) {
  if (is_edgeless(g)) throw InvalidArgument("construct_opsut: graph is edgeless");
  if (is_complete(g)) throw InvalidArgument("construct_opsut: graph is complete");
  if (cover.host != g || cover.target_edges != g.edges() || !cover.is_valid() || cover.cliques.empty())
    throw InvalidArgument("construct_opsut: not an edge clique cover of the graph");
  const std::size_t n = g.n();
  const std::size_t r = cover.size();
  const Bitset& first = cover.cliques.front();
  Vertex outside = 0;
  while (first.test(outside)) ++outside;

  std::vector<Arc> arcs;
  first.for_each([&](std::size_t x) { arcs.push_back({x, outside}); });
  for (std::size_t i = 1; i < r; ++i)
    cover.cliques[i].for_each([&](std::size_t x) { arcs.push_back({x, n + i - 1}); });

  Realization out;
  out.extra = r - 1;
  out.digraph = Digraph::from_arcs(n + r - 1, std::move(arcs));
  for (Vertex v = 0; v < n; ++v)
    if (v != outside) out.topo_order.push_back(v);
  out.topo_order.push_back(outside);
  for (std::size_t i = 1; i < r; ++i) out.topo_order.push_back(n + i - 1);
  return out;
}

/// Realization built from H = G - E_tri(G): an exact realization of H plus
/// one new prey vertex for each clique of a minimum cover of E_tri(G).
inline Realization construct_main(const Graph& g, std::size_t cap = kDefaultSolverCap) {
  EdgePartition part = edge_triangle_partition(g);
  Graph h = remove_edges(g, part.in_triangle);
  CompetitionResult base = competition_number_exact(h, cap);
  CoverResult tri = theta_E_restricted(part.in_triangle, g);

  const std::size_t first_new = h.n() + base.k;
  std::vector<Arc> arcs = base.witness.digraph.arcs();
  for (std::size_t i = 0; i < tri.witness.cliques.size(); ++i)
    tri.witness.cliques[i].for_each([&](std::size_t x) { arcs.push_back({x, first_new + i}); });

  Realization out;
  out.extra = base.k + tri.size;
  out.digraph = Digraph::from_arcs(g.n() + out.extra, std::move(arcs));
  out.topo_order = base.witness.topo_order;
  for (std::size_t i = 0; i < tri.size; ++i) out.topo_order.push_back(first_new + i);
  return out;
}

}  // namespace compnum
