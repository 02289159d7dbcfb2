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

// Maximal clique enumeration and exact (restricted) edge clique covers.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "compnum/bitset.hpp"
#include "compnum/graph.hpp"

namespace compnum {

/// Inclusion-maximal cliques (Bron-Kerbosch with pivoting), sorted
/// lexicographically. An isolated vertex is a maximal clique of size one.
inline std::vector<Bitset> maximal_cliques(const Graph& g) {
  std::vector<Bitset> out;
  auto expand = [&](auto&& self, Bitset r, Bitset p, Bitset x) -> void {
    if (p.none() && x.none()) {
      out.push_back(std::move(r));
      return;
    }
    // Pivot: vertex of P u X with the most neighbors in P.
    Bitset px = p | x;
    std::size_t pivot = px.first();
    std::size_t best = 0;
    px.for_each([&](std::size_t u) {
      std::size_t c = (p & g.neighbors(u)).count();
      if (c > best) {
        best = c;
        pivot = u;
      }
    });
    Bitset branch = p - g.neighbors(pivot);
    branch.for_each([&](std::size_t v) {
      Bitset r2 = r;
      r2.set(v);
      self(self, std::move(r2), p & g.neighbors(v), x & g.neighbors(v));
      p.reset(v);
      x.set(v);
    });
  };
  if (g.n() > 0) {
    Bitset all(g.n());
    all.set_all();
    expand(expand, Bitset(g.n()), all, Bitset(g.n()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// A family of cliques of `host` meant to cover `target_edges`.
struct CliqueCover {
  std::vector<Bitset> cliques;
  EdgeList target_edges;
  Graph host;

  std::size_t size() const { return cliques.size(); }

  /// Both invariants: every member is a clique of host, and every target
  /// edge has both endpoints in some member.
  bool is_valid() const {
    for (const auto& c : cliques)
      if (c.size() != host.n() || !host.is_clique(c)) return false;
    for (const auto& e : target_edges) {
      if (!host.adjacent(e.u, e.v)) return false;
      bool covered = std::any_of(cliques.begin(), cliques.end(),
                                 [&](const Bitset& c) { return c.test(e.u) && c.test(e.v); });
      if (!covered) return false;
    }
    return true;
  }
};

struct CoverResult {
  std::size_t size = 0;
  CliqueCover witness;
};

/// Set-cover branch and bound over maximal cliques. Holds per-graph
/// precomputation so repeated queries on the same graph stay cheap; search
/// state is private, so one instance must not be shared across threads.
class EdgeCoverSolver {
 public:
  explicit EdgeCoverSolver(const Graph& g) : g_(g) {
    for (auto& c : maximal_cliques(g))
      if (c.count() >= 2) cliques_.push_back(std::move(c));
    const std::size_t m = g.m();
    covers_.reserve(cliques_.size());
    for (const auto& c : cliques_) covers_.push_back(g.edges_within(c));
    containing_.assign(m, {});
    compatible_.assign(m, Bitset(m));
    for (std::size_t ci = 0; ci < cliques_.size(); ++ci) {
      covers_[ci].for_each([&](std::size_t e) {
        containing_[e].push_back(ci);
        compatible_[e] |= covers_[ci];
      });
    }
  }

  const Graph& graph() const { return g_; }
  const std::vector<Bitset>& candidates() const { return cliques_; }

  /// Minimum family of cliques covering every edge id in `target`.
  CoverResult minimum(const Bitset& target) {
    std::vector<std::size_t> greedy = greedy_indices(target);
    best_.clear();
    best_size_ = greedy.size() + 1;
    stop_at_first_ = false;
    run(target);
    if (best_size_ > greedy.size()) best_ = greedy;
    return make_result(target, best_);
  }

  /// A cover of `target` with at most `limit` cliques, if one exists.
  std::optional<CoverResult> within(const Bitset& target, std::size_t limit) {
    if (target.none()) return make_result(target, {});
    if (limit == 0) return std::nullopt;
    best_.clear();
    best_size_ = limit + 1;
    stop_at_first_ = true;
    run(target);
    if (best_size_ > limit) return std::nullopt;
    return make_result(target, best_);
  }

  /// Size of a greedy maximal set of edges, no two of which lie in a common
  /// clique; a lower bound on any cover of `target`.
  std::size_t independent_edge_bound(const Bitset& target) const {
    Bitset blocked(g_.m());
    std::size_t count = 0;
    target.for_each([&](std::size_t e) {
      if (!blocked.test(e)) {
        ++count;
        blocked |= compatible_[e];
      }
    });
    return count;
  }

  CliqueCover greedy(const Bitset& target) const { return make_result(target, greedy_indices(target)).witness; }

 private:
  std::vector<std::size_t> greedy_indices(const Bitset& target) const {
    std::vector<std::size_t> chosen;
    Bitset left = target;
    while (left.any()) {
      std::size_t best = 0, best_gain = 0;
      for (std::size_t ci = 0; ci < cliques_.size(); ++ci) {
        std::size_t gain = (covers_[ci] & left).count();
        if (gain > best_gain) {
          best_gain = gain;
          best = ci;
        }
      }
      chosen.push_back(best);
      left -= covers_[best];
    }
    return chosen;
  }

  void run(const Bitset& target) {
    found_ = false;
    path_.clear();
    branch(target);
  }

  void branch(const Bitset& uncovered) {
    if (stop_at_first_ && found_) return;
    if (uncovered.none()) {
      if (path_.size() < best_size_) {
        best_size_ = path_.size();
        best_ = path_;
        found_ = true;
      }
      return;
    }
    if (path_.size() + independent_edge_bound(uncovered) >= best_size_) return;
    const std::size_t e = uncovered.first();
    for (std::size_t ci : containing_[e]) {
      path_.push_back(ci);
      branch(uncovered - covers_[ci]);
      path_.pop_back();
      if (stop_at_first_ && found_) return;
    }
  }

  CoverResult make_result(const Bitset& target, const std::vector<std::size_t>& idx) const {
    CoverResult r;
    r.size = idx.size();
    r.witness.host = g_;
    r.witness.target_edges = g_.edges_of(target);
    for (std::size_t i : idx) r.witness.cliques.push_back(cliques_[i]);
    return r;
  }

  Graph g_;
  std::vector<Bitset> cliques_;
  std::vector<Bitset> covers_;                     // edge ids inside each clique
  std::vector<std::vector<std::size_t>> containing_;  // cliques containing each edge
  std::vector<Bitset> compatible_;                 // edges sharing a clique with each edge

  std::vector<std::size_t> path_;
  std::vector<std::size_t> best_;
  std::size_t best_size_ = 0;
  bool stop_at_first_ = false;
  bool found_ = false;
};

/// theta_E(G): minimum edge clique cover with a witness. Zero for edgeless G.
inline CoverResult theta_E(const Graph& g) {
  EdgeCoverSolver solver(g);
  return solver.minimum(g.all_edges());
}

/// theta_E(F;G): minimum family of cliques of G covering the edges in F.
/// Throws InvalidArgument if F is not a subset of E(G).
inline CoverResult theta_E_restricted(const EdgeList& f, const Graph& g) {
  Bitset target = g.edge_set(f);
  EdgeCoverSolver solver(g);
  return solver.minimum(target);
}

/// Greedy cover of F (largest new coverage first); an upper bound only.
inline CliqueCover greedy_cover(const EdgeList& f, const Graph& g) {
  Bitset target = g.edge_set(f);
  return EdgeCoverSolver(g).greedy(target);
}

}  // namespace compnum
