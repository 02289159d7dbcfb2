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

// Closed-form bounds on k(G) and the competitive-tightness classifier.
//
// G is competitively tight when k(G) = theta_E(G) - |V(G)| + 2, i.e. when the
// clique-cover lower bound on the competition number is attained.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "compnum/clique_cover.hpp"
#include "compnum/competition.hpp"
#include "compnum/error.hpp"
#include "compnum/graph.hpp"
#include "compnum/structure.hpp"

namespace compnum {

using Count = std::int64_t;

/// Every bound-related quantity for one graph.
struct BoundsReport {
  Count opsut_lower = 0;  // max(0, theta_E - n + 2); 0 when n <= 1
  Count opsut_upper = 0;  // theta_E
  Count main_upper = 0;
  std::optional<Count> exact;
  Count theta_E = 0;
  Count theta_E_restricted_triangle = 0;  // theta_E(E_tri(G); G)
  Count not_in_triangle_count = 0;        // |E_not_tri(G)|

  /// theta_E - n + 2 without the floor at zero.
  Count unfloored_lower(std::size_t n) const { return theta_E - static_cast<Count>(n) + 2; }

  bool is_consistent() const {
    if (!(opsut_lower <= main_upper && main_upper <= opsut_upper)) return false;
    if (exact && !(opsut_lower <= *exact && *exact <= main_upper)) return false;
    return true;
  }
};

/// The three inputs of the refined upper bound for one graph.
struct TriangleSplit {
  Count theta_restricted = 0;
  Count not_in_triangle = 0;
  Count n = 0;
};

inline Count main_upper_from(const TriangleSplit& s) {
  Count tail = std::max(std::min<Count>(1, s.not_in_triangle), s.not_in_triangle - s.n + 2);
  return s.theta_restricted + tail;
}

inline TriangleSplit triangle_split(const Graph& g) {
  EdgePartition part = edge_triangle_partition(g);
  TriangleSplit s;
  s.theta_restricted = static_cast<Count>(theta_E_restricted(part.in_triangle, g).size);
  s.not_in_triangle = static_cast<Count>(part.not_in_triangle.size());
  s.n = static_cast<Count>(g.n());
  return s;
}

/// (max(0, theta_E - n + 2), theta_E); the lower value is 0 when n <= 1.
inline std::pair<Count, Count> opsut_bounds(const Graph& g) {
  std::size_t theta = theta_E(g).size;
  return {static_cast<Count>(clique_cover_lower_bound(theta, g.n())), static_cast<Count>(theta)};
}

/// theta_E(E_tri; G) + max{min{1, |E_not_tri|}, |E_not_tri| - n + 2}.
inline Count main_upper_bound(const Graph& g) { return main_upper_from(triangle_split(g)); }

/// k(G) for triangle-free G. Throws InvalidArgument if G has a triangle.
inline Count triangle_free_k(const Graph& g) {
  if (!triangles(g).empty()) throw InvalidArgument("triangle_free_k: graph has a triangle");
  const Count n = static_cast<Count>(g.n());
  const Count m = static_cast<Count>(g.m());
  if (n == 1) return 0;
  if (basic_stats(g).isolated_count == 0) return std::max<Count>(1, m - n + 2);
  return std::max<Count>(0, m - n + 2);
}

inline BoundsReport compute_bounds(const Graph& g, std::optional<Count> exact = std::nullopt) {
  BoundsReport r;
  TriangleSplit s = triangle_split(g);
  r.theta_E = static_cast<Count>(theta_E(g).size);
  r.theta_E_restricted_triangle = s.theta_restricted;
  r.not_in_triangle_count = s.not_in_triangle;
  r.opsut_upper = r.theta_E;
  r.opsut_lower = static_cast<Count>(clique_cover_lower_bound(static_cast<std::size_t>(r.theta_E), g.n()));
  r.main_upper = main_upper_from(s);
  r.exact = exact;
  return r;
}

enum class TightStatus { tight, not_tight, needs_exact };

/// Rule identifiers serialize to the labels in rule_label().
enum class Rule {
  triangle_free,      // "cor:TF"
  sufficient,         // "cor:sufficient"
  necessary,          // "prop:nec"
  one_triangle,       // "prop:ctonetr"
  two_triangle,       // "thm:twotri"
  bound_sandwich,     // "thm:main-sandwich"
  exact,              // "exact"
  undecided,          // "undecided"
};

inline std::string rule_label(Rule r) {
  switch (r) {
    case Rule::triangle_free: return "cor:TF";
    case Rule::sufficient: return "cor:sufficient";
    case Rule::necessary: return "prop:nec";
    case Rule::one_triangle: return "prop:ctonetr";
    case Rule::two_triangle: return "thm:twotri";
    case Rule::bound_sandwich: return "thm:main-sandwich";
    case Rule::exact: return "exact";
    case Rule::undecided: return "undecided";
  }
  return "undecided";
}

inline std::optional<Rule> rule_from_label(const std::string& s) {
  for (Rule r : {Rule::triangle_free, Rule::sufficient, Rule::necessary, Rule::one_triangle,
                 Rule::two_triangle, Rule::bound_sandwich, Rule::exact, Rule::undecided})
    if (rule_label(r) == s) return r;
  return std::nullopt;
}

inline std::string status_label(TightStatus s) {
  switch (s) {
    case TightStatus::tight: return "tight";
    case TightStatus::not_tight: return "not_tight";
    case TightStatus::needs_exact: return "needs_exact";
  }
  return "needs_exact";
}

inline std::optional<TightStatus> status_from_label(const std::string& s) {
  for (TightStatus t : {TightStatus::tight, TightStatus::not_tight, TightStatus::needs_exact})
    if (status_label(t) == s) return t;
  return std::nullopt;
}

struct TightnessVerdict {
  TightStatus status = TightStatus::needs_exact;
  Rule rule = Rule::undecided;
  std::string detail;

  friend bool operator==(const TightnessVerdict&, const TightnessVerdict&) = default;
};

/// Definitional check given a known k(G).
inline bool is_tight_value(Count k, Count theta, std::size_t n) { return k == theta - static_cast<Count>(n) + 2; }

struct OneTriangleResult {
  Count k = 0;
  TightnessVerdict verdict;
};

/// Connected G with exactly one triangle: k = |E|-|V| if G has a cycle of
/// length >= 4, else |E|-|V|+1; tight exactly in the first case.
inline OneTriangleResult classify_one_triangle(const Graph& g) {
  if (!is_connected(g) || triangles(g).size() != 1)
    throw InvalidArgument("classify_one_triangle: graph must be connected with exactly one triangle");
  const Count diff = static_cast<Count>(g.m()) - static_cast<Count>(g.n());
  OneTriangleResult r;
  r.verdict.rule = Rule::one_triangle;
  if (has_cycle_geq4(g)) {
    r.k = diff;
    r.verdict.status = TightStatus::tight;
    r.verdict.detail = "one triangle and a cycle of length >= 4: k = |E|-|V| = theta_E-|V|+2";
  } else {
    r.k = diff + 1;
    r.verdict.status = TightStatus::not_tight;
    r.verdict.detail = "one triangle and no cycle of length >= 4: k = |E|-|V|+1 = theta_E-|V|+3";
  }
  return r;
}

/// Connected G with exactly two triangles. Decides only the cases that do
/// not depend on the subdivision families of two-triangle graphs; those are
/// reported as needs_exact.
inline TightnessVerdict classify_two_triangle(const Graph& g) {
  auto tris = triangles(g);
  if (!is_connected(g) || tris.size() != 2)
    throw InvalidArgument("classify_two_triangle: graph must be connected with exactly two triangles");
  std::size_t shared_vertices = 0;
  for (Vertex a : tris[0])
    if (std::find(tris[1].begin(), tris[1].end(), a) != tris[1].end()) ++shared_vertices;
  const bool share_edge = shared_vertices == 2;
  const Count m = static_cast<Count>(g.m());
  const std::string relation = share_edge ? "triangles share one of their edges, theta_E = |E|-3 = " +
                                                std::to_string(m - 3)
                                          : "triangles are edge-disjoint, theta_E = |E|-4 = " +
                                                std::to_string(m - 4);
  TightnessVerdict v;
  v.rule = Rule::two_triangle;
  if (is_chordal(g).chordal) {
    v.status = TightStatus::not_tight;
    v.detail = relation + "; chordal, so k >= theta_E-|V|+3";
    return v;
  }
  if (!share_edge && holes(g, 2).size() < 2) {
    v.status = TightStatus::not_tight;
    v.detail = relation + "; exactly one hole, so k = |E|-|V|-1";
    return v;
  }
  v.status = TightStatus::needs_exact;
  v.detail = relation + "; verdict depends on subdivision-family membership of the cycle-vertex subgraph";
  return v;
}

/// |E_not_tri| >= n - i(G) - 1 and i(G) <= k(G), the latter certified by
/// i(G) <= max(0, theta_E - n + 2). False when it cannot be certified.
inline bool sufficient_condition(const Graph& g, const BoundsReport& b) {
  const Count n = static_cast<Count>(g.n());
  const Count isolated = static_cast<Count>(basic_stats(g).isolated_count);
  if (b.not_in_triangle_count < n - isolated - 1) return false;
  Count known_lower = b.exact ? *b.exact : b.opsut_lower;
  return isolated <= known_lower;
}
inline bool sufficient_condition(const Graph& g) { return sufficient_condition(g, compute_bounds(g)); }

/// |E_not_tri| >= n - theta_E(E_tri; G) - 2. Every tight graph satisfies it.
inline bool necessary_condition(const Graph& g, const BoundsReport& b) {
  return b.not_in_triangle_count >= static_cast<Count>(g.n()) - b.theta_E_restricted_triangle - 2;
}
inline bool necessary_condition(const Graph& g) { return necessary_condition(g, compute_bounds(g)); }

struct ClassifyOptions {
  bool allow_exact = false;
  std::size_t cap = kDefaultSolverCap;
};

/// Classifier pipeline; the first rule that decides wins. `bounds` is filled
/// in (including the exact value when the exact fallback ran).
inline TightnessVerdict is_competitively_tight(const Graph& g, const ClassifyOptions& opt, BoundsReport* bounds_out = nullptr) {
  BoundsReport b = compute_bounds(g);
  auto finish = [&](TightStatus s, Rule r, std::string detail) {
    if (bounds_out) *bounds_out = b;
    return TightnessVerdict{s, r, std::move(detail)};
  };
  const Count n = static_cast<Count>(g.n());
  const Count m = static_cast<Count>(g.m());
  const auto tris = triangles(g);
  const BasicStats stats = basic_stats(g);
  const Count isolated = static_cast<Count>(stats.isolated_count);

  if (tris.empty()) {
    bool tight = n >= 2 && ((isolated == 0 && m >= n - 1) || (isolated > 0 && m >= n - 2));
    std::string why = isolated == 0 ? "triangle-free, no isolated vertices, |E| " + std::string(m >= n - 1 ? ">=" : "<") + " |V|-1"
                                    : "triangle-free with isolated vertices, |E| " + std::string(m >= n - 2 ? ">=" : "<") + " |V|-2";
    if (n < 2) why = "fewer than two vertices: k = 0 but theta_E-|V|+2 > 0";
    return finish(tight ? TightStatus::tight : TightStatus::not_tight, Rule::triangle_free, why);
  }
  if (sufficient_condition(g, b))
    return finish(TightStatus::tight, Rule::sufficient,
                  "|E_not_tri| = " + std::to_string(b.not_in_triangle_count) + " >= |V|-i(G)-1 and i(G) <= lower bound");
  if (!necessary_condition(g, b))
    return finish(TightStatus::not_tight, Rule::necessary,
                  "|E_not_tri| = " + std::to_string(b.not_in_triangle_count) +
                      " < |V| - theta_E(E_tri;G) - 2, so theta_E-|V|+2 < 0");
  const bool connected = stats.components == 1;
  if (connected && tris.size() == 1) {
    TightnessVerdict v = classify_one_triangle(g).verdict;
    return finish(v.status, v.rule, v.detail);
  }
  if (connected && tris.size() == 2) {
    TightnessVerdict v = classify_two_triangle(g);
    if (v.status != TightStatus::needs_exact) return finish(v.status, v.rule, v.detail);
  }
  if (b.main_upper == b.unfloored_lower(g.n()))
    return finish(TightStatus::tight, Rule::bound_sandwich,
                  "upper bound " + std::to_string(b.main_upper) + " meets theta_E-|V|+2");
  if (opt.allow_exact) {
    Count k = static_cast<Count>(competition_number_exact(g, opt.cap).k);
    b.exact = k;
    bool tight = is_tight_value(k, b.theta_E, g.n());
    return finish(tight ? TightStatus::tight : TightStatus::not_tight, Rule::exact,
                  "exact k = " + std::to_string(k) + (tight ? " equals" : " differs from") + " theta_E-|V|+2 = " +
                      std::to_string(b.unfloored_lower(g.n())));
  }
  return finish(TightStatus::needs_exact, Rule::undecided,
                "bounds " + std::to_string(b.opsut_lower) + " <= k <= " + std::to_string(b.main_upper) +
                    " do not decide; rerun with exact search");
}

inline TightnessVerdict is_competitively_tight(const Graph& g, bool allow_exact) {
  return is_competitively_tight(g, ClassifyOptions{allow_exact, kDefaultSolverCap});
}

struct Reduction {
  Graph graph;
  /// Removed pendant vertices, as indices into the graph at removal time.
  std::vector<Vertex> removed_pendants;
  /// Isolated vertices of the final graph (recorded, never removed).
  std::vector<Vertex> isolated;
};

/// Deletes pendant vertices whose neighbor has degree >= 2, one at a time
/// (smallest index first), until none remain. Such deletions keep k(G) and
/// theta_E(G) - |V(G)|, hence tightness. A pendant vertex of a K_2 component
/// is kept: deleting it leaves a new isolated vertex that can change k.
inline Reduction reduce_preserving_tightness(const Graph& g) {
  Reduction r{g, {}, {}};
  while (true) {
    std::optional<Vertex> pick;
    for (Vertex v = 0; v < r.graph.n() && !pick; ++v) {
      if (r.graph.degree(v) != 1) continue;
      Vertex u = r.graph.neighbors(v).first();
      if (r.graph.degree(u) >= 2) pick = v;
    }
    if (!pick) break;
    r.removed_pendants.push_back(*pick);
    r.graph = remove_vertex(r.graph, *pick);
  }
  for (Vertex v = 0; v < r.graph.n(); ++v)
    if (r.graph.degree(v) == 0) r.isolated.push_back(v);
  return r;
}

}  // namespace compnum
