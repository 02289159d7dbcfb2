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

// Exhaustive verification harness: runs property checks over every
// non-isomorphic graph up to a given order.

#pragma once

#include <algorithm>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "compnum/bounds.hpp"
#include "compnum/competition.hpp"
#include "compnum/generators.hpp"
#include "compnum/io.hpp"
#include "compnum/structure.hpp"

namespace compnum {

enum class Check { opsut, main, ecc, trianglefree, onetriangle, twotriangle, tight, isolatedlaw, pendantlaw };

inline const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks{Check::opsut,       Check::main,        Check::ecc,
                                         Check::trianglefree, Check::onetriangle, Check::twotriangle,
                                         Check::tight,        Check::isolatedlaw, Check::pendantlaw};
  return checks;
}

inline std::string check_name(Check c) {
  switch (c) {
    case Check::opsut: return "opsut";
    case Check::main: return "main";
    case Check::ecc: return "ecc";
    case Check::trianglefree: return "trianglefree";
    case Check::onetriangle: return "onetriangle";
    case Check::twotriangle: return "twotriangle";
    case Check::tight: return "tight";
    case Check::isolatedlaw: return "isolatedlaw";
    case Check::pendantlaw: return "pendantlaw";
  }
  return "";
}

inline std::optional<Check> check_from_name(const std::string& s) {
  for (Check c : all_checks())
    if (check_name(c) == s) return c;
  return std::nullopt;
}

/// Largest order each check supports; everything but ecc needs exact k.
inline std::size_t max_order(Check c) { return c == Check::ecc ? 7 : 6; }

/// Outcome of one check on one graph.
struct CheckResult {
  bool applicable = false;
  std::optional<std::string> failure;
};

/// Everything the checks need about a graph, computed once.
struct GraphFacts {
  Graph g;
  BoundsReport bounds;
  std::optional<CompetitionResult> exact;
  std::vector<Triangle> tris;
  bool connected = false;

  Count k() const { return static_cast<Count>(exact->k); }
  bool tight() const { return is_tight_value(k(), bounds.theta_E, g.n()); }
};

inline GraphFacts gather_facts(const Graph& g, bool with_exact, std::size_t cap = kDefaultSolverCap) {
  GraphFacts f;
  f.g = g;
  if (with_exact) f.exact = competition_number_exact(g, cap);
  f.bounds = compute_bounds(g, f.exact ? std::optional<Count>(static_cast<Count>(f.exact->k)) : std::nullopt);
  f.tris = triangles(g);
  f.connected = is_connected(g);
  return f;
}

namespace detail {

inline std::string num(Count v) { return std::to_string(v); }

inline CheckResult fail_if(bool bad, std::string msg) {
  CheckResult r{true, std::nullopt};
  if (bad) r.failure = std::move(msg);
  return r;
}

inline CheckResult run_check(Check c, const GraphFacts& f, std::size_t cap) {
  const Graph& g = f.g;
  const BoundsReport& b = f.bounds;
  const Count n = static_cast<Count>(g.n());
  const Count m = static_cast<Count>(g.m());
  switch (c) {
    case Check::opsut: {
      bool ok = b.opsut_lower <= f.k() && f.k() <= b.theta_E && verify_realization(g, f.exact->witness);
      return fail_if(!ok, "expected " + num(b.opsut_lower) + " <= k = " + num(f.k()) + " <= theta_E = " +
                              num(b.theta_E) + " with a valid witness");
    }
    case Check::main: {
      bool ok = b.opsut_lower <= f.k() && f.k() <= b.main_upper && b.main_upper <= b.theta_E;
      return fail_if(!ok, "expected " + num(b.opsut_lower) + " <= k = " + num(f.k()) + " <= main_upper = " +
                              num(b.main_upper) + " <= theta_E = " + num(b.theta_E));
    }
    case Check::ecc: {
      bool ok = b.theta_E == b.theta_E_restricted_triangle + b.not_in_triangle_count;
      return fail_if(!ok, "theta_E = " + num(b.theta_E) + " but restricted + |E_not_tri| = " +
                              num(b.theta_E_restricted_triangle) + " + " + num(b.not_in_triangle_count));
    }
    case Check::trianglefree: {
      if (!f.tris.empty()) return {};
      Count formula = triangle_free_k(g);
      TightnessVerdict v = is_competitively_tight(g, false);
      bool verdict_ok = v.rule == Rule::triangle_free && (v.status == TightStatus::tight) == f.tight();
      return fail_if(formula != f.k() || !verdict_ok,
                     "formula k = " + num(formula) + ", exact k = " + num(f.k()) + ", verdict " + status_label(v.status));
    }
    case Check::onetriangle: {
      if (!f.connected || f.tris.size() != 1) return {};
      OneTriangleResult r = classify_one_triangle(g);
      bool ok = r.k == f.k() && (r.verdict.status == TightStatus::tight) == f.tight();
      return fail_if(!ok, "formula k = " + num(r.k) + ", exact k = " + num(f.k()));
    }
    case Check::twotriangle: {
      if (!f.connected || f.tris.size() != 2) return {};
      std::size_t shared = 0;
      for (Vertex a : f.tris[0])
        if (std::find(f.tris[1].begin(), f.tris[1].end(), a) != f.tris[1].end()) ++shared;
      const Count d = m - n;
      const Count k = f.k();
      bool in_range = shared == 2 ? (k == d || k == d - 1) : (k == d || k == d - 1 || k == d - 2);
      bool chordal = is_chordal(g).chordal;
      TightnessVerdict v = classify_two_triangle(g);
      bool verdict_ok = v.status == TightStatus::needs_exact || (v.status == TightStatus::tight) == f.tight();
      bool ok = in_range && !(chordal && f.tight()) && verdict_ok;
      return fail_if(!ok, "k = " + num(k) + ", |E|-|V| = " + num(d) + (shared == 2 ? ", shared edge" : ", edge-disjoint") +
                              (chordal ? ", chordal" : "") + ", verdict " + status_label(v.status));
    }
    case Check::tight: {
      TightnessVerdict v = is_competitively_tight(g, false);
      bool sound = v.status == TightStatus::needs_exact || (v.status == TightStatus::tight) == f.tight();
      bool suff_ok = !sufficient_condition(g, b) || f.tight();
      bool nec_ok = necessary_condition(g, b) || !f.tight();
      return fail_if(!(sound && suff_ok && nec_ok),
                     "verdict " + status_label(v.status) + " (" + rule_label(v.rule) + "), exact k = " + num(f.k()) +
                         ", theta_E-|V|+2 = " + num(b.unfloored_lower(g.n())));
    }
    case Check::isolatedlaw: {
      if (g.n() > 5) return {};
      for (std::size_t t = 0; t <= 3; ++t) {
        Count padded = static_cast<Count>(competition_number_exact(add_isolated(g, t), cap).k);
        Count expect = std::max<Count>(0, f.k() - static_cast<Count>(t));
        if (padded != expect)
          return fail_if(true, "k(G u I_" + std::to_string(t) + ") = " + num(padded) + ", expected " + num(expect));
      }
      return {true, std::nullopt};
    }
    case Check::pendantlaw: {
      if (g == complete(2)) return {};
      bool any = false;
      for (Vertex v = 0; v < g.n(); ++v) {
        if (g.degree(v) != 1) continue;
        any = true;
        Count reduced = static_cast<Count>(competition_number_exact(remove_vertex(g, v), cap).k);
        if (reduced != f.k())
          return fail_if(true, "deleting pendant vertex " + std::to_string(v + 1) + " gives k = " + num(reduced) +
                                   ", k(G) = " + num(f.k()));
      }
      if (!any) return {};
      return {true, std::nullopt};
    }
  }
  return {};
}

}  // namespace detail

struct CheckSummary {
  Check check = Check::opsut;
  std::size_t tested = 0;
  std::size_t failures = 0;
  std::optional<std::string> first_counterexample;  // edge list plus message
};

struct VerifySummary {
  std::size_t max_n = 0;
  std::size_t graphs = 0;
  std::vector<CheckSummary> checks;
  /// n -> (tight graphs, graphs), filled when the tight check runs.
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> tight_census;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckSummary& c) { return c.failures == 0; });
  }
};

/// Runs `checks` over all non-isomorphic graphs with 1..max_n vertices.
/// Graphs are split across `jobs` workers; results are merged in enumeration
/// order, so output does not depend on `jobs`. Throws UnsupportedSize if
/// max_n is too large for a selected check.
inline VerifySummary run_verify(std::size_t max_n, const std::vector<Check>& checks, std::size_t jobs = 1,
                                std::size_t cap = kDefaultSolverCap) {
  for (Check c : checks)
    if (max_n > max_order(c))
      throw UnsupportedSize("check '" + check_name(c) + "' supports max_n <= " + std::to_string(max_order(c)));
  const bool need_exact = std::any_of(checks.begin(), checks.end(), [](Check c) { return c != Check::ecc; });
  const std::vector<Graph> graphs = all_graphs_up_to(max_n);

  struct PerGraph {
    std::vector<CheckResult> results;
    bool tight = false;
  };
  auto evaluate = [&](const Graph& g) {
    PerGraph p;
    GraphFacts f = gather_facts(g, need_exact, cap);
    for (Check c : checks) p.results.push_back(detail::run_check(c, f, cap));
    if (f.exact) p.tight = f.tight();
    return p;
  };

  std::vector<PerGraph> per(graphs.size());
  jobs = std::max<std::size_t>(1, std::min(jobs, graphs.size()));
  std::vector<std::future<void>> workers;
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < graphs.size(); i += jobs) per[i] = evaluate(graphs[i]);
    }));
  }
  for (auto& w : workers) w.get();

  VerifySummary s;
  s.max_n = max_n;
  s.graphs = graphs.size();
  for (Check c : checks) s.checks.push_back({c, 0, 0, std::nullopt});
  const bool census = std::find(checks.begin(), checks.end(), Check::tight) != checks.end();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t j = 0; j < checks.size(); ++j) {
      const CheckResult& r = per[i].results[j];
      if (!r.applicable) continue;
      ++s.checks[j].tested;
      if (r.failure) {
        if (++s.checks[j].failures == 1) s.checks[j].first_counterexample = to_edge_list(graphs[i]) + "c " + *r.failure + "\n";
      }
    }
    if (census) {
      auto& entry = s.tight_census[graphs[i].n()];
      entry.second += 1;
      if (per[i].tight) entry.first += 1;
    }
  }
  return s;
}

}  // namespace compnum
