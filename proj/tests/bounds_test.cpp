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

#include <random>

#include "compnum/bounds.hpp"
#include "compnum/generators.hpp"
#include "compnum/io.hpp"
#include "compnum/report.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace compnum {
namespace {

Graph paw() { return from_edge_list(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}); }

TEST(OpsutBounds, Examples) {
  EXPECT_EQ(opsut_bounds(cycle(4)), (std::pair<Count, Count>{2, 4}));
  EXPECT_EQ(opsut_bounds(complete(4)), (std::pair<Count, Count>{0, 1}));
  EXPECT_EQ(opsut_bounds(edgeless(1)), (std::pair<Count, Count>{0, 0}));
}

TEST(MainUpperBound, Examples) {
  EXPECT_EQ(main_upper_bound(paw()), 2);
  EXPECT_EQ(main_upper_bound(complete(4)), 1);
  EXPECT_EQ(main_upper_bound(cycle(5)), 2);
  EXPECT_EQ(main_upper_bound(g_tn(3, 1)), 2);
  EXPECT_EQ(main_upper_bound(g_tn(4, 1)), 2);
  EXPECT_EQ(main_upper_bound(g_tn(3, 2)), 3);
}

TEST(ComputeBounds, SandwichHoldsWithExact) {
  for (std::size_t n = 2; n <= 6; ++n)
    for (const Graph& g : all_graphs(n, true)) {
      BoundsReport b = compute_bounds(g, static_cast<Count>(competition_number_exact(g).k));
      EXPECT_TRUE(b.is_consistent()) << to_edge_list(g);
      EXPECT_EQ(b.theta_E, b.theta_E_restricted_triangle + b.not_in_triangle_count);
    }
}

TEST(TriangleFreeK, Formula) {
  EXPECT_EQ(triangle_free_k(edgeless(1)), 0);
  EXPECT_EQ(triangle_free_k(cycle(4)), 2);
  EXPECT_EQ(triangle_free_k(path(4)), 1);
  EXPECT_EQ(triangle_free_k(edgeless(3)), 0);
  EXPECT_EQ(triangle_free_k(add_isolated(cycle(5), 1)), 1);
  EXPECT_THROW(triangle_free_k(complete(3)), InvalidArgument);
}

TEST(TriangleFreeK, MatchesExact) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const Graph& g : all_graphs(n, true)) {
      if (!triangles(g).empty()) continue;
      EXPECT_EQ(triangle_free_k(g), static_cast<Count>(competition_number_exact(g).k)) << to_edge_list(g);
    }
}

TEST(OneTriangle, PawAndTriangleWithSquare) {
  OneTriangleResult p = classify_one_triangle(paw());
  EXPECT_EQ(p.k, 1);
  EXPECT_EQ(p.verdict.status, TightStatus::not_tight);
  Graph house = from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}});
  OneTriangleResult h = classify_one_triangle(house);
  EXPECT_EQ(h.k, 1);
  EXPECT_EQ(h.verdict.status, TightStatus::tight);
  EXPECT_THROW(classify_one_triangle(cycle(4)), InvalidArgument);
}

TEST(OneTriangle, CyclomaticPropertyAndExact) {
  for (std::size_t n = 3; n <= 7; ++n)
    for (const Graph& g : all_graphs(n, true)) {
      if (!is_connected(g) || triangles(g).size() != 1) continue;
      EXPECT_EQ(has_cycle_geq4(g), oracle::has_cycle_geq4(g));
      if (n <= 6) {
        EXPECT_EQ(classify_one_triangle(g).k, static_cast<Count>(competition_number_exact(g).k));
      }
    }
}

TEST(TwoTriangle, ChordalIsNotTight) {
  Graph diamond = from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  TightnessVerdict v = classify_two_triangle(diamond);
  EXPECT_EQ(v.status, TightStatus::not_tight);
  EXPECT_EQ(v.rule, Rule::two_triangle);
  EXPECT_THROW(classify_two_triangle(paw()), InvalidArgument);
}

TEST(TwoTriangle, SoundAgainstExact) {
  for (std::size_t n = 4; n <= 6; ++n)
    for (const Graph& g : all_graphs(n, true)) {
      if (!is_connected(g) || triangles(g).size() != 2) continue;
      TightnessVerdict v = classify_two_triangle(g);
      if (v.status == TightStatus::needs_exact) continue;
      BoundsReport b = compute_bounds(g);
      bool tight = is_tight_value(static_cast<Count>(competition_number_exact(g).k), b.theta_E, g.n());
      EXPECT_EQ(v.status == TightStatus::tight, tight) << to_edge_list(g);
    }
}

TEST(Classifier, Examples) {
  EXPECT_EQ(is_competitively_tight(cycle(4), false).status, TightStatus::tight);
  EXPECT_EQ(is_competitively_tight(cycle(4), false).rule, Rule::triangle_free);
  EXPECT_EQ(is_competitively_tight(edgeless(1), false).status, TightStatus::not_tight);
  EXPECT_EQ(is_competitively_tight(paw(), false).status, TightStatus::not_tight);
  EXPECT_EQ(is_competitively_tight(complete(4), false).status, TightStatus::not_tight);
  TightnessVerdict g = is_competitively_tight(g_tn(3, 1), false);
  EXPECT_EQ(g.status, TightStatus::tight);
}

TEST(Classifier, SoundOnAllSmallGraphs) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const Graph& g : all_graphs(n, true)) {
      BoundsReport b;
      TightnessVerdict exact = is_competitively_tight(g, ClassifyOptions{true, kDefaultSolverCap}, &b);
      ASSERT_NE(exact.status, TightStatus::needs_exact);
      Count k = static_cast<Count>(competition_number_exact(g).k);
      EXPECT_EQ(exact.status == TightStatus::tight, is_tight_value(k, b.theta_E, g.n())) << to_edge_list(g);
      TightnessVerdict quick = is_competitively_tight(g, false);
      if (quick.status != TightStatus::needs_exact) {
        EXPECT_EQ(quick.status, exact.status) << to_edge_list(g);
      }
    }
}

TEST(Classifier, FillsExactWhenUsed) {
  Graph circ = circulant(7, 2);
  BoundsReport b;
  TightnessVerdict v = is_competitively_tight(circ, ClassifyOptions{true, kDefaultSolverCap}, &b);
  if (v.rule == Rule::exact) {
    ASSERT_TRUE(b.exact.has_value());
    EXPECT_EQ(*b.exact, 2);
  }
  EXPECT_EQ(v.status, TightStatus::tight);
}

TEST(Conditions, SufficientImpliesTightNecessaryHolds) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const Graph& g : all_graphs(n, true)) {
      Count k = static_cast<Count>(competition_number_exact(g).k);
      BoundsReport b = compute_bounds(g, k);
      bool tight = is_tight_value(k, b.theta_E, g.n());
      if (sufficient_condition(g, b)) {
        EXPECT_TRUE(tight) << to_edge_list(g);
      }
      if (tight) {
        EXPECT_TRUE(necessary_condition(g, b)) << to_edge_list(g);
      }
    }
}

TEST(Reduction, KeepsTightnessAndK) {
  for (std::size_t n = 2; n <= 6; ++n)
    for (const Graph& g : all_graphs(n, true)) {
      Reduction r = reduce_preserving_tightness(g);
      Count k = static_cast<Count>(competition_number_exact(g).k);
      Count rk = static_cast<Count>(competition_number_exact(r.graph).k);
      EXPECT_EQ(k, rk) << to_edge_list(g);
      EXPECT_EQ(is_tight_value(k, compute_bounds(g).theta_E, g.n()),
                is_tight_value(rk, compute_bounds(r.graph).theta_E, r.graph.n()))
          << to_edge_list(g);
    }
}

TEST(Reduction, KeepsK2Components) {
  Graph two_k2 = from_edge_list(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(reduce_preserving_tightness(two_k2).graph, two_k2);
  Reduction p = reduce_preserving_tightness(path(5));
  EXPECT_EQ(p.graph, complete(2));
  EXPECT_EQ(p.removed_pendants.size(), 3u);
}

Report sample_report() {
  Report r;
  r.input_path = "g.txt";
  r.n = 4;
  r.m = 4;
  r.bounds = compute_bounds(cycle(4), 2);
  r.verdict = is_competitively_tight(cycle(4), false);
  r.realization = "g.txt.dig";
  r.timing_ms = 1.5;
  return r;
}

TEST(ReportJson, RoundTrip) {
  Report r = sample_report();
  EXPECT_EQ(report_from_json(to_json(r).dump()), r);
  r.bounds.exact.reset();
  r.realization.reset();
  EXPECT_EQ(report_from_json(to_json(r).dump()), r);
}

TEST(ReportJson, Strict) {
  auto j = to_json(sample_report());
  auto extra = j;
  extra["surprise"] = 1;
  EXPECT_THROW(report_from_json(extra), MalformedInput);
  auto missing = j;
  missing.erase("main_upper");
  EXPECT_THROW(report_from_json(missing), MalformedInput);
  auto fractional = j;
  fractional["theta_E"] = 4.5;
  EXPECT_THROW(report_from_json(fractional), MalformedInput);
  auto bad_rule = j;
  bad_rule["verdict"]["rule"] = "nope";
  EXPECT_THROW(report_from_json(bad_rule), MalformedInput);
  EXPECT_THROW(report_from_json(std::string("{not json")), MalformedInput);
}

TEST(ReportJson, KeyOrder) {
  auto j = to_json(sample_report());
  std::vector<std::string> keys;
  for (auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"input", "theta_E", "theta_E_restricted_triangle", "not_in_triangle_count",
                                            "opsut_lower", "opsut_upper", "main_upper", "exact", "verdict",
                                            "realization", "timing_ms"}));
}

}  // namespace
}  // namespace compnum
