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

#include "compnum/clique_cover.hpp"
#include "compnum/generators.hpp"
#include "compnum/io.hpp"
#include "compnum/structure.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace compnum {
namespace {

TEST(MaximalCliques, Examples) {
  EXPECT_EQ(maximal_cliques(complete(4)).size(), 1u);
  EXPECT_EQ(maximal_cliques(cycle(5)).size(), 5u);
  auto iso = maximal_cliques(edgeless(2));
  ASSERT_EQ(iso.size(), 2u);
  EXPECT_EQ(iso[0].count(), 1u);
}

TEST(ThetaE, Examples) {
  EXPECT_EQ(theta_E(complete(4)).size, 1u);
  EXPECT_EQ(theta_E(cycle(4)).size, 4u);
  EXPECT_EQ(theta_E(cycle(3)).size, 1u);
  EXPECT_EQ(theta_E(edgeless(3)).size, 0u);
  EXPECT_EQ(theta_E(complete_bipartite(3, 3)).size, 9u);
  EXPECT_EQ(theta_E(circulant(7, 2)).size, 7u);
  EXPECT_EQ(theta_E(g_tn(3, 1)).size, 9u);
  EXPECT_EQ(theta_E(g_tn(4, 1)).size, 12u);
}

TEST(ThetaE, WitnessIsValid) {
  CoverResult r = theta_E(g_tn(3, 1));
  EXPECT_TRUE(r.witness.is_valid());
  EXPECT_EQ(r.witness.size(), r.size);
}

TEST(ThetaE, MatchesAllCliqueOracle) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const Graph& g : all_graphs(n, true)) {
      CoverResult r = theta_E(g);
      EXPECT_EQ(r.size, oracle::theta(g)) << to_edge_list(g);
      EXPECT_TRUE(r.witness.is_valid());
    }
}

TEST(ThetaE, MatchesOracleOnRandomSixVertexGraphs) {
  std::mt19937 rng(11);
  for (int i = 0; i < 60; ++i) {
    Graph g = oracle::random_graph(6, 0.5, rng);
    EXPECT_EQ(theta_E(g).size, oracle::theta(g));
  }
}

TEST(ThetaERestricted, Examples) {
  Graph paw = from_edge_list(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  EXPECT_EQ(theta_E_restricted({{0, 1}, {1, 2}, {0, 2}}, paw).size, 1u);
  EXPECT_EQ(theta_E_restricted({}, paw).size, 0u);
  EXPECT_EQ(theta_E_restricted({{2, 3}}, paw).size, 1u);
  EXPECT_THROW(theta_E_restricted({{0, 3}}, paw), InvalidArgument);
}

TEST(ThetaERestricted, MatchesOracleOnTriangleEdges) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const Graph& g : all_graphs(n, true)) {
      EdgeList f = edge_triangle_partition(g).in_triangle;
      CoverResult r = theta_E_restricted(f, g);
      if (n <= 5) {
        EXPECT_EQ(r.size, oracle::theta_restricted(f, g));
      }
      EXPECT_TRUE(r.witness.is_valid());
    }
}

TEST(GreedyCover, IsValidUpperBound) {
  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    Graph g = oracle::random_graph(7, 0.5, rng);
    CliqueCover c = greedy_cover(g.edges(), g);
    EXPECT_TRUE(c.is_valid());
    EXPECT_GE(c.size(), theta_E(g).size);
  }
}

TEST(EdgeCoverSolver, WithinRespectsLimit) {
  Graph g = cycle(5);
  EdgeCoverSolver s(g);
  EXPECT_FALSE(s.within(g.all_edges(), 4).has_value());
  auto c = s.within(g.all_edges(), 5);
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(c->witness.is_valid());
  EXPECT_LE(s.independent_edge_bound(g.all_edges()), 5u);
}

}  // namespace
}  // namespace compnum
