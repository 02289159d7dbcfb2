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

#include "compnum/generators.hpp"
#include "compnum/structure.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace compnum {
namespace {

Graph paw() { return from_edge_list(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}); }

TEST(Triangles, Examples) {
  EXPECT_EQ(triangles(complete(4)).size(), 4u);
  EXPECT_TRUE(triangles(cycle(5)).empty());
  EXPECT_EQ(triangles(paw()), (std::vector<Triangle>{{0, 1, 2}}));
}

TEST(EdgePartition, Paw) {
  EdgePartition p = edge_triangle_partition(paw());
  EXPECT_EQ(p.in_triangle, (EdgeList{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(p.not_in_triangle, (EdgeList{{2, 3}}));
}

TEST(EdgePartition, CompleteAndCycle) {
  EXPECT_EQ(edge_triangle_partition(complete(3)).in_triangle.size(), 3u);
  EXPECT_EQ(edge_triangle_partition(cycle(4)).not_in_triangle.size(), 4u);
  EXPECT_TRUE(edge_triangle_partition(edgeless(3)).in_triangle.empty());
}

TEST(EdgePartition, MatchesBruteForce) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : all_graphs(n, true)) {
      EdgePartition p = edge_triangle_partition(g);
      EXPECT_EQ(p.in_triangle.size() + p.not_in_triangle.size(), g.m());
      for (const auto& e : p.in_triangle) EXPECT_TRUE(oracle::edge_in_triangle(g, e));
      for (const auto& e : p.not_in_triangle) EXPECT_FALSE(oracle::edge_in_triangle(g, e));
    }
  }
}

TEST(Chordality, Examples) {
  EXPECT_FALSE(is_chordal(cycle(4)).chordal);
  EXPECT_TRUE(is_chordal(complete(5)).chordal);
  EXPECT_TRUE(is_chordal(path(6)).chordal);
  ChordalityResult r = is_chordal(paw());
  ASSERT_TRUE(r.chordal);
  EXPECT_TRUE(is_perfect_elimination_order(paw(), r.elimination_order));
  EXPECT_FALSE(is_perfect_elimination_order(cycle(4), {0, 1, 2, 3}));
}

TEST(Chordality, EquivalentToNoHoles) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const Graph& g : all_graphs(n, true)) {
      ChordalityResult r = is_chordal(g);
      EXPECT_EQ(r.chordal, holes(g, 1).empty());
      if (n <= 6) {
        EXPECT_EQ(r.chordal, oracle::hole_count(g) == 0);
      }
      if (r.chordal) {
        EXPECT_TRUE(is_perfect_elimination_order(g, r.elimination_order));
      }
    }
  }
}

TEST(Holes, CountsMatchOracle) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const Graph& g : all_graphs(n, true)) EXPECT_EQ(holes(g, kUnlimited).size(), oracle::hole_count(g));
  EXPECT_EQ(holes(cycle(5)).size(), 1u);
  EXPECT_EQ(holes(complete_bipartite(3, 3), kUnlimited).size(), 9u);
  EXPECT_EQ(holes(complete_bipartite(3, 3)).size(), 2u);
}

TEST(Holes, CanonicalStart) {
  auto h = holes(cycle(5));
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h[0], (std::vector<Vertex>{0, 1, 2, 3, 4}));
}

TEST(Blocks, PawAndBowtie) {
  auto b = blocks(paw());
  ASSERT_EQ(b.size(), 2u);
  Graph bowtie = from_edge_list(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  EXPECT_EQ(blocks(bowtie).size(), 2u);
  EXPECT_EQ(cycle_vertices(bowtie).count(), 5u);
  EXPECT_FALSE(has_cycle_geq4(bowtie));
}

TEST(CycleVertices, MatchesDfs) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : all_graphs(n, true)) {
      std::set<Vertex> expect = oracle::cycle_vertices(g);
      std::vector<Vertex> got = cycle_vertices(g).to_vector();
      EXPECT_EQ(std::set<Vertex>(got.begin(), got.end()), expect);
      EXPECT_EQ(has_cycle_geq4(g), oracle::has_cycle_geq4(g));
    }
  }
}

TEST(CycleGeq4, Examples) {
  EXPECT_FALSE(has_cycle_geq4(complete(3)));
  EXPECT_TRUE(has_cycle_geq4(cycle(4)));
  EXPECT_TRUE(has_cycle_geq4(complete(4)));
  EXPECT_FALSE(has_cycle_geq4(path(5)));
}

TEST(Components, Basic) {
  Graph g = from_edge_list(5, {{0, 1}, {2, 3}});
  EXPECT_EQ(connected_components(g).size(), 3u);
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(is_connected(cycle(4)));
  EXPECT_TRUE(is_connected(edgeless(1)));
}

TEST(BasicStats, Fields) {
  Graph g = from_edge_list(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  BasicStats s = basic_stats(g);
  EXPECT_EQ(s.isolated_count, 1u);
  EXPECT_EQ(s.pendant_vertices, (std::vector<Vertex>{3}));
  EXPECT_EQ(s.components, 2u);
  EXPECT_EQ(s.degree_sequence, (std::vector<std::size_t>{3, 2, 2, 1, 0}));
  EXPECT_TRUE(is_complete(complete(4)));
  EXPECT_TRUE(is_edgeless(edgeless(3)));
}

}  // namespace
}  // namespace compnum
