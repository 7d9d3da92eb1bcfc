// Copyright 2026 The BOLT Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bolt/shortest_paths.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "bolt/generators.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

namespace bolt {
namespace {

using testing::BruteForce;

TEST(Bfs, PathFromEnd) {
  const auto r = bfs(testing::path3(), 0);
  EXPECT_EQ(r.dist, (std::vector<double>{0, 1, 2}));
  EXPECT_EQ(r.sigma, (std::vector<double>{1, 1, 1}));
  EXPECT_EQ(r.order, (std::vector<NodeId>{0, 1, 2}));
}

TEST(Bfs, FourCycleOppositeNodeHasTwoPaths) {
  const Graph g = testing::cycle(4);
  for (NodeId s = 0; s < 4; ++s) {
    EXPECT_EQ(bfs(g, s).sigma[(s + 2) % 4], 2.0);
  }
}

TEST(Bfs, GridCornerPathCounts) {
  // Monotone lattice paths: C(2,1) = 2 to the center, C(4,2) = 6 across.
  const auto r = bfs(testing::grid(3, 3), 0);
  EXPECT_EQ(r.sigma[4], 2.0);
  EXPECT_EQ(r.sigma[8], 6.0);
  EXPECT_EQ(r.dist[8], 4.0);
  const auto preds = r.preds(8);
  EXPECT_EQ(std::vector<NodeId>(preds.begin(), preds.end()), (std::vector<NodeId>{5, 7}));
}

TEST(Bfs, UnreachableNodesUseInfinity) {
  const auto r = bfs(testing::two_components(), 0);
  EXPECT_TRUE(std::isinf(r.dist[5]));
  EXPECT_EQ(r.dist[5], kUnreachable);
  EXPECT_EQ(r.sigma[5], 0.0);
  EXPECT_EQ(r.order.size(), 4U);
}

TEST(Dependencies, PathFromEnd) {
  const Graph g = testing::path3();
  const auto d = dependencies(g, bfs(g, 0));
  EXPECT_EQ(d.delta, (std::vector<double>{0, 1, 0}));
}

TEST(Dependencies, StarCenterFromLeaf) {
  const Graph g = testing::star(3);
  EXPECT_EQ(dependencies(g, bfs(g, 1)).delta[0], 2.0);
}

TEST(Dependencies, GridCornerMatchesEnumeration) {
  const Graph g = testing::grid(3, 3);
  const BruteForce oracle(g);
  const auto d = dependencies(g, bfs(g, 0));
  for (NodeId v = 0; v < 9; ++v) {
    EXPECT_NEAR(d.delta[v], oracle.dependency(0, v), 1e-12) << v;
  }
}

TEST(Dependencies, ReusablePassMatchesOneShot) {
  const Graph g = generate_er(150, 0.04, RngSeed{12});
  SingleSourceBrandes pass(g);
  for (NodeId s : {0U, 7U, 3U, 7U, 120U}) {
    pass.run(s);
    const auto d = dependencies(g, bfs(g, s));
    for (NodeId v = 0; v < g.node_count(); ++v) {
      EXPECT_NEAR(pass.dependency(v), d.delta[v], 1e-12 * (1 + d.delta[v]));
    }
  }
}

TEST(ExactBetweenness, Path) {
  EXPECT_EQ(exact_betweenness(testing::path3()), (std::vector<double>{0, 2, 0}));
  EXPECT_EQ(exact_betweenness_single(testing::path3(), 1), 2.0);
  EXPECT_EQ(exact_betweenness_single(testing::path3(), 0), 0.0);
}

TEST(ExactBetweenness, StarCenter) {
  // 4 * 3 ordered leaf pairs.
  EXPECT_EQ(exact_betweenness(testing::star(4))[0], 12.0);
}

TEST(ExactBetweenness, GridMatchesOracleAndCenterIsMax) {
  const Graph g = testing::grid(3, 3);
  const auto bc = exact_betweenness(g);
  const auto expected = BruteForce(g).betweenness();
  for (NodeId v = 0; v < 9; ++v) EXPECT_NEAR(bc[v], expected[v], 1e-9);
  for (NodeId v = 0; v < 9; ++v) {
    if (v != 4) EXPECT_GT(bc[4], bc[v]);
  }
  EXPECT_NEAR(exact_betweenness_single(g, 4), bc[4], 1e-12);
}

TEST(ExactBetweenness, DisconnectedPairsContributeNothing) {
  const auto bc = exact_betweenness(testing::two_components());
  EXPECT_EQ(bc, (std::vector<double>{0, 4, 4, 0, 0, 0, 0}));
}

TEST(ExactBetweenness, ThreadCountDoesNotChangeScores) {
  const Graph g = generate_ba(300, 3, RngSeed{1});
  const auto one = exact_betweenness(g, 1);
  const auto four = exact_betweenness(g, 4);
  for (NodeId v = 0; v < g.node_count(); ++v) EXPECT_NEAR(one[v], four[v], 1e-9 * (1 + one[v]));
}

TEST(DependencyMatrix, ColumnsSumToBetweenness) {
  const Graph g = generate_er(80, 0.06, RngSeed{2});
  const NodeId n = g.node_count();
  const auto bc = exact_betweenness(g);
  const auto m = dependency_matrix(g);
  for (NodeId v = 0; v < n; ++v) {
    double sum = 0.0;
    for (NodeId s = 0; s < n; ++s) sum += m[std::size_t{s} * n + v];
    EXPECT_NEAR(sum, bc[v], 1e-9 * (1 + bc[v]));
    const auto col = dependencies_on(g, v);
    for (NodeId s = 0; s < n; ++s) EXPECT_EQ(col[s], m[std::size_t{s} * n + v]);
  }
}

// Reference mean count of zero-betweenness nodes per ER_1k_x instance, isolated
// nodes included. A +-50% band around the reference averages.
double mean_zero_bc(double p) {
  const std::uint64_t n = 1000;
  double total = 0.0;
  const int seeds = 5;
  for (int s = 0; s < seeds; ++s) {
    const Graph g = generate_er(n, p, RngSeed{static_cast<std::uint64_t>(100 + s)});
    const auto bc = exact_betweenness(g);
    const auto zero = std::count(bc.begin(), bc.end(), 0.0);
    total += static_cast<double>(zero) + static_cast<double>(n - g.node_count());
  }
  return total / seeds;
}

TEST(ExactBetweenness, ZeroScoreCountsOnEr1k4) {
  EXPECT_NEAR(mean_zero_bc(0.00562341), 20.4, 0.5 * 20.4);
}

TEST(ExactBetweenness, ZeroScoreCountsOnEr1k8) {
  EXPECT_NEAR(mean_zero_bc(0.00237137), 306.4, 0.5 * 306.4);
}

}  // namespace
}  // namespace bolt
