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

#include "bolt/generators.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "bolt/shortest_paths.hpp"

namespace bolt {
namespace {

double mean_edges_er(std::uint64_t n, double p, int seeds) {
  double sum = 0.0;
  for (int s = 0; s < seeds; ++s) {
    sum += static_cast<double>(generate_er(n, p, RngSeed{static_cast<std::uint64_t>(s)}).edge_count());
  }
  return sum / seeds;
}

TEST(GenerateEr, CompleteGraphWhenPIsOne) {
  const Graph g = generate_er(12, 1.0, RngSeed{3});
  EXPECT_EQ(g.node_count(), 12U);
  EXPECT_EQ(g.edge_count(), 66U);
}

TEST(GenerateEr, Er1k3MeanEdgesAndDegree) {
  // Reference ER_1k_3 figures: 5005 edges, average degree 10.01.
  const double mean = mean_edges_er(1000, 0.01, 20);
  EXPECT_NEAR(mean, 5005.0, 0.05 * 5005.0);
  EXPECT_NEAR(2.0 * mean / 1000.0, 10.01, 0.05 * 10.01);
}

TEST(GenerateEr, Er1k2MeanEdges) {
  // Reference ER_1k_2 figures: p = 0.03162278, 15848 edges.
  EXPECT_NEAR(mean_edges_er(1000, 0.03162278, 20), 15848.0, 0.05 * 15848.0);
}

TEST(GenerateEr, ExponentParameterization) {
  EXPECT_NEAR(er_probability_for_exponent(1000, 3), 0.01, 1e-12);
  EXPECT_NEAR(er_probability_for_exponent(1000, 2), 0.03162278, 1e-8);
  EXPECT_NEAR(er_probability_for_exponent(1000, 4), 0.00562341, 1e-8);
  EXPECT_NEAR(er_probability_for_exponent(1000, 8), 0.00237137, 1e-8);
}

TEST(GenerateEr, EdgesAreSimpleAndInRange) {
  const auto edges = er_edges(500, 0.02, RngSeed{9});
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  for (auto [a, b] : edges) {
    EXPECT_LT(a, b);
    EXPECT_LT(b, 500U);
    EXPECT_TRUE(seen.insert({a, b}).second);
  }
}

TEST(GenerateEr, RejectsBadParameters) {
  EXPECT_THROW((void)generate_er(1, 0.5, RngSeed{}), std::invalid_argument);
  EXPECT_THROW((void)generate_er(10, 0.0, RngSeed{}), std::invalid_argument);
  EXPECT_THROW((void)generate_er(10, 1.5, RngSeed{}), std::invalid_argument);
}

TEST(GenerateEr, SameSeedSameGraph) {
  EXPECT_EQ(generate_er(400, 0.02, RngSeed{5}), generate_er(400, 0.02, RngSeed{5}));
  EXPECT_NE(generate_er(400, 0.02, RngSeed{5}), generate_er(400, 0.02, RngSeed{6}));
}

TEST(GenerateBa, TriangleFromThreeNodes) {
  const Graph g = generate_ba(3, 2, RngSeed{1});
  EXPECT_EQ(g.node_count(), 3U);
  EXPECT_EQ(g.edge_count(), 3U);
}

TEST(GenerateBa, EdgeCountFormula) {
  // The reference counts are 4975 (BA_1k_3) and 1996 (BA_1k_8); the seed clique adds
  // k(k-1)/2 on top of (n-k)k.
  const Graph k5 = generate_ba(1000, 5, RngSeed{2});
  EXPECT_EQ(k5.edge_count(), 10U + 995U * 5U);
  EXPECT_NEAR(static_cast<double>(k5.edge_count()), 4975.0, 0.01 * 4975.0);
  EXPECT_NEAR(k5.average_degree(), 9.95, 0.01 * 9.95);
  const Graph k2 = generate_ba(1000, 2, RngSeed{2});
  EXPECT_EQ(k2.edge_count(), 1U + 998U * 2U);
  EXPECT_NEAR(static_cast<double>(k2.edge_count()), 1996.0, 0.01 * 1996.0);
}

TEST(GenerateBa, AttachmentCountsForExponents) {
  EXPECT_EQ(ba_attachment_for_exponent(1000, 2), 16U);
  EXPECT_EQ(ba_attachment_for_exponent(1000, 3), 5U);
  EXPECT_EQ(ba_attachment_for_exponent(1000, 4), 3U);
  EXPECT_EQ(ba_attachment_for_exponent(1000, 8), 2U);
  EXPECT_EQ(ba_attachment_for_exponent(10000, 2), 50U);
  EXPECT_EQ(ba_attachment_for_exponent(10000, 3), 11U);
  EXPECT_EQ(ba_attachment_for_exponent(10000, 4), 5U);
  EXPECT_EQ(ba_attachment_for_exponent(10000, 8), 2U);
}

TEST(GenerateBa, KOneIsATree) {
  const Graph g = generate_ba(200, 1, RngSeed{4});
  EXPECT_EQ(g.node_count(), 200U);
  EXPECT_EQ(g.edge_count(), 199U);
  const auto r = bfs(g, 0);
  EXPECT_TRUE(std::none_of(r.dist.begin(), r.dist.end(),
                           [](double d) { return std::isinf(d); }));
}

TEST(GenerateBa, MaxDegreeGrowsWithN) {
  auto max_degree = [](std::uint64_t n) {
    std::size_t best = 0;
    for (std::uint64_t s = 0; s < 5; ++s) {
      const Graph g = generate_ba(n, 3, RngSeed{s});
      for (NodeId i = 0; i < g.node_count(); ++i) best = std::max(best, g.degree(i));
    }
    return best;
  };
  EXPECT_LT(max_degree(100), max_degree(10000));
}

TEST(GenerateBa, RejectsBadParameters) {
  EXPECT_THROW((void)generate_ba(5, 5, RngSeed{}), std::invalid_argument);
  EXPECT_THROW((void)generate_ba(5, 0, RngSeed{}), std::invalid_argument);
}

TEST(GenerateBa, SameSeedSameGraph) {
  EXPECT_EQ(generate_ba(500, 3, RngSeed{8}), generate_ba(500, 3, RngSeed{8}));
  EXPECT_NE(generate_ba(500, 3, RngSeed{8}), generate_ba(500, 3, RngSeed{9}));
}

}  // namespace
}  // namespace bolt
