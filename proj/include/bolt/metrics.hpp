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

#ifndef BOLT_METRICS_HPP
#define BOLT_METRICS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bolt/estimator.hpp"
#include "bolt/graph.hpp"
#include "bolt/random.hpp"
#include "bolt/sampling.hpp"

namespace bolt {

/// Exact scores closer than this (relative, floored at 1) are the same score.
/// Brandes sums are only reproducible to rounding, so structurally tied
/// nodes can differ in the last bits.
inline constexpr double kExactTieTolerance = 1e-9;

/// |exact - approx| / exact * 100. Throws UndefinedMetricError when exact <= 0.
[[nodiscard]] double error_percent(double exact, double approx);

struct NodePair {
  NodeId first = 0;
  NodeId second = 0;

  friend bool operator==(NodePair, NodePair) = default;
};

/// Number of unordered pairs, n(n-1)/2.
[[nodiscard]] std::uint64_t pair_count(NodeId n) noexcept;

/// All pairs when n <= 3000, otherwise one million sampled pairs.
[[nodiscard]] std::uint64_t default_pair_budget(NodeId n) noexcept;

/// Every unordered pair (first < second) when budget >= n(n-1)/2; otherwise
/// `budget` distinct pairs drawn uniformly without replacement. Sorted.
[[nodiscard]] std::vector<NodePair> select_pairs(NodeId n, std::uint64_t budget,
                                                 RngSeed seed);

/// -1, 0 or +1, treating values within kExactTieTolerance as tied.
[[nodiscard]] int exact_order(double a, double b) noexcept;

/// Fraction of pairs whose estimated order matches the exact order. Both
/// sides are compared with exact_order, so tied nodes count as correct only if
/// their estimates tie as well.
/// Throws UndefinedMetricError on an empty pair set.
[[nodiscard]] double efficiency(std::span<const double> exact,
                                std::span<const double> estimates,
                                std::span<const NodePair> pairs);

/// Competition ranks (1 = highest) of the exact scores; tied scores share the
/// best rank of their group.
[[nodiscard]] std::vector<std::uint64_t> competition_ranks(
    std::span<const double> exact);

/// Efficiency over the pairs whose exact ranks differ by more than t. With
/// t = 0 nothing is relaxed and the result is efficiency() itself. Throws
/// UndefinedMetricError when no pair qualifies.
[[nodiscard]] double relaxed_efficiency(std::span<const double> exact,
                                        std::span<const double> estimates,
                                        std::span<const NodePair> pairs,
                                        std::uint64_t t);

/// Average-of-ties ranks, 1-based, ascending by value.
[[nodiscard]] std::vector<double> fractional_ranks(std::span<const double> xs);

/// Spearman's rho: Pearson correlation of fractional ranks. Throws
/// UndefinedMetricError for fewer than two values or a constant input.
[[nodiscard]] double spearman_rho(std::span<const double> a,
                                  std::span<const double> b);

struct EvaluationConfig {
  Model model = Model::kEddbm;
  std::uint32_t samples = kDefaultSamples;
  RngSeed seed;
  std::uint32_t repetitions = 5;
  std::uint64_t pair_budget = 0;  // 0 selects default_pair_budget(n)
  std::vector<std::uint64_t> relax_thresholds{2, 3, 5, 10};
  unsigned threads = 1;
};

/// Every percentage is in [0, 100]; a metric that is undefined on the graph
/// is left empty.
struct EvaluationReport {
  std::string graph_id;
  Model model = Model::kEddbm;
  std::uint32_t samples = 0;
  std::optional<double> avg_error_pct;
  std::optional<double> efficiency_pct;
  std::map<std::uint64_t, std::optional<double>> relaxed_pct;
  std::optional<double> spearman;
  std::uint64_t pairs_evaluated = 0;
  std::uint64_t nodes_with_positive_bc = 0;
  std::vector<RngSeed> seeds;  // one per repetition
};

/// Per-repetition estimates for every node. Row r, entry v uses the seed
/// derive_seed(derive_seed(seed, r), v); each node's distribution is built
/// once and shared by its repetitions.
[[nodiscard]] std::vector<std::vector<double>> estimate_repetitions(
    const Graph& g, Model model, std::uint32_t samples, RngSeed seed,
    std::uint32_t repetitions, unsigned threads = 1);

/// Mean over nodes with positive exact score of each node's error averaged
/// over the repetitions. Throws UndefinedMetricError when every exact score
/// is 0.
[[nodiscard]] double average_error(
    std::span<const double> exact,
    const std::vector<std::vector<double>>& repetitions);

/// Convenience form that runs the estimations itself.
[[nodiscard]] double average_error(const Graph& g, std::span<const double> exact,
                                   Model model, std::uint32_t samples,
                                   RngSeed seed, std::uint32_t repetitions = 5,
                                   unsigned threads = 1);

/// Full report for one graph and one model. Ordering metrics use the
/// estimates of the first repetition, so each node is estimated once per
/// comparison set.
[[nodiscard]] EvaluationReport evaluate(const Graph& g,
                                        std::span<const double> exact,
                                        const EvaluationConfig& config,
                                        std::string graph_id = {});

}  // namespace bolt

#endif  // BOLT_METRICS_HPP
