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

#ifndef BOLT_SAMPLING_HPP
#define BOLT_SAMPLING_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "bolt/graph.hpp"
#include "bolt/random.hpp"

namespace bolt {

/// Pivot-probability models.
///
///   uniform  1/(n-1) for every node but the target
///   dbm      proportional to 1/d(v, i) over nodes reachable from the target
///   eddbm    lambda^-d(v, i) per node, reweighted inside each BFS level by
///            1/deg(i), lambda being the average degree
///   optimal  proportional to delta_i(v); one draw gives the exact score
enum class Model { kUniform, kDbm, kEddbm, kOptimal };

[[nodiscard]] std::string_view to_string(Model m);
[[nodiscard]] std::optional<Model> parse_model(std::string_view name);

/// Probability of picking each node as the pivot when estimating the
/// betweenness of `target`. Immutable once built.
class SamplingDistribution {
 public:
  /// Normalizes non-negative weights. The target's weight must be 0. With no
  /// positive weight the result is the zero distribution.
  static SamplingDistribution from_weights(Model model, NodeId target,
                                           std::vector<double> weights);

  /// Marker for a target whose betweenness is 0 under the optimal model:
  /// nothing to sample, nothing to estimate.
  static SamplingDistribution zero(Model model, NodeId target, NodeId n);

  [[nodiscard]] Model model() const noexcept { return model_; }
  [[nodiscard]] NodeId target() const noexcept { return target_; }
  [[nodiscard]] bool is_zero() const noexcept { return support_.empty(); }

  [[nodiscard]] std::size_t size() const noexcept { return prob_.size(); }
  [[nodiscard]] double probability(NodeId i) const { return prob_.at(i); }
  [[nodiscard]] std::span<const double> probabilities() const noexcept {
    return prob_;
  }
  /// Nodes with positive probability, ascending.
  [[nodiscard]] std::span<const NodeId> support() const noexcept {
    return support_;
  }
  /// Prefix sums of probabilities along support().
  [[nodiscard]] std::span<const double> cumulative() const noexcept {
    return cumulative_;
  }

  /// Inverse-CDF lookup for u in [0, 1). Throws EmptySupportError on the zero
  /// distribution.
  [[nodiscard]] NodeId pivot_at(double u) const;

 private:
  Model model_ = Model::kUniform;
  NodeId target_ = 0;
  std::vector<double> prob_;
  std::vector<NodeId> support_;
  std::vector<double> cumulative_;
};

/// Draws one pivot with probability p_i.
template <class UniformRandomBitGenerator>
[[nodiscard]] NodeId sample_pivot(const SamplingDistribution& dist,
                                  UniformRandomBitGenerator& rng) {
  static_assert(UniformRandomBitGenerator::min() == 0 &&
                    UniformRandomBitGenerator::max() ==
                        std::numeric_limits<std::uint64_t>::max(),
                "expects a full-range 64-bit engine");
  return dist.pivot_at(unit_interval(rng()));
}

/// Draws the pivot determined by a single seed.
[[nodiscard]] inline NodeId sample_pivot(const SamplingDistribution& dist,
                                         RngSeed seed) {
  return dist.pivot_at(unit_from_seed(seed));
}

/// BFS levels around a target. by_distance[d - 1] holds V_d, the nodes at
/// distance d; together they partition the reachable nodes other than the
/// target.
struct LevelPartition {
  NodeId target = 0;
  std::vector<std::vector<NodeId>> by_distance;
  std::vector<double> distance;  // kUnreachable off the target's component

  [[nodiscard]] const std::vector<NodeId>& at(std::size_t d) const {
    return by_distance.at(d - 1);
  }
  [[nodiscard]] std::size_t depth() const noexcept { return by_distance.size(); }
};

[[nodiscard]] LevelPartition level_partition(const Graph& g, NodeId v);

[[nodiscard]] SamplingDistribution uniform_model(const Graph& g, NodeId v);
[[nodiscard]] SamplingDistribution dbm_model(const Graph& g, NodeId v);
[[nodiscard]] SamplingDistribution eddbm_model(const Graph& g, NodeId v);

/// Costs one full Brandes pass; `threads` splits its sources.
[[nodiscard]] SamplingDistribution optimal_model(const Graph& g, NodeId v,
                                                 unsigned threads = 1);

/// Optimal model from precomputed delta_i(v) for every source i.
[[nodiscard]] SamplingDistribution optimal_model(
    NodeId v, std::span<const double> dependencies_on_v);

[[nodiscard]] SamplingDistribution make_distribution(Model m, const Graph& g,
                                                     NodeId v,
                                                     unsigned threads = 1);

/// The EDDBM base is the average degree, clamped just above 1 so that the
/// per-level decay stays well defined on near-empty graphs.
[[nodiscard]] double eddbm_base(const Graph& g) noexcept;

}  // namespace bolt

#endif  // BOLT_SAMPLING_HPP
