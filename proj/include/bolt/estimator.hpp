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

#ifndef BOLT_ESTIMATOR_HPP
#define BOLT_ESTIMATOR_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "bolt/graph.hpp"
#include "bolt/random.hpp"
#include "bolt/sampling.hpp"
#include "bolt/shortest_paths.hpp"

namespace bolt {

inline constexpr std::uint32_t kDefaultSamples = 25;

struct EstimationResult {
  NodeId target = 0;
  double estimate = 0.0;
  std::uint32_t samples = 0;
  RngSeed seed;
  Model model = Model::kEddbm;
};

/// Importance-sampled betweenness of `v`.
///
/// Draws `samples` pivots i.i.d. from `dist`, runs one Brandes pass per pivot
/// and averages delta_pivot(v) / p_pivot. Pivot t is drawn from
/// derive_seed(seed, t), so the multiset of pivots depends only on
/// (seed, samples). On the zero distribution the estimate is 0 and no sample
/// is consumed.
///
/// Throws std::invalid_argument when `dist` was built for another target or
/// graph, or samples == 0.
[[nodiscard]] EstimationResult estimate(const Graph& g,
                                        const SamplingDistribution& dist,
                                        NodeId v, std::uint32_t samples,
                                        RngSeed seed);

/// Same, reusing a caller-owned Brandes pass bound to `g`.
[[nodiscard]] EstimationResult estimate(const Graph& g,
                                        const SamplingDistribution& dist,
                                        NodeId v, std::uint32_t samples,
                                        RngSeed seed, SingleSourceBrandes& pass);

/// Estimates each node in `nodes` with a fresh distribution of model `m`.
/// Position i uses derive_seed(seed, i), so results do not depend on
/// evaluation order or on the worker count.
[[nodiscard]] std::vector<EstimationResult> estimate_nodes(
    const Graph& g, std::span<const NodeId> nodes, Model m,
    std::uint32_t samples, RngSeed seed, unsigned threads = 1);

}  // namespace bolt

#endif  // BOLT_ESTIMATOR_HPP
