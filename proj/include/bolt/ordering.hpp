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

#ifndef BOLT_ORDERING_HPP
#define BOLT_ORDERING_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bolt/estimator.hpp"
#include "bolt/graph.hpp"
#include "bolt/random.hpp"
#include "bolt/sampling.hpp"

namespace bolt {

enum class Verdict { kFirstGreater, kSecondGreater, kTie };

[[nodiscard]] std::string_view to_string(Verdict v);

struct OrderingOptions {
  std::uint32_t samples = kDefaultSamples;
  RngSeed seed;
  Model model = Model::kEddbm;
  // Estimates closer than this compare as a tie. 0 means exact equality.
  double tie_epsilon = 0.0;
  unsigned threads = 1;
};

struct OrderingResult {
  std::vector<NodeId> nodes;      // descending estimate; ties keep input order
  std::vector<double> estimates;  // parallel to nodes
  std::optional<Verdict> verdict; // only for two nodes, in input order
};

[[nodiscard]] Verdict compare_estimates(double first, double second,
                                        double tie_epsilon = 0.0);

/// Orders two nodes by estimated betweenness. Node u is estimated with
/// derive_seed(seed, 0) and v with derive_seed(seed, 1), which makes this the
/// k = 2 case of k_betweenness_ordering. Throws std::invalid_argument when
/// u == v.
[[nodiscard]] OrderingResult betweenness_ordering(const Graph& g, NodeId u,
                                                  NodeId v,
                                                  const OrderingOptions& opts = {});

/// Estimates every node of `nodes` independently and merge-sorts them by
/// descending estimate. Needs at least two distinct valid nodes.
[[nodiscard]] OrderingResult k_betweenness_ordering(
    const Graph& g, std::span<const NodeId> nodes,
    const OrderingOptions& opts = {});

}  // namespace bolt

#endif  // BOLT_ORDERING_HPP
