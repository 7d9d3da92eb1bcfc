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

#ifndef BOLT_ANALYSIS_HPP
#define BOLT_ANALYSIS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bolt/random.hpp"

namespace bolt {

/// Predicted BFS level sizes of a G(n, p) random graph.
///
/// `alpha` follows the sparse recurrence
///   alpha_{m+1} = n p (1 - sum_{j<=m} alpha_j / n) alpha_m,
/// `alpha_exact` the form it is expanded from,
///   alpha_{m+1} = (n - sum_{j<=m} alpha_j) (1 - (1 - p)^alpha_m).
/// Both start at alpha_0 = 1, alpha_1 = (n - 1) p and stop once a level would
/// hold fewer than half a node. A level never receives more nodes than remain
/// unexplored.
///
/// remaining[m] = 1 - sum_{j<m} alpha_j / n is the fraction of nodes not yet
/// placed above level m (remaining[0] = 1).
struct LevelProfile {
  std::uint64_t n = 0;
  double p = 0.0;
  double lambda = 0.0;  // (n - 1) p
  std::vector<double> alpha;
  std::vector<double> alpha_exact;
  std::vector<double> remaining;

  /// Deepest predicted level l (alpha.size() - 1).
  [[nodiscard]] std::size_t last_level() const noexcept {
    return alpha.empty() ? 0 : alpha.size() - 1;
  }
};

/// Requires n >= 2 and 0 < p < 1. `max_levels` caps the deepest level.
[[nodiscard]] LevelProfile predict_levels(std::uint64_t n, double p,
                                          std::size_t max_levels = 64);

/// Expected dependency of a BFS root on a node at `level`, when the traversal
/// ends at `last_level`: 0 on the last level, and
///   E(m) = remaining[m+1] * lambda * (1 + E(m + 1))
/// above it. Requires 1 <= level <= last_level <= profile.last_level().
[[nodiscard]] double expected_dependency(const LevelProfile& profile,
                                         std::size_t level,
                                         std::size_t last_level);

/// Nested factor
///   remaining[l-k+2] (1 + remaining[l-k+3] lambda (1 + ... (1 + remaining[l] lambda)))
/// with l the profile's last level.
[[nodiscard]] double nested_correction(const LevelProfile& profile,
                                       std::size_t k);

/// Ratio of expected dependencies on nodes at levels l-k and l-k+1:
///   remaining[l-k+1] * (1 / nested_correction + lambda).
/// Requires 2 <= k <= l - 1. Throws std::domain_error when the nested factor
/// is 0.
[[nodiscard]] double dependency_ratio(const LevelProfile& profile,
                                      std::size_t k);

/// Empirical BFS level sizes over sampled G(n, p) graphs.
struct EmpiricalLevels {
  std::vector<double> mean;
  std::vector<double> stddev;
  std::size_t traversals = 0;
};

/// Generates `graphs` instances, runs BFS from `sources` distinct random nodes
/// of each, and averages the size of every level (levels a traversal does not
/// reach count as 0).
[[nodiscard]] EmpiricalLevels empirical_levels(std::uint64_t n, double p,
                                               std::size_t graphs,
                                               std::size_t sources,
                                               RngSeed seed);

}  // namespace bolt

#endif  // BOLT_ANALYSIS_HPP
