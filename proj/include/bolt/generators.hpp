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

#ifndef BOLT_GENERATORS_HPP
#define BOLT_GENERATORS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "bolt/graph.hpp"
#include "bolt/random.hpp"

namespace bolt {

/// Raw G(n, p) edge set over node ids [0, n), before preprocessing. Pairs are
/// visited with geometric skipping, so the cost is O(n + m) in expectation.
[[nodiscard]] std::vector<std::pair<std::uint64_t, std::uint64_t>> er_edges(
    std::uint64_t n, double p, RngSeed seed);

/// Erdős–Rényi G(n, p). Isolated nodes are removed, so the result may have
/// fewer than n nodes. Requires n >= 2 and 0 < p <= 1.
[[nodiscard]] Graph generate_er(std::uint64_t n, double p, RngSeed seed);

/// Raw preferential-attachment edge set (see generate_ba).
[[nodiscard]] std::vector<std::pair<std::uint64_t, std::uint64_t>> ba_edges(
    std::uint64_t n, std::uint64_t k, RngSeed seed);

/// Barabási–Albert H(n, k): starts from the complete graph K_k, then every
/// arriving node attaches k edges to k distinct existing nodes, each picked
/// with probability proportional to its current degree. Requires n > k >= 1.
/// The result has k(k-1)/2 + (n-k)k edges.
[[nodiscard]] Graph generate_ba(std::uint64_t n, std::uint64_t k, RngSeed seed);

/// Edge probability n^(1/x)/n of the ER_n_x instances.
[[nodiscard]] double er_probability_for_exponent(std::uint64_t n, double x);

/// Attachment count of the BA_n_x instances: n^(1/x)/2 rounded up, which
/// gives k = 16, 5, 3, 2 for n = 1000 and x = 2, 3, 4, 8.
[[nodiscard]] std::uint64_t ba_attachment_for_exponent(std::uint64_t n,
                                                       double x);

}  // namespace bolt

#endif  // BOLT_GENERATORS_HPP
