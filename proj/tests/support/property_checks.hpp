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

#ifndef BOLT_TESTS_PROPERTY_CHECKS_HPP
#define BOLT_TESTS_PROPERTY_CHECKS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "bolt/graph.hpp"
#include "bolt/random.hpp"

namespace bolt::testing {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;  // first counterexample, or a short tally
};

struct SuiteScale {
  std::size_t graphs = 30;          // random small graphs per check
  NodeId max_nodes = 30;            // upper bound for those graphs
  std::size_t fidelity_graphs = 4;  // ER instances for the EDDBM vs DBM check
  std::size_t er_seeds = 30;        // seeds for the edge-count mean
};

/// Random small graph: ER, BA, or a disjoint union of two ER pieces, chosen
/// by the seed. Never empty.
[[nodiscard]] Graph random_small_graph(RngSeed seed, NodeId max_nodes);

/// Every invariant and property check, in a fixed order.
[[nodiscard]] std::vector<CheckResult> property_suite(RngSeed seed,
                                                      const SuiteScale& scale);

}  // namespace bolt::testing

#endif  // BOLT_TESTS_PROPERTY_CHECKS_HPP
