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

#include "bolt/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace bolt {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kFirstGreater:
      return "first-greater";
    case Verdict::kSecondGreater:
      return "second-greater";
    case Verdict::kTie:
      return "tie";
  }
  return "unknown";
}

Verdict compare_estimates(double first, double second, double tie_epsilon) {
  if (first == second || std::abs(first - second) <= tie_epsilon) {
    return Verdict::kTie;
  }
  return first > second ? Verdict::kFirstGreater : Verdict::kSecondGreater;
}

OrderingResult k_betweenness_ordering(const Graph& g,
                                      std::span<const NodeId> nodes,
                                      const OrderingOptions& opts) {
  if (nodes.size() < 2) throw std::invalid_argument("need at least two nodes");
  std::unordered_set<NodeId> seen;
  for (NodeId v : nodes) {
    if (v >= g.node_count()) throw std::out_of_range("node outside the graph");
    if (!seen.insert(v).second) {
      throw std::invalid_argument("duplicate node in ordering request");
    }
  }

  const auto results =
      estimate_nodes(g, nodes, opts.model, opts.samples, opts.seed, opts.threads);

  std::vector<std::size_t> idx(nodes.size());
  std::iota(idx.begin(), idx.end(), 0);
  // std::stable_sort is a merge sort.
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return results[a].estimate > results[b].estimate;
  });

  OrderingResult out;
  for (std::size_t i : idx) {
    out.nodes.push_back(nodes[i]);
    out.estimates.push_back(results[i].estimate);
  }
  if (nodes.size() == 2) {
    out.verdict = compare_estimates(results[0].estimate, results[1].estimate,
                                    opts.tie_epsilon);
  }
  return out;
}

OrderingResult betweenness_ordering(const Graph& g, NodeId u, NodeId v,
                                    const OrderingOptions& opts) {
  if (u == v) throw std::invalid_argument("cannot order a node against itself");
  const NodeId pair[] = {u, v};
  return k_betweenness_ordering(g, pair, opts);
}

}  // namespace bolt
