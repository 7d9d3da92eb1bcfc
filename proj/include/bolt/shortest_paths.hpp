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

#ifndef BOLT_SHORTEST_PATHS_HPP
#define BOLT_SHORTEST_PATHS_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "bolt/graph.hpp"

namespace bolt {

/// Distance of a node that the source cannot reach.
inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

/// One breadth-first traversal: distances, shortest-path counts, visit order
/// and the shortest-path DAG as predecessor lists.
///
/// Path counts are doubles; they are exact up to 2^53 paths.
struct BfsResult {
  NodeId source = 0;
  std::vector<double> dist;   // kUnreachable when not reached
  std::vector<double> sigma;  // 0 when not reached
  std::vector<NodeId> order;  // reached nodes, nondecreasing distance
  std::vector<std::size_t> pred_offsets;
  std::vector<NodeId> pred_nodes;

  /// Nodes u with an edge to w and dist[u] = dist[w] - 1.
  [[nodiscard]] std::span<const NodeId> preds(NodeId w) const {
    return {pred_nodes.data() + pred_offsets[w],
            pred_nodes.data() + pred_offsets[w + 1]};
  }
};

/// delta[v] is the dependency of `source` on v: the sum over targets t of the
/// fraction of shortest source-t paths passing through v.
struct DependencyVector {
  NodeId source = 0;
  std::vector<double> delta;
};

[[nodiscard]] BfsResult bfs(const Graph& g, NodeId source);

/// Brandes' backward accumulation over an existing traversal.
[[nodiscard]] DependencyVector dependencies(const Graph& g, const BfsResult& r);

/// Reusable single-source Brandes pass. Keeps its buffers between runs and
/// only clears what the previous run touched, so repeated runs on a sparse
/// graph cost O(reached edges) each.
class SingleSourceBrandes {
 public:
  explicit SingleSourceBrandes(const Graph& g);

  /// Runs BFS from `source` and accumulates dependencies.
  void run(NodeId source);

  [[nodiscard]] double dependency(NodeId v) const { return delta_[v]; }
  [[nodiscard]] std::span<const double> dependencies() const { return delta_; }
  [[nodiscard]] std::span<const NodeId> order() const { return order_; }

 private:
  const Graph* graph_;
  std::vector<std::int32_t> level_;
  std::vector<double> sigma_;
  std::vector<double> delta_;
  std::vector<NodeId> order_;
};

/// Exact betweenness of every node by Brandes' algorithm, summed over ordered
/// (s, t) pairs: the middle of a 3-path scores 2. Sources are split across
/// `threads` workers (0 = hardware concurrency).
[[nodiscard]] std::vector<double> exact_betweenness(const Graph& g,
                                                    unsigned threads = 1);

/// Exact betweenness of one node. Costs a full all-sources pass.
[[nodiscard]] double exact_betweenness_single(const Graph& g, NodeId v,
                                              unsigned threads = 1);

/// Dependency of every source i on a fixed v, i.e. entry i is
/// delta_i(v). Sums to the betweenness of v.
[[nodiscard]] std::vector<double> dependencies_on(const Graph& g, NodeId v,
                                                  unsigned threads = 1);

/// Row-major n x n matrix, entry (s, v) = delta_s(v).
[[nodiscard]] std::vector<double> dependency_matrix(const Graph& g,
                                                    unsigned threads = 1);

}  // namespace bolt

#endif  // BOLT_SHORTEST_PATHS_HPP
