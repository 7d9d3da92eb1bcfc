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

#include "bolt/shortest_paths.hpp"

#include <stdexcept>
#include <string>

#include "bolt/parallel.hpp"

namespace bolt {

namespace {

void check_node(const Graph& g, NodeId v) {
  if (v >= g.node_count()) {
    throw std::out_of_range("node index " + std::to_string(v) + " out of range");
  }
}

}  // namespace

BfsResult bfs(const Graph& g, NodeId source) {
  check_node(g, source);
  const NodeId n = g.node_count();
  BfsResult r;
  r.source = source;
  r.dist.assign(n, kUnreachable);
  r.sigma.assign(n, 0.0);
  r.order.reserve(n);

  r.dist[source] = 0;
  r.sigma[source] = 1;
  r.order.push_back(source);
  for (std::size_t head = 0; head < r.order.size(); ++head) {
    const NodeId u = r.order[head];
    const double next = r.dist[u] + 1;
    for (NodeId w : g.neighbors(u)) {
      if (r.dist[w] == kUnreachable) {
        r.dist[w] = next;
        r.order.push_back(w);
      }
      if (r.dist[w] == next) r.sigma[w] += r.sigma[u];
    }
  }

  r.pred_offsets.assign(n + 1, 0);
  for (NodeId w = 0; w < n; ++w) {
    std::size_t count = 0;
    if (w != source && r.dist[w] != kUnreachable) {
      for (NodeId u : g.neighbors(w)) {
        if (r.dist[u] + 1 == r.dist[w]) ++count;
      }
    }
    r.pred_offsets[w + 1] = r.pred_offsets[w] + count;
  }
  r.pred_nodes.resize(r.pred_offsets[n]);
  for (NodeId w = 0; w < n; ++w) {
    if (w == source || r.dist[w] == kUnreachable) continue;
    std::size_t at = r.pred_offsets[w];
    for (NodeId u : g.neighbors(w)) {
      if (r.dist[u] + 1 == r.dist[w]) r.pred_nodes[at++] = u;
    }
  }
  return r;
}

DependencyVector dependencies(const Graph& g, const BfsResult& r) {
  if (r.dist.size() != g.node_count()) {
    throw std::invalid_argument("traversal does not belong to this graph");
  }
  DependencyVector d;
  d.source = r.source;
  d.delta.assign(g.node_count(), 0.0);
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
    const NodeId w = *it;
    const double share = (1.0 + d.delta[w]) / r.sigma[w];
    for (NodeId v : r.preds(w)) d.delta[v] += r.sigma[v] * share;
  }
  d.delta[r.source] = 0.0;
  return d;
}

SingleSourceBrandes::SingleSourceBrandes(const Graph& g)
    : graph_(&g),
      level_(g.node_count(), -1),
      sigma_(g.node_count(), 0.0),
      delta_(g.node_count(), 0.0) {
  order_.reserve(g.node_count());
}

void SingleSourceBrandes::run(NodeId source) {
  check_node(*graph_, source);
  for (NodeId v : order_) {
    level_[v] = -1;
    sigma_[v] = 0.0;
    delta_[v] = 0.0;
  }
  order_.clear();

  level_[source] = 0;
  sigma_[source] = 1.0;
  order_.push_back(source);
  for (std::size_t head = 0; head < order_.size(); ++head) {
    const NodeId u = order_[head];
    const std::int32_t next = level_[u] + 1;
    const double su = sigma_[u];
    for (NodeId w : graph_->neighbors(u)) {
      if (level_[w] < 0) {
        level_[w] = next;
        order_.push_back(w);
      }
      if (level_[w] == next) sigma_[w] += su;
    }
  }

  // Reverse sweep: every reached w pushes its share to its predecessors.
  for (std::size_t i = order_.size(); i-- > 1;) {
    const NodeId w = order_[i];
    const std::int32_t parent_level = level_[w] - 1;
    const double share = (1.0 + delta_[w]) / sigma_[w];
    for (NodeId v : graph_->neighbors(w)) {
      if (level_[v] == parent_level) delta_[v] += sigma_[v] * share;
    }
  }
  delta_[source] = 0.0;
}

std::vector<double> exact_betweenness(const Graph& g, unsigned threads) {
  const NodeId n = g.node_count();
  const unsigned workers = resolve_threads(threads);
  std::vector<std::vector<double>> partial(
      std::min<std::size_t>(workers, std::max<NodeId>(n, 1)));
  parallel_chunks(n, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
    auto& acc = partial[w];
    acc.assign(n, 0.0);
    SingleSourceBrandes pass(g);
    for (std::size_t s = begin; s < end; ++s) {
      pass.run(static_cast<NodeId>(s));
      for (NodeId v : pass.order()) acc[v] += pass.dependency(v);
    }
  });
  std::vector<double> bc(n, 0.0);
  for (const auto& acc : partial) {
    for (NodeId v = 0; v < n && !acc.empty(); ++v) bc[v] += acc[v];
  }
  return bc;
}

double exact_betweenness_single(const Graph& g, NodeId v, unsigned threads) {
  check_node(g, v);
  return exact_betweenness(g, threads)[v];
}

std::vector<double> dependencies_on(const Graph& g, NodeId v, unsigned threads) {
  check_node(g, v);
  const NodeId n = g.node_count();
  std::vector<double> out(n, 0.0);
  parallel_chunks(n, resolve_threads(threads),
                  [&](unsigned, std::size_t begin, std::size_t end) {
                    SingleSourceBrandes pass(g);
                    for (std::size_t s = begin; s < end; ++s) {
                      pass.run(static_cast<NodeId>(s));
                      out[s] = pass.dependency(v);
                    }
                  });
  return out;
}

std::vector<double> dependency_matrix(const Graph& g, unsigned threads) {
  const std::size_t n = g.node_count();
  std::vector<double> out(n * n, 0.0);
  parallel_chunks(n, resolve_threads(threads),
                  [&](unsigned, std::size_t begin, std::size_t end) {
                    SingleSourceBrandes pass(g);
                    for (std::size_t s = begin; s < end; ++s) {
                      pass.run(static_cast<NodeId>(s));
                      for (NodeId v : pass.order()) {
                        out[s * n + v] = pass.dependency(v);
                      }
                    }
                  });
  return out;
}

}  // namespace bolt
