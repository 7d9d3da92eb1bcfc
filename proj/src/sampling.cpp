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

#include "bolt/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "bolt/errors.hpp"
#include "bolt/shortest_paths.hpp"

namespace bolt {

namespace {

void check_node(const Graph& g, NodeId v) {
  if (v >= g.node_count()) {
    throw std::out_of_range("node index " + std::to_string(v) + " out of range");
  }
}

SamplingDistribution require_support(SamplingDistribution d) {
  if (d.is_zero()) {
    throw EmptySupportError("no node can be sampled as a pivot for node " +
                            std::to_string(d.target()));
  }
  return d;
}

}  // namespace

std::string_view to_string(Model m) {
  switch (m) {
    case Model::kUniform:
      return "uniform";
    case Model::kDbm:
      return "dbm";
    case Model::kEddbm:
      return "eddbm";
    case Model::kOptimal:
      return "optimal";
  }
  return "unknown";
}

std::optional<Model> parse_model(std::string_view name) {
  for (Model m : {Model::kUniform, Model::kDbm, Model::kEddbm, Model::kOptimal}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

SamplingDistribution SamplingDistribution::from_weights(
    Model model, NodeId target, std::vector<double> weights) {
  if (target >= weights.size()) {
    throw std::out_of_range("target outside the weight vector");
  }
  if (weights[target] != 0.0) {
    throw std::invalid_argument("the target cannot be its own pivot");
  }
  SamplingDistribution d;
  d.model_ = model;
  d.target_ = target;
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || std::isinf(w)) {
      throw std::invalid_argument("pivot weights must be finite and >= 0");
    }
    total += w;
  }
  d.prob_ = std::move(weights);
  if (total == 0.0) return d;

  double running = 0.0;
  for (NodeId i = 0; i < d.prob_.size(); ++i) {
    double& p = d.prob_[i];
    if (p == 0.0) continue;
    p /= total;
    running += p;
    d.support_.push_back(i);
    d.cumulative_.push_back(running);
  }
  return d;
}

SamplingDistribution SamplingDistribution::zero(Model model, NodeId target,
                                                NodeId n) {
  return from_weights(model, target, std::vector<double>(n, 0.0));
}

NodeId SamplingDistribution::pivot_at(double u) const {
  if (is_zero()) {
    throw EmptySupportError("cannot sample from the zero distribution");
  }
  const double x = u * cumulative_.back();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), x);
  if (it == cumulative_.end()) --it;
  return support_[static_cast<std::size_t>(it - cumulative_.begin())];
}

LevelPartition level_partition(const Graph& g, NodeId v) {
  const BfsResult r = bfs(g, v);
  LevelPartition part;
  part.target = v;
  part.distance = r.dist;
  // BFS order is nondecreasing in distance, so levels fill front to back.
  for (NodeId w : r.order) {
    const auto d = static_cast<std::size_t>(r.dist[w]);
    if (d == 0) continue;
    if (part.by_distance.size() < d) part.by_distance.resize(d);
    part.by_distance[d - 1].push_back(w);
  }
  for (auto& level : part.by_distance) std::sort(level.begin(), level.end());
  return part;
}

SamplingDistribution uniform_model(const Graph& g, NodeId v) {
  check_node(g, v);
  std::vector<double> w(g.node_count(), 1.0);
  w[v] = 0.0;
  return require_support(
      SamplingDistribution::from_weights(Model::kUniform, v, std::move(w)));
}

SamplingDistribution dbm_model(const Graph& g, NodeId v) {
  check_node(g, v);
  const BfsResult r = bfs(g, v);
  std::vector<double> w(g.node_count(), 0.0);
  for (NodeId i : r.order) {
    if (i != v) w[i] = 1.0 / r.dist[i];
  }
  return require_support(
      SamplingDistribution::from_weights(Model::kDbm, v, std::move(w)));
}

double eddbm_base(const Graph& g) noexcept {
  return std::max(g.average_degree(), 1.0 + 1e-9);
}

SamplingDistribution eddbm_model(const Graph& g, NodeId v) {
  check_node(g, v);
  const LevelPartition part = level_partition(g, v);
  std::vector<double> w(g.node_count(), 0.0);
  if (part.depth() == 0) {
    return require_support(
        SamplingDistribution::from_weights(Model::kEddbm, v, std::move(w)));
  }

  // Level d carries |V_d| * lambda^-d in total. Work in logs and shift by the
  // largest level so deep levels on high-diameter graphs do not underflow
  // before normalization.
  const double log_base = std::log(eddbm_base(g));
  std::vector<double> log_mass(part.depth());
  for (std::size_t d = 1; d <= part.depth(); ++d) {
    log_mass[d - 1] = std::log(static_cast<double>(part.at(d).size())) -
                      static_cast<double>(d) * log_base;
  }
  const double shift = *std::max_element(log_mass.begin(), log_mass.end());
  std::vector<double> mass(part.depth());
  double total = 0.0;
  for (std::size_t k = 0; k < mass.size(); ++k) {
    mass[k] = std::exp(log_mass[k] - shift);
    total += mass[k];
  }

  for (std::size_t d = 1; d <= part.depth(); ++d) {
    const auto& level = part.at(d);
    double inv_deg_sum = 0.0;
    for (NodeId i : level) inv_deg_sum += 1.0 / static_cast<double>(g.degree(i));
    const double level_mass = mass[d - 1] / total;
    for (NodeId i : level) {
      const double p =
          level_mass / static_cast<double>(g.degree(i)) / inv_deg_sum;
      // Every reachable node keeps a normal probability; the added mass is
      // below 1e-300 in total. Twice the minimum survives renormalization.
      w[i] = std::max(p, 2 * std::numeric_limits<double>::min());
    }
  }
  return require_support(
      SamplingDistribution::from_weights(Model::kEddbm, v, std::move(w)));
}

SamplingDistribution optimal_model(NodeId v,
                                   std::span<const double> dependencies_on_v) {
  std::vector<double> w(dependencies_on_v.begin(), dependencies_on_v.end());
  if (v >= w.size()) throw std::out_of_range("target outside the graph");
  w[v] = 0.0;
  return SamplingDistribution::from_weights(Model::kOptimal, v, std::move(w));
}

SamplingDistribution optimal_model(const Graph& g, NodeId v, unsigned threads) {
  check_node(g, v);
  const auto deps = dependencies_on(g, v, threads);
  return optimal_model(v, deps);
}

SamplingDistribution make_distribution(Model m, const Graph& g, NodeId v,
                                       unsigned threads) {
  switch (m) {
    case Model::kUniform:
      return uniform_model(g, v);
    case Model::kDbm:
      return dbm_model(g, v);
    case Model::kEddbm:
      return eddbm_model(g, v);
    case Model::kOptimal:
      return optimal_model(g, v, threads);
  }
  throw std::invalid_argument("unknown model");
}

}  // namespace bolt
