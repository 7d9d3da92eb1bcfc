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

#include "bolt/estimator.hpp"

#include <stdexcept>

#include "bolt/parallel.hpp"

namespace bolt {

EstimationResult estimate(const Graph& g, const SamplingDistribution& dist,
                          NodeId v, std::uint32_t samples, RngSeed seed,
                          SingleSourceBrandes& pass) {
  if (samples == 0) throw std::invalid_argument("need at least one sample");
  if (v >= g.node_count()) throw std::out_of_range("target outside the graph");
  if (dist.target() != v) {
    throw std::invalid_argument("distribution was built for another target");
  }
  if (dist.size() != g.node_count()) {
    throw std::invalid_argument("distribution was built for another graph");
  }

  EstimationResult result;
  result.target = v;
  result.seed = seed;
  result.model = dist.model();
  if (dist.is_zero()) return result;

  double sum = 0.0;
  for (std::uint32_t t = 0; t < samples; ++t) {
    const NodeId pivot = sample_pivot(dist, derive_seed(seed, t));
    pass.run(pivot);
    sum += pass.dependency(v) / dist.probability(pivot);
  }
  result.estimate = sum / samples;
  result.samples = samples;
  return result;
}

EstimationResult estimate(const Graph& g, const SamplingDistribution& dist,
                          NodeId v, std::uint32_t samples, RngSeed seed) {
  SingleSourceBrandes pass(g);
  return estimate(g, dist, v, samples, seed, pass);
}

std::vector<EstimationResult> estimate_nodes(const Graph& g,
                                             std::span<const NodeId> nodes,
                                             Model m, std::uint32_t samples,
                                             RngSeed seed, unsigned threads) {
  std::vector<EstimationResult> out(nodes.size());
  parallel_chunks(nodes.size(), resolve_threads(threads),
                  [&](unsigned, std::size_t begin, std::size_t end) {
                    SingleSourceBrandes pass(g);
                    for (std::size_t i = begin; i < end; ++i) {
                      const auto dist = make_distribution(m, g, nodes[i]);
                      out[i] = estimate(g, dist, nodes[i], samples,
                                        derive_seed(seed, i), pass);
                    }
                  });
  return out;
}

}  // namespace bolt
