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

#include "bolt/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "bolt/generators.hpp"
#include "bolt/shortest_paths.hpp"

namespace bolt {

namespace {

constexpr double kMinLevelSize = 0.5;

template <class Next>
std::vector<double> unroll(std::uint64_t n, std::size_t max_levels, Next next) {
  const double nd = static_cast<double>(n);
  std::vector<double> alpha{1.0};
  double placed = 1.0;
  while (alpha.size() <= max_levels) {
    const double candidate = std::min(next(alpha.back(), placed), nd - placed);
    if (!(candidate >= kMinLevelSize)) break;
    alpha.push_back(candidate);
    placed += candidate;
  }
  return alpha;
}

}  // namespace

LevelProfile predict_levels(std::uint64_t n, double p, std::size_t max_levels) {
  if (n < 2) throw std::invalid_argument("level prediction needs n >= 2");
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("level prediction needs 0 < p < 1");
  }
  const double nd = static_cast<double>(n);
  LevelProfile profile;
  profile.n = n;
  profile.p = p;
  profile.lambda = (nd - 1.0) * p;

  // With placed = 1 (the root only) both forms give (n - 1) p.
  profile.alpha = unroll(n, max_levels, [&](double prev, double placed) {
    return nd * p * (1.0 - placed / nd) * prev;
  });
  profile.alpha_exact = unroll(n, max_levels, [&](double prev, double placed) {
    return (nd - placed) * -std::expm1(prev * std::log1p(-p));
  });

  profile.remaining.resize(profile.alpha.size());
  double placed = 0.0;
  for (std::size_t m = 0; m < profile.alpha.size(); ++m) {
    profile.remaining[m] = 1.0 - placed / nd;
    placed += profile.alpha[m];
  }
  return profile;
}

double expected_dependency(const LevelProfile& profile, std::size_t level,
                           std::size_t last_level) {
  if (level < 1 || level > last_level || last_level > profile.last_level()) {
    throw std::out_of_range("level outside the predicted traversal");
  }
  double e = 0.0;
  for (std::size_t m = last_level; m-- > level;) {
    e = profile.remaining[m + 1] * profile.lambda * (1.0 + e);
  }
  return e;
}

double nested_correction(const LevelProfile& profile, std::size_t k) {
  const std::size_t l = profile.last_level();
  if (k < 2 || k > l) throw std::out_of_range("no such pair of levels");
  double inner = 1.0;
  for (std::size_t m = l; m >= l - k + 3 && m > 0; --m) {
    inner = 1.0 + profile.remaining[m] * profile.lambda * inner;
  }
  return profile.remaining[l - k + 2] * inner;
}

double dependency_ratio(const LevelProfile& profile, std::size_t k) {
  const std::size_t l = profile.last_level();
  if (k < 2 || k + 1 > l) throw std::out_of_range("no such pair of levels");
  const double phi = nested_correction(profile, k);
  if (phi == 0.0) throw std::domain_error("nested correction factor is zero");
  return profile.remaining[l - k + 1] * (1.0 / phi + profile.lambda);
}

EmpiricalLevels empirical_levels(std::uint64_t n, double p, std::size_t graphs,
                                 std::size_t sources, RngSeed seed) {
  std::vector<std::vector<double>> samples;
  for (std::size_t gi = 0; gi < graphs; ++gi) {
    const RngSeed graph_seed = derive_seed(seed, 2 * gi);
    const Graph g = generate_er(n, p, graph_seed);
    std::vector<NodeId> nodes(g.node_count());
    std::iota(nodes.begin(), nodes.end(), 0);
    auto engine = make_engine(derive_seed(seed, 2 * gi + 1));
    std::shuffle(nodes.begin(), nodes.end(), engine);
    nodes.resize(std::min<std::size_t>(sources, nodes.size()));
    for (NodeId s : nodes) {
      const BfsResult r = bfs(g, s);
      std::vector<double> sizes;
      for (NodeId w : r.order) {
        const auto d = static_cast<std::size_t>(r.dist[w]);
        if (sizes.size() <= d) sizes.resize(d + 1, 0.0);
        sizes[d] += 1.0;
      }
      samples.push_back(std::move(sizes));
    }
  }

  EmpiricalLevels out;
  out.traversals = samples.size();
  std::size_t depth = 0;
  for (const auto& s : samples) depth = std::max(depth, s.size());
  out.mean.assign(depth, 0.0);
  out.stddev.assign(depth, 0.0);
  if (samples.empty()) return out;
  const double count = static_cast<double>(samples.size());
  for (std::size_t d = 0; d < depth; ++d) {
    double mean = 0.0;
    for (const auto& s : samples) mean += d < s.size() ? s[d] : 0.0;
    mean /= count;
    double var = 0.0;
    for (const auto& s : samples) {
      const double x = (d < s.size() ? s[d] : 0.0) - mean;
      var += x * x;
    }
    out.mean[d] = mean;
    out.stddev[d] = samples.size() > 1 ? std::sqrt(var / (count - 1.0)) : 0.0;
  }
  return out;
}

}  // namespace bolt
