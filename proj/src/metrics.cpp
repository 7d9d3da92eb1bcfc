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

#include "bolt/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "bolt/errors.hpp"
#include "bolt/parallel.hpp"
#include "bolt/shortest_paths.hpp"

namespace bolt {

namespace {

constexpr std::uint64_t kPairStream = 0x70616972ULL;  // "pair"
constexpr NodeId kFullEnumerationLimit = 3000;
constexpr std::uint64_t kSampledPairs = 1'000'000;
// Above this the n x n dependency matrix is not worth its memory.
constexpr NodeId kDependencyMatrixLimit = 4000;

void check_lengths(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("score vectors differ in length");
  }
}


// Pair index k in the order (0,1), (0,2), (1,2), (0,3), ... i.e. k =
// j(j-1)/2 + i with i < j.
NodePair decode_pair(std::uint64_t k) {
  auto j = static_cast<std::uint64_t>(
      (1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(k))) / 2.0);
  while (j * (j - 1) / 2 > k) --j;
  while ((j + 1) * j / 2 <= k) ++j;
  const std::uint64_t i = k - j * (j - 1) / 2;
  return {static_cast<NodeId>(i), static_cast<NodeId>(j)};
}

template <class Keep>
double pair_agreement(std::span<const double> exact,
                      std::span<const double> estimates,
                      std::span<const NodePair> pairs, Keep keep) {
  check_lengths(exact, estimates);
  std::uint64_t considered = 0;
  std::uint64_t correct = 0;
  for (const auto& [i, j] : pairs) {
    if (i >= exact.size() || j >= exact.size()) {
      throw std::out_of_range("pair outside the score vectors");
    }
    if (!keep(i, j)) continue;
    ++considered;
    if (exact_order(exact[i], exact[j]) == exact_order(estimates[i], estimates[j])) {
      ++correct;
    }
  }
  if (considered == 0) throw UndefinedMetricError("no node pair to compare");
  return static_cast<double>(correct) / static_cast<double>(considered);
}

template <class F>
std::optional<double> defined_or_empty(F&& f) {
  try {
    return f();
  } catch (const UndefinedMetricError&) {
    return std::nullopt;
  }
}

}  // namespace

double error_percent(double exact, double approx) {
  if (!(exact > 0.0)) {
    throw UndefinedMetricError("error is undefined for a zero exact score");
  }
  return std::abs(exact - approx) / exact * 100.0;
}

std::uint64_t pair_count(NodeId n) noexcept {
  return static_cast<std::uint64_t>(n) * (n == 0 ? 0 : n - 1) / 2;
}

std::uint64_t default_pair_budget(NodeId n) noexcept {
  return n <= kFullEnumerationLimit ? pair_count(n) : kSampledPairs;
}

std::vector<NodePair> select_pairs(NodeId n, std::uint64_t budget,
                                   RngSeed seed) {
  const std::uint64_t total = pair_count(n);
  std::vector<NodePair> pairs;
  if (budget >= total) {
    pairs.reserve(total);
    for (NodeId i = 0; i < n; ++i) {
      for (NodeId j = i + 1; j < n; ++j) pairs.push_back({i, j});
    }
    return pairs;
  }

  // Floyd's sampling: `budget` distinct indices in [0, total).
  auto engine = make_engine(seed);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(budget * 2);
  for (std::uint64_t top = total - budget; top < total; ++top) {
    const auto pick =
        std::uniform_int_distribution<std::uint64_t>(0, top)(engine);
    if (!chosen.insert(pick).second) chosen.insert(top);
  }
  pairs.reserve(chosen.size());
  for (auto k : chosen) pairs.push_back(decode_pair(k));
  std::sort(pairs.begin(), pairs.end(), [](NodePair a, NodePair b) {
    return a.first != b.first ? a.first < b.first : a.second < b.second;
  });
  return pairs;
}

int exact_order(double a, double b) noexcept {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  if (std::abs(a - b) <= kExactTieTolerance * scale) return 0;
  return a > b ? 1 : -1;
}

double efficiency(std::span<const double> exact,
                  std::span<const double> estimates,
                  std::span<const NodePair> pairs) {
  return pair_agreement(exact, estimates, pairs,
                        [](NodeId, NodeId) { return true; });
}

std::vector<std::uint64_t> competition_ranks(std::span<const double> exact) {
  std::vector<std::size_t> idx(exact.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return exact[a] > exact[b]; });
  std::vector<std::uint64_t> rank(exact.size());
  std::size_t leader = 0;
  for (std::size_t pos = 0; pos < idx.size(); ++pos) {
    if (pos == 0 || exact_order(exact[idx[leader]], exact[idx[pos]]) != 0) {
      leader = pos;
    }
    rank[idx[pos]] = leader + 1;
  }
  return rank;
}

double relaxed_efficiency(std::span<const double> exact,
                          std::span<const double> estimates,
                          std::span<const NodePair> pairs, std::uint64_t t) {
  if (t == 0) return efficiency(exact, estimates, pairs);
  const auto rank = competition_ranks(exact);
  return pair_agreement(exact, estimates, pairs, [&](NodeId i, NodeId j) {
    const auto gap = rank[i] > rank[j] ? rank[i] - rank[j] : rank[j] - rank[i];
    return gap > t;
  });
}

std::vector<double> fractional_ranks(std::span<const double> xs) {
  std::vector<std::size_t> idx(xs.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
  std::vector<double> rank(xs.size());
  for (std::size_t start = 0; start < idx.size();) {
    std::size_t stop = start + 1;
    while (stop < idx.size() && xs[idx[stop]] == xs[idx[start]]) ++stop;
    // Positions start..stop-1 share the mean of ranks start+1..stop.
    const double shared = (static_cast<double>(start + 1 + stop)) / 2.0;
    for (std::size_t k = start; k < stop; ++k) rank[idx[k]] = shared;
    start = stop;
  }
  return rank;
}

double spearman_rho(std::span<const double> a, std::span<const double> b) {
  check_lengths(a, b);
  if (a.size() < 2) throw UndefinedMetricError("need at least two values");
  const auto ra = fractional_ranks(a);
  const auto rb = fractional_ranks(b);
  const double n = static_cast<double>(a.size());
  const double mean = (n + 1.0) / 2.0;  // ranks always average to this
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    const double da = ra[i] - mean;
    const double db = rb[i] - mean;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa == 0.0 || sbb == 0.0) {
    throw UndefinedMetricError("rank correlation of a constant vector");
  }
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

std::vector<std::vector<double>> estimate_repetitions(
    const Graph& g, Model model, std::uint32_t samples, RngSeed seed,
    std::uint32_t repetitions, unsigned threads) {
  const NodeId n = g.node_count();
  const unsigned workers = resolve_threads(threads);
  std::vector<std::vector<double>> out(repetitions, std::vector<double>(n, 0.0));

  std::vector<double> matrix;
  if (model == Model::kOptimal && n <= kDependencyMatrixLimit) {
    matrix = dependency_matrix(g, workers);
  }
  std::vector<RngSeed> rep_seeds(repetitions);
  for (std::uint32_t r = 0; r < repetitions; ++r) rep_seeds[r] = derive_seed(seed, r);

  parallel_chunks(n, workers, [&](unsigned, std::size_t begin, std::size_t end) {
    SingleSourceBrandes pass(g);
    std::vector<double> column(matrix.empty() ? 0 : n);
    for (std::size_t v = begin; v < end; ++v) {
      const auto node = static_cast<NodeId>(v);
      SamplingDistribution dist = [&] {
        if (matrix.empty()) return make_distribution(model, g, node);
        for (NodeId s = 0; s < n; ++s) column[s] = matrix[std::size_t{s} * n + v];
        return optimal_model(node, column);
      }();
      for (std::uint32_t r = 0; r < repetitions; ++r) {
        out[r][v] = estimate(g, dist, node, samples, derive_seed(rep_seeds[r], v),
                             pass)
                        .estimate;
      }
    }
  });
  return out;
}

double average_error(std::span<const double> exact,
                     const std::vector<std::vector<double>>& repetitions) {
  if (repetitions.empty()) throw std::invalid_argument("no repetitions");
  for (const auto& row : repetitions) check_lengths(exact, row);
  double total = 0.0;
  std::uint64_t counted = 0;
  for (std::size_t v = 0; v < exact.size(); ++v) {
    if (!(exact[v] > 0.0)) continue;
    double node_error = 0.0;
    for (const auto& row : repetitions) node_error += error_percent(exact[v], row[v]);
    total += node_error / static_cast<double>(repetitions.size());
    ++counted;
  }
  if (counted == 0) {
    throw UndefinedMetricError("no node has a positive exact score");
  }
  return total / static_cast<double>(counted);
}

double average_error(const Graph& g, std::span<const double> exact, Model model,
                     std::uint32_t samples, RngSeed seed,
                     std::uint32_t repetitions, unsigned threads) {
  if (exact.size() != g.node_count()) {
    throw std::invalid_argument("exact scores do not match the graph");
  }
  return average_error(
      exact, estimate_repetitions(g, model, samples, seed, repetitions, threads));
}

EvaluationReport evaluate(const Graph& g, std::span<const double> exact,
                          const EvaluationConfig& config, std::string graph_id) {
  if (exact.size() != g.node_count()) {
    throw std::invalid_argument("exact scores do not match the graph");
  }
  if (config.repetitions == 0) throw std::invalid_argument("need a repetition");

  EvaluationReport report;
  report.graph_id = std::move(graph_id);
  report.model = config.model;
  report.samples = config.samples;
  for (std::uint32_t r = 0; r < config.repetitions; ++r) {
    report.seeds.push_back(derive_seed(config.seed, r));
  }
  report.nodes_with_positive_bc = static_cast<std::uint64_t>(
      std::count_if(exact.begin(), exact.end(), [](double x) { return x > 0.0; }));

  const auto reps = estimate_repetitions(g, config.model, config.samples,
                                         config.seed, config.repetitions,
                                         config.threads);
  report.avg_error_pct = defined_or_empty([&] { return average_error(exact, reps); });

  const std::uint64_t budget = config.pair_budget == 0
                                   ? default_pair_budget(g.node_count())
                                   : config.pair_budget;
  const auto pairs = select_pairs(g.node_count(), budget,
                                  derive_seed(config.seed, kPairStream));
  report.pairs_evaluated = pairs.size();
  const auto& first = reps.front();
  report.efficiency_pct =
      defined_or_empty([&] { return 100.0 * efficiency(exact, first, pairs); });
  for (auto t : config.relax_thresholds) {
    report.relaxed_pct[t] = defined_or_empty(
        [&] { return 100.0 * relaxed_efficiency(exact, first, pairs, t); });
  }
  report.spearman = defined_or_empty([&] { return spearman_rho(exact, first); });
  return report;
}

}  // namespace bolt
