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

#include "bolt/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace bolt {

std::vector<std::pair<std::uint64_t, std::uint64_t>> er_edges(std::uint64_t n,
                                                              double p,
                                                              RngSeed seed) {
  if (n < 2) throw std::invalid_argument("ER generator needs n >= 2");
  if (!(p > 0.0 && p <= 1.0)) {
    throw std::invalid_argument("ER generator needs 0 < p <= 1");
  }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  edges.reserve(static_cast<std::size_t>(p * static_cast<double>(n) *
                                         static_cast<double>(n - 1) / 2 * 1.1) +
                16);
  if (p == 1.0) {
    for (std::uint64_t v = 1; v < n; ++v) {
      for (std::uint64_t w = 0; w < v; ++w) edges.emplace_back(w, v);
    }
    return edges;
  }

  // Batagelj & Brandes skipping over the lower triangle (w < v).
  auto engine = make_engine(seed);
  const double log_q = std::log1p(-p);
  std::uint64_t v = 1;
  std::int64_t w = -1;
  while (v < n) {
    const double r = unit_interval(engine());
    const double skip = std::floor(std::log1p(-r) / log_q);
    w += 1 + static_cast<std::int64_t>(skip);
    while (w >= static_cast<std::int64_t>(v) && v < n) {
      w -= static_cast<std::int64_t>(v);
      ++v;
    }
    if (v < n) edges.emplace_back(static_cast<std::uint64_t>(w), v);
  }
  return edges;
}

Graph generate_er(std::uint64_t n, double p, RngSeed seed) {
  const auto edges = er_edges(n, p, seed);
  return build_graph(edges);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> ba_edges(std::uint64_t n,
                                                              std::uint64_t k,
                                                              RngSeed seed) {
  if (k < 1 || n <= k) throw std::invalid_argument("BA generator needs n > k >= 1");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  edges.reserve(k * (k - 1) / 2 + (n - k) * k);
  // Every edge endpoint enters the urn once, so a uniform draw from it is a
  // degree-proportional draw over nodes.
  std::vector<std::uint64_t> urn;
  urn.reserve(2 * edges.capacity());
  for (std::uint64_t a = 0; a < k; ++a) {
    for (std::uint64_t b = a + 1; b < k; ++b) {
      edges.emplace_back(a, b);
      urn.push_back(a);
      urn.push_back(b);
    }
  }

  auto engine = make_engine(seed);
  std::vector<std::uint64_t> targets;
  targets.reserve(k);
  for (std::uint64_t node = k; node < n; ++node) {
    targets.clear();
    while (targets.size() < k) {
      std::uint64_t pick;
      if (urn.empty()) {
        // K_1 seed has no degree mass yet.
        pick = std::uniform_int_distribution<std::uint64_t>(0, node - 1)(engine);
      } else {
        pick = urn[std::uniform_int_distribution<std::size_t>(
            0, urn.size() - 1)(engine)];
      }
      if (std::find(targets.begin(), targets.end(), pick) == targets.end()) {
        targets.push_back(pick);
      }
    }
    for (auto t : targets) {
      edges.emplace_back(t, node);
      urn.push_back(t);
      urn.push_back(node);
    }
  }
  return edges;
}

Graph generate_ba(std::uint64_t n, std::uint64_t k, RngSeed seed) {
  const auto edges = ba_edges(n, k, seed);
  return build_graph(edges);
}

double er_probability_for_exponent(std::uint64_t n, double x) {
  const double nd = static_cast<double>(n);
  return std::pow(nd, 1.0 / x) / nd;
}

std::uint64_t ba_attachment_for_exponent(std::uint64_t n, double x) {
  // pow(1000, 1/3) lands a hair off 10, so whole values get a tolerance.
  const double half_root = std::pow(static_cast<double>(n), 1.0 / x) / 2.0;
  return static_cast<std::uint64_t>(std::ceil(half_root - 1e-9));
}

}  // namespace bolt
