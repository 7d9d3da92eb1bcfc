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

#ifndef BOLT_TESTS_FIXTURES_HPP
#define BOLT_TESTS_FIXTURES_HPP

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "bolt/graph.hpp"

namespace bolt::testing {

using IntEdges = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

/// Integer-labelled graph; node i is label i when labels 0..n-1 all occur.
inline Graph from_edges(const IntEdges& edges) { return build_graph(edges); }

/// a - b - c as 0 - 1 - 2.
inline Graph path3() { return from_edges({{0, 1}, {1, 2}}); }

inline Graph path(std::uint64_t n) {
  IntEdges e;
  for (std::uint64_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return from_edges(e);
}

/// Center 0 with leaves 1..leaves.
inline Graph star(std::uint64_t leaves) {
  IntEdges e;
  for (std::uint64_t i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return from_edges(e);
}

inline Graph cycle(std::uint64_t n) {
  IntEdges e;
  for (std::uint64_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return from_edges(e);
}

/// rows x cols lattice, node r * cols + c. grid(3, 3) has 9 nodes, 12 edges.
inline Graph grid(std::uint64_t rows, std::uint64_t cols) {
  IntEdges e;
  for (std::uint64_t r = 0; r < rows; ++r) {
    for (std::uint64_t c = 0; c < cols; ++c) {
      const std::uint64_t id = r * cols + c;
      if (c + 1 < cols) e.emplace_back(id, id + 1);
      if (r + 1 < rows) e.emplace_back(id, id + cols);
    }
  }
  return from_edges(e);
}

inline Graph complete(std::uint64_t n) {
  IntEdges e;
  for (std::uint64_t i = 0; i < n; ++i) {
    for (std::uint64_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return from_edges(e);
}

/// Two components: a 4-path 0-1-2-3 and a triangle 4-5-6.
inline Graph two_components() {
  return from_edges({{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {4, 6}});
}

}  // namespace bolt::testing

#endif  // BOLT_TESTS_FIXTURES_HPP
