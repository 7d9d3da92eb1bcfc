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

#include "bolt/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "bolt/errors.hpp"

namespace bolt {

namespace {

// Canonical non-negative decimal: digits only, no leading zero unless "0".
bool is_canonical_decimal(std::string_view s) {
  if (s.empty()) return false;
  if (s.size() > 1 && s.front() == '0') return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

// Numeric order on canonical decimals without parsing them.
bool numeric_less(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool label_less(std::string_view a, std::string_view b, bool numeric) {
  return numeric ? numeric_less(a, b) : a < b;
}

}  // namespace

EdgeList parse_edge_list(std::istream& in) {
  EdgeList list;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;

    std::istringstream tokens(line);
    std::string a, b, extra;
    if (!(tokens >> a >> b)) {
      throw ParseError(line_no, "expected two labels, got one");
    }
    if (tokens >> extra) {
      throw ParseError(line_no, "expected two labels, got more");
    }
    list.edges.emplace_back(std::move(a), std::move(b));
  }
  return list;
}

EdgeList parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

EdgeList read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return parse_edge_list(in);
}

std::size_t Graph::degree(NodeId i) const {
  if (i >= node_count()) {
    throw std::out_of_range("node index " + std::to_string(i) +
                            " out of range");
  }
  return offsets_[i + 1] - offsets_[i];
}

double Graph::average_degree() const noexcept {
  if (labels_.empty()) return 0.0;
  return static_cast<double>(adjacency_.size()) /
         static_cast<double>(labels_.size());
}

std::optional<NodeId> Graph::find(std::string_view label) const {
  const bool numeric = numeric_labels_;
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label,
                             [numeric](const std::string& a, std::string_view b) {
                               return label_less(a, b, numeric);
                             });
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<NodeId>(it - labels_.begin());
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(edge_count());
  for (NodeId i = 0; i < node_count(); ++i) {
    for (NodeId j : neighbors(i)) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

Graph build_graph_from_labels(std::vector<std::string> labels, bool numeric,
                              std::vector<std::pair<NodeId, NodeId>> edges) {
  // Orient every edge (low, high), then sort + unique removes duplicates and
  // reciprocal directed copies in one pass.
  std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
  for (auto& [a, b] : edges) {
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (edges.empty()) throw EmptyGraphError("graph has no edges");

  // Drop labels that no surviving edge touches.
  std::vector<NodeId> remap(labels.size(), 0);
  std::vector<char> used(labels.size(), 0);
  for (const auto& [a, b] : edges) used[a] = used[b] = 1;
  NodeId next = 0;
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (used[i]) {
      remap[i] = next++;
      kept.push_back(std::move(labels[i]));
    }
  }

  Graph g;
  g.labels_ = std::move(kept);
  g.numeric_labels_ = numeric;
  const NodeId n = next;
  std::vector<std::size_t> degree(n, 0);
  for (auto& [a, b] : edges) {
    a = remap[a];
    b = remap[b];
    ++degree[a];
    ++degree[b];
  }
  g.offsets_.assign(n + 1, 0);
  for (NodeId i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + degree[i];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges arrive sorted by (low, high), so each list receives its smaller
  // neighbors ascending, then its larger ones ascending.
  for (const auto& [a, b] : edges) {
    g.adjacency_[cursor[a]++] = b;
    g.adjacency_[cursor[b]++] = a;
  }
  return g;
}

Graph build_graph(const EdgeList& list) {
  std::vector<std::string_view> names;
  names.reserve(list.edges.size() * 2);
  for (const auto& [a, b] : list.edges) {
    if (a == b) continue;
    names.push_back(a);
    names.push_back(b);
  }
  if (names.empty()) throw EmptyGraphError("graph has no edges");

  const bool numeric =
      std::all_of(names.begin(), names.end(), is_canonical_decimal);
  const auto less = [numeric](std::string_view a, std::string_view b) {
    return label_less(a, b, numeric);
  };
  std::sort(names.begin(), names.end(), less);
  names.erase(std::unique(names.begin(), names.end()), names.end());

  const auto index_of = [&](std::string_view s) {
    return static_cast<NodeId>(
        std::lower_bound(names.begin(), names.end(), s, less) - names.begin());
  };
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(list.edges.size());
  for (const auto& [a, b] : list.edges) {
    if (a == b) continue;
    edges.emplace_back(index_of(a), index_of(b));
  }
  std::vector<std::string> labels(names.begin(), names.end());
  return build_graph_from_labels(std::move(labels), numeric, std::move(edges));
}

Graph build_graph(
    std::span<const std::pair<std::uint64_t, std::uint64_t>> edges) {
  std::vector<std::uint64_t> ids;
  ids.reserve(edges.size() * 2);
  for (const auto& [a, b] : edges) {
    if (a == b) continue;
    ids.push_back(a);
    ids.push_back(b);
  }
  if (ids.empty()) throw EmptyGraphError("graph has no edges");
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  const auto index_of = [&](std::uint64_t x) {
    return static_cast<NodeId>(std::lower_bound(ids.begin(), ids.end(), x) -
                               ids.begin());
  };
  std::vector<std::pair<NodeId, NodeId>> indexed;
  indexed.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a == b) continue;
    indexed.emplace_back(index_of(a), index_of(b));
  }
  std::vector<std::string> labels;
  labels.reserve(ids.size());
  for (auto x : ids) labels.push_back(std::to_string(x));
  return build_graph_from_labels(std::move(labels), true, std::move(indexed));
}

void write_edge_list(std::ostream& out, const Graph& g,
                     std::span<const std::string> header) {
  for (const auto& line : header) out << "# " << line << '\n';
  for (const auto& [a, b] : g.edges()) {
    out << g.label(a) << ' ' << g.label(b) << '\n';
  }
}

void write_label_mapping(std::ostream& out, const Graph& g) {
  out << "original_label,internal_index\n";
  for (NodeId i = 0; i < g.node_count(); ++i) {
    out << g.label(i) << ',' << i << '\n';
  }
}

}  // namespace bolt
