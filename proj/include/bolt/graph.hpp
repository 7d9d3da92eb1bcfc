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

#ifndef BOLT_GRAPH_HPP
#define BOLT_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bolt {

using NodeId = std::uint32_t;

/// Edges exactly as read from a SNAP-style file: file order, duplicates and
/// self-loops preserved.
struct EdgeList {
  std::vector<std::pair<std::string, std::string>> edges;
};

/// Parses whitespace-separated label pairs, one per line. Lines starting with
/// '#' and blank lines are skipped. Throws ParseError on a line that does not
/// hold exactly two tokens.
[[nodiscard]] EdgeList parse_edge_list(std::istream& in);
[[nodiscard]] EdgeList parse_edge_list(std::string_view text);

/// Reads and parses a file. Throws InputError when it cannot be opened.
[[nodiscard]] EdgeList read_edge_list(const std::filesystem::path& path);

/// Immutable unweighted undirected simple graph in compressed sparse row
/// form.
///
/// Internal indices are dense in [0, n) and follow the order of the original
/// labels: numeric order when every label is a non-negative decimal integer,
/// byte-wise order otherwise. Rebuilding a graph from its own labelled edges
/// therefore reproduces it exactly. Neighbor lists are sorted ascending; every
/// traversal in the library inherits its determinism from that.
class Graph {
 public:
  Graph() = default;

  [[nodiscard]] NodeId node_count() const noexcept {
    return static_cast<NodeId>(labels_.size());
  }
  [[nodiscard]] std::size_t edge_count() const noexcept {
    return adjacency_.size() / 2;
  }

  [[nodiscard]] std::span<const NodeId> neighbors(NodeId i) const noexcept {
    return {adjacency_.data() + offsets_[i],
            adjacency_.data() + offsets_[i + 1]};
  }

  /// Number of neighbors of i. Throws std::out_of_range for an invalid index.
  [[nodiscard]] std::size_t degree(NodeId i) const;

  /// 2m/n.
  [[nodiscard]] double average_degree() const noexcept;

  [[nodiscard]] const std::string& label(NodeId i) const { return labels_.at(i); }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept {
    return labels_;
  }

  /// Index of an original label, if present.
  [[nodiscard]] std::optional<NodeId> find(std::string_view label) const;

  /// Every undirected edge once, as (i, j) with i < j, in ascending order.
  [[nodiscard]] std::vector<std::pair<NodeId, NodeId>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph_from_labels(
      std::vector<std::string> labels, bool numeric,
      std::vector<std::pair<NodeId, NodeId>> edges);

  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> adjacency_;
  std::vector<std::string> labels_;
  bool numeric_labels_ = true;
};

/// Symmetrizes, drops self-loops, collapses duplicate edges and removes nodes
/// left without an edge. Throws EmptyGraphError when nothing survives.
[[nodiscard]] Graph build_graph(const EdgeList& list);

/// Same preprocessing for integer-labelled edges (generators use this).
[[nodiscard]] Graph build_graph(
    std::span<const std::pair<std::uint64_t, std::uint64_t>> edges);

/// Builds from already-interned labels. `edges` index into `labels`; labels
/// must be sorted under the ordering selected by `numeric` and unique.
[[nodiscard]] Graph build_graph_from_labels(
    std::vector<std::string> labels, bool numeric,
    std::vector<std::pair<NodeId, NodeId>> edges);

/// SNAP edge-list text: optional '#' header lines, then "label label" per edge.
void write_edge_list(std::ostream& out, const Graph& g,
                     std::span<const std::string> header = {});

/// Sidecar CSV mapping original labels to internal indices.
void write_label_mapping(std::ostream& out, const Graph& g);

}  // namespace bolt

#endif  // BOLT_GRAPH_HPP
