// Copyright 2026 The defall Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DEFALL_GRAPH_H_
#define DEFALL_GRAPH_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "defall/vertex_set.h"

namespace defall {

using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph with stable external labels.
//
// Vertices are the internal indices 0..order()-1; neighbor lists are sorted
// ascending. Labels are unique and survive every derived-graph operation
// (induced subgraphs, edge splits) through explicit index maps.
class Graph {
 public:
  Graph() = default;

  // Throws PreconditionError on self-loops, duplicate edges, out-of-range
  // endpoints or duplicate labels.
  Graph(std::vector<std::string> labels, std::span<const Edge> edges);

  // Graph on labels "0".."n-1".
  static Graph WithIndexLabels(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(labels_.size()); }
  std::size_t edge_count() const { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[static_cast<std::size_t>(v)],
            targets_.data() + offsets_[static_cast<std::size_t>(v) + 1]};
  }
  int degree(Vertex v) const {
    return static_cast<int>(offsets_[static_cast<std::size_t>(v) + 1] -
                            offsets_[static_cast<std::size_t>(v)]);
  }
  bool HasEdge(Vertex u, Vertex v) const;

  const std::string& label(Vertex v) const {
    return labels_[static_cast<std::size_t>(v)];
  }
  std::span<const std::string> labels() const { return labels_; }
  std::optional<Vertex> FindLabel(std::string_view label) const;
  // Throws PreconditionError for an unknown label.
  Vertex VertexOf(std::string_view label) const;

  // Each edge once, as (u, v) with u < v, in ascending order.
  std::vector<Edge> edges() const;

  // Subgraph induced by `keep`, vertices renumbered in ascending original
  // order. `map`, when given, receives new index -> original index.
  Graph InducedSubgraph(const VertexSet& keep,
                        std::vector<Vertex>* map = nullptr) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
  std::unordered_map<std::string, Vertex> index_;
};

// Sorted labels of `set`, lexicographic.
std::vector<std::string> SortedLabels(const Graph& g, const VertexSet& set);

// Comma-separated sorted labels, the canonical one-line rendering of a set.
std::string FormatSet(const Graph& g, const VertexSet& set);

// Parses "a,b,c" (whitespace tolerated, empty string = empty set).
// Throws PreconditionError for unknown labels.
VertexSet ParseSetLabels(const Graph& g, std::string_view text);

// Canonical order of vertex sets: by size, then lexicographic on the
// sorted label sequences.
class CanonicalSetOrder {
 public:
  explicit CanonicalSetOrder(const Graph& g);
  bool operator()(const VertexSet& a, const VertexSet& b) const;
  // Position of v among all labels sorted lexicographically.
  int rank(Vertex v) const { return rank_[static_cast<std::size_t>(v)]; }

 private:
  std::vector<int> rank_;
};

}  // namespace defall

#endif  // DEFALL_GRAPH_H_
