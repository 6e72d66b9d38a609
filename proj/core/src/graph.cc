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

#include "defall/graph.h"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "defall/error.h"

namespace defall {

Graph::Graph(std::vector<std::string> labels, std::span<const Edge> edges)
    : labels_(std::move(labels)) {
  const auto n = static_cast<Vertex>(labels_.size());
  index_.reserve(labels_.size());
  for (Vertex v = 0; v < n; ++v) {
    if (!index_.emplace(labels_[static_cast<std::size_t>(v)], v).second) {
      throw PreconditionError("duplicate vertex label '" +
                              labels_[static_cast<std::size_t>(v)] + "'");
    }
  }

  std::vector<std::size_t> degree(labels_.size(), 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw PreconditionError("edge endpoint out of range");
    }
    if (u == v) {
      throw PreconditionError("self-loop at '" + label(u) + "'");
    }
    ++degree[static_cast<std::size_t>(u)];
    ++degree[static_cast<std::size_t>(v)];
  }

  offsets_.assign(labels_.size() + 1, 0);
  std::partial_sum(degree.begin(), degree.end(), offsets_.begin() + 1);
  targets_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    targets_[fill[static_cast<std::size_t>(u)]++] = v;
    targets_[fill[static_cast<std::size_t>(v)]++] = u;
  }
  for (Vertex v = 0; v < n; ++v) {
    auto first = targets_.begin() +
                 static_cast<std::ptrdiff_t>(offsets_[static_cast<std::size_t>(v)]);
    auto last = targets_.begin() + static_cast<std::ptrdiff_t>(
                                       offsets_[static_cast<std::size_t>(v) + 1]);
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) {
      const Vertex w = *std::adjacent_find(first, last);
      throw PreconditionError("duplicate edge '" + label(std::min(v, w)) +
                              "' -- '" + label(std::max(v, w)) + "'");
    }
  }
}

Graph Graph::WithIndexLabels(int n, std::span<const Edge> edges) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return Graph(std::move(labels), edges);
}

bool Graph::HasEdge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order()) return false;
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::optional<Vertex> Graph::FindLabel(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex Graph::VertexOf(std::string_view label) const {
  auto v = FindLabel(label);
  if (!v) throw PreconditionError("unknown vertex '" + std::string(label) + "'");
  return *v;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::InducedSubgraph(const VertexSet& keep,
                             std::vector<Vertex>* map) const {
  std::vector<Vertex> to_new(static_cast<std::size_t>(order()), -1);
  std::vector<Vertex> to_old;
  std::vector<std::string> labels;
  for (Vertex v : keep) {
    to_new[static_cast<std::size_t>(v)] = static_cast<Vertex>(to_old.size());
    to_old.push_back(v);
    labels.push_back(label(v));
  }
  std::vector<Edge> sub_edges;
  for (Vertex v : keep) {
    for (Vertex w : neighbors(v)) {
      if (v < w && keep.contains(w)) {
        sub_edges.emplace_back(to_new[static_cast<std::size_t>(v)],
                               to_new[static_cast<std::size_t>(w)]);
      }
    }
  }
  if (map != nullptr) *map = std::move(to_old);
  return Graph(std::move(labels), sub_edges);
}

std::vector<std::string> SortedLabels(const Graph& g, const VertexSet& set) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(set.size()));
  for (Vertex v : set) out.push_back(g.label(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::string FormatSet(const Graph& g, const VertexSet& set) {
  std::string out;
  for (const auto& label : SortedLabels(g, set)) {
    if (!out.empty()) out += ',';
    out += label;
  }
  return out;
}

VertexSet ParseSetLabels(const Graph& g, std::string_view text) {
  VertexSet set(g.order());
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) {
      token.remove_prefix(1);
    }
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) {
      token.remove_suffix(1);
    }
    if (!token.empty()) set.insert(g.VertexOf(token));
    pos = comma + 1;
  }
  return set;
}

CanonicalSetOrder::CanonicalSetOrder(const Graph& g)
    : rank_(static_cast<std::size_t>(g.order())) {
  std::vector<Vertex> by_label(static_cast<std::size_t>(g.order()));
  std::iota(by_label.begin(), by_label.end(), 0);
  std::sort(by_label.begin(), by_label.end(),
            [&g](Vertex a, Vertex b) { return g.label(a) < g.label(b); });
  for (std::size_t i = 0; i < by_label.size(); ++i) {
    rank_[static_cast<std::size_t>(by_label[i])] = static_cast<int>(i);
  }
}

bool CanonicalSetOrder::operator()(const VertexSet& a,
                                   const VertexSet& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  auto ranks = [this](const VertexSet& s) {
    std::vector<int> r;
    r.reserve(static_cast<std::size_t>(s.size()));
    for (Vertex v : s) r.push_back(rank(v));
    std::sort(r.begin(), r.end());
    return r;
  };
  return ranks(a) < ranks(b);
}

}  // namespace defall
