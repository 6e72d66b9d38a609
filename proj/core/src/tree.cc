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

#include "defall/tree.h"

#include <functional>
#include <queue>
#include <random>

#include "defall/error.h"

namespace defall {
namespace {

// Vertices reachable from `start` without expanding `blocked` (which is
// still collected when adjacent).
VertexSet ReachableAvoiding(const Graph& t, Vertex start, Vertex blocked) {
  VertexSet seen(t.order());
  std::vector<Vertex> stack{start};
  seen.insert(start);
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    if (x == blocked) continue;
    for (Vertex y : t.neighbors(x)) {
      if (!seen.contains(y)) {
        seen.insert(y);
        stack.push_back(y);
      }
    }
  }
  return seen;
}

}  // namespace

bool IsTree(const Graph& g) {
  const int n = g.order();
  if (n == 0) return true;
  if (g.edge_count() != static_cast<std::size_t>(n - 1)) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbors(x)) {
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == n;
}

VertexSet ConnectedClosure(const Graph& t, const VertexSet& u) {
  if (!IsTree(t)) throw NotATreeError();
  if (u.empty()) throw PreconditionError("closure of an empty vertex set");
  const auto n = static_cast<std::size_t>(t.order());

  // Rooted at a member of u, a vertex lies on a path between members iff
  // its subtree contains a member.
  const Vertex root = u.front();
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> order;
  order.reserve(n);
  order.push_back(root);
  parent[static_cast<std::size_t>(root)] = root;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex x = order[i];
    for (Vertex y : t.neighbors(x)) {
      if (parent[static_cast<std::size_t>(y)] == -1) {
        parent[static_cast<std::size_t>(y)] = x;
        order.push_back(y);
      }
    }
  }
  std::vector<char> marked(n, 0);
  for (Vertex x : u) marked[static_cast<std::size_t>(x)] = 1;
  for (std::size_t i = order.size(); i-- > 1;) {
    const Vertex x = order[i];
    if (marked[static_cast<std::size_t>(x)]) {
      marked[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])] = 1;
    }
  }
  VertexSet closure(t.order());
  for (std::size_t x = 0; x < n; ++x) {
    if (marked[x]) closure.insert(static_cast<Vertex>(x));
  }
  return closure;
}

EdgeSplit SplitAtInteriorEdge(const Graph& t, Vertex v, Vertex u) {
  if (!IsTree(t)) throw NotATreeError();
  if (!t.HasEdge(v, u)) throw PreconditionError("split pair is not an edge");
  for (Vertex x : {v, u}) {
    if (t.degree(x) != 2 && t.degree(x) != 3) {
      throw PreconditionError("split endpoint '" + t.label(x) +
                              "' is not interior (degree 2 or 3)");
    }
  }
  EdgeSplit split;
  split.left = t.InducedSubgraph(ReachableAvoiding(t, v, u), &split.left_map);
  split.right = t.InducedSubgraph(ReachableAvoiding(t, u, v), &split.right_map);
  return split;
}

Graph RandomTree(int n, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("random tree needs n >= 1");
  std::vector<Edge> edges;
  if (n == 2) edges.emplace_back(0, 1);
  if (n > 2) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    std::vector<Vertex> code(static_cast<std::size_t>(n - 2));
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (auto& c : code) {
      c = pick(rng);
      ++degree[static_cast<std::size_t>(c)];
    }
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex x = 0; x < n; ++x) {
      if (degree[static_cast<std::size_t>(x)] == 1) leaves.push(x);
    }
    for (Vertex c : code) {
      const Vertex leaf = leaves.top();
      leaves.pop();
      edges.emplace_back(leaf, c);
      if (--degree[static_cast<std::size_t>(c)] == 1) leaves.push(c);
    }
    const Vertex a = leaves.top();
    leaves.pop();
    edges.emplace_back(a, leaves.top());
  }
  return Graph::WithIndexLabels(n, edges);
}

}  // namespace defall
