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

#ifndef DEFALL_TREE_H_
#define DEFALL_TREE_H_

#include <cstdint>
#include <vector>

#include "defall/graph.h"
#include "defall/vertex_set.h"

namespace defall {

// Connected with exactly n-1 edges. The empty graph and K1 are trees.
bool IsTree(const Graph& g);

// Smallest vertex set containing `u` that induces a connected subtree of
// `t`, i.e. the union of the t-paths between all pairs of members. Linear.
// Throws NotATreeError, or PreconditionError when `u` is empty.
VertexSet ConnectedClosure(const Graph& t, const VertexSet& u);

// Two pieces obtained from a tree at an edge {v, u} whose endpoints both
// have degree 2 or 3. `left` is the component of v after deleting every
// edge at u except {u, v}; u is a leaf there. `right` is symmetric.
struct EdgeSplit {
  Graph left;
  Graph right;
  std::vector<Vertex> left_map;   // left index -> original index
  std::vector<Vertex> right_map;  // right index -> original index
};

// Throws NotATreeError, or PreconditionError when {v, u} is not an edge or
// an endpoint has degree outside {2, 3}.
EdgeSplit SplitAtInteriorEdge(const Graph& t, Vertex v, Vertex u);

// Uniformly random labeled tree on labels "0".."n-1", decoded from a random
// Pruefer sequence. Deterministic for fixed (n, seed). Throws for n < 1.
Graph RandomTree(int n, std::uint64_t seed);

}  // namespace defall

#endif  // DEFALL_TREE_H_
