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

#include "defall/error.h"
#include "defall/tree.h"
#include "defall/tree_algorithms.h"

namespace defall {

TreeLayers InteriorSet(const Graph& t) {
  if (!IsTree(t)) throw NotATreeError();
  TreeLayers layers{VertexSet(t.order()), VertexSet(t.order())};
  for (Vertex v = 0; v < t.order(); ++v) {
    const int d = t.degree(v);
    if (d == 1) layers.leaves.insert(v);
    if (d == 2 || d == 3) layers.interior.insert(v);
  }
  return layers;
}

TreeExtensionSolver::TreeExtensionSolver(const Graph& t)
    : tree_(t),
      checker_(t),
      in_u_(static_cast<std::size_t>(t.order()), 0),
      in_n_(static_cast<std::size_t>(t.order()), 0),
      inside_(static_cast<std::size_t>(t.order()), 0) {
  if (!IsTree(t)) throw NotATreeError();
  const auto n = static_cast<std::size_t>(t.order());
  parent_.assign(n, -1);
  depth_.assign(n, 0);
  marked_.assign(n, 0);
  if (n == 0) return;
  std::vector<Vertex> order{0};
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Vertex x = order[head];
    for (Vertex w : t.neighbors(x)) {
      if (w == parent_[static_cast<std::size_t>(x)]) continue;
      parent_[static_cast<std::size_t>(w)] = x;
      depth_[static_cast<std::size_t>(w)] = depth_[static_cast<std::size_t>(x)] + 1;
      order.push_back(w);
    }
  }
}

bool TreeExtensionSolver::LoadClosure(const VertexSet& forced) {
  auto up = [&](Vertex x) { return parent_[static_cast<std::size_t>(x)]; };
  auto depth = [&](Vertex x) { return depth_[static_cast<std::size_t>(x)]; };
  // Lowest common ancestor of all forced vertices.
  Vertex top = forced.front();
  for (Vertex s : forced) {
    Vertex a = s;
    while (depth(a) > depth(top)) a = up(a), ++ticks_;
    while (depth(top) > depth(a)) top = up(top), ++ticks_;
    while (a != top) a = up(a), top = up(top), ticks_ += 2;
  }
  std::vector<Vertex>& closure = closure_;
  closure.assign(1, top);
  marked_[static_cast<std::size_t>(top)] = 1;
  for (Vertex s : forced) {
    for (Vertex a = s; !marked_[static_cast<std::size_t>(a)]; a = up(a)) {
      marked_[static_cast<std::size_t>(a)] = 1;
      closure.push_back(a);
      ++ticks_;
    }
  }
  bool clean = true;
  for (Vertex x : closure) {
    marked_[static_cast<std::size_t>(x)] = 0;
    if (in_n_[static_cast<std::size_t>(x)]) clean = false;
  }
  if (!clean) return false;
  for (Vertex x : closure) AddToU(x);
  return true;
}

void TreeExtensionSolver::AddToU(Vertex u) {
  in_u_[static_cast<std::size_t>(u)] = 1;
  members_.push_back(u);
  for (Vertex w : tree_.neighbors(u)) ++inside_[static_cast<std::size_t>(w)];
  ticks_ += static_cast<std::uint64_t>(tree_.degree(u)) + 1;
}

void TreeExtensionSolver::RemoveFromU(Vertex u) {
  in_u_[static_cast<std::size_t>(u)] = 0;
  members_.pop_back();
  for (Vertex w : tree_.neighbors(u)) --inside_[static_cast<std::size_t>(w)];
  ticks_ += static_cast<std::uint64_t>(tree_.degree(u)) + 1;
}

void TreeExtensionSolver::ResetState() {
  while (!members_.empty()) RemoveFromU(members_.back());
  for (Vertex x : added_to_n_) in_n_[static_cast<std::size_t>(x)] = 0;
  added_to_n_.clear();
  frames_.clear();
}

std::optional<bool> TreeExtensionSolver::Evaluate() {
  ++activations_;
  Vertex violator = -1;
  for (Vertex x : members_) {
    ++ticks_;
    if (2 * inside_[static_cast<std::size_t>(x)] + 1 < tree_.degree(x) &&
        (violator < 0 || x < violator)) {
      violator = x;
    }
  }
  if (violator < 0) {
    // U is a connected defensive alliance. If every member has exactly
    // ceil((deg - 1) / 2) neighbors in U, deleting any member makes its
    // U-neighbors violate and the peeling spreads over all of U, so U is
    // globally minimal. Anything else goes through the generic check.
    bool tight = true;
    for (Vertex x : members_) {
      if (inside_[static_cast<std::size_t>(x)] != tree_.degree(x) / 2) {
        tight = false;
        break;
      }
    }
    VertexSet u(tree_.order(), members_);
    if (!tight && !checker_.IsGloballyMinimal(u)) return false;
    witness_ = std::move(u);
    return true;
  }
  frames_.push_back(Frame{violator, 0, added_to_n_.size(), -1});
  return std::nullopt;
}

bool TreeExtensionSolver::Run() {
  std::optional<bool> result = Evaluate();
  while (true) {
    if (result.has_value()) {
      if (frames_.empty()) return *result;
      Frame& parent = frames_.back();
      RemoveFromU(parent.child);
      if (*result) return true;
      in_n_[static_cast<std::size_t>(parent.child)] = 1;
      added_to_n_.push_back(parent.child);
      result.reset();
    }
    Frame& f = frames_.back();
    const auto nbrs = tree_.neighbors(f.violator);
    while (f.next < nbrs.size()) {
      const auto w = static_cast<std::size_t>(nbrs[f.next]);
      ++ticks_;
      if (!in_u_[w] && !in_n_[w]) break;
      ++f.next;
    }
    if (f.next == nbrs.size()) {
      // Every candidate failed: withdraw this activation's additions to N.
      while (added_to_n_.size() > f.n_mark) {
        in_n_[static_cast<std::size_t>(added_to_n_.back())] = 0;
        added_to_n_.pop_back();
      }
      frames_.pop_back();
      result = false;
      continue;
    }
    f.child = nbrs[f.next++];
    AddToU(f.child);
    result = Evaluate();
  }
}

std::optional<VertexSet> TreeExtensionSolver::Solve(const VertexSet& forced,
                                                    const VertexSet& forbidden) {
  if (forced.universe() != tree_.order() ||
      forbidden.universe() != tree_.order()) {
    throw PreconditionError("vertex sets do not match the tree");
  }
  if (forced.Intersects(forbidden)) return std::nullopt;
  witness_.reset();
  for (Vertex x : forbidden) {
    in_n_[static_cast<std::size_t>(x)] = 1;
    added_to_n_.push_back(x);
  }

  bool found = false;
  if (forced.empty()) {
    // Try each allowed singleton start; a failed start is forbidden for
    // the later ones.
    for (Vertex w = 0; w < tree_.order() && !found; ++w) {
      if (in_n_[static_cast<std::size_t>(w)]) continue;
      AddToU(w);
      found = Run();
      ResetStateKeepingN();
      if (!found) {
        in_n_[static_cast<std::size_t>(w)] = 1;
        added_to_n_.push_back(w);
      }
    }
  } else {
    if (LoadClosure(forced)) found = Run();
  }
  ResetState();
  if (!found) return std::nullopt;
  return std::move(witness_);
}

void TreeExtensionSolver::ResetStateKeepingN() {
  frames_.clear();
  while (!members_.empty()) RemoveFromU(members_.back());
}

std::optional<VertexSet> ExtendGmdaTree(const ExtensionInstance& instance) {
  TreeExtensionSolver solver(instance.graph);
  return solver.Solve(instance.forced, instance.forbidden);
}

}  // namespace defall
