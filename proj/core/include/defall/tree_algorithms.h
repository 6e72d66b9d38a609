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

// Globally minimal defensive alliances on trees: the extension solver and
// the polynomial-delay enumerator built on it.

#ifndef DEFALL_TREE_ALGORITHMS_H_
#define DEFALL_TREE_ALGORITHMS_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "defall/alliance.h"
#include "defall/graph.h"
#include "defall/stream.h"
#include "defall/vertex_set.h"

namespace defall {

// I(T): vertices of degree 2 or 3. L(T): vertices of degree 1.
struct TreeLayers {
  VertexSet interior;
  VertexSet leaves;
};

// Throws NotATreeError.
TreeLayers InteriorSet(const Graph& t);

// Does a globally minimal defensive alliance A exist with
// forced <= A <= V \ forbidden?
struct ExtensionInstance {
  Graph graph;
  VertexSet forced;
  VertexSet forbidden;
};

// Extension solver for trees.
//
// Grows the forced set U one neighbor at a time: close U to a subtree,
// reject if it meets the forbidden set N, accept iff U is globally minimal
// once it is a defensive alliance, and otherwise branch on the neighbors
// of the lowest-index violator in ascending order. A neighbor that fails
// is added to N for the remaining siblings of that activation only; the
// additions are withdrawn when the activation returns. An empty U tries
// every allowed vertex as a singleton start, in ascending order, under the
// same sibling rule.
class TreeExtensionSolver {
 public:
  // Throws NotATreeError. `t` must outlive the solver.
  explicit TreeExtensionSolver(const Graph& t);

  // The accepting alliance, or nullopt. forced and forbidden may overlap
  // (that is a rejection).
  std::optional<VertexSet> Solve(const VertexSet& forced,
                                 const VertexSet& forbidden);

  // Cumulative adjacency entries scanned, and recursive activations.
  std::uint64_t ticks() const { return ticks_ + checker_.ticks(); }
  std::uint64_t activations() const { return activations_; }

 private:
  struct Frame {
    Vertex violator;
    std::size_t next = 0;       // position in neighbors(violator)
    std::size_t n_mark = 0;     // size of added_to_n_ at entry
    Vertex child = -1;          // neighbor currently added to U
  };

  bool Run();
  // Starts an activation on the current U. Returns its result directly
  // when U is a defensive alliance, otherwise pushes a frame.
  std::optional<bool> Evaluate();
  void AddToU(Vertex u);
  void RemoveFromU(Vertex u);
  void ResetState();
  // Clears U and the frame stack, keeps N.
  void ResetStateKeepingN();
  // Loads the smallest subtree containing `forced` into U. Returns false,
  // leaving U empty, when it meets N.
  bool LoadClosure(const VertexSet& forced);

  const Graph& tree_;
  AllianceChecker checker_;
  std::vector<char> in_u_;
  std::vector<char> in_n_;
  std::vector<int> inside_;  // |N(x) & U| for every vertex x
  std::vector<Vertex> parent_;  // rooted at vertex 0
  std::vector<int> depth_;
  std::vector<char> marked_;
  std::vector<Vertex> closure_;
  std::vector<Vertex> members_;
  std::vector<Vertex> added_to_n_;
  std::vector<Frame> frames_;
  std::optional<VertexSet> witness_;
  std::uint64_t ticks_ = 0;
  std::uint64_t activations_ = 0;
};

// Throws NotATreeError.
std::optional<VertexSet> ExtendGmdaTree(const ExtensionInstance& instance);

// Work between consecutive emissions of the tree enumerator. Entry i is
// the gap ending at emission i (entry 0 is the work before the first).
struct DelayStats {
  std::uint64_t emissions = 0;
  std::uint64_t max_solver_calls_gap = 0;
  std::uint64_t max_ticks_gap = 0;
  std::vector<std::uint64_t> solver_calls_between;
  std::vector<std::uint64_t> ticks_between;
};

// {"emissions", "max_solver_calls_gap", "max_ticks_gap", "per_gap":
//  [{"solver_calls", "ticks"}, ...]}
std::string DelayStatsJson(const DelayStats& stats);

struct TreeEnumeratorOptions {
  // Keep the per-gap lists in DelayStats (maxima are always kept).
  bool keep_per_gap = true;
};

// Enumerates all globally minimal defensive alliances of a tree, each
// exactly once, with polynomial delay.
//
//  1. Singletons {v} for every v of degree <= 1.
//  2. While an edge {v, u} joins two I(T) vertices, emit {v, u} and recurse
//     into both pieces of SplitAtInteriorEdge; a piece contributes only its
//     multi-vertex alliances, so the artificial leaves u and v are never
//     reported.
//  3. In each remaining piece, branch over I(piece) in ascending order,
//     excluding before including, with every degree <= 1 vertex forbidden,
//     and prune a branch as soon as the extension solver rejects it. A
//     complete assignment S != {} emits the solver's witness, whose trace
//     on I(piece) is exactly S.
//
// An exclude branch that the solver rejects under an accepted parent makes
// the include branch accepted without a call; the witness is requested at
// the leaf when needed. This keeps the gap at <= 2 (|I(piece)| + 1) calls.
class TreeGmdaEnumerator : public AllianceStream {
 public:
  // Throws NotATreeError. Keeps its own copy of `t`.
  explicit TreeGmdaEnumerator(const Graph& t, TreeEnumeratorOptions options = {});
  ~TreeGmdaEnumerator() override;

  std::optional<VertexSet> Next() override;

  const DelayStats& stats() const { return stats_; }
  std::uint64_t solver_calls() const { return solver_calls_; }
  // Complete I-assignments reached in the branching phase.
  std::uint64_t full_assignments() const { return full_assignments_; }
  // Decomposition results; valid once the singleton phase is over.
  int split_count() const { return split_count_; }
  int piece_count() const { return static_cast<int>(pieces_.size()); }

 private:
  struct Piece;
  struct PlanItem {
    bool is_pair;
    Vertex a;  // pair endpoints (original indices)
    Vertex b;
    std::size_t piece;
  };

  void Decompose();
  std::optional<VertexSet> NextFromPiece(Piece& piece);
  std::optional<VertexSet> CallSolver(Piece& piece);
  VertexSet Emit(VertexSet set);

  Graph tree_;
  TreeEnumeratorOptions options_;
  int phase_ = 0;
  Vertex next_singleton_ = 0;
  std::vector<std::unique_ptr<Piece>> pieces_;
  std::vector<PlanItem> plan_;
  std::size_t plan_pos_ = 0;
  bool piece_started_ = false;
  DelayStats stats_;
  std::uint64_t solver_calls_ = 0;
  std::uint64_t full_assignments_ = 0;
  std::uint64_t gap_calls_ = 0;
  std::uint64_t gap_ticks_ = 0;
  int split_count_ = 0;
};

// Number of globally minimal defensive alliances of a tree.
std::uint64_t CountGmdaTree(const Graph& t);

}  // namespace defall

#endif  // DEFALL_TREE_ALGORITHMS_H_
