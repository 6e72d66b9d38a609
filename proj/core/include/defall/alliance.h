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

// Defensive alliances and their two minimality notions.
//
// A set A is a defensive alliance when every v in A has
//     |N(v) & A| + 1 >= |N(v) \ A|,
// i.e. v together with its allies inside A outnumbers the attackers outside.
// The empty set qualifies vacuously but is never minimal.
//
// Defensive alliances are closed under union, so every ground set S has a
// unique largest defensive subset, its *defensive core*. Peeling (deleting
// violators until none remain) computes it regardless of deletion order,
// and global minimality reduces to |A| core computations: A is globally
// minimal iff A is a nonempty alliance and core(A \ {v}) is empty for
// every v in A.

#ifndef DEFALL_ALLIANCE_H_
#define DEFALL_ALLIANCE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "defall/graph.h"
#include "defall/vertex_set.h"

namespace defall {

struct BoundaryDegrees {
  int inside = 0;
  int outside = 0;
};

BoundaryDegrees BoundaryDegreesOf(const Graph& g, const VertexSet& a, Vertex v);

bool IsDefensiveAlliance(const Graph& g, const VertexSet& a);
VertexSet DefensiveCore(const Graph& g, const VertexSet& s);
bool IsLocallyMinimal(const Graph& g, const VertexSet& a);
bool IsGloballyMinimal(const Graph& g, const VertexSet& a);

// Peels by always deleting the first violator in `order` (a permutation of
// the graph's vertices). Exists to check order independence.
VertexSet DefensiveCoreInOrder(const Graph& g, const VertexSet& s,
                               std::span<const Vertex> order);

struct AllianceReport {
  bool is_defensive = false;
  bool is_locally_minimal = false;
  bool is_globally_minimal = false;
  // Lowest-index vertex breaking the defensive condition.
  std::optional<Vertex> witness_violator;
  // core(A \ {v}) for the lowest-index v whose core is nonempty.
  std::optional<VertexSet> witness_suballiance;
};

AllianceReport Classify(const Graph& g, const VertexSet& a);

// Reusable evaluator with scratch buffers sized to one graph; the free
// functions above wrap a temporary instance. `ticks()` accumulates the
// number of adjacency entries scanned.
class AllianceChecker {
 public:
  explicit AllianceChecker(const Graph& g);

  bool IsDefensive(const VertexSet& a);
  std::optional<Vertex> FirstViolator(const VertexSet& a);
  VertexSet Core(const VertexSet& s);
  bool IsLocallyMinimal(const VertexSet& a);
  bool IsGloballyMinimal(const VertexSet& a);
  // A nonempty proper defensive subset of the (defensive) set `a`, chosen
  // as documented on AllianceReport, or nullopt when none exists.
  std::optional<VertexSet> FindSuballiance(const VertexSet& a);

  std::uint64_t ticks() const { return ticks_; }

 private:
  bool Violates(Vertex v, int inside) const {
    return 2 * inside + 1 < graph_.degree(v);
  }
  // Loads a into members_/in_set_/inside_. Returns members_.size().
  std::size_t Load(const VertexSet& a);
  // Peels the loaded set after deleting `removed` (or nothing when -1).
  // Returns the number of survivors; survivors keep in_set_ = 1.
  std::size_t PeelLoaded(Vertex removed);

  const Graph& graph_;
  std::vector<Vertex> members_;
  std::vector<int> base_inside_;
  std::vector<int> inside_;
  std::vector<char> in_set_;
  std::vector<char> queued_;
  std::vector<Vertex> queue_;
  std::uint64_t ticks_ = 0;
};

// Bitmask evaluation for graphs with at most 64 vertices: the workhorse of
// the exhaustive enumerators.
class BitGraph {
 public:
  static constexpr int kMaxOrder = 64;

  // Throws PreconditionError when g has more than 64 vertices.
  explicit BitGraph(const Graph& g);

  int order() const { return static_cast<int>(adjacency_.size()); }
  std::uint64_t neighbors(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }

  bool IsDefensive(std::uint64_t a) const;
  std::uint64_t Core(std::uint64_t s) const;
  bool IsLocallyMinimal(std::uint64_t a) const;
  bool IsGloballyMinimal(std::uint64_t a) const;

 private:
  std::vector<std::uint64_t> adjacency_;
  std::vector<int> degree_;
};

}  // namespace defall

#endif  // DEFALL_ALLIANCE_H_
