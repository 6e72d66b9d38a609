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

// Exhaustive O*(2^n) enumeration over all vertex subsets. Slow by design;
// it is the ground truth every other module is checked against.

#ifndef DEFALL_BRUTE_ENUM_H_
#define DEFALL_BRUTE_ENUM_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "defall/alliance.h"
#include "defall/graph.h"
#include "defall/stream.h"

namespace defall {

enum class AllianceKind { kDefensive, kLocallyMinimal, kGloballyMinimal };

// "da", "lmda", "gmda".
std::string_view ToString(AllianceKind kind);
std::optional<AllianceKind> ParseAllianceKind(std::string_view text);

inline constexpr int kDefaultBruteCap = 30;
// Absolute ceiling; subsets are 64-bit masks.
inline constexpr int kMaxBruteCap = 62;

struct BruteOptions {
  // Largest vertex count (or free-vertex count, for extension) accepted.
  int max_order = kDefaultBruteCap;
  // Emit the empty set for kind kDefensive.
  bool include_empty = false;
};

// Emits in canonical order: by size, then lexicographic on sorted labels.
// Throws CapExceededError when the graph is larger than the cap.
class BruteEnumerator : public AllianceStream {
 public:
  BruteEnumerator(const Graph& g, AllianceKind kind, BruteOptions options = {});

  std::optional<VertexSet> Next() override;

 private:
  bool Accepts(std::uint64_t mask) const;
  void FillSizeClass();

  Graph graph_;  // owned copy
  BitGraph bits_;
  AllianceKind kind_;
  CanonicalSetOrder order_;
  int next_size_;
  std::vector<VertexSet> pending_;
  std::size_t pending_pos_ = 0;
  std::uint64_t ticks_since_emit_ = 0;
};

std::uint64_t CountAlliances(const Graph& g, AllianceKind kind,
                             BruteOptions options = {});

// All alliances of the kind, canonical order.
std::vector<VertexSet> EnumerateAlliances(const Graph& g, AllianceKind kind,
                                          BruteOptions options = {});

// The canonically first globally minimal defensive alliance A with
// forced <= A <= V \ forbidden, or nullopt.
//
// Only vertices of degree >= 2 outside forced/forbidden are branched on:
// a vertex of degree <= 1 is an alliance on its own, so it can only occur
// in a singleton answer. options.max_order caps that free set.
// Throws PreconditionError when forced and forbidden overlap.
std::optional<VertexSet> BruteExtension(const Graph& g, const VertexSet& forced,
                                        const VertexSet& forbidden,
                                        BruteOptions options = {});

}  // namespace defall

#endif  // DEFALL_BRUTE_ENUM_H_
