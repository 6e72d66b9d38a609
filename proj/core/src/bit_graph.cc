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

#include <bit>

#include "defall/alliance.h"
#include "defall/error.h"

namespace defall {

BitGraph::BitGraph(const Graph& g)
    : adjacency_(static_cast<std::size_t>(g.order()), 0),
      degree_(static_cast<std::size_t>(g.order()), 0) {
  if (g.order() > kMaxOrder) {
    throw PreconditionError("bitmask evaluation limited to 64 vertices");
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w : g.neighbors(v)) {
      adjacency_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << w;
    }
    degree_[static_cast<std::size_t>(v)] = g.degree(v);
  }
}

bool BitGraph::IsDefensive(std::uint64_t a) const {
  for (std::uint64_t rest = a; rest != 0; rest &= rest - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(rest));
    if (2 * std::popcount(adjacency_[v] & a) + 1 < degree_[v]) return false;
  }
  return true;
}

std::uint64_t BitGraph::Core(std::uint64_t s) const {
  // Deleting all current violators at once is a valid peeling schedule:
  // removals only ever create new violators.
  while (true) {
    std::uint64_t violators = 0;
    for (std::uint64_t rest = s; rest != 0; rest &= rest - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(rest));
      if (2 * std::popcount(adjacency_[v] & s) + 1 < degree_[v]) {
        violators |= std::uint64_t{1} << v;
      }
    }
    if (violators == 0) return s;
    s &= ~violators;
  }
}

bool BitGraph::IsLocallyMinimal(std::uint64_t a) const {
  if (a == 0 || !IsDefensive(a)) return false;
  for (std::uint64_t rest = a; rest != 0; rest &= rest - 1) {
    const std::uint64_t without = a & ~(rest & -rest);
    if (without != 0 && IsDefensive(without)) return false;
  }
  return true;
}

bool BitGraph::IsGloballyMinimal(std::uint64_t a) const {
  if (a == 0 || !IsDefensive(a)) return false;
  for (std::uint64_t rest = a; rest != 0; rest &= rest - 1) {
    if (Core(a & ~(rest & -rest)) != 0) return false;
  }
  return true;
}

}  // namespace defall
