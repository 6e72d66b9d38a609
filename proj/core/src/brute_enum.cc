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

#include "defall/brute_enum.h"

#include <algorithm>
#include <bit>
#include <string>

#include "defall/error.h"

namespace defall {
namespace {

void CheckCap(int count, const BruteOptions& options, const char* what) {
  const int cap = std::min(options.max_order, kMaxBruteCap);
  if (count > cap) {
    throw CapExceededError(std::string(what) + " has " + std::to_string(count) +
                           " vertices, exhaustive search is capped at " +
                           std::to_string(cap) +
                           " (use the tree algorithms for trees, or raise the cap)");
  }
}

const Graph& Checked(const Graph& g, const BruteOptions& options) {
  CheckCap(g.order(), options, "graph");
  return g;
}

// Next integer with the same popcount (Gosper). Returns 0 past `limit`.
std::uint64_t NextCombination(std::uint64_t x, std::uint64_t limit) {
  const std::uint64_t low = x & -x;
  const std::uint64_t ripple = x + low;
  if (ripple == 0 || ripple >= limit) return 0;
  const std::uint64_t ones = ((ripple ^ x) >> 2) / low;
  const std::uint64_t next = ripple | ones;
  return next < limit ? next : 0;
}

// Visits every mask over `bits` bits with exactly k ones, ascending.
template <typename Visit>
void ForEachCombination(int bits, int k, Visit&& visit) {
  const std::uint64_t limit = std::uint64_t{1} << bits;
  if (k == 0) {
    visit(std::uint64_t{0});
    return;
  }
  if (k > bits) return;
  for (std::uint64_t x = (std::uint64_t{1} << k) - 1; x != 0;
       x = NextCombination(x, limit)) {
    visit(x);
  }
}

}  // namespace

std::string_view ToString(AllianceKind kind) {
  switch (kind) {
    case AllianceKind::kDefensive:
      return "da";
    case AllianceKind::kLocallyMinimal:
      return "lmda";
    case AllianceKind::kGloballyMinimal:
      return "gmda";
  }
  return "?";
}

std::optional<AllianceKind> ParseAllianceKind(std::string_view text) {
  if (text == "da") return AllianceKind::kDefensive;
  if (text == "lmda") return AllianceKind::kLocallyMinimal;
  if (text == "gmda") return AllianceKind::kGloballyMinimal;
  return std::nullopt;
}

BruteEnumerator::BruteEnumerator(const Graph& g, AllianceKind kind,
                                 BruteOptions options)
    : graph_(Checked(g, options)),
      bits_(graph_),
      kind_(kind),
      order_(graph_),
      next_size_(options.include_empty && kind == AllianceKind::kDefensive ? 0
                                                                           : 1) {}

bool BruteEnumerator::Accepts(std::uint64_t mask) const {
  switch (kind_) {
    case AllianceKind::kDefensive:
      return bits_.IsDefensive(mask);
    case AllianceKind::kLocallyMinimal:
      return bits_.IsLocallyMinimal(mask);
    case AllianceKind::kGloballyMinimal:
      return bits_.IsGloballyMinimal(mask);
  }
  return false;
}

void BruteEnumerator::FillSizeClass() {
  pending_.clear();
  pending_pos_ = 0;
  while (pending_.empty() && next_size_ <= graph_.order()) {
    const int k = next_size_++;
    ForEachCombination(graph_.order(), k, [&](std::uint64_t mask) {
      ++ticks_since_emit_;
      if (Accepts(mask)) pending_.push_back(VertexSet::FromMask(graph_.order(), mask));
    });
    std::sort(pending_.begin(), pending_.end(), order_);
  }
}

std::optional<VertexSet> BruteEnumerator::Next() {
  if (pending_pos_ >= pending_.size()) FillSizeClass();
  if (pending_pos_ >= pending_.size()) return std::nullopt;
  RecordEmission(ticks_since_emit_);
  ticks_since_emit_ = 0;
  return std::move(pending_[pending_pos_++]);
}

std::uint64_t CountAlliances(const Graph& g, AllianceKind kind,
                             BruteOptions options) {
  CheckCap(g.order(), options, "graph");
  const BitGraph bits(g);
  const std::uint64_t limit = std::uint64_t{1} << g.order();
  std::uint64_t count =
      options.include_empty && kind == AllianceKind::kDefensive ? 1 : 0;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    bool ok = false;
    switch (kind) {
      case AllianceKind::kDefensive:
        ok = bits.IsDefensive(mask);
        break;
      case AllianceKind::kLocallyMinimal:
        ok = bits.IsLocallyMinimal(mask);
        break;
      case AllianceKind::kGloballyMinimal:
        ok = bits.IsGloballyMinimal(mask);
        break;
    }
    count += ok ? 1 : 0;
  }
  return count;
}

std::vector<VertexSet> EnumerateAlliances(const Graph& g, AllianceKind kind,
                                          BruteOptions options) {
  BruteEnumerator stream(g, kind, options);
  std::vector<VertexSet> out;
  while (auto set = stream.Next()) out.push_back(std::move(*set));
  return out;
}

std::optional<VertexSet> BruteExtension(const Graph& g, const VertexSet& forced,
                                        const VertexSet& forbidden,
                                        BruteOptions options) {
  if (forced.Intersects(forbidden)) {
    throw PreconditionError("forced and forbidden sets overlap");
  }
  const CanonicalSetOrder order(g);

  // Singleton answers: a vertex of degree <= 1 is an alliance by itself.
  if (forced.size() <= 1) {
    std::optional<Vertex> best;
    for (Vertex w = 0; w < g.order(); ++w) {
      if (g.degree(w) > 1 || forbidden.contains(w)) continue;
      if (!forced.empty() && forced.front() != w) continue;
      if (!best || order.rank(w) < order.rank(*best)) best = w;
    }
    if (best) return VertexSet(g.order(), {*best});
  }

  for (Vertex v : forced) {
    if (g.degree(v) <= 1) return std::nullopt;
  }
  std::vector<Vertex> free;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) >= 2 && !forced.contains(v) && !forbidden.contains(v)) {
      free.push_back(v);
    }
  }
  CheckCap(static_cast<int>(free.size()), options, "extension free set");

  AllianceChecker checker(g);
  const int free_count = static_cast<int>(free.size());
  for (int k = 0; k <= free_count; ++k) {
    if (forced.size() + k < 2) continue;
    std::optional<VertexSet> best;
    ForEachCombination(free_count, k, [&](std::uint64_t pick) {
      VertexSet candidate = forced;
      for (std::uint64_t rest = pick; rest != 0; rest &= rest - 1) {
        candidate.insert(free[static_cast<std::size_t>(std::countr_zero(rest))]);
      }
      if (checker.IsGloballyMinimal(candidate) &&
          (!best || order(candidate, *best))) {
        best = std::move(candidate);
      }
    });
    if (best) return best;
  }
  return std::nullopt;
}

}  // namespace defall
