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

#include "defall/alliance.h"

#include "defall/error.h"

namespace defall {

BoundaryDegrees BoundaryDegreesOf(const Graph& g, const VertexSet& a, Vertex v) {
  if (v < 0 || v >= g.order()) throw PreconditionError("vertex out of range");
  BoundaryDegrees d;
  for (Vertex w : g.neighbors(v)) {
    if (a.contains(w)) {
      ++d.inside;
    } else {
      ++d.outside;
    }
  }
  return d;
}

bool IsDefensiveAlliance(const Graph& g, const VertexSet& a) {
  return AllianceChecker(g).IsDefensive(a);
}

VertexSet DefensiveCore(const Graph& g, const VertexSet& s) {
  return AllianceChecker(g).Core(s);
}

bool IsLocallyMinimal(const Graph& g, const VertexSet& a) {
  return AllianceChecker(g).IsLocallyMinimal(a);
}

bool IsGloballyMinimal(const Graph& g, const VertexSet& a) {
  return AllianceChecker(g).IsGloballyMinimal(a);
}

VertexSet DefensiveCoreInOrder(const Graph& g, const VertexSet& s,
                               std::span<const Vertex> order) {
  VertexSet current = s;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v : order) {
      if (!current.contains(v)) continue;
      const auto d = BoundaryDegreesOf(g, current, v);
      if (d.inside + 1 < d.outside) {
        current.erase(v);
        changed = true;
        break;
      }
    }
  }
  return current;
}

AllianceReport Classify(const Graph& g, const VertexSet& a) {
  AllianceChecker checker(g);
  AllianceReport report;
  report.witness_violator = checker.FirstViolator(a);
  report.is_defensive = !report.witness_violator.has_value();
  if (!report.is_defensive || a.empty()) return report;
  report.is_locally_minimal = checker.IsLocallyMinimal(a);
  report.witness_suballiance = checker.FindSuballiance(a);
  report.is_globally_minimal = !report.witness_suballiance.has_value();
  return report;
}

AllianceChecker::AllianceChecker(const Graph& g)
    : graph_(g),
      base_inside_(static_cast<std::size_t>(g.order()), 0),
      inside_(static_cast<std::size_t>(g.order()), 0),
      in_set_(static_cast<std::size_t>(g.order()), 0),
      queued_(static_cast<std::size_t>(g.order()), 0) {}

std::size_t AllianceChecker::Load(const VertexSet& a) {
  for (Vertex v : members_) in_set_[static_cast<std::size_t>(v)] = 0;
  members_.clear();
  for (Vertex v : a) {
    members_.push_back(v);
    in_set_[static_cast<std::size_t>(v)] = 1;
  }
  for (Vertex v : members_) {
    int inside = 0;
    for (Vertex w : graph_.neighbors(v)) inside += in_set_[static_cast<std::size_t>(w)];
    ticks_ += static_cast<std::uint64_t>(graph_.degree(v));
    base_inside_[static_cast<std::size_t>(v)] = inside;
  }
  return members_.size();
}

std::size_t AllianceChecker::PeelLoaded(Vertex removed) {
  for (Vertex v : members_) {
    const auto i = static_cast<std::size_t>(v);
    in_set_[i] = 1;
    inside_[i] = base_inside_[i];
    queued_[i] = 0;
  }
  queue_.clear();
  std::size_t alive = members_.size();
  auto drop = [&](Vertex v) {
    in_set_[static_cast<std::size_t>(v)] = 0;
    --alive;
    ticks_ += static_cast<std::uint64_t>(graph_.degree(v));
    for (Vertex w : graph_.neighbors(v)) {
      const auto j = static_cast<std::size_t>(w);
      if (!in_set_[j]) continue;
      --inside_[j];
      if (!queued_[j] && Violates(w, inside_[j])) {
        queued_[j] = 1;
        queue_.push_back(w);
      }
    }
  };
  if (removed >= 0) {
    queued_[static_cast<std::size_t>(removed)] = 1;
    drop(removed);
  }
  // Worklist seeded with the current violators in ascending index order.
  for (Vertex v : members_) {
    const auto i = static_cast<std::size_t>(v);
    if (in_set_[i] && !queued_[i] && Violates(v, inside_[i])) {
      queued_[i] = 1;
      queue_.push_back(v);
    }
  }
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const Vertex v = queue_[head];
    if (in_set_[static_cast<std::size_t>(v)]) drop(v);
  }
  return alive;
}

bool AllianceChecker::IsDefensive(const VertexSet& a) {
  return !FirstViolator(a).has_value();
}

std::optional<Vertex> AllianceChecker::FirstViolator(const VertexSet& a) {
  for (Vertex v : a) {
    int inside = 0;
    for (Vertex w : graph_.neighbors(v)) inside += a.contains(w) ? 1 : 0;
    ticks_ += static_cast<std::uint64_t>(graph_.degree(v));
    if (Violates(v, inside)) return v;
  }
  return std::nullopt;
}

VertexSet AllianceChecker::Core(const VertexSet& s) {
  Load(s);
  PeelLoaded(-1);
  VertexSet core(graph_.order());
  for (Vertex v : members_) {
    if (in_set_[static_cast<std::size_t>(v)]) core.insert(v);
  }
  return core;
}

bool AllianceChecker::IsLocallyMinimal(const VertexSet& a) {
  if (a.empty()) return false;
  Load(a);
  for (Vertex v : members_) {
    if (Violates(v, base_inside_[static_cast<std::size_t>(v)])) return false;
  }
  if (members_.size() == 1) return true;
  // Only neighbors of the removed vertex can start violating.
  for (Vertex v : members_) {
    bool still_defensive = true;
    ticks_ += static_cast<std::uint64_t>(graph_.degree(v));
    for (Vertex w : graph_.neighbors(v)) {
      const auto j = static_cast<std::size_t>(w);
      if (in_set_[j] && Violates(w, base_inside_[j] - 1)) {
        still_defensive = false;
        break;
      }
    }
    if (still_defensive) return false;
  }
  return true;
}

bool AllianceChecker::IsGloballyMinimal(const VertexSet& a) {
  if (a.empty() || !IsDefensive(a)) return false;
  return !FindSuballiance(a).has_value();
}

std::optional<VertexSet> AllianceChecker::FindSuballiance(const VertexSet& a) {
  Load(a);
  const std::vector<Vertex> order = members_;
  for (Vertex v : order) {
    if (PeelLoaded(v) == 0) continue;
    VertexSet core(graph_.order());
    for (Vertex w : members_) {
      if (in_set_[static_cast<std::size_t>(w)]) core.insert(w);
    }
    return core;
  }
  return std::nullopt;
}

}  // namespace defall
