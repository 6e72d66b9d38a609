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

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "defall/error.h"
#include "defall/tree.h"
#include "defall/tree_algorithms.h"
#include "json.hpp"

namespace defall {

struct TreeGmdaEnumerator::Piece {
  struct Frame {
    std::size_t level = 0;
    int stage = 0;
    bool exclude_accepted = false;
    std::optional<VertexSet> witness;
  };

  Piece(Graph g, std::vector<Vertex> m)
      : graph(std::move(g)),
        map(std::move(m)),
        chosen(graph.order()),
        rejected(graph.order()) {
    for (Vertex v = 0; v < graph.order(); ++v) {
      const int d = graph.degree(v);
      if (d == 2 || d == 3) interior.push_back(v);
      if (d <= 1) rejected.insert(v);
    }
  }

  Graph graph;
  std::vector<Vertex> map;  // piece index -> original index
  std::unique_ptr<TreeExtensionSolver> solver;
  std::vector<Vertex> interior;
  VertexSet chosen;
  VertexSet rejected;  // excluded interior vertices plus degree <= 1
  std::vector<Frame> frames;
  bool started = false;
};

TreeGmdaEnumerator::TreeGmdaEnumerator(const Graph& t,
                                       TreeEnumeratorOptions options)
    : tree_(t), options_(options) {
  if (!IsTree(t)) throw NotATreeError();
}

TreeGmdaEnumerator::~TreeGmdaEnumerator() = default;

namespace {

// First edge {v, u}, v < u, with both endpoints in I, scanning v ascending.
std::optional<std::pair<Vertex, Vertex>> FindInteriorEdge(const Graph& g,
                                                          std::uint64_t& ticks) {
  auto interior = [&](Vertex x) { return g.degree(x) == 2 || g.degree(x) == 3; };
  for (Vertex v = 0; v < g.order(); ++v) {
    ++ticks;
    if (!interior(v)) continue;
    for (Vertex u : g.neighbors(v)) {
      ++ticks;
      if (u > v && interior(u)) return std::make_pair(v, u);
    }
  }
  return std::nullopt;
}

std::vector<Vertex> Compose(const std::vector<Vertex>& outer,
                            const std::vector<Vertex>& inner) {
  std::vector<Vertex> out;
  out.reserve(inner.size());
  for (Vertex x : inner) out.push_back(outer[static_cast<std::size_t>(x)]);
  return out;
}

}  // namespace

void TreeGmdaEnumerator::Decompose() {
  if (tree_.order() == 0) return;
  struct Work {
    Graph graph;
    std::vector<Vertex> map;
  };
  std::vector<Work> stack;
  {
    std::vector<Vertex> identity(static_cast<std::size_t>(tree_.order()));
    for (Vertex v = 0; v < tree_.order(); ++v) {
      identity[static_cast<std::size_t>(v)] = v;
    }
    stack.push_back(Work{tree_, std::move(identity)});
  }
  while (!stack.empty()) {
    Work work = std::move(stack.back());
    stack.pop_back();
    if (auto edge = FindInteriorEdge(work.graph, gap_ticks_)) {
      const auto [v, u] = *edge;
      plan_.push_back(PlanItem{true, work.map[static_cast<std::size_t>(v)],
                               work.map[static_cast<std::size_t>(u)], 0});
      EdgeSplit split = SplitAtInteriorEdge(work.graph, v, u);
      gap_ticks_ += 2 * static_cast<std::uint64_t>(work.graph.order());
      ++split_count_;
      // Left is processed first.
      stack.push_back(Work{std::move(split.right), Compose(work.map, split.right_map)});
      stack.push_back(Work{std::move(split.left), Compose(work.map, split.left_map)});
      continue;
    }
    auto piece = std::make_unique<Piece>(std::move(work.graph), std::move(work.map));
    if (2 * piece->interior.size() >= static_cast<std::size_t>(piece->graph.order())) {
      throw std::logic_error("piece without interior edge has 2|I| >= |V|");
    }
    plan_.push_back(PlanItem{false, -1, -1, pieces_.size()});
    pieces_.push_back(std::move(piece));
  }
}

std::optional<VertexSet> TreeGmdaEnumerator::CallSolver(Piece& piece) {
  if (!piece.solver) {
    piece.solver = std::make_unique<TreeExtensionSolver>(piece.graph);
  }
  const std::uint64_t before = piece.solver->ticks();
  auto result = piece.solver->Solve(piece.chosen, piece.rejected);
  gap_ticks_ += piece.solver->ticks() - before;
  ++solver_calls_;
  ++gap_calls_;
  return result;
}

std::optional<VertexSet> TreeGmdaEnumerator::NextFromPiece(Piece& piece) {
  using Frame = Piece::Frame;
  if (!piece.started) {
    piece.started = true;
    if (auto root = CallSolver(piece)) {
      piece.frames.push_back(Frame{0, 0, false, std::move(root)});
    }
  }
  auto& frames = piece.frames;
  while (!frames.empty()) {
    ++gap_ticks_;
    Frame& f = frames.back();
    if (f.level == piece.interior.size()) {
      ++full_assignments_;
      std::optional<VertexSet> witness = std::move(f.witness);
      frames.pop_back();
      if (piece.chosen.empty()) continue;
      if (!witness) witness = CallSolver(piece);
      if (!witness) {
        throw std::logic_error("accepted branch has no witness");
      }
      return witness;
    }
    const Vertex x = piece.interior[f.level];
    const std::size_t child_level = f.level + 1;
    switch (f.stage) {
      case 0: {
        piece.rejected.insert(x);
        auto witness = CallSolver(piece);
        f.stage = 1;
        f.exclude_accepted = witness.has_value();
        if (witness) frames.push_back(Frame{child_level, 0, false, std::move(witness)});
        break;
      }
      case 1: {
        piece.rejected.erase(x);
        piece.chosen.insert(x);
        f.stage = 2;
        if (!f.exclude_accepted) {
          // The parent was accepted and every witness contains x.
          frames.push_back(Frame{child_level, 0, false, std::nullopt});
        } else if (auto witness = CallSolver(piece)) {
          frames.push_back(Frame{child_level, 0, false, std::move(witness)});
        }
        break;
      }
      default:
        piece.chosen.erase(x);
        frames.pop_back();
        break;
    }
  }
  return std::nullopt;
}

VertexSet TreeGmdaEnumerator::Emit(VertexSet set) {
  RecordEmission(gap_ticks_);
  ++stats_.emissions;
  stats_.max_solver_calls_gap = std::max(stats_.max_solver_calls_gap, gap_calls_);
  stats_.max_ticks_gap = std::max(stats_.max_ticks_gap, gap_ticks_);
  if (options_.keep_per_gap) {
    stats_.solver_calls_between.push_back(gap_calls_);
    stats_.ticks_between.push_back(gap_ticks_);
  }
  gap_calls_ = 0;
  gap_ticks_ = 0;
  return set;
}

std::optional<VertexSet> TreeGmdaEnumerator::Next() {
  const int n = tree_.order();
  if (phase_ == 0) {
    while (next_singleton_ < n) {
      const Vertex v = next_singleton_++;
      ++gap_ticks_;
      if (tree_.degree(v) <= 1) return Emit(VertexSet(n, {v}));
    }
    phase_ = 1;
    Decompose();
  }
  while (plan_pos_ < plan_.size()) {
    const PlanItem& item = plan_[plan_pos_];
    if (item.is_pair) {
      ++plan_pos_;
      return Emit(VertexSet(n, {item.a, item.b}));
    }
    Piece& piece = *pieces_[item.piece];
    if (auto local = NextFromPiece(piece)) {
      VertexSet out(n);
      for (Vertex x : *local) out.insert(piece.map[static_cast<std::size_t>(x)]);
      return Emit(std::move(out));
    }
    // Done with this piece; drop its solver scratch.
    piece.solver.reset();
    ++plan_pos_;
  }
  return std::nullopt;
}

std::string DelayStatsJson(const DelayStats& stats) {
  nlohmann::ordered_json doc;
  doc["emissions"] = stats.emissions;
  doc["max_solver_calls_gap"] = stats.max_solver_calls_gap;
  doc["max_ticks_gap"] = stats.max_ticks_gap;
  auto gaps = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < stats.solver_calls_between.size(); ++i) {
    gaps.push_back({{"solver_calls", stats.solver_calls_between[i]},
                    {"ticks", stats.ticks_between[i]}});
  }
  doc["per_gap"] = std::move(gaps);
  return doc.dump();
}

std::uint64_t CountGmdaTree(const Graph& t) {
  TreeGmdaEnumerator stream(t, TreeEnumeratorOptions{.keep_per_gap = false});
  std::uint64_t count = 0;
  while (stream.Next()) ++count;
  return count;
}

}  // namespace defall
