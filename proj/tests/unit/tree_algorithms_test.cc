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

#include <random>

#include <gtest/gtest.h>

#include "defall/alliance.h"
#include "defall/brute_enum.h"
#include "defall/error.h"
#include "defall/families.h"
#include "defall/graph_io.h"
#include "defall/tree.h"
#include "defall/tree_algorithms.h"
#include "json.hpp"
#include "test_support.h"

namespace defall {
namespace {

Graph Path(int n) { return GenerateFamily({Family::kPath, n}); }
Graph Spider(int k) { return GenerateFamily({Family::kSpider, k}); }

std::vector<VertexSet> Drain(TreeGmdaEnumerator& stream) {
  std::vector<VertexSet> out;
  while (auto s = stream.Next()) out.push_back(std::move(*s));
  return out;
}

TEST(InteriorSetTest, Examples) {
  const Graph p5 = Path(5);
  EXPECT_EQ(FormatSet(p5, InteriorSet(p5).interior), "v2,v3,v4");
  EXPECT_EQ(FormatSet(p5, InteriorSet(p5).leaves), "v1,v5");
  const Graph s3 = Spider(3);
  EXPECT_EQ(FormatSet(s3, InteriorSet(s3).interior), "r,u1,u2,u3");
  const Graph star = ParseGraph("c a\nc b\nc d\nc e\nc f\n");
  EXPECT_TRUE(InteriorSet(star).interior.empty());
  EXPECT_THROW(InteriorSet(ParseGraph("a b\nb c\nc a\n")), NotATreeError);
}

TEST(TreeExtensionTest, Examples) {
  const Graph p4 = Path(4);
  TreeExtensionSolver solver(p4);
  const auto yes = solver.Solve(ParseSetLabels(p4, "v2"), VertexSet(4));
  ASSERT_TRUE(yes.has_value());
  EXPECT_EQ(FormatSet(p4, *yes), "v2,v3");
  EXPECT_FALSE(solver.Solve(ParseSetLabels(p4, "v2"), ParseSetLabels(p4, "v3")));
  // Overlap is a rejection, not an error.
  EXPECT_FALSE(solver.Solve(ParseSetLabels(p4, "v2"), ParseSetLabels(p4, "v2")));
  // The closure of {v1, v3} contains v2, which is forbidden.
  EXPECT_FALSE(solver.Solve(ParseSetLabels(p4, "v1,v3"), ParseSetLabels(p4, "v2")));

  const Graph s3 = Spider(3);
  const auto root = ExtendGmdaTree({s3, ParseSetLabels(s3, "r"), VertexSet(7)});
  ASSERT_TRUE(root.has_value());
  EXPECT_EQ(FormatSet(s3, *root), "r,u1");

  EXPECT_THROW(TreeExtensionSolver(ParseGraph("a b\nb c\nc a\n")), NotATreeError);
}

TEST(TreeExtensionTest, EmptyForcedScansSingletonStarts) {
  const Graph p4 = Path(4);
  TreeExtensionSolver solver(p4);
  const auto any = solver.Solve(VertexSet(4), VertexSet(4));
  ASSERT_TRUE(any.has_value());
  EXPECT_EQ(FormatSet(p4, *any), "v1");
  const auto inner = solver.Solve(VertexSet(4), ParseSetLabels(p4, "v1,v4"));
  ASSERT_TRUE(inner.has_value());
  EXPECT_EQ(FormatSet(p4, *inner), "v2,v3");
  EXPECT_FALSE(solver.Solve(VertexSet(4), VertexSet::Full(4)));
  EXPECT_FALSE(TreeExtensionSolver(Graph()).Solve(VertexSet(0), VertexSet(0)));
}

// A neighbor that fails below one branch may still succeed in a sibling
// branch. Here v's first neighbor u is a leaf; every extension through u
// contains the alliance {u} and fails, which rejects x, y, z and w inside
// that branch. They must be allowed again for the siblings of u, where
// {v, x, y} is the answer.
TEST(TreeExtensionTest, FailuresStayLocalToTheActivation) {
  const Graph t = ParseGraph(
      "r u\nr x\nr y\nr z\nr w\nx x1\ny y1\nz z1\nw w1\n");
  const VertexSet forced = ParseSetLabels(t, "r");
  TreeExtensionSolver solver(t);
  const auto answer = solver.Solve(forced, VertexSet(t.order()));
  ASSERT_TRUE(answer.has_value());
  EXPECT_EQ(FormatSet(t, *answer), "r,x,y");
  EXPECT_TRUE(BruteExtension(t, forced, VertexSet(t.order())).has_value());
}

TEST(TreeExtensionTest, AgreesWithBruteExtension) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + trial % 16;
    const Graph t = RandomTree(n, rng());
    const VertexSet forced = testing::RandomSubset(n, 0.15, rng);
    const VertexSet forbidden = testing::RandomSubset(n, 0.15, rng) - forced;
    TreeExtensionSolver solver(t);
    const auto tree = solver.Solve(forced, forbidden);
    const auto brute = BruteExtension(t, forced, forbidden);
    ASSERT_EQ(tree.has_value(), brute.has_value()) << SerializeGraph(t);
    if (!tree) continue;
    ASSERT_TRUE(IsGloballyMinimal(t, *tree));
    if (!forced.empty()) {
      ASSERT_TRUE(ConnectedClosure(t, forced).IsSubsetOf(*tree));
    }
    ASSERT_FALSE(tree->Intersects(forbidden));
  }
}

TEST(TreeEnumeratorTest, Examples) {
  const Graph p4 = Path(4);
  TreeGmdaEnumerator stream(p4);
  const auto sets = testing::ToLabelSets(p4, Drain(stream));
  EXPECT_EQ(sets, (std::set<testing::LabelSet>{{"v1"}, {"v4"}, {"v2", "v3"}}));
  EXPECT_EQ(stream.split_count(), 1);
  EXPECT_EQ(stream.piece_count(), 2);

  EXPECT_EQ(CountGmdaTree(Path(1)), 1U);
  EXPECT_EQ(CountGmdaTree(Path(2)), 2U);
  EXPECT_EQ(CountGmdaTree(Graph()), 0U);
  EXPECT_EQ(CountGmdaTree(Spider(3)), 6U);
  EXPECT_EQ(CountGmdaTree(Path(50)), 49U);
  EXPECT_EQ(CountGmdaTree(Spider(10)), 262U);
  EXPECT_THROW(TreeGmdaEnumerator(ParseGraph("a b\nb c\nc a\n")), NotATreeError);
}

TEST(TreeEnumeratorTest, MatchesBruteOnRandomTrees) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1500; ++trial) {
    const int n = 1 + trial % 15;
    const Graph t = RandomTree(n, rng());
    TreeGmdaEnumerator stream(t);
    const auto emitted = Drain(stream);
    const auto sets = testing::ToLabelSets(t, emitted);
    ASSERT_EQ(sets.size(), emitted.size()) << "duplicate emission";
    ASSERT_EQ(sets, testing::ToLabelSets(
                        t, EnumerateAlliances(t, AllianceKind::kGloballyMinimal)))
        << SerializeGraph(t);
  }
}

// Members of a multi-vertex alliance with exactly one neighbor inside are
// exactly its vertices of degree 2 or 3.
TEST(TreeEnumeratorTest, InteriorVerticesAreTheAllianceLeaves) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 500; ++trial) {
    const Graph t = RandomTree(2 + trial % 25, rng());
    const VertexSet interior = InteriorSet(t).interior;
    TreeGmdaEnumerator stream(t);
    for (const auto& a : Drain(stream)) {
      if (a.size() <= 1) continue;
      VertexSet ones(t.order());
      for (Vertex v : a) {
        if (BoundaryDegreesOf(t, a, v).inside == 1) ones.insert(v);
      }
      ASSERT_EQ(ones, interior & a);
    }
  }
}

TEST(TreeEnumeratorTest, DelayAndBranchCounters) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 400; ++trial) {
    const Graph t = RandomTree(2 + trial % 40, rng());
    const auto interior = static_cast<std::uint64_t>(InteriorSet(t).interior.size());
    TreeGmdaEnumerator stream(t);
    Drain(stream);
    const DelayStats& stats = stream.stats();
    ASSERT_EQ(stats.emissions, stream.emissions());
    ASSERT_EQ(stats.solver_calls_between.size(), stats.emissions);
    ASSERT_EQ(stats.ticks_between.size(), stats.emissions);
    ASSERT_LE(stats.max_solver_calls_gap, 2 * (interior + 1)) << SerializeGraph(t);
    if (interior < 63) {
      ASSERT_LE(stream.full_assignments(), std::uint64_t{1} << interior);
    }
  }
}

TEST(TreeEnumeratorTest, DelayStatsJson) {
  TreeGmdaEnumerator stream(Path(5));
  Drain(stream);
  const auto doc = nlohmann::json::parse(DelayStatsJson(stream.stats()));
  EXPECT_EQ(doc["emissions"], 4);
  ASSERT_EQ(doc["per_gap"].size(), 4U);
  std::uint64_t max_calls = 0;
  for (const auto& gap : doc["per_gap"]) {
    max_calls = std::max(max_calls, gap["solver_calls"].get<std::uint64_t>());
    EXPECT_TRUE(gap.contains("ticks"));
  }
  EXPECT_EQ(doc["max_solver_calls_gap"], max_calls);
}

TEST(TreeEnumeratorTest, StreamsWithoutPerGapLists) {
  TreeGmdaEnumerator stream(Spider(6), TreeEnumeratorOptions{.keep_per_gap = false});
  EXPECT_EQ(Drain(stream).size(), 26U);
  EXPECT_TRUE(stream.stats().solver_calls_between.empty());
  EXPECT_EQ(stream.stats().emissions, 26U);
}

}  // namespace
}  // namespace defall
