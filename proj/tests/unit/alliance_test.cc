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
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "defall/alliance.h"
#include "defall/families.h"
#include "defall/graph.h"
#include "test_support.h"

namespace defall {
namespace {

Graph Path(int n) { return GenerateFamily({Family::kPath, n}); }
Graph Diamond(int n) { return GenerateFamily({Family::kDiamond, n}); }

VertexSet Set(const Graph& g, const char* labels) { return ParseSetLabels(g, labels); }

bool Connected(const Graph& g, const VertexSet& a) {
  if (a.empty()) return true;
  VertexSet seen(g.order());
  std::vector<Vertex> stack{a.front()};
  seen.insert(a.front());
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(x)) {
      if (a.contains(w) && !seen.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    }
  }
  return seen == a;
}

TEST(AllianceTest, BoundaryDegrees) {
  const Graph p4 = Path(4);
  const auto d = BoundaryDegreesOf(p4, Set(p4, "v2,v3"), p4.VertexOf("v2"));
  EXPECT_EQ(d.inside, 1);
  EXPECT_EQ(d.outside, 1);
  const Graph k24 = Diamond(6);
  const auto u1 = BoundaryDegreesOf(k24, Set(k24, "u1,v1,v2"), k24.VertexOf("u1"));
  EXPECT_EQ(u1.inside, 2);
  EXPECT_EQ(u1.outside, 2);
  const auto empty = BoundaryDegreesOf(k24, VertexSet(6), 0);
  EXPECT_EQ(empty.inside, 0);
  EXPECT_EQ(empty.outside, 4);
}

TEST(AllianceTest, DefensivePredicate) {
  const Graph p4 = Path(4);
  EXPECT_TRUE(IsDefensiveAlliance(p4, Set(p4, "v2,v3")));
  EXPECT_TRUE(IsDefensiveAlliance(p4, VertexSet(4)));
  const Graph p3 = Path(3);
  EXPECT_FALSE(IsDefensiveAlliance(p3, Set(p3, "v2")));
  // Connectivity is not required.
  EXPECT_TRUE(IsDefensiveAlliance(p4, Set(p4, "v1,v4")));
}

TEST(AllianceTest, DefensiveCoreExamples) {
  const Graph p4 = Path(4);
  EXPECT_EQ(DefensiveCore(p4, Set(p4, "v2,v3")), Set(p4, "v2,v3"));
  const Graph p3 = Path(3);
  EXPECT_TRUE(DefensiveCore(p3, Set(p3, "v2")).empty());
  const Graph k24 = Diamond(6);
  EXPECT_TRUE(DefensiveCore(k24, Set(k24, "u1,v1")).empty());
}

TEST(AllianceTest, MinimalityExamples) {
  const Graph p4 = Path(4);
  EXPECT_TRUE(IsLocallyMinimal(p4, Set(p4, "v1")));
  EXPECT_TRUE(IsGloballyMinimal(p4, Set(p4, "v2,v3")));
  const Graph cat = GenerateFamily({Family::kCaterpillar, 4});
  EXPECT_TRUE(IsLocallyMinimal(cat, Set(cat, "a,b,v1")));
  const Graph p5 = Path(5);
  EXPECT_FALSE(IsLocallyMinimal(p5, Set(p5, "v2,v3,v4")));
  EXPECT_FALSE(IsGloballyMinimal(p5, Set(p5, "v2,v3,v4")));
  const Graph spider = GenerateFamily({Family::kSpider, 3});
  EXPECT_TRUE(IsGloballyMinimal(spider, Set(spider, "r,u1")));
  EXPECT_FALSE(IsLocallyMinimal(p4, VertexSet(4)));
  EXPECT_FALSE(IsGloballyMinimal(p4, VertexSet(4)));
}

TEST(AllianceTest, ClassifyWitnesses) {
  const Graph p4 = Path(4);
  const auto yes = Classify(p4, Set(p4, "v2,v3"));
  EXPECT_TRUE(yes.is_defensive && yes.is_locally_minimal && yes.is_globally_minimal);
  EXPECT_FALSE(yes.witness_violator.has_value());
  EXPECT_FALSE(yes.witness_suballiance.has_value());

  // Lowest removed vertex with a nonempty core is v2; that core is {v3,v4}.
  const Graph p5 = Path(5);
  const auto r = Classify(p5, Set(p5, "v2,v3,v4"));
  EXPECT_TRUE(r.is_defensive);
  EXPECT_FALSE(r.is_locally_minimal);
  EXPECT_FALSE(r.is_globally_minimal);
  ASSERT_TRUE(r.witness_suballiance.has_value());
  EXPECT_EQ(FormatSet(p5, *r.witness_suballiance), "v3,v4");

  const Graph p3 = Path(3);
  const auto no = Classify(p3, Set(p3, "v2"));
  EXPECT_FALSE(no.is_defensive || no.is_locally_minimal || no.is_globally_minimal);
  ASSERT_TRUE(no.witness_violator.has_value());
  EXPECT_EQ(p3.label(*no.witness_violator), "v2");

  const auto empty = Classify(p3, VertexSet(3));
  EXPECT_TRUE(empty.is_defensive);
  EXPECT_FALSE(empty.is_locally_minimal);
  EXPECT_FALSE(empty.witness_suballiance.has_value());
}

TEST(AllianceTest, ClassifyFlagsAreConsistent) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + trial % 10;
    const Graph g = testing::RandomGraph(n, 0.35, rng);
    const VertexSet a = testing::RandomSubset(n, 0.5, rng);
    const auto r = Classify(g, a);
    if (r.is_globally_minimal) {
      ASSERT_TRUE(r.is_locally_minimal);
    }
    if (r.is_locally_minimal) {
      ASSERT_TRUE(r.is_defensive);
    }
    ASSERT_EQ(r.witness_violator.has_value(), !r.is_defensive);
    if (r.witness_suballiance) {
      ASSERT_FALSE(r.witness_suballiance->empty());
      ASSERT_TRUE(r.witness_suballiance->IsSubsetOf(a));
      ASSERT_NE(*r.witness_suballiance, a);
      ASSERT_TRUE(IsDefensiveAlliance(g, *r.witness_suballiance));
    }
    if (r.is_defensive && !a.empty()) {
      ASSERT_EQ(r.witness_suballiance.has_value(), !r.is_globally_minimal);
    }
  }
}

TEST(AllianceTest, UnionClosed) {
  std::mt19937_64 rng(21);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 11;
    const Graph g = testing::RandomGraph(n, 0.3, rng);
    const testing::NaiveOracle oracle(g);
    std::vector<std::uint64_t> defensive;
    for (std::uint64_t a = 1; a < (std::uint64_t{1} << n); ++a) {
      if (oracle.Defensive(a)) defensive.push_back(a);
    }
    std::uniform_int_distribution<std::size_t> pick(0, defensive.size() - 1);
    for (int k = 0; k < 50 && !defensive.empty(); ++k) {
      const auto u = defensive[pick(rng)] | defensive[pick(rng)];
      ASSERT_TRUE(IsDefensiveAlliance(g, VertexSet::FromMask(n, u)));
      ++checked;
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(AllianceTest, CoreMatchesUnionOfDefensiveSubsets) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 12;
    const Graph g = testing::RandomGraph(n, 0.4, rng);
    const testing::NaiveOracle oracle(g);
    for (int k = 0; k < 20; ++k) {
      const VertexSet s = testing::RandomSubset(n, 0.6, rng);
      ASSERT_EQ(DefensiveCore(g, s).ToMask(), oracle.CoreByUnion(s.ToMask()));
    }
  }
}

TEST(AllianceTest, CoreIsOrderIndependent) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 12;
    const Graph g = testing::RandomGraph(n, 0.35, rng);
    const VertexSet s = testing::RandomSubset(n, 0.7, rng);
    const VertexSet expected = DefensiveCore(g, s);
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    for (int shuffle = 0; shuffle < 100; ++shuffle) {
      std::shuffle(order.begin(), order.end(), rng);
      ASSERT_EQ(DefensiveCoreInOrder(g, s, order), expected);
    }
  }
}

TEST(AllianceTest, GloballyMinimalMatchesSubsetScan) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + trial % 16;
    const Graph g = testing::RandomGraph(n, 0.3, rng);
    const testing::NaiveOracle oracle(g);
    AllianceChecker checker(g);
    const BitGraph bits(g);
    for (int k = 0; k < 200; ++k) {
      const VertexSet a = testing::RandomSubset(n, 0.4, rng);
      const bool truth = oracle.GloballyMinimal(a.ToMask());
      ASSERT_EQ(IsGloballyMinimal(g, a), truth);
      ASSERT_EQ(checker.IsGloballyMinimal(a), truth);
      ASSERT_EQ(bits.IsGloballyMinimal(a.ToMask()), truth);
      ASSERT_EQ(IsLocallyMinimal(g, a), oracle.LocallyMinimal(a.ToMask()));
      ASSERT_EQ(bits.IsLocallyMinimal(a.ToMask()), oracle.LocallyMinimal(a.ToMask()));
      if (truth) {
        ASSERT_TRUE(Connected(g, a));
      }
    }
  }
}

}  // namespace
}  // namespace defall
