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

#include "defall/error.h"
#include "defall/families.h"
#include "defall/graph.h"
#include "defall/graph_io.h"
#include "defall/tree.h"
#include "defall/vertex_set.h"
#include "test_support.h"

namespace defall {
namespace {

Graph Path(int n) { return GenerateFamily({Family::kPath, n}); }

TEST(VertexSetTest, BasicOperations) {
  VertexSet s(130, {0, 64, 129});
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(64));
  EXPECT_FALSE(s.contains(63));
  EXPECT_EQ(s.members(), (std::vector<Vertex>{0, 64, 129}));
  EXPECT_EQ(s.front(), 0);
  s.erase(0);
  EXPECT_EQ(s.front(), 64);
  EXPECT_THROW(s.insert(130), PreconditionError);
  EXPECT_EQ(VertexSet(5).front(), -1);
}

TEST(VertexSetTest, SetAlgebra) {
  const VertexSet a(10, {1, 2, 3});
  const VertexSet b(10, {3, 4});
  EXPECT_EQ((a | b).members(), (std::vector<Vertex>{1, 2, 3, 4}));
  EXPECT_EQ((a & b).members(), (std::vector<Vertex>{3}));
  EXPECT_EQ((a - b).members(), (std::vector<Vertex>{1, 2}));
  EXPECT_TRUE(a.Intersects(b));
  EXPECT_TRUE(VertexSet(10, {1, 3}).IsSubsetOf(a));
  EXPECT_EQ(VertexSet::FromMask(10, 0b1010).members(), (std::vector<Vertex>{1, 3}));
  EXPECT_EQ(a.ToMask(), 0b1110U);
  EXPECT_EQ(VertexSet::Full(4).size(), 4);
}

TEST(GraphTest, ParsePathAndTriangle) {
  const Graph p3 = ParseGraph("a b\nb c\n");
  EXPECT_EQ(p3.order(), 3);
  EXPECT_EQ(p3.edge_count(), 2U);
  EXPECT_EQ(p3.degree(p3.VertexOf("b")), 2);
  EXPECT_EQ(p3.label(0), "a");

  const Graph triangle = ParseGraph("0 1\n1 2\n2 0\n");
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(triangle.degree(v), 2);
}

TEST(GraphTest, ParseErrorsCarryLineNumbers) {
  try {
    ParseGraph("a b\nx x\n");
    FAIL() << "self-loop accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2U);
  }
  try {
    ParseGraph("a b\n# fine\nb a\n");
    FAIL() << "duplicate edge accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3U);
  }
  try {
    ParseGraph("a b c\n");
    FAIL() << "three tokens accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1U);
  }
  EXPECT_THROW(ParseGraph("U a\n"), ParseError);
}

TEST(GraphTest, IsolatedVerticesAndComments) {
  const Graph g = ParseGraph("# header\nv z\na b\n\n  # indented comment\nv a\n");
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.degree(g.VertexOf("z")), 0);
  EXPECT_EQ(SerializeGraph(g), "a b\nv z\n");
}

TEST(GraphTest, ParseDocumentWithForcedLines) {
  const GraphDocument doc = ParseGraphDocument("a b\nU b\nU c\n");
  EXPECT_EQ(doc.graph.order(), 3);
  EXPECT_EQ(doc.forced_labels, (std::vector<std::string>{"b", "c"}));
}

TEST(GraphTest, SerializeRoundTrip) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::RandomGraph(1 + trial % 12, 0.3, rng);
    const std::string text = SerializeGraph(g);
    EXPECT_EQ(SerializeGraph(ParseGraph(text)), text);
  }
  EXPECT_EQ(SerializeGraph(ParseGraph("b a\nc b\n")), "a b\nb c\n");
}

TEST(GraphTest, InducedSubgraphKeepsLabels) {
  const Graph p5 = Path(5);
  std::vector<Vertex> map;
  const Graph sub = p5.InducedSubgraph(VertexSet(5, {1, 2, 4}), &map);
  EXPECT_EQ(sub.order(), 3);
  EXPECT_EQ(sub.edge_count(), 1U);
  EXPECT_EQ(map, (std::vector<Vertex>{1, 2, 4}));
  EXPECT_EQ(sub.label(2), "v5");
}

TEST(GraphTest, SetLabelsAndCanonicalOrder) {
  const Graph p5 = Path(5);
  const VertexSet s = ParseSetLabels(p5, "v4, v2");
  EXPECT_EQ(FormatSet(p5, s), "v2,v4");
  EXPECT_THROW(ParseSetLabels(p5, "v9"), PreconditionError);
  const CanonicalSetOrder order(p5);
  EXPECT_TRUE(order(VertexSet(5, {4}), VertexSet(5, {0, 1})));
  EXPECT_TRUE(order(VertexSet(5, {0}), VertexSet(5, {4})));
}

TEST(TreeTest, IsTree) {
  EXPECT_TRUE(IsTree(Path(4)));
  EXPECT_TRUE(IsTree(Path(1)));
  EXPECT_TRUE(IsTree(Graph()));
  EXPECT_FALSE(IsTree(ParseGraph("a b\nb c\nc a\n")));
  EXPECT_FALSE(IsTree(ParseGraph("a b\nc d\n")));
}

TEST(TreeTest, ConnectedClosureExamples) {
  const Graph p5 = Path(5);
  EXPECT_EQ(FormatSet(p5, ConnectedClosure(p5, ParseSetLabels(p5, "v1,v3"))),
            "v1,v2,v3");
  const Graph spider = GenerateFamily({Family::kSpider, 3});
  EXPECT_EQ(FormatSet(spider, ConnectedClosure(spider, ParseSetLabels(spider, "u1',u2'"))),
            "r,u1,u1',u2,u2'");
  EXPECT_THROW(ConnectedClosure(p5, VertexSet(5)), PreconditionError);
  EXPECT_THROW(ConnectedClosure(ParseGraph("a b\nb c\nc a\n"), VertexSet(3, {0})),
               NotATreeError);
}

TEST(TreeTest, ConnectedClosureIsMinimalConnected) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 15;
    const Graph t = RandomTree(n, rng());
    VertexSet u = testing::RandomSubset(n, 0.3, rng);
    if (u.empty()) u.insert(0);
    const VertexSet c = ConnectedClosure(t, u);
    ASSERT_TRUE(u.IsSubsetOf(c));
    ASSERT_TRUE(IsTree(t.InducedSubgraph(c)));
    for (Vertex x : c) {
      if (u.contains(x)) continue;
      VertexSet smaller = c;
      smaller.erase(x);
      EXPECT_FALSE(IsTree(t.InducedSubgraph(smaller)));
    }
    EXPECT_EQ(ConnectedClosure(t, c), c);
  }
}

TEST(TreeTest, SplitPathAtMiddleEdge) {
  const Graph p4 = Path(4);
  const EdgeSplit split = SplitAtInteriorEdge(p4, 1, 2);
  EXPECT_EQ(SerializeGraph(split.left), "v1 v2\nv2 v3\n");
  EXPECT_EQ(SerializeGraph(split.right), "v2 v3\nv3 v4\n");
  EXPECT_EQ(split.left_map, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(split.right_map, (std::vector<Vertex>{1, 2, 3}));
}

TEST(TreeTest, SplitPreconditions) {
  const Graph p3 = Path(3);
  EXPECT_THROW(SplitAtInteriorEdge(p3, 0, 1), PreconditionError);
  EXPECT_THROW(SplitAtInteriorEdge(p3, 1, 0), PreconditionError);
  EXPECT_THROW(SplitAtInteriorEdge(Path(5), 1, 3), PreconditionError);
  // A 1-leg spider is P3: the root is a leaf, so no split there.
  const Graph spider1 = GenerateFamily({Family::kSpider, 1});
  EXPECT_THROW(SplitAtInteriorEdge(spider1, spider1.VertexOf("r"), spider1.VertexOf("u1")),
               PreconditionError);
  const Graph spider2 = GenerateFamily({Family::kSpider, 2});
  const EdgeSplit split =
      SplitAtInteriorEdge(spider2, spider2.VertexOf("r"), spider2.VertexOf("u1"));
  EXPECT_EQ(split.left.order() + split.right.order(), spider2.order() + 2);
}

TEST(TreeTest, SplitSizesAndMapsOnRandomTrees) {
  std::mt19937_64 rng(17);
  int splits = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 4 + trial % 20;
    const Graph t = RandomTree(n, rng());
    for (const auto& [a, b] : t.edges()) {
      const auto interior = [&](Vertex x) { return t.degree(x) == 2 || t.degree(x) == 3; };
      if (!interior(a) || !interior(b)) continue;
      const EdgeSplit s = SplitAtInteriorEdge(t, a, b);
      ++splits;
      ASSERT_EQ(s.left.order() + s.right.order(), n + 2);
      ASSERT_TRUE(IsTree(s.left));
      ASSERT_TRUE(IsTree(s.right));
      // Every original vertex appears once as a non-artificial vertex.
      std::vector<int> seen(static_cast<std::size_t>(n), 0);
      for (Vertex x : s.left_map) ++seen[static_cast<std::size_t>(x)];
      for (Vertex x : s.right_map) ++seen[static_cast<std::size_t>(x)];
      for (Vertex x = 0; x < n; ++x) {
        ASSERT_EQ(seen[static_cast<std::size_t>(x)], (x == a || x == b) ? 2 : 1);
      }
      for (Vertex x = 0; x < s.left.order(); ++x) {
        ASSERT_EQ(s.left.label(x), t.label(s.left_map[static_cast<std::size_t>(x)]));
      }
      break;
    }
  }
  EXPECT_GT(splits, 100);
}

TEST(TreeTest, RandomTreeBasics) {
  EXPECT_EQ(RandomTree(1, 3).order(), 1);
  EXPECT_EQ(RandomTree(2, 3).edge_count(), 1U);
  EXPECT_EQ(SerializeGraph(RandomTree(8, 7)), SerializeGraph(RandomTree(8, 7)));
  EXPECT_THROW(RandomTree(0, 1), PreconditionError);
  for (int n = 1; n < 40; ++n) EXPECT_TRUE(IsTree(RandomTree(n, 100 + n)));
}

}  // namespace
}  // namespace defall
