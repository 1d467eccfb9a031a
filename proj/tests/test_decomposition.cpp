// Copyright 2026 The hcpath Authors
//
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

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace hcpath {
namespace {

using testing::full;

SubgraphView torus_graph(const std::vector<int>& k, const std::vector<std::vector<std::int64_t>>& coords) {
  auto h = build_host(HostSpec::torus(k));
  std::vector<VertexId> vs;
  for (const auto& c : coords) vs.push_back(h->from_coordinates(c));
  return SubgraphView::induced(h, vs);
}

int local(const SubgraphView& g, const std::vector<std::int64_t>& c) {
  return g.index_of(g.host().from_coordinates(c));
}

TEST(Blocks, TwoTrianglesSharingAVertex) {
  const auto g = torus_graph({3, 3}, {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {0, 2}});
  const auto f = block_cut_tree(g);
  EXPECT_EQ(f.blocks.size(), 2U);
  EXPECT_EQ(f.cutvertices, (std::vector<int>{local(g, {0, 0})}));
  EXPECT_EQ(f.endblocks.size(), 2U);
  for (int e : f.endblocks) EXPECT_EQ(f.cut_of[e], local(g, {0, 0}));
}

TEST(Blocks, FourCycleIsOneBlock) {
  const auto g = full(HostSpec::hypercube(2));
  const auto f = block_cut_tree(g);
  EXPECT_EQ(f.blocks.size(), 1U);
  EXPECT_TRUE(f.cutvertices.empty());
  EXPECT_TRUE(is_two_connected(g));
}

TEST(Blocks, PathOfThreeEdges) {
  auto h = build_host(HostSpec::hypercube(3));
  const auto g = SubgraphView::induced(h, {0, 1, 3, 7});
  const auto f = block_cut_tree(g);
  EXPECT_EQ(f.blocks.size(), 3U);
  EXPECT_EQ(f.cutvertices.size(), 2U);
  EXPECT_EQ(f.endblocks.size(), 2U);
  EXPECT_FALSE(is_two_connected(g));
}

TEST(Blocks, DisconnectedInputIsFlagged) {
  auto h = build_host(HostSpec::hypercube(3));
  const auto f = block_cut_tree(SubgraphView::induced(h, {0, 1, 6, 7}));
  EXPECT_FALSE(f.connected);
  EXPECT_EQ(f.components, 2);
}

TEST(Blocks, DotOutputNamesBlocksAndCuts) {
  auto h = build_host(HostSpec::hypercube(3));
  const auto g = SubgraphView::induced(h, {0, 1, 3, 7});
  const auto dot = to_dot(g, block_cut_tree(g));
  EXPECT_NE(dot.find("graph block_cut_tree {"), std::string::npos);
  EXPECT_NE(dot.find("B0 -- C"), std::string::npos);
  EXPECT_NE(dot.find("label=\"1\""), std::string::npos);
}

TEST(Anatomy, SingleBlockSide) {
  const auto g = full(HostSpec::hypercube(2));
  const auto d = body_core_limbs(g, 0);
  EXPECT_EQ(d.body.size(), 4U);
  EXPECT_EQ(d.core.size(), 4U);
  EXPECT_TRUE(d.limbs.empty());
}

TEST(Anatomy, CutvertexRootWithTwoTriangles) {
  const auto g = torus_graph({3, 3}, {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {0, 2}});
  const int root = local(g, {0, 0});
  const auto d = body_core_limbs(g, root);
  EXPECT_EQ(d.body, (std::vector<int>{root}));
  EXPECT_TRUE(d.core.empty());
  ASSERT_EQ(d.limbs.size(), 2U);
  for (const auto& limb : d.limbs) {
    EXPECT_EQ(limb.joint, root);
    EXPECT_EQ(limb.vertices.size(), 3U);
  }
}

TEST(Anatomy, TriangleWithPendantPath) {
  const auto g = torus_graph({3, 5}, {{0, 0}, {1, 0}, {2, 0}, {1, 1}, {1, 2}});
  const int root = local(g, {0, 0});
  const int u = local(g, {1, 0});
  const auto d = body_core_limbs(g, root);
  EXPECT_EQ(d.body.size(), 3U);
  EXPECT_EQ(d.core, (std::vector<int>{root, local(g, {2, 0})}));
  ASSERT_EQ(d.limbs.size(), 1U);
  EXPECT_EQ(d.limbs[0].joint, u);
  EXPECT_EQ(d.limbs[0].vertices, (std::vector<int>{u, local(g, {1, 1}), local(g, {1, 2})}));
}

TEST(Span, SingletonAndPath) {
  auto h = build_host(HostSpec::hypercube(3));
  const auto g = SubgraphView::induced(h, {0, 1, 3, 7});
  EXPECT_EQ(span(g, {2}), (std::vector<int>{2}));
  EXPECT_EQ(span(g, {0, 3}), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(span(g, {1, 2}), (std::vector<int>{1, 2}));
}

TEST(Span, SkipsPendantBranches) {
  // A 4-cycle 0,1,3,2 with tails 2-6 and 1-5-13, plus a pendant 3-11.
  auto h = build_host(HostSpec::hypercube(4));
  const auto g = SubgraphView::induced(h, {0, 1, 2, 3, 5, 6, 11, 13});
  ASSERT_EQ(g.edge_count(), 8U);
  const auto s = span(g, {g.index_of(6), g.index_of(13)});
  std::vector<VertexId> ids;
  for (int v : s) ids.push_back(g.id(v));
  EXPECT_EQ(ids, (std::vector<VertexId>{0, 1, 2, 3, 5, 6, 13}));
}

TEST(Exits, CubeFaceEveryInteriorVertexExits) {
  const auto q3 = full(HostSpec::hypercube(3));
  const auto s = split(q3, 0, 4);
  const auto f = block_cut_tree(s.side_a);
  ASSERT_EQ(f.blocks.size(), 1U);
  const auto exits = exit_vertices(q3, s, true, f, 0);
  ASSERT_EQ(exits.size(), 4U);
  for (const auto& x : exits) EXPECT_EQ(q3.id(x.partner), q3.id(x.exit) ^ 4U);
}

TEST(Exits, PathSideWithOneCrossEdge) {
  auto h = build_host(HostSpec::hypercube(2));
  const auto g = SubgraphView::induced(h, {0, 1, 3});
  SplitOutcome s;
  for (auto& c : split_candidates(g, 0, 3)) {
    if (c.direction == 1) s = c;
  }
  ASSERT_EQ(s.side_a_locals.size(), 2U);
  const auto f = block_cut_tree(s.side_a);
  bool found = false;
  for (int e : f.endblocks) {
    for (const auto& x : exit_vertices(g, s, true, f, e)) {
      EXPECT_EQ(g.id(x.exit), 1U);
      EXPECT_EQ(g.id(x.partner), 3U);
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(Exits, ShortfallsAreCounted) {
  const auto q4 = full(HostSpec::hypercube(4));
  EXPECT_EQ(exit_shortfalls(q4, split(q4, 0, 15)), 0);
  // Square 0,1,3,2 with a tail 3-7; b = 7 ends up with the endblock {1,3}
  // or {2,3}, whose only interior vertex has a single partner.
  auto h = build_host(HostSpec::hypercube(3));
  const auto g = SubgraphView::induced(h, {0, 1, 2, 3, 7});
  EXPECT_EQ(exit_shortfalls(g, split(g, 0, 7)), 1);
}

TEST(Interaction, TwoBlockSidesGiveADegenerateDigraph) {
  const auto q3 = full(HostSpec::hypercube(3));
  const int a = q3.index_of(0), b = q3.index_of(5);
  const auto s = split(q3, 0, 5);
  const auto st = make_split_state(q3, s, a, b, a, b);
  const auto H = build_interaction_digraph(st, HVariant::kWeak);
  EXPECT_LE(H.nodes.size(), 4U);
  EXPECT_TRUE(H.arcs.empty());
  for (const auto& node : H.nodes) EXPECT_TRUE(node.core);
}

}  // namespace
}  // namespace hcpath
