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

using testing::brute_longest;
using testing::brute_longest_any;
using testing::brute_longest_cycle;
using testing::cube_adjacency;
using testing::full;
using testing::ids_of;
using testing::torus_adjacency;

// Values below were computed once with the test-side exhaustive search and
// are frozen here; the reference search is rerun where it is cheap.

TEST(ReferenceSearch, FrozenCubeValues) {
  for (int d = 2; d <= 4; ++d) {
    const auto q = full(HostSpec::hypercube(d));
    const auto adj = cube_adjacency(ids_of(q));
    EXPECT_EQ(brute_longest(adj, 0, 1), (1 << d) - 1) << "Q" << d;
    EXPECT_EQ(brute_longest(adj, 0, 3), (1 << d) - 2) << "Q" << d;
    EXPECT_EQ(brute_longest_cycle(adj), 1 << d) << "Q" << d;
  }
}

TEST(ReferenceSearch, FrozenGPrimeAndTorusValues) {
  const auto g2 = gen_gprime(2), g3 = gen_gprime(3);
  const auto a2 = cube_adjacency(ids_of(g2.graph));
  const auto a3 = cube_adjacency(ids_of(g3.graph));
  // The reference adjacency is induced, so drop the removed axis edges.
  auto prune = [](testing::Adj adj, const std::vector<std::uint64_t>& ids, int d) {
    for (std::size_t i = 0; i < adj.size(); ++i) {
      std::erase_if(adj[i], [&](int j) {
        const auto x = ids[i] ^ ids[j];
        return x == (std::uint64_t{1} << d) && ids[i] != 0 && ids[j] != 0;
      });
    }
    return adj;
  };
  const auto p2 = prune(a2, ids_of(g2.graph), 2);
  const auto p3 = prune(a3, ids_of(g3.graph), 3);
  EXPECT_EQ(brute_longest(p2, g2.graph.index_of(g2.x), g2.graph.index_of(g2.y)), 4);
  EXPECT_EQ(brute_longest(p3, g3.graph.index_of(g3.x), g3.graph.index_of(g3.y)), 8);
  const auto t = full(HostSpec::torus(2, 3));
  EXPECT_EQ(brute_longest_any(torus_adjacency(ids_of(t), 2, 3)), 8);
}

TEST(Oracle, MatchesFrozenValues) {
  for (int d = 2; d <= 4; ++d) {
    const auto q = full(HostSpec::hypercube(d));
    const auto odd = longest_path_between(q, 0, 1);
    EXPECT_TRUE(odd.exact);
    EXPECT_EQ(odd.length, (1 << d) - 1);
    EXPECT_EQ(longest_path_between(q, 0, 3).length, (1 << d) - 2);
    EXPECT_EQ(longest_cycle(q).length, 1 << d);
    EXPECT_EQ(longest_path(q).length, (1 << d) - 1);
  }
  const auto g2 = gen_gprime(2), g3 = gen_gprime(3);
  EXPECT_EQ(longest_path_between(g2.graph, g2.x, g2.y).length, 4);
  EXPECT_EQ(longest_path_between(g3.graph, g3.x, g3.y).length, 8);
  EXPECT_EQ(longest_path(full(HostSpec::torus(2, 3))).length, 8);
}

TEST(Oracle, WitnessesAreValid) {
  const auto q = full(HostSpec::hypercube(4));
  const auto r = longest_path_between(q, 0, 1);
  PathCertificate c;
  c.path = r.witness;
  c.d = 4;
  c.claimed_bound = 15;
  EXPECT_TRUE(validate_certificate(q, c).ok());
  const auto cy = longest_cycle(q);
  CycleCertificate cc;
  cc.cycle = cy.witness;
  cc.d = 4;
  cc.claimed_bound = 16;
  EXPECT_TRUE(validate_certificate(q, cc).ok());
}

TEST(Oracle, AgreesWithReferenceOnRandomGraphs) {
  auto h = build_host(HostSpec::hypercube(5));
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto g = testing::random_induced(h, 0.45, seed);
    if (g.size() < 2 || g.size() > 16) continue;
    const auto adj = cube_adjacency(ids_of(g));
    EXPECT_EQ(longest_path(g).length, brute_longest_any(adj)) << "seed " << seed;
    const auto between = longest_path_between(g, g.id(0), g.id(static_cast<int>(g.size()) - 1));
    EXPECT_EQ(between.length, brute_longest(adj, 0, static_cast<int>(g.size()) - 1)) << "seed " << seed;
    EXPECT_EQ(longest_cycle(g).length, brute_longest_cycle(adj)) << "seed " << seed;
  }
}

TEST(Oracle, BranchAndBoundBeyondTheDpLimit) {
  // 32 vertices is past the bitmask DP; Q_5 is Hamiltonian-connected between
  // odd-distance vertices.
  const auto q = full(HostSpec::hypercube(5));
  const auto r = longest_path_between(q, 0, 1);
  EXPECT_EQ(r.length, 31);
  EXPECT_TRUE(r.exact);
}

TEST(Oracle, BudgetExhaustionIsReported) {
  const auto q = full(HostSpec::hypercube(6));
  const auto r = longest_path_between(q, 0, 3, 50);
  EXPECT_FALSE(r.exact);
  EXPECT_GE(r.length, 1);
}

TEST(Oracle, NoPathGivesMinusOne) {
  auto h = build_host(HostSpec::hypercube(3));
  const auto g = SubgraphView::induced(h, {0, 7});
  EXPECT_EQ(longest_path_between(g, 0, 7).length, -1);
  EXPECT_EQ(longest_cycle(g).length, -1);
}

TEST(Validate, RejectsBrokenCertificates) {
  const auto q = full(HostSpec::hypercube(3));
  PathCertificate c;
  c.d = 3;
  c.claimed_bound = 7;
  c.path = {0, 1, 3, 2, 6, 7, 5, 4};
  EXPECT_TRUE(validate_certificate(q, c).ok());
  auto repeat = c;
  repeat.path.back() = 1;
  EXPECT_FALSE(validate_certificate(q, repeat).ok());
  auto jump = c;
  std::swap(jump.path[2], jump.path[5]);
  EXPECT_FALSE(validate_certificate(q, jump).ok());
  auto short_path = c;
  short_path.path.resize(4);
  EXPECT_FALSE(validate_certificate(q, short_path).ok());
  auto wrong_bound = c;
  wrong_bound.claimed_bound = 6;
  EXPECT_FALSE(validate_certificate(q, wrong_bound).ok());
}

TEST(Peel, StrictThreshold) {
  // Q_3 plus a pendant vertex in Q_4: peeling at 3 removes the pendant only.
  auto h = build_host(HostSpec::hypercube(4));
  const auto g = SubgraphView::induced(h, {0, 1, 2, 3, 4, 5, 6, 7, 8});
  EXPECT_EQ(dcore_peel(g, Rational(3)).size(), 8U);
  EXPECT_EQ(dcore_peel(g, Rational(7, 2)).size(), 0U);
  EXPECT_EQ(dcore_peel(g, Rational(1)).size(), 9U);
  EXPECT_THROW(dcore_peel(g, Rational(-1)), InvalidArgument);
}

}  // namespace
}  // namespace hcpath
