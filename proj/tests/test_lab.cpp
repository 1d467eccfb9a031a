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

#include <sstream>

#include "test_support.hpp"

namespace hcpath {
namespace {

using testing::full;

TEST(Generators, Subcube) {
  const auto sq = gen_subcube(4, 2, 0, {0, 1});
  EXPECT_EQ(sq.size(), 4U);
  EXPECT_EQ(sq.edge_count(), 4U);
  const auto whole = gen_subcube(3, 3, 0, {0, 1, 2});
  EXPECT_EQ(whole.size(), 8U);
  const auto mid = gen_subcube(6, 3, 0b101010, {1, 3, 4});
  EXPECT_EQ(mid.size(), 8U);
  EXPECT_EQ(mid.edge_count(), 12U);
  EXPECT_EQ(is_subcube(mid)->dimension, 3);
  EXPECT_THROW(gen_subcube(4, 2, 0, {1, 1}), InvalidArgument);
  EXPECT_THROW(gen_subcube(4, 2, 0, {0, 4}), InvalidArgument);
  EXPECT_THROW(gen_subcube(4, 5, 0, {0, 1, 2, 3, 4}), InvalidArgument);
}

TEST(Generators, GPrimeShape) {
  const auto one = gen_gprime(1);
  EXPECT_EQ(one.graph.size(), 4U);
  EXPECT_EQ(one.graph.edge_count(), 3U);
  for (int d = 1; d <= 4; ++d) {
    const auto gp = gen_gprime(d);
    EXPECT_EQ(gp.graph.size(), std::size_t{1} << (d + 1));
    EXPECT_TRUE(is_connected(gp.graph));
    EXPECT_FALSE(is_two_connected(gp.graph));
    const int lx = gp.graph.index_of(gp.x), ly = gp.graph.index_of(gp.y);
    EXPECT_GE(min_degree_excluding(gp.graph, {lx, ly}), d);
    EXPECT_TRUE(gp.graph.host().adjacent(gp.bridge_u, gp.bridge_v));
  }
  EXPECT_EQ(degree_stats(gen_gprime(2).graph).min_degree, 2);
}

TEST(Generators, RandomMinDegreeIsSeededAndLargeEnough) {
  auto h = build_host(HostSpec::hypercube(6));
  int nonempty = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto g = gen_random_mindeg(h, 3, 24, seed);
    const auto again = gen_random_mindeg(h, 3, 24, seed);
    EXPECT_TRUE(std::equal(g.vertices().begin(), g.vertices().end(), again.vertices().begin(), again.vertices().end()));
    if (g.empty()) continue;
    ++nonempty;
    EXPECT_GE(degree_stats(g).min_degree, 3);
    EXPECT_GE(g.size(), 8U);
  }
  EXPECT_GT(nonempty, 0);
}

TEST(Generators, FullCubeIsTheOnlyFourRegularPieceOfQ4) {
  auto h = build_host(HostSpec::hypercube(4));
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto g = gen_random_mindeg(h, 4, 16, seed);
    EXPECT_TRUE(g.empty() || g.size() == 16U);
  }
}

TEST(Generators, RandomOnTorus) {
  auto h = build_host(HostSpec::torus(3, 3));
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto g = gen_random_mindeg(h, 3, 20, seed);
    if (!g.empty()) EXPECT_GE(degree_stats(g).min_degree, 3);
  }
}

TEST(Generators, RandomAverageDegree) {
  auto h = build_host(HostSpec::hypercube(8));
  for (int d = 4; d <= 6; ++d) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto g = gen_random_avgdeg(h, d, 30, seed);
      EXPECT_GE(degree_stats(g).average, Rational(d));
    }
  }
}

TEST(Io, HostStrings) {
  EXPECT_EQ(parse_host("Q5").n, 5);
  EXPECT_EQ(parse_host("hypercube:3").kind, HostKind::kHypercube);
  const auto t = parse_host("C3^4");
  EXPECT_EQ(t.kind, HostKind::kTorus);
  EXPECT_EQ(t.cycle, (std::vector<int>{3, 3, 3, 3}));
  EXPECT_EQ(parse_host("torus:4x5").cycle, (std::vector<int>{4, 5}));
  const auto g = parse_host("grid:-1..2x3");
  EXPECT_EQ(g.box[0], (std::pair<std::int64_t, std::int64_t>{-1, 2}));
  EXPECT_EQ(g.box[1], (std::pair<std::int64_t, std::int64_t>{0, 2}));
  EXPECT_THROW(parse_host("Qx"), InvalidArgument);
  EXPECT_THROW(parse_host("moon:3"), InvalidArgument);
  EXPECT_THROW(parse_host("C3"), InvalidArgument);
}

TEST(Io, GraphRoundTrip) {
  for (const auto& g : {gen_subcube(5, 3, 4, {0, 1, 3}), gen_gprime(3).graph, full(HostSpec::torus({3, 4})),
                        full(HostSpec::grid({{-1, 1}, {0, 2}}))}) {
    const auto j = graph_to_json(g);
    const auto back = graph_from_json(Json::parse(j.dump()));
    EXPECT_EQ(graph_to_json(back).dump(), j.dump());
    EXPECT_EQ(back.edge_count(), g.edge_count());
    EXPECT_EQ(instance_hash(back), instance_hash(g));
  }
  FactorGraph tri{3, {{0, 1}, {1, 2}, {2, 0}}};
  const auto p = full(HostSpec::product({tri, FactorGraph{2, {{0, 1}}}}));
  EXPECT_EQ(graph_from_json(graph_to_json(p)).edge_count(), 9U);
}

TEST(Io, GraphJsonErrors) {
  EXPECT_THROW(graph_from_json(Json::parse(R"({"vertices": [1]})")), InvalidArgument);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"host": "Q3", "vertices": [9]})")), InvalidArgument);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"host": "Q3", "vertices": [0, 3], "edges": [[0, 3]]})")),
               InvalidArgument);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"host": "Q3", "vertices": [1, 1]})")), InvalidArgument);
  const auto g = graph_from_json(Json::parse(R"({"host": "C3^2", "vertices": [[0, 0], [1, 0], [2, 0]]})"));
  EXPECT_EQ(g.edge_count(), 3U);
}

TEST(Io, CertificateJson) {
  const auto q3 = full(HostSpec::hypercube(3));
  const auto c = find_ab_path(q3, 0, 1, 3, Mode::kTight);
  const auto j = certificate_to_json(q3.host(), c);
  EXPECT_EQ(j.at("path").size(), 8U);
  EXPECT_EQ(j.at("bound"), 7);
  EXPECT_EQ(j.at("mode"), "tight");
  EXPECT_EQ(j.at("fallback_used"), false);
  EXPECT_TRUE(j.at("trace").is_array());
}

TEST(Io, VertexParsing) {
  auto h = build_host(HostSpec::torus(2, 3));
  EXPECT_EQ(parse_vertex(*h, "1,2"), h->from_coordinates({1, 2}));
  EXPECT_EQ(parse_vertex(*h, "4"), 4U);
  EXPECT_THROW(parse_vertex(*h, "9"), InvalidArgument);
  EXPECT_THROW(parse_vertex(*h, "1,3"), InvalidArgument);
}

ExperimentConfig small_config() {
  return config_from_json(Json::parse(R"({
    "name": "unit", "host": "Q6", "generator": "random_mindeg", "size": 18,
    "d": [2, 3], "task": "path", "samples": 6, "seed": 5
  })"));
}

TEST(Experiment, RowsDoNotDependOnThreadCount) {
  auto c = small_config();
  c.threads = 1;
  std::ostringstream one, many;
  write_csv(one, run_experiment(c));
  c.threads = 4;
  write_csv(many, run_experiment(c));
  EXPECT_EQ(one.str(), many.str());
}

TEST(Experiment, CsvShape) {
  const auto res = run_experiment(small_config());
  EXPECT_TRUE(res.ok());
  EXPECT_EQ(res.rows.size(), 12U);
  std::ostringstream os;
  write_csv(os, res);
  std::istringstream in(os.str());
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header.rfind("schema,index,seed,host", 0), 0U);
  int lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  EXPECT_EQ(lines, 13);
  for (const auto& r : res.rows) {
    if (r.status != "ok") continue;
    EXPECT_TRUE(r.bound_met);
    if (r.oracle_exact) EXPECT_GE(r.oracle, r.length);
  }
}

TEST(Experiment, GPrimeRowsReportThePreconditionAndTheOracle) {
  const auto c = config_from_json(Json::parse(R"({
    "host": "Q4", "generator": "gprime", "d": [2, 3], "task": "ab", "samples": 1
  })"));
  const auto res = run_experiment(c);
  ASSERT_EQ(res.rows.size(), 2U);
  EXPECT_EQ(res.rows[0].status, "precondition");
  EXPECT_EQ(res.rows[0].oracle, 4);
  EXPECT_EQ(res.rows[1].oracle, 8);
  EXPECT_TRUE(res.ok());
}

TEST(Experiment, TorusEqualityInstance) {
  const auto c = config_from_json(Json::parse(R"({
    "host": "C3^2", "generator": "full", "d": 4, "task": "path", "samples": 1
  })"));
  const auto res = run_experiment(c);
  EXPECT_EQ(res.rows[0].status, "precondition");
  EXPECT_EQ(res.rows[0].oracle, 8);
  EXPECT_TRUE(res.ok());
  ASSERT_TRUE(res.summary.min_ratio_conj_torus.has_value());
  EXPECT_DOUBLE_EQ(*res.summary.min_ratio_conj_torus, 1.0);
}

TEST(Experiment, ConfigErrors) {
  EXPECT_THROW(config_from_json(Json::parse(R"({"colour": 1})")), InvalidArgument);
  EXPECT_THROW(config_from_json(Json::parse(R"({"generator": "magic"})")), InvalidArgument);
  EXPECT_THROW(config_from_json(Json::parse(R"({"d": "three"})")), InvalidArgument);
  EXPECT_THROW(config_from_json(Json::parse(R"({"task": "walk"})")), InvalidArgument);
  EXPECT_THROW(config_from_json(Json::parse("[1]")), InvalidArgument);
}

}  // namespace
}  // namespace hcpath
