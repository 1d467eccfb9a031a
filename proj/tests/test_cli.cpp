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

#include <array>
#include <cstdio>
#include <string>

#include "hcpath/io.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string("\"") + HCPATH_CLI + "\" " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

const std::string kSamples = HCPATH_SAMPLES;

TEST(Cli, LongpathCertificateFields) {
  const auto r = cli("longpath --host Q4 --a 0 --b 1 --mode tight");
  ASSERT_EQ(r.status, 0);
  const auto j = hcpath::Json::parse(r.out);
  for (const char* key : {"path", "length", "bound", "mode", "d", "trace", "fallback_used"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j.at("length"), 15);
  EXPECT_EQ(j.at("bound"), 15);
}

TEST(Cli, GeneralModeReportsK) {
  const auto r = cli("longpath --host C3^2 --a 0 --b 4 --mode general");
  ASSERT_EQ(r.status, 0);
  const auto j = hcpath::Json::parse(r.out);
  EXPECT_EQ(j.at("k"), 2);
  EXPECT_EQ(j.at("mode"), "general");
}

TEST(Cli, EndpointFreePathUsesMinimumDegree) {
  const auto r = cli("longpath --graph " + kSamples + "/random_q7_d3.json");
  ASSERT_EQ(r.status, 0);
  EXPECT_GE(hcpath::Json::parse(r.out).at("length").get<int>(), 7);
}

TEST(Cli, PreconditionsAndInputErrorsExitWithThree) {
  EXPECT_EQ(cli("longpath --graph " + kSamples + "/gprime3.json --a 0 --b 9 --mode tight").status, 3);
  EXPECT_EQ(cli("longpath --host Q3 --a 0 --b 1 --d 5").status, 3);
  EXPECT_EQ(cli("longpath --graph /nonexistent/graph.json").status, 3);
  EXPECT_EQ(cli("longpath --host Q3 --a 0").status, 3);
  EXPECT_EQ(cli("peel --host Q3 --threshold x").status, 3);
  EXPECT_EQ(cli("bogus").status, 3);
  EXPECT_EQ(cli("longcycle --host Q3 --d 1").status, 3);
  EXPECT_EQ(cli("--help").status, 0);
}

TEST(Cli, OracleAndPeel) {
  const auto o = cli("oracle --host C3^2");
  ASSERT_EQ(o.status, 0);
  EXPECT_EQ(hcpath::Json::parse(o.out).at("length"), 8);
  const auto c = cli("oracle --host Q3 --cycle");
  EXPECT_EQ(hcpath::Json::parse(c.out).at("length"), 8);
  // Every vertex of G' for d = 3 has degree 3 or 4, and only the two bridge
  // ends have 4.
  const auto keep = cli("peel --graph " + kSamples + "/gprime3.json --threshold 3");
  ASSERT_EQ(keep.status, 0);
  EXPECT_EQ(hcpath::Json::parse(keep.out).at("vertices").size(), 16U);
  const auto gone = cli("peel --graph " + kSamples + "/gprime3.json --threshold 7/2");
  EXPECT_TRUE(hcpath::Json::parse(gone.out).at("vertices").empty());
}

TEST(Cli, DecomposeEmitsDot) {
  const auto r = cli("decompose --graph " + kSamples + "/gprime3.json");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("graph block_cut_tree {", 0), 0U);
}

}  // namespace
