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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails.
//
//   hcpath_acceptance <path to hcpath CLI> <samples dir>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hcpath/hcpath.hpp"
#include "invariant_suites.hpp"

namespace fs = std::filesystem;
using namespace hcpath;

namespace {

std::string g_cli;
fs::path g_samples;
fs::path g_tmp;

struct Run {
  int status = -1;
  std::string out;
  double seconds = 0;
};

// Runs the CLI with stdout captured; stderr is discarded.
Run cli(const std::string& args) {
  const std::string cmd = "\"" + g_cli + "\" " + args + " 2>/dev/null";
  Run r;
  const auto t0 = std::chrono::steady_clock::now();
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(p);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

using testing::full;

int failures = 0;

void report(int n, bool ok, const std::string& what, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what << " (" << detail << ")" << std::endl;
  if (!ok) ++failures;
}

// Odd-distance partner of 0 in Q_d: the all-ones vertex or its neighbour.
VertexId odd_partner(int d) { return (VertexId{1} << d) - 1 - (d % 2 == 0 ? 1 : 0); }

void criterion1() {
  bool ok = true;
  std::ostringstream detail;
  double q7 = 0;
  for (int d = 2; d <= 7; ++d) {
    const auto r = cli("longpath --host Q" + std::to_string(d) + " --a 0 --b " + std::to_string(odd_partner(d)) +
                       " --d " + std::to_string(d) + " --mode tight --oracle-threshold 0");
    if (r.status != 0) {
      ok = false;
      detail << "Q" << d << " exit " << r.status << "; ";
      continue;
    }
    const auto j = Json::parse(r.out);
    const long len = static_cast<long>(j.at("path").size()) - 1;
    if (len < (1L << d) - 1 || j.at("fallback_used").get<bool>()) {
      ok = false;
      detail << "Q" << d << " length " << len << "; ";
    }
    if (d == 7) q7 = r.seconds;
    if (d <= 4) {
      const auto q = full(HostSpec::hypercube(d));
      const auto o = longest_path_between(q, 0, odd_partner(d));
      if (!o.exact || o.length != (1 << d) - 1 || len != o.length) {
        ok = false;
        detail << "Q" << d << " oracle " << o.length << "; ";
      }
    }
  }
  if (q7 >= 10.0) ok = false;
  char t[32];
  std::snprintf(t, sizeof t, "%.2f", q7);
  detail << "Q7 " << t << " s";
  report(1, ok, "Q_2..Q_7 odd endpoints reach 2^d-1 without fallback", detail.str());
}

void criterion2() {
  bool ok = true;
  std::ostringstream detail;
  for (int d = 2; d <= 4; ++d) {
    const auto q = full(HostSpec::hypercube(d));
    const auto c = find_ab_path(q, 0, 3, d, Mode::kTight);
    const auto o = longest_path_between(q, 0, 3);
    const bool good = validate_certificate(q, c).ok() && c.length() >= (1 << d) - 2 && o.exact &&
                      o.length == (1 << d) - 2;
    ok = ok && good;
    detail << "Q" << d << " " << c.length() << "/" << o.length << (d < 4 ? ", " : "");
  }
  report(2, ok, "even-distance endpoints give exactly 2^d-2", detail.str());
}

void criterion3() {
  bool ok = true;
  std::ostringstream detail;
  for (int d = 2; d <= 3; ++d) {
    const auto gp = gen_gprime(d);
    const auto o = longest_path_between(gp.graph, gp.x, gp.y);
    ok = ok && o.exact && o.length == (1 << d) && o.length < (1 << (d + 1)) - 2;
    detail << "d=" << d << " longest x-y " << o.length << (d < 3 ? ", " : "");
  }
  report(3, ok, "1-connected G' stays at 2^d", detail.str());
}

void criterion4() {
  bool ok = true;
  std::ostringstream detail;
  for (int d = 2; d <= 7; ++d) {
    const auto r = cli("longcycle --host Q" + std::to_string(d));
    if (r.status != 0) {
      ok = false;
      detail << "Q" << d << " exit " << r.status << "; ";
      continue;
    }
    const long len = static_cast<long>(Json::parse(r.out).at("cycle").size());
    if (len < (1L << d)) ok = false;
    if (d <= 4) {
      const auto o = longest_cycle(full(HostSpec::hypercube(d)));
      if (!o.exact || o.length != (1 << d) || len != o.length) ok = false;
    }
    detail << len << (d < 7 ? "," : "");
  }
  report(4, ok, "longcycle on Q_2..Q_7 reaches 2^d", "lengths " + detail.str());
}

void criterion5() {
  const std::vector<int> dims = {5, 6, 7, 8};
  std::vector<HostPtr> hosts;
  for (int n : dims) hosts.push_back(build_host(HostSpec::hypercube(n)));
  int done = 0, oracle_ok = 0, cert_ok = 0, fallbacks = 0, inexact = 0, bare_ok = 0, bare_fallbacks = 0;
  EngineOptions rules_only;
  rules_only.oracle_threshold = 0;
  std::uint64_t seed = 1;
  for (int i = 0; i < 200; ++i) {
    const auto& host = hosts[i % hosts.size()];
    const int d = 2 + (i / static_cast<int>(hosts.size())) % 3;
    SubgraphView g;
    for (;; ++seed) {
      g = gen_random_mindeg(host, d, d == 4 ? 20 : 18, seed);
      if (!g.empty() && g.size() <= 22) break;
    }
    ++seed;
    ++done;
    const auto o = longest_path(g);
    if (!o.exact) ++inexact;
    if (o.length >= (1 << d) - 1) ++oracle_ok;
    const auto c = find_long_path_min_degree(g, d);
    if (validate_certificate(g, c).ok()) ++cert_ok;
    if (c.fallback_used) ++fallbacks;
    // Again with the exact-search leaf off, so only the rules build the path.
    const auto bare = find_long_path_min_degree(g, d, rules_only);
    if (validate_certificate(g, bare).ok()) ++bare_ok;
    if (bare.fallback_used) ++bare_fallbacks;
  }
  const double rate = 100.0 * fallbacks / done;
  const double bare_rate = 100.0 * bare_fallbacks / done;
  char r[64];
  std::snprintf(r, sizeof r, "%.1f%%, rules only %.1f%%", rate, bare_rate);
  std::ostringstream detail;
  detail << done << " instances, oracle " << oracle_ok << ", certificates " << cert_ok << "+" << bare_ok
         << ", fallback " << r;
  if (inexact > 0) detail << ", " << inexact << " inexact";
  report(5, done == 200 && oracle_ok == done && cert_ok == done && bare_ok == done && inexact == 0 && rate <= 5.0 &&
                bare_rate <= 5.0,
         "random min-degree corpus over Q_5..Q_8", detail.str());
}

void criterion6() {
  auto host = build_host(HostSpec::hypercube(8));
  int good = 0, total = 0;
  for (int i = 0; i < 50; ++i) {
    const int d = 4 + i % 3;
    const auto g = gen_random_avgdeg(host, d, 30, 1000 + i);
    ++total;
    if (degree_stats(g).average < Rational(d)) continue;
    const auto core = dcore_peel(g, Rational(d, 2));
    if (core.empty()) continue;
    const int half = (d + 1) / 2;
    const auto c = find_long_path_min_degree(core, half);
    if (validate_certificate(core, c).ok() && c.length() >= (1 << half) - 1) ++good;
  }
  report(6, good == total, "average degree d, peel at d/2, path of 2^ceil(d/2)-1",
         std::to_string(good) + "/" + std::to_string(total));
}

void criterion7() {
  auto host = build_host(HostSpec::torus(3, 3));
  int good = 0, total = 0;
  std::uint64_t seed = 1;
  while (total < 50) {
    auto g = gen_random_mindeg(host, 3, 22, seed++);
    if (g.size() < 4) continue;
    const auto f = block_cut_tree(g);
    std::vector<int> best;
    for (const auto& b : f.blocks) {
      if (b.size() > best.size()) best = b;
    }
    g = g.induced_on(best);
    if (g.size() < 4 || !is_two_connected(g)) continue;
    const int a = 0, b = static_cast<int>(g.size()) - 1;
    if (min_degree_excluding(g, {a, b}) < 3) continue;
    ++total;
    const auto c = find_long_path_general(g, g.id(a), g.id(b), 3, 2);
    if (validate_certificate(g, c).ok() && c.claimed_bound == 2 && c.length() >= 2) ++good;
  }
  const auto o = longest_path(full(HostSpec::torus(2, 3)));
  report(7, good == total && o.exact && o.length == 8, "C_3^3 general mode and the C_3^2 equality instance",
         std::to_string(good) + "/" + std::to_string(total) + " certified, C_3^2 longest path " +
             std::to_string(o.length));
}

void criterion8() {
  bool ok = true;
  std::ostringstream detail;
  for (const auto& r : testing::all_suites(10000)) {
    if (r.violations > 0 || r.checked == 0) ok = false;
    detail << r.name << " " << r.violations << "/" << r.checked;
    if (r.violations > 0) detail << " [" << r.first << "]";
    detail << "; ";
  }
  detail << "10000 cases per suite";
  report(8, ok, "structural invariant suites, violations/checked", detail.str());
}

void criterion9() {
  std::vector<std::string> commands = {
      "gen --kind random --host Q7 --d 3 --size 40 --seed 9",
      "gen --kind avgdeg --host Q8 --d 5 --size 30 --seed 4",
      "gen --kind gprime --d 3",
      "decompose --graph " + (g_samples / "gprime3.json").string(),
      "longpath --host Q6 --a 0 --b 1 --mode tight",
      "longpath --graph " + (g_samples / "random_q7_d3.json").string(),
      "longpath --host C3^3 --a 0 --b 13 --mode general",
      "longcycle --host Q5",
      "oracle --host C3^2",
      "peel --graph " + (g_samples / "random_q7_d3.json").string() + " --threshold 5/2",
  };
  bool ok = true;
  std::ostringstream detail;
  int compared = 0;
  for (const auto& c : commands) {
    const auto r1 = cli(c), r2 = cli(c);
    ++compared;
    if (r1.status != 0 || r1.out != r2.out || r1.out.empty()) {
      ok = false;
      detail << "differs or failed: " << c << "; ";
    }
  }
  // Experiments through output files, with different thread counts.
  const auto cfg = g_samples / "experiment_mindeg.json";
  const auto p1 = g_tmp / "run1", p2 = g_tmp / "run2";
  const auto e1 = cli("experiment --config " + cfg.string() + " --threads 1 --out " + p1.string());
  const auto e2 = cli("experiment --config " + cfg.string() + " --threads 4 --out " + p2.string());
  ++compared;
  const std::string c1 = slurp(p1.string() + ".csv"), c2 = slurp(p2.string() + ".csv");
  const std::string j1 = slurp(p1.string() + ".json"), j2 = slurp(p2.string() + ".json");
  if (e1.status != 0 || e2.status != 0 || c1.empty() || c1 != c2 || j1 != j2) {
    ok = false;
    detail << "experiment outputs differ or failed; ";
  }
  detail << compared << " commands run twice";
  report(9, ok, "CLI output is byte-identical across runs", detail.str());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: hcpath_acceptance <hcpath CLI> <samples dir>\n";
    return 3;
  }
  g_cli = argv[1];
  g_samples = argv[2];
  g_tmp = fs::temp_directory_path() / ("hcpath_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(g_tmp);
  try {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
  } catch (const std::exception& e) {
    std::cout << "FAIL acceptance aborted: " << e.what() << std::endl;
    ++failures;
  }
  fs::remove_all(g_tmp);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
