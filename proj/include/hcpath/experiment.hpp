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

#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "hcpath/constructor.hpp"
#include "hcpath/generators.hpp"
#include "hcpath/io.hpp"

namespace hcpath {

inline constexpr int kCsvSchemaVersion = 1;

// What each instance is asked for:
//   path  : long path from minimum degree, oracle longest path anywhere
//   ab    : long a-b path between chosen endpoints, oracle longest a-b path
//   cycle : long cycle, oracle longest cycle
//   peel  : peel at d/2, long path in the core, oracle on the unpeeled graph
enum class Task { kPath, kAb, kCycle, kPeel };

inline const char* to_string(Task t) {
  switch (t) {
    case Task::kPath:
      return "path";
    case Task::kAb:
      return "ab";
    case Task::kCycle:
      return "cycle";
    case Task::kPeel:
      return "peel";
  }
  return "?";
}

inline Task parse_task(const std::string& s) {
  if (s == "path") return Task::kPath;
  if (s == "ab") return Task::kAb;
  if (s == "cycle") return Task::kCycle;
  if (s == "peel") return Task::kPeel;
  throw InvalidArgument("unknown task '" + s + "'");
}

struct ExperimentConfig {
  std::string name = "experiment";
  HostSpec host = HostSpec::hypercube(6);
  // random_mindeg | random_avgdeg | subcube | gprime | full
  std::string generator = "random_mindeg";
  std::size_t size = 20;
  std::vector<int> ds = {3};
  Task task = Task::kPath;
  Mode mode = Mode::kTight;
  int k = -1;                  // general mode; -1 takes the host's split loss
  std::string parity = "odd";  // ab endpoints: odd | even | any
  int samples = 10;            // per value of d
  std::uint64_t seed = 1;
  std::uint64_t oracle_budget = 20'000'000;
  int oracle_max_vertices = 30;
  int threads = 0;
  EngineOptions engine;
};

inline ExperimentConfig config_from_json(const Json& j) {
  static const std::set<std::string> known = {"name",   "host",          "generator", "size",
                                              "d",      "task",          "mode",      "k",
                                              "parity", "samples",       "seed",      "oracle_budget",
                                              "oracle_max_vertices",     "threads",   "engine"};
  if (!j.is_object()) throw InvalidArgument("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) throw InvalidArgument("unknown config key '" + key + "'");
  }
  ExperimentConfig c;
  try {
    c.name = j.value("name", c.name);
    if (j.contains("host")) c.host = host_from_json(j.at("host"));
    c.generator = j.value("generator", c.generator);
    c.size = j.value("size", c.size);
    if (j.contains("d")) {
      c.ds = j.at("d").is_array() ? j.at("d").get<std::vector<int>>() : std::vector<int>{j.at("d").get<int>()};
    }
    if (j.contains("task")) c.task = parse_task(j.at("task").get<std::string>());
    if (j.contains("mode")) c.mode = parse_mode(j.at("mode").get<std::string>());
    c.k = j.value("k", c.k);
    c.parity = j.value("parity", c.parity);
    c.samples = j.value("samples", c.samples);
    c.seed = j.value("seed", c.seed);
    c.oracle_budget = j.value("oracle_budget", c.oracle_budget);
    c.oracle_max_vertices = j.value("oracle_max_vertices", c.oracle_max_vertices);
    c.threads = j.value("threads", c.threads);
    if (j.contains("engine")) {
      const auto& e = j.at("engine");
      c.engine.oracle_threshold = e.value("oracle_threshold", c.engine.oracle_threshold);
      c.engine.fallback_budget = e.value("fallback_budget", c.engine.fallback_budget);
      c.engine.disabled_rules = e.value("disabled_rules", c.engine.disabled_rules);
    }
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("bad config value: ") + e.what());
  }
  static const std::set<std::string> generators = {"random_mindeg", "random_avgdeg", "subcube", "gprime", "full"};
  if (!generators.count(c.generator)) throw InvalidArgument("unknown generator '" + c.generator + "'");
  if (c.parity != "odd" && c.parity != "even" && c.parity != "any") throw InvalidArgument("parity is odd, even or any");
  if (c.samples < 0) throw InvalidArgument("samples must be non-negative");
  if (c.ds.empty()) throw InvalidArgument("need at least one d");
  build_host(c.host);  // validates the spec
  return c;
}

inline Json config_to_json(const ExperimentConfig& c) {
  Json j;
  j["name"] = c.name;
  j["host"] = host_to_json(c.host);
  j["generator"] = c.generator;
  j["size"] = c.size;
  j["d"] = c.ds;
  j["task"] = to_string(c.task);
  j["mode"] = to_string(c.mode);
  j["k"] = c.k;
  j["parity"] = c.parity;
  j["samples"] = c.samples;
  j["seed"] = c.seed;
  j["oracle_budget"] = c.oracle_budget;
  j["oracle_max_vertices"] = c.oracle_max_vertices;
  j["engine"] = {{"oracle_threshold", c.engine.oracle_threshold},
                 {"fallback_budget", c.engine.fallback_budget},
                 {"disabled_rules", c.engine.disabled_rules}};
  return j;
}

struct ExperimentRow {
  int index = 0;
  std::uint64_t seed = 0;
  int d = 0;
  int k = 1;
  std::string instance;
  std::size_t vertices = 0, edges = 0;
  int min_degree = 0;
  Rational avg_degree;
  std::string a, b;
  // ok | empty | precondition | gap | invalid | violation
  std::string status = "ok";
  std::string detail;
  std::int64_t length = -1;
  std::int64_t bound = -1;
  bool bound_met = false;
  bool fallback = false;
  std::vector<std::string> trace;
  std::int64_t oracle = -1;
  bool oracle_exact = false;
  std::uint64_t oracle_explored = 0;
  long oracle_leaves = -1;
  long adjacent_joints = -1;  // limb anatomies with two adjacent cutvertex joints
  int exit_shortfalls = -1;   // ab task on a 2-connected graph only
  Json graph;  // kept for the summary's minimising instances
};

struct ExperimentSummary {
  int rows = 0;
  int certified = 0;
  int bound_met = 0;
  int fallbacks = 0;
  int empty = 0;
  int precondition = 0;
  int failures = 0;    // gap or invalid certificate
  int violations = 0;  // exact oracle below 2^d - 1 on a hypercube host
  long adjacent_joints = 0;
  long exit_shortfalls = 0;
  std::optional<double> min_ratio_thm;
  std::optional<double> min_ratio_conj_torus;
  std::optional<double> min_ratio_conj_avg;
  int argmin_thm = -1, argmin_conj_torus = -1, argmin_conj_avg = -1;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<ExperimentRow> rows;
  ExperimentSummary summary;
  bool ok() const { return summary.failures == 0 && summary.violations == 0; }
};

namespace experiment_detail {

inline std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::string fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

inline std::string vertex_text(const HostGraph& h, VertexId v) {
  if (h.kind() == HostKind::kHypercube) return std::to_string(v);
  std::string s;
  for (auto c : h.coordinates(v)) s += (s.empty() ? "" : " ") + std::to_string(c);
  return s;
}

// Largest lower bound forms evaluated at the row's own minimum degree.
inline std::optional<double> ratio_thm(const ExperimentRow& r) {
  if (r.oracle < 0 || r.min_degree < 1 || r.min_degree > 62) return std::nullopt;
  return static_cast<double>(r.oracle) / static_cast<double>(pow2(r.min_degree) - 1);
}
inline std::optional<double> ratio_conj_torus(const ExperimentRow& r) {
  if (r.oracle < 0 || r.min_degree < 1) return std::nullopt;
  const double target = std::pow(3.0, r.min_degree / 2.0) - 1.0;
  if (target <= 0) return std::nullopt;
  return static_cast<double>(r.oracle) / target;
}
inline std::optional<double> ratio_conj_avg(const ExperimentRow& r) {
  const auto avg = r.avg_degree.floor();
  if (r.oracle < 0 || avg < 1 || avg > 62) return std::nullopt;
  return static_cast<double>(r.oracle) / static_cast<double>(pow2(static_cast<int>(avg)) - 1);
}

// a is the smallest vertex; b the farthest vertex from it (in the graph)
// with the requested parity of host distance, ties to the smaller id.
inline std::pair<int, int> pick_endpoints(const SubgraphView& g, const std::string& parity) {
  const auto dist = bfs_distances(g, 0);
  int best = -1;
  for (int v = 1; v < static_cast<int>(g.size()); ++v) {
    if (dist[v] < 0) continue;
    if (parity == "odd" && dist[v] % 2 == 0) continue;
    if (parity == "even" && dist[v] % 2 == 1) continue;
    if (best < 0 || dist[v] > dist[best]) best = v;
  }
  return {0, best};
}

struct Instance {
  SubgraphView g;
  int a = -1, b = -1;  // locals, ab task only
};

inline Instance make_instance(const ExperimentConfig& c, const HostPtr& host, int d, std::uint64_t seed) {
  Instance in;
  if (c.generator == "random_mindeg") {
    in.g = gen_random_mindeg(host, d, c.size, seed);
  } else if (c.generator == "random_avgdeg") {
    in.g = gen_random_avgdeg(host, d, c.size, seed);
  } else if (c.generator == "subcube") {
    if (host->kind() != HostKind::kHypercube) throw InvalidArgument("subcube generator needs a hypercube host");
    Rng rng(seed);
    const int n = host->axes();
    std::vector<int> axes(n);
    for (int i = 0; i < n; ++i) axes[i] = i;
    for (int i = 0; i < d; ++i) std::swap(axes[i], axes[i + static_cast<int>(rng.below(n - i))]);
    axes.resize(d);
    std::sort(axes.begin(), axes.end());
    const VertexId base = n == 64 ? rng.bits() : rng.bits() & ((VertexId{1} << n) - 1);
    in.g = gen_subcube(n, d, base, axes);
  } else if (c.generator == "gprime") {
    auto gp = gen_gprime(d);
    in.g = gp.graph;
    in.a = in.g.index_of(gp.x);
    in.b = in.g.index_of(gp.y);
  } else {
    in.g = SubgraphView::induced(host, host->all_vertices());
  }
  if (c.task == Task::kAb && in.a < 0 && !in.g.empty()) {
    std::tie(in.a, in.b) = pick_endpoints(in.g, c.parity);
  }
  return in;
}

inline void run_oracle(const ExperimentConfig& c, const Instance& in, const SubgraphView& g, ExperimentRow& r) {
  if (static_cast<int>(g.size()) > c.oracle_max_vertices || g.empty()) return;
  OracleResult o;
  switch (c.task) {
    case Task::kAb:
      if (in.a < 0 || in.b < 0) return;
      o = longest_path_between(g, g.id(in.a), g.id(in.b), c.oracle_budget);
      break;
    case Task::kCycle:
      o = longest_cycle(g, c.oracle_budget);
      break;
    case Task::kPath:
    case Task::kPeel:
      o = longest_path(g, c.oracle_budget);
      break;
  }
  r.oracle = o.length;
  r.oracle_exact = o.exact;
  r.oracle_explored = o.explored;
}

inline ExperimentRow run_one(const ExperimentConfig& c, const HostPtr& host, int index, int d, std::uint64_t seed) {
  ExperimentRow r;
  r.index = index;
  r.seed = seed;
  r.d = d;
  r.k = c.k >= 0 ? c.k : host->split_loss_k();
  Instance in;
  try {
    in = make_instance(c, host, d, seed);
  } catch (const Error& e) {
    r.status = "precondition";
    r.detail = e.what();
    return r;
  }
  const SubgraphView& g = in.g;
  r.instance = hex64(instance_hash(g));
  r.vertices = g.size();
  r.edges = g.edge_count();
  const auto stats = degree_stats(g);
  r.min_degree = g.empty() ? 0 : stats.min_degree;
  r.avg_degree = stats.average;
  r.graph = graph_to_json(g);
  if (in.a >= 0) r.a = vertex_text(g.host(), g.id(in.a));
  if (in.b >= 0) r.b = vertex_text(g.host(), g.id(in.b));
  if (g.empty()) {
    r.status = "empty";
    return r;
  }
  run_oracle(c, in, g, r);
  EngineStats est;
  try {
    switch (c.task) {
      case Task::kPath: {
        const auto cert = find_long_path_min_degree(g, d, c.engine, &est);
        r.length = cert.length();
        r.bound = cert.claimed_bound;
        r.fallback = cert.fallback_used;
        r.trace = cert.trace;
        r.bound_met = validate_certificate(g, cert).ok();
        break;
      }
      case Task::kPeel: {
        const int half = (d + 1) / 2;
        const auto core = dcore_peel(g, Rational(d, 2));
        if (core.empty()) throw PreconditionError("peel at d/2 left nothing");
        const auto cert = find_long_path_min_degree(core, half, c.engine, &est);
        r.length = cert.length();
        r.bound = cert.claimed_bound;
        r.fallback = cert.fallback_used;
        r.trace = cert.trace;
        r.bound_met = validate_certificate(core, cert).ok();
        break;
      }
      case Task::kCycle: {
        const auto cert = find_long_cycle(g, d, c.engine, &est);
        r.length = cert.length();
        r.bound = cert.claimed_bound;
        r.fallback = cert.fallback_used;
        r.trace = cert.trace;
        r.bound_met = validate_certificate(g, cert).ok();
        break;
      }
      case Task::kAb: {
        if (in.b < 0) throw PreconditionError("no endpoint with the requested parity");
        const auto cert = c.mode == Mode::kGeneral
                              ? find_long_path_general(g, g.id(in.a), g.id(in.b), d, r.k, c.engine, &est)
                              : find_ab_path(g, g.id(in.a), g.id(in.b), d, c.mode, c.engine, &est);
        r.exit_shortfalls = exit_shortfalls(g, split(g, g.id(in.a), g.id(in.b)));
        r.length = cert.length();
        r.bound = cert.claimed_bound;
        r.fallback = cert.fallback_used;
        r.trace = cert.trace;
        r.bound_met = validate_certificate(g, cert).ok();
        break;
      }
    }
    if (!r.bound_met) r.status = "invalid";
    r.oracle_leaves = est.oracle_leaves;
    r.adjacent_joints = est.adjacent_joints;
  } catch (const PreconditionError& e) {
    r.status = "precondition";
    r.detail = e.what();
  } catch (const ConstructionGap& e) {
    r.status = "gap";
    r.detail = e.what();
  }
  if (r.oracle_exact && host->kind() == HostKind::kHypercube && c.task != Task::kAb && c.task != Task::kCycle &&
      r.min_degree >= 1 && r.oracle < pow2(r.min_degree) - 1) {
    r.status = "violation";
    r.detail = "exact longest path below 2^d - 1";
  }
  return r;
}

}  // namespace experiment_detail

// Instances run on a worker pool; rows come back in instance order.
inline ExperimentResult run_experiment(const ExperimentConfig& c) {
  ExperimentResult out;
  out.config = c;
  const auto host = build_host(c.host);
  struct Job {
    int d;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (int d : c.ds) {
    for (int s = 0; s < c.samples; ++s) {
      jobs.push_back({d, experiment_detail::splitmix(c.seed * 0x100000001b3ULL + jobs.size())});
    }
  }
  out.rows.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      out.rows[i] = experiment_detail::run_one(c, host, static_cast<int>(i), jobs[i].d, jobs[i].seed);
    }
  };
  const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  const std::size_t n_threads =
      std::min<std::size_t>(jobs.size(), c.threads > 0 ? static_cast<std::size_t>(c.threads) : hw);
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
  }

  auto& s = out.summary;
  auto track = [](std::optional<double>& best, int& arg, std::optional<double> x, int i) {
    if (x && (!best || *x < *best)) {
      best = x;
      arg = i;
    }
  };
  for (const auto& r : out.rows) {
    ++s.rows;
    if (r.status == "empty") ++s.empty;
    if (r.status == "precondition") ++s.precondition;
    if (r.status == "gap" || r.status == "invalid") ++s.failures;
    if (r.status == "violation") ++s.violations;
    if (r.length >= 0) ++s.certified;
    if (r.bound_met) ++s.bound_met;
    if (r.fallback) ++s.fallbacks;
    s.adjacent_joints += std::max(0L, r.adjacent_joints);
    s.exit_shortfalls += std::max(0, r.exit_shortfalls);
    if (r.oracle_exact) {
      track(s.min_ratio_thm, s.argmin_thm, experiment_detail::ratio_thm(r), r.index);
      track(s.min_ratio_conj_torus, s.argmin_conj_torus, experiment_detail::ratio_conj_torus(r), r.index);
      track(s.min_ratio_conj_avg, s.argmin_conj_avg, experiment_detail::ratio_conj_avg(r), r.index);
    }
  }
  return out;
}

inline const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols = {
      "schema",       "index",      "seed",           "host",           "generator",     "task",
      "mode",         "d",          "k",              "instance",       "vertices",      "edges",
      "min_degree",   "avg_degree", "a",              "b",              "status",        "length",
      "bound",        "bound_met",  "fallback_used",  "trace",          "oracle_length", "oracle_exact",
      "oracle_explored", "bound_tight", "bound_weak", "bound_general", "ratio_thm", "ratio_conj_torus",
      "ratio_conj_avg", "oracle_leaves", "adjacent_joints", "exit_shortfalls"};
  return cols;
}

inline void write_csv(std::ostream& os, const ExperimentResult& res) {
  using experiment_detail::fixed;
  const auto& c = res.config;
  const std::string host = build_host(c.host)->describe();
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  };
  auto opt = [&](std::optional<double> x) { return x ? fixed(*x) : std::string(); };
  const auto& cols = csv_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << "\n";
  for (const auto& r : res.rows) {
    std::string trace;
    for (const auto& t : r.trace) trace += (trace.empty() ? "" : ";") + t;
    const bool sized = r.vertices > 0;
    std::vector<std::string> f = {
        std::to_string(kCsvSchemaVersion),
        std::to_string(r.index),
        std::to_string(r.seed),
        quote(host),
        c.generator,
        to_string(c.task),
        to_string(c.mode),
        std::to_string(r.d),
        std::to_string(r.k),
        r.instance,
        std::to_string(r.vertices),
        std::to_string(r.edges),
        std::to_string(r.min_degree),
        fixed(static_cast<double>(r.avg_degree.num) / static_cast<double>(r.avg_degree.den)),
        quote(r.a),
        quote(r.b),
        r.status,
        std::to_string(r.length),
        std::to_string(r.bound),
        r.bound_met ? "true" : "false",
        r.fallback ? "true" : "false",
        quote(trace),
        std::to_string(r.oracle),
        r.oracle_exact ? "true" : "false",
        std::to_string(r.oracle_explored),
        sized ? std::to_string(tight_bound(r.d, false)) : "",
        sized ? std::to_string(weak_bound(r.d)) : "",
        sized ? std::to_string(general_bound(r.d, r.k)) : "",
        r.oracle_exact ? opt(experiment_detail::ratio_thm(r)) : "",
        r.oracle_exact ? opt(experiment_detail::ratio_conj_torus(r)) : "",
        r.oracle_exact ? opt(experiment_detail::ratio_conj_avg(r)) : "",
        r.oracle_leaves >= 0 ? std::to_string(r.oracle_leaves) : "",
        r.adjacent_joints >= 0 ? std::to_string(r.adjacent_joints) : "",
        r.exit_shortfalls >= 0 ? std::to_string(r.exit_shortfalls) : "",
    };
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
    os << "\n";
  }
  // Aggregate row: counts in the size and diagnostic columns, minimum ratios
  // in the ratio columns.
  const auto& s = res.summary;
  std::vector<std::string> f(cols.size());
  f[0] = std::to_string(kCsvSchemaVersion);
  f[1] = "summary";
  f[2] = std::to_string(c.seed);
  f[3] = quote(host);
  f[4] = c.generator;
  f[5] = to_string(c.task);
  f[6] = to_string(c.mode);
  f[10] = std::to_string(s.rows);
  f[16] = res.ok() ? "ok" : "failed";
  f[17] = std::to_string(s.certified);
  f[19] = std::to_string(s.bound_met);
  f[20] = std::to_string(s.fallbacks);
  f[28] = opt(s.min_ratio_thm);
  f[29] = opt(s.min_ratio_conj_torus);
  f[30] = opt(s.min_ratio_conj_avg);
  f[32] = std::to_string(s.adjacent_joints);
  f[33] = std::to_string(s.exit_shortfalls);
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
  os << "\n";
}

inline Json result_to_json(const ExperimentResult& res) {
  Json j;
  j["schema"] = kCsvSchemaVersion;
  j["config"] = config_to_json(res.config);
  Json rows = Json::array();
  for (const auto& r : res.rows) {
    Json x;
    x["index"] = r.index;
    x["seed"] = r.seed;
    x["d"] = r.d;
    x["k"] = r.k;
    x["instance"] = r.instance;
    x["vertices"] = r.vertices;
    x["edges"] = r.edges;
    x["min_degree"] = r.min_degree;
    x["avg_degree"] = r.avg_degree.to_string();
    x["a"] = r.a;
    x["b"] = r.b;
    x["status"] = r.status;
    if (!r.detail.empty()) x["detail"] = r.detail;
    x["length"] = r.length;
    x["bound"] = r.bound;
    x["bound_met"] = r.bound_met;
    x["fallback_used"] = r.fallback;
    x["trace"] = r.trace;
    x["oracle_length"] = r.oracle;
    x["oracle_exact"] = r.oracle_exact;
    x["oracle_explored"] = r.oracle_explored;
    x["oracle_leaves"] = r.oracle_leaves;
    x["adjacent_joints"] = r.adjacent_joints;
    x["exit_shortfalls"] = r.exit_shortfalls;
    rows.push_back(std::move(x));
  }
  j["rows"] = std::move(rows);
  const auto& s = res.summary;
  Json sum;
  sum["rows"] = s.rows;
  sum["certified"] = s.certified;
  sum["bound_met"] = s.bound_met;
  sum["fallbacks"] = s.fallbacks;
  sum["empty"] = s.empty;
  sum["precondition"] = s.precondition;
  sum["failures"] = s.failures;
  sum["violations"] = s.violations;
  sum["adjacent_joints"] = s.adjacent_joints;
  sum["exit_shortfalls"] = s.exit_shortfalls;
  auto minimum = [&](std::optional<double> x, int arg) {
    if (!x) return Json(nullptr);
    return Json{{"ratio", experiment_detail::fixed(*x)}, {"index", arg}, {"graph", res.rows[arg].graph}};
  };
  sum["min_ratio_thm"] = minimum(s.min_ratio_thm, s.argmin_thm);
  sum["min_ratio_conj_torus"] = minimum(s.min_ratio_conj_torus, s.argmin_conj_torus);
  sum["min_ratio_conj_avg"] = minimum(s.min_ratio_conj_avg, s.argmin_conj_avg);
  j["summary"] = std::move(sum);
  return j;
}

}  // namespace hcpath
