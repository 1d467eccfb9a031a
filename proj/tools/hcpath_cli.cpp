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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hcpath/hcpath.hpp"

namespace {

using namespace hcpath;

constexpr int kOk = 0;
constexpr int kCertificateFailure = 2;
constexpr int kInputError = 3;

struct Source {
  std::string graph;
  std::string host;
};

void add_source(CLI::App* cmd, Source& src) {
  cmd->add_option("--graph", src.graph, "graph JSON file");
  cmd->add_option("--host", src.host, "use the whole host, e.g. Q5, C3^2, torus:4x5, grid:3x3");
}

SubgraphView load(const Source& src) {
  if (!src.graph.empty() && !src.host.empty()) throw InvalidArgument("give --graph or --host, not both");
  if (!src.graph.empty()) return graph_from_json(read_json_file(src.graph));
  if (!src.host.empty()) {
    auto host = build_host(parse_host(src.host));
    return SubgraphView::induced(host, host->all_vertices());
  }
  throw InvalidArgument("need --graph or --host");
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write '" + out + "'");
  f << text;
  if (!f) throw InvalidArgument("write to '" + out + "' failed");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

EngineOptions engine_options(int threshold, std::uint64_t budget) {
  EngineOptions opt;
  opt.oracle_threshold = threshold;
  opt.fallback_budget = budget;
  return opt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Long paths and cycles in subgraphs of hypercubes and product graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out;
  app.add_option("-o,--out", out, "output file (default stdout)");

  // gen
  auto* gen = app.add_subcommand("gen", "emit a generated graph as JSON");
  std::string gen_kind = "random";
  std::string gen_host = "Q6";
  int gen_d = 3;
  std::size_t gen_size = 20;
  std::uint64_t gen_seed = 1;
  std::uint64_t gen_base = 0;
  std::vector<int> gen_axes;
  gen->add_option("--kind", gen_kind, "subcube | gprime | random | avgdeg | full")
      ->check(CLI::IsMember({"subcube", "gprime", "random", "avgdeg", "full"}));
  gen->add_option("--host", gen_host, "host");
  gen->add_option("--d", gen_d, "dimension or degree");
  gen->add_option("--size", gen_size, "target size for random kinds");
  gen->add_option("--seed", gen_seed, "seed");
  gen->add_option("--base", gen_base, "subcube base vertex");
  gen->add_option("--axes", gen_axes, "subcube axes (default 0..d-1)");

  // decompose
  auto* dec = app.add_subcommand("decompose", "block-cutvertex tree as DOT");
  Source dec_src;
  add_source(dec, dec_src);

  // longpath
  auto* lp = app.add_subcommand("longpath", "long path certificate");
  Source lp_src;
  std::optional<std::string> lp_a, lp_b;
  std::optional<int> lp_d;
  std::string lp_mode = "tight";
  std::optional<int> lp_k;
  int lp_threshold = EngineOptions{}.oracle_threshold;
  std::uint64_t lp_budget = EngineOptions{}.fallback_budget;
  add_source(lp, lp_src);
  lp->add_option("--a", lp_a, "endpoint a (integer, or comma separated coordinates)");
  lp->add_option("--b", lp_b, "endpoint b");
  lp->add_option("--d", lp_d, "degree parameter (default: what the graph offers)");
  lp->add_option("--mode", lp_mode, "weak | tight | general")->check(CLI::IsMember({"weak", "tight", "general"}));
  lp->add_option("--k", lp_k, "split loss for general mode (default: host value)");
  lp->add_option("--oracle-threshold", lp_threshold, "exact search below this many vertices");
  lp->add_option("--fallback-budget", lp_budget, "search budget when no rule applies");

  // longcycle
  auto* lc = app.add_subcommand("longcycle", "long cycle certificate");
  Source lc_src;
  std::optional<int> lc_d;
  add_source(lc, lc_src);
  lc->add_option("--d", lc_d, "minimum degree (default: the graph's)");

  // oracle
  auto* orc = app.add_subcommand("oracle", "exact longest path or cycle");
  Source orc_src;
  std::optional<std::string> orc_a, orc_b;
  bool orc_cycle = false;
  std::uint64_t orc_budget = kDefaultBudget;
  add_source(orc, orc_src);
  orc->add_option("--a", orc_a, "endpoint a");
  orc->add_option("--b", orc_b, "endpoint b");
  orc->add_flag("--cycle", orc_cycle, "longest cycle instead of path");
  orc->add_option("--budget", orc_budget, "explored-node budget");

  // peel
  auto* pl = app.add_subcommand("peel", "delete vertices of degree below a threshold");
  Source pl_src;
  std::string pl_threshold;
  add_source(pl, pl_src);
  pl->add_option("--threshold", pl_threshold, "threshold, e.g. 3, 5/2 or 2.5")->required();

  // experiment
  auto* ex = app.add_subcommand("experiment", "run an experiment config; writes CSV and JSON");
  std::string ex_config;
  std::optional<std::uint64_t> ex_seed;
  std::optional<int> ex_threads;
  std::string ex_out;
  ex->add_option("--config", ex_config, "config JSON")->required();
  ex->add_option("--seed", ex_seed, "override the config seed");
  ex->add_option("--threads", ex_threads, "worker threads (output does not depend on it)");
  ex->add_option("--out", ex_out, "output prefix: writes PREFIX.csv and PREFIX.json (default: CSV on stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*gen) {
      auto host = build_host(parse_host(gen_host));
      Json j;
      if (gen_kind == "subcube") {
        if (host->kind() != HostKind::kHypercube) throw InvalidArgument("subcube needs a hypercube host");
        if (gen_axes.empty()) {
          for (int i = 0; i < gen_d; ++i) gen_axes.push_back(i);
        }
        j = graph_to_json(gen_subcube(host->axes(), gen_d, gen_base, gen_axes));
      } else if (gen_kind == "gprime") {
        const auto gp = gen_gprime(gen_d);
        j = graph_to_json(gp.graph);
        j["x"] = gp.x;
        j["y"] = gp.y;
      } else if (gen_kind == "random") {
        j = graph_to_json(gen_random_mindeg(host, gen_d, gen_size, gen_seed));
      } else if (gen_kind == "avgdeg") {
        j = graph_to_json(gen_random_avgdeg(host, gen_d, gen_size, gen_seed));
      } else {
        j = graph_to_json(SubgraphView::induced(host, host->all_vertices()));
      }
      emit(out, dump(j));
      return kOk;
    }

    if (*dec) {
      const auto g = load(dec_src);
      emit(out, to_dot(g, block_cut_tree(g)));
      return kOk;
    }

    if (*lp) {
      const auto g = load(lp_src);
      const Mode mode = parse_mode(lp_mode);
      const auto opt = engine_options(lp_threshold, lp_budget);
      if (lp_a.has_value() != lp_b.has_value()) throw InvalidArgument("give both --a and --b, or neither");
      PathCertificate cert;
      try {
        if (lp_a) {
          const VertexId a = parse_vertex(g.host(), *lp_a);
          const VertexId b = parse_vertex(g.host(), *lp_b);
          if (!g.contains(a) || !g.contains(b)) throw InvalidArgument("endpoints must be graph vertices");
          const int la = g.index_of(a), lb = g.index_of(b);
          const int d = lp_d ? *lp_d : min_degree_excluding(g, {la, lb});
          cert = mode == Mode::kGeneral ? find_long_path_general(g, a, b, d, lp_k ? *lp_k : g.host().split_loss_k(), opt)
                                        : find_ab_path(g, a, b, d, mode, opt);
        } else {
          if (mode != Mode::kTight) throw InvalidArgument("paths without endpoints use tight mode");
          const int d = lp_d ? *lp_d : degree_stats(g).min_degree;
          cert = find_long_path_min_degree(g, d, opt);
        }
      } catch (const ConstructionGap& e) {
        std::cerr << "construction gap: " << e.what() << "\n";
        return kCertificateFailure;
      }
      emit(out, dump(certificate_to_json(g.host(), cert)));
      const auto report = validate_certificate(g, cert);
      if (!report.ok()) {
        std::cerr << "certificate failed validation\n";
        return kCertificateFailure;
      }
      return kOk;
    }

    if (*lc) {
      const auto g = load(lc_src);
      const int d = lc_d ? *lc_d : degree_stats(g).min_degree;
      CycleCertificate cert;
      try {
        cert = find_long_cycle(g, d);
      } catch (const ConstructionGap& e) {
        std::cerr << "construction gap: " << e.what() << "\n";
        return kCertificateFailure;
      }
      emit(out, dump(certificate_to_json(g.host(), cert)));
      if (!validate_certificate(g, cert).ok()) {
        std::cerr << "certificate failed validation\n";
        return kCertificateFailure;
      }
      return kOk;
    }

    if (*orc) {
      const auto g = load(orc_src);
      if (orc_a.has_value() != orc_b.has_value()) throw InvalidArgument("give both --a and --b, or neither");
      OracleResult r;
      if (orc_cycle) {
        if (orc_a) throw InvalidArgument("--cycle takes no endpoints");
        r = longest_cycle(g, orc_budget);
      } else if (orc_a) {
        r = longest_path_between(g, parse_vertex(g.host(), *orc_a), parse_vertex(g.host(), *orc_b), orc_budget);
      } else {
        r = longest_path(g, orc_budget);
      }
      emit(out, dump(oracle_to_json(g.host(), r)));
      return kOk;
    }

    if (*pl) {
      const auto g = load(pl_src);
      emit(out, dump(graph_to_json(dcore_peel(g, Rational::parse(pl_threshold)))));
      return kOk;
    }

    if (*ex) {
      auto config = config_from_json(read_json_file(ex_config));
      if (ex_seed) config.seed = *ex_seed;
      if (ex_threads) config.threads = *ex_threads;
      const auto result = run_experiment(config);
      std::ostringstream csv;
      write_csv(csv, result);
      if (ex_out.empty()) {
        emit(out, csv.str());
      } else {
        emit(ex_out + ".csv", csv.str());
        emit(ex_out + ".json", dump(result_to_json(result)));
      }
      const auto& s = result.summary;
      std::cerr << s.rows << " rows, " << s.bound_met << " bounds met, " << s.fallbacks << " fallbacks, "
                << s.failures << " failures, " << s.violations << " violations\n";
      return result.ok() ? kOk : kCertificateFailure;
    }
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kInputError;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
