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
#include <optional>
#include <string>
#include <vector>

#include "hcpath/engine.hpp"

namespace hcpath {

namespace detail {

inline std::vector<std::string> render_trace(const std::vector<std::pair<int, std::string>>& trace) {
  std::vector<std::string> out;
  out.reserve(trace.size());
  for (const auto& [depth, rule] : trace) out.push_back(std::to_string(depth) + ":" + rule);
  return out;
}

inline void check_ab_preconditions(const SubgraphView& g, int la, int lb, int d) {
  if (la < 0 || lb < 0) throw PreconditionError("endpoints must belong to the graph");
  if (la == lb) throw PreconditionError("endpoints must differ");
  if (d < 0) throw PreconditionError("d must be non-negative");
  if (g.size() == 2) {
    if (d > 1) throw PreconditionError("a single edge only supports d <= 1");
    return;
  }
  if (!is_two_connected(g)) throw PreconditionError("graph is not 2-connected");
  if (min_degree_excluding(g, {la, lb}) < d) {
    throw PreconditionError("some vertex other than a, b has degree below d");
  }
}

inline PathCertificate run_engine(const SubgraphView& g, int la, int lb, int d, Mode mode, int k,
                                  const EngineOptions& opt, EngineStats* stats) {
  Engine engine(mode, k, opt);
  auto built = engine.solve(g, la, lb, d);
  if (stats) *stats = engine.stats();
  if (!built) throw PreconditionError("instance does not satisfy the construction hypotheses");
  PathCertificate c;
  for (int v : built->path) c.path.push_back(g.id(v));
  c.mode = mode;
  c.d = d;
  c.k = k;
  c.claimed_bound = engine.target(g, la, lb, d);
  c.trace = render_trace(built->trace);
  c.fallback_used = built->fallback;
  c.diagnostics = engine.stats().diagnostics;
  if (c.length() < c.claimed_bound) {
    throw ConstructionGap("best path found has length " + std::to_string(c.length()) + ", bound is " +
                          std::to_string(c.claimed_bound));
  }
  return c;
}

}  // namespace detail

// A long a-b path in a 2-connected G whose vertices other than a, b have
// degree at least d. Weak and tight modes need a host that loses at most one
// neighbour per split.
inline PathCertificate find_ab_path(const SubgraphView& g, VertexId a, VertexId b, int d, Mode mode,
                                    const EngineOptions& opt = {}, EngineStats* stats = nullptr) {
  const int la = g.index_of(a), lb = g.index_of(b);
  detail::check_ab_preconditions(g, la, lb, d);
  int k = g.host().split_loss_k();
  if (mode != Mode::kGeneral && k != 1) {
    throw PreconditionError("weak and tight modes need a host with split loss 1");
  }
  return detail::run_engine(g, la, lb, d, mode, mode == Mode::kGeneral ? k : 1, opt, stats);
}

// The same construction held to the bound 2^(d/(k+2)). k must be at least the
// host's split loss.
inline PathCertificate find_long_path_general(const SubgraphView& g, VertexId a, VertexId b, int d, int k,
                                              const EngineOptions& opt = {}, EngineStats* stats = nullptr) {
  const int la = g.index_of(a), lb = g.index_of(b);
  detail::check_ab_preconditions(g, la, lb, d);
  if (k < g.host().split_loss_k()) {
    throw PreconditionError("k is below the host's split loss " + std::to_string(g.host().split_loss_k()));
  }
  return detail::run_engine(g, la, lb, d, Mode::kGeneral, k, opt, stats);
}

namespace detail {

// An endblock of minimum degree graph g with its cutvertex (or any vertex
// when the component is 2-connected) and a neighbour of that vertex inside
// the endblock. The smallest such endblock is taken.
struct EndblockPair {
  std::vector<int> members;
  int c = -1;
  int v = -1;
};

inline EndblockPair pick_endblock(const SubgraphView& g) {
  const BlockForest f = block_cut_tree(g);
  EndblockPair best;
  for (int e : f.endblocks) {
    const auto& members = f.blocks[e];
    if (members.size() < 2) continue;
    if (!best.members.empty() && members.size() >= best.members.size()) continue;
    const int c = f.cut_of[e] >= 0 ? f.cut_of[e] : members.front();
    int v = -1;
    for (int w : g.neighbors(c)) {
      if (std::binary_search(members.begin(), members.end(), w)) {
        v = w;
        break;
      }
    }
    if (v < 0) continue;
    best = {members, c, v};
  }
  return best;
}

}  // namespace detail

// A path of length at least 2^d - 1 in a graph of minimum degree d: inside an
// endblock, from its cutvertex to one of its neighbours.
inline PathCertificate find_long_path_min_degree(const SubgraphView& g, int d, const EngineOptions& opt = {},
                                                 EngineStats* stats = nullptr) {
  if (g.empty()) throw PreconditionError("graph is empty");
  if (d < 0) throw PreconditionError("d must be non-negative");
  if (degree_stats(g).min_degree < d) throw PreconditionError("minimum degree is below d");
  if (g.host().split_loss_k() != 1) throw PreconditionError("the 2^d - 1 bound needs a host with split loss 1");
  PathCertificate c;
  c.mode = Mode::kTight;
  c.d = d;
  c.free_endpoints = true;
  c.claimed_bound = tight_bound(d, false);
  if (d == 0 || g.edge_count() == 0) {
    c.path = {g.id(0)};
    c.trace = {"0:VERTEX"};
    return c;
  }
  const auto eb = detail::pick_endblock(g);
  if (eb.c < 0) throw PreconditionError("no endblock with an edge");
  const SubgraphView E = g.induced_on(eb.members);
  const int lc = static_cast<int>(std::lower_bound(eb.members.begin(), eb.members.end(), eb.c) - eb.members.begin());
  const int lv = static_cast<int>(std::lower_bound(eb.members.begin(), eb.members.end(), eb.v) - eb.members.begin());
  PathCertificate inner = detail::run_engine(E, lc, lv, d, Mode::kTight, 1, opt, stats);
  c.path = inner.path;
  c.trace = {"0:ENDBLOCK"};
  for (const auto& t : inner.trace) {
    const auto colon = t.find(':');
    c.trace.push_back(std::to_string(std::stoi(t.substr(0, colon)) + 1) + t.substr(colon));
  }
  c.fallback_used = inner.fallback_used;
  c.diagnostics = inner.diagnostics;
  return c;
}

// A cycle of length at least 2^d in a graph of minimum degree d >= 2: a long
// path from the cutvertex of an endblock to one of its neighbours, closed by
// that edge.
inline CycleCertificate find_long_cycle(const SubgraphView& g, int d, const EngineOptions& opt = {},
                                        EngineStats* stats = nullptr) {
  if (d < 2) throw PreconditionError("long cycles need d >= 2");
  PathCertificate p = find_long_path_min_degree(g, d, opt, stats);
  CycleCertificate c;
  c.cycle = p.path;
  c.d = d;
  c.claimed_bound = pow2(d);
  c.trace = p.trace;
  c.trace.front() = "0:ENDBLOCK-CYCLE";
  c.fallback_used = p.fallback_used;
  return c;
}

}  // namespace hcpath
