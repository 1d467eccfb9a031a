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

// Seeded randomized structural invariant suites. Each suite counts
// violations instead of stopping at the first, so both the unit tests and
// the acceptance gate can report them.

#pragma once

#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"

namespace hcpath::testing {

struct SuiteResult {
  std::string name;
  int cases = 0;
  long checked = 0;      // suite-specific count of objects inspected
  int violations = 0;
  std::string first;     // description of the first violation

  void fail(int c, const std::string& what) {
    if (violations++ == 0) first = "case " + std::to_string(c) + ": " + what;
  }
};

namespace suites {

inline HostPtr cube(int n) {
  static const std::vector<HostPtr> cache = [] {
    std::vector<HostPtr> c(1);
    for (int i = 1; i <= 6; ++i) c.push_back(build_host(HostSpec::hypercube(i)));
    return c;
  }();
  return cache[n];
}

// Connected subgraph of Q_2..Q_6 with at least `min_size` vertices.
inline SubgraphView connected_case(Rng& rng, std::size_t min_size) {
  for (;;) {
    const int n = 2 + static_cast<int>(rng.below(5));
    const double p = 0.3 + 0.6 * rng.unit();
    auto g = largest_component(random_induced(cube(n), p, rng.bits()));
    if (g.size() >= min_size) return g;
  }
}

// 2-connected subgraph of Q_4..Q_6 on at least four vertices.
inline SubgraphView block_case(Rng& rng, double lo, double hi) {
  for (;;) {
    const int n = 4 + static_cast<int>(rng.below(3));
    const double p = lo + (hi - lo) * rng.unit();
    auto g = random_induced(cube(n), p, rng.bits());
    if (g.size() < 4) continue;
    g = largest_block(g);
    if (g.size() >= 4) return g;
  }
}

inline std::pair<int, int> endpoints(Rng& rng, const SubgraphView& g) {
  const int n = static_cast<int>(g.size());
  const int a = static_cast<int>(rng.below(n));
  int b = static_cast<int>(rng.below(n - 1));
  if (b >= a) ++b;
  return {a, b};
}

inline bool connected_without_edge(const SubgraphView& g, int u, int v) {
  std::vector<char> seen(g.size(), 0);
  std::vector<int> stack = {u};
  seen[u] = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(x)) {
      if ((x == u && w == v) || (x == v && w == u) || seen[w]) continue;
      seen[w] = 1;
      stack.push_back(w);
    }
  }
  return seen[v];
}

// Weak interaction digraphs of every split of g between a and b; splits
// whose exits cannot be chosen are skipped.
template <typename F>
void for_each_digraph(const SubgraphView& g, int a, int b, F&& f) {
  for (const auto& s : split_candidates(g, g.id(a), g.id(b))) {
    const auto st = make_split_state(g, s, a, b, a, b);
    InteractionDigraph H;
    try {
      H = build_interaction_digraph(st, HVariant::kWeak);
    } catch (const ConstructionGap&) {
      continue;
    }
    f(st, H);
  }
}

}  // namespace suites

// Blocks partition the edges, bridges are exactly the two-vertex blocks, and
// cutvertices are exactly the articulation points found by deletion.
inline SuiteResult block_partition_suite(int cases, std::uint64_t seed = 101) {
  SuiteResult r{"block edge partition", cases};
  Rng rng(seed);
  for (int c = 0; c < cases; ++c) {
    const auto g = suites::connected_case(rng, 2);
    const auto f = block_cut_tree(g);
    std::size_t total = 0;
    for (auto e : f.block_edges) total += e;
    if (total != g.edge_count()) r.fail(c, "block edge counts do not sum to |E|");
    for (auto [u, v] : g.edges()) {
      ++r.checked;
      int holders = 0, holder = -1;
      for (int b = 0; b < static_cast<int>(f.blocks.size()); ++b) {
        if (f.in_block(b, u) && f.in_block(b, v)) {
          ++holders;
          holder = b;
        }
      }
      if (holders != 1) {
        r.fail(c, "edge in " + std::to_string(holders) + " blocks");
        continue;
      }
      if (!suites::connected_without_edge(g, u, v) != (f.blocks[holder].size() == 2)) {
        r.fail(c, "bridge status disagrees with block size");
      }
    }
    for (int x = 0; x < static_cast<int>(g.size()); ++x) {
      const auto seen = reach(g, x == 0 ? 1 : 0, x);
      const bool articulation = std::count(seen.begin(), seen.end(), 1) != static_cast<long>(g.size()) - 1;
      if (articulation != static_cast<bool>(f.is_cut[x])) r.fail(c, "cutvertex flag disagrees with deletion");
    }
  }
  return r;
}

// Every split candidate keeps a and b apart, has connected sides and loses
// at most the host's k at any vertex. Half the cases use tori.
inline SuiteResult split_loss_suite(int cases, std::uint64_t seed = 202) {
  SuiteResult r{"split degree loss", cases};
  Rng rng(seed);
  const std::vector<HostPtr> tori = {build_host(HostSpec::torus(2, 3)), build_host(HostSpec::torus(3, 3)),
                                     build_host(HostSpec::torus(2, 4)), build_host(HostSpec::torus({3, 5}))};
  for (int c = 0; c < cases; ++c) {
    SubgraphView g;
    if (c % 2 == 0) {
      g = suites::connected_case(rng, 2);
    } else {
      const auto& h = tori[rng.below(tori.size())];
      do {
        g = largest_component(random_induced(h, 0.4 + 0.5 * rng.unit(), rng.bits()));
      } while (g.size() < 2);
    }
    const int k = g.host().split_loss_k();
    const auto [a, b] = suites::endpoints(rng, g);
    for (const auto& s : split_candidates(g, g.id(a), g.id(b))) {
      ++r.checked;
      if (s.max_loss() > k) r.fail(c, "loss " + std::to_string(s.max_loss()) + " above k");
      if (!s.in_a[a] || s.in_a[b]) r.fail(c, "endpoints not separated");
      if (s.side_a.size() + s.side_b.size() != g.size()) r.fail(c, "sides do not partition");
      if (!is_connected(s.side_a) || !is_connected(s.side_b)) r.fail(c, "disconnected side");
    }
  }
  return r;
}

// S is inside span(S), S within T gives span(S) within span(T), and span is
// unchanged when its own output is added to S.
inline SuiteResult span_suite(int cases, std::uint64_t seed = 303) {
  SuiteResult r{"span monotone and idempotent", cases};
  Rng rng(seed);
  for (int c = 0; c < cases; ++c) {
    const auto g = suites::connected_case(rng, 1);
    const int n = static_cast<int>(g.size());
    std::vector<int> S, T;
    for (int v = 0; v < n; ++v) {
      if (rng.chance(0.15)) S.push_back(v);
    }
    if (S.empty()) S.push_back(static_cast<int>(rng.below(n)));
    for (int v = 0; v < n; ++v) {
      if (std::binary_search(S.begin(), S.end(), v) || rng.chance(0.1)) T.push_back(v);
    }
    const auto f = block_cut_tree(g);
    const auto sS = span(g, f, S);
    const auto sT = span(g, f, T);
    ++r.checked;
    if (!std::includes(sS.begin(), sS.end(), S.begin(), S.end())) r.fail(c, "S not inside span(S)");
    if (!std::includes(sT.begin(), sT.end(), sS.begin(), sS.end())) r.fail(c, "not monotone");
    std::vector<int> again = sS;
    again.insert(again.end(), S.begin(), S.end());
    std::sort(again.begin(), again.end());
    again.erase(std::unique(again.begin(), again.end()), again.end());
    if (span(g, f, again) != sS) r.fail(c, "not idempotent");
  }
  return r;
}

// On hypercube hosts every exit vertex has exactly one partner, on the other
// side and adjacent, and distinct exits of a side have distinct partners.
inline SuiteResult exit_partner_suite(int cases, std::uint64_t seed = 505) {
  SuiteResult r{"exit-partner uniqueness", cases};
  Rng rng(seed);
  for (int c = 0; c < cases; ++c) {
    const auto g = suites::block_case(rng, 0.45, 0.95);
    const auto [a, b] = suites::endpoints(rng, g);
    for (const auto& s : split_candidates(g, g.id(a), g.id(b))) {
      for (bool a_side : {true, false}) {
        const auto f = block_cut_tree(a_side ? s.side_a : s.side_b);
        std::set<int> exits, partners;
        for (int e : f.endblocks) {
          std::vector<ExitVertexRecord> xs;
          try {
            xs = exit_vertices(g, s, a_side, f, e);
          } catch (const ConstructionGap& gap) {
            r.fail(c, gap.what());
            continue;
          }
          for (const auto& x : xs) {
            ++r.checked;
            if (!g.has_edge(x.exit, x.partner)) r.fail(c, "partner not adjacent");
            if (static_cast<bool>(s.in_a[x.partner]) == a_side) r.fail(c, "partner on the same side");
            exits.insert(x.exit);
            partners.insert(x.partner);
          }
        }
        if (exits.size() != partners.size()) r.fail(c, "two exits share a partner");
      }
    }
  }
  return r;
}

// Weak interaction digraphs: limb nodes have outdegree at least one, core
// nodes none, and no chosen exit is the partner of another.
inline SuiteResult digraph_suite(int cases, std::uint64_t seed = 606) {
  SuiteResult r{"H outdegrees", cases};
  Rng rng(seed);
  for (int c = 0; c < cases; ++c) {
    const auto g = suites::block_case(rng, 0.35, 0.8);
    const auto [a, b] = suites::endpoints(rng, g);
    suites::for_each_digraph(g, a, b, [&](const SplitState&, const InteractionDigraph& H) {
      ++r.checked;
      const auto out = H.out_degree();
      std::set<int> chosen;
      for (const auto& e : H.arcs) chosen.insert(e.exit);
      for (std::size_t i = 0; i < H.nodes.size(); ++i) {
        if (H.nodes[i].core && out[i] != 0) r.fail(c, "core node with an out-arc");
        if (!H.nodes[i].core && out[i] < 1) r.fail(c, "limb node without an out-arc");
      }
      for (const auto& e : H.arcs) {
        if (chosen.contains(e.partner)) r.fail(c, "a chosen exit is another exit's partner");
      }
    });
  }
  return r;
}

// J from limb-only components: 2-connected, every vertex other than a1, b1
// keeps all its neighbours from the component inside J and has degree at
// least d - 1 in J, d being the minimum degree off the endpoints.
inline SuiteResult j_extraction_suite(int cases, std::uint64_t seed = 707) {
  SuiteResult r{"J closure and degree", cases};
  Rng rng(seed);
  for (int c = 0; c < cases; ++c) {
    const auto g = suites::block_case(rng, 0.35, 0.7);
    const auto [a, b] = suites::endpoints(rng, g);
    const int d = min_degree_excluding(g, {a, b});
    suites::for_each_digraph(g, a, b, [&](const SplitState& st, const InteractionDigraph& H) {
      for (const auto& comp : H.components()) {
        bool limbs_only = true, has_a = false, has_b = false;
        for (int id : comp) {
          limbs_only = limbs_only && !H.nodes[id].core;
          (H.nodes[id].a_side ? has_a : has_b) = true;
        }
        if (!limbs_only || !has_a || !has_b) continue;
        const auto jx = extract_J(st, H, comp);
        if (jx.a1 < 0 || jx.b1 < 0) continue;
        ++r.checked;
        if (!jx.two_connected) r.fail(c, "J not 2-connected: " + jx.diagnostic);
        std::vector<char> in_j(g.size(), 0), in_gc(g.size(), 0);
        for (int v : jx.J) in_j[v] = 1;
        for (int id : comp) {
          for (int v : H.nodes[id].vertices) in_gc[v] = 1;
        }
        for (int v : jx.J) {
          if (v == jx.a1 || v == jx.b1) continue;
          int inside = 0;
          for (int w : g.neighbors(v)) {
            if (in_j[w]) {
              ++inside;
            } else if (in_gc[w]) {
              r.fail(c, "J not closed at " + std::to_string(g.id(v)));
            }
          }
          if (inside < d - 1) r.fail(c, "vertex " + std::to_string(g.id(v)) + " has degree " +
                                            std::to_string(inside) + " in J");
        }
      }
    });
  }
  return r;
}

inline std::vector<SuiteResult> all_suites(int cases) {
  return {block_partition_suite(cases), split_loss_suite(cases), span_suite(cases),
          exit_partner_suite(cases),    digraph_suite(cases),    j_extraction_suite(cases)};
}

}  // namespace hcpath::testing
