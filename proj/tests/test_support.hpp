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

// Test-only reference code. Nothing here calls the library's search or
// decomposition routines; adjacency is recomputed from vertex ids.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "hcpath/hcpath.hpp"

namespace hcpath::testing {

using Adj = std::vector<std::vector<int>>;

// Adjacency of an induced subgraph of Q_n given by vertex ids.
inline Adj cube_adjacency(const std::vector<std::uint64_t>& ids) {
  Adj adj(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = 0; j < ids.size(); ++j) {
      if (i != j && std::popcount(ids[i] ^ ids[j]) == 1) adj[i].push_back(static_cast<int>(j));
    }
  }
  return adj;
}

// Adjacency of an induced subgraph of the torus C_k^n, ids in base k with
// coordinate 0 lowest.
inline Adj torus_adjacency(const std::vector<std::uint64_t>& ids, int n, int k) {
  auto digits = [&](std::uint64_t v) {
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) {
      c[i] = static_cast<int>(v % k);
      v /= k;
    }
    return c;
  };
  Adj adj(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = 0; j < ids.size(); ++j) {
      if (i == j) continue;
      const auto x = digits(ids[i]), y = digits(ids[j]);
      int diff = 0;
      bool step = true;
      for (int t = 0; t < n; ++t) {
        if (x[t] == y[t]) continue;
        ++diff;
        const int dlt = ((x[t] - y[t]) % k + k) % k;
        step = step && (dlt == 1 || dlt == k - 1);
      }
      if (diff == 1 && step) adj[i].push_back(static_cast<int>(j));
    }
  }
  return adj;
}

// Longest path by exhaustive DFS. end < 0: any end; end == start with
// cycle: longest cycle through start.
inline int brute_longest(const Adj& adj, int start, int end, bool cycle = false) {
  const int n = static_cast<int>(adj.size());
  std::vector<char> used(n, 0);
  int best = -1;
  std::function<void(int, int)> go = [&](int u, int len) {
    if (!cycle && (end < 0 || u == end)) best = std::max(best, len);
    if (!cycle && u == end) return;
    for (int w : adj[u]) {
      if (cycle && w == start && len >= 2) best = std::max(best, len + 1);
      if (used[w]) continue;
      used[w] = 1;
      go(w, len + 1);
      used[w] = 0;
    }
  };
  used[start] = 1;
  go(start, 0);
  return best;
}

inline int brute_longest_any(const Adj& adj) {
  int best = adj.empty() ? -1 : 0;
  for (int s = 0; s < static_cast<int>(adj.size()); ++s) best = std::max(best, brute_longest(adj, s, -1));
  return best;
}

inline int brute_longest_cycle(const Adj& adj) {
  int best = -1;
  for (int s = 0; s < static_cast<int>(adj.size()); ++s) best = std::max(best, brute_longest(adj, s, s, true));
  return best;
}

inline std::vector<std::uint64_t> ids_of(const SubgraphView& g) { return {g.vertices().begin(), g.vertices().end()}; }

inline SubgraphView full(const HostSpec& spec) {
  auto h = build_host(spec);
  return SubgraphView::induced(h, h->all_vertices());
}

// Induced subgraph keeping each host vertex with probability p.
inline SubgraphView random_induced(const HostPtr& host, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<VertexId> kept;
  for (VertexId v : host->all_vertices()) {
    if (rng.chance(p)) kept.push_back(v);
  }
  return SubgraphView::induced(host, std::move(kept));
}

// Vertices reachable from s avoiding `skip` (-1: none).
inline std::vector<char> reach(const SubgraphView& g, int s, int skip) {
  std::vector<char> seen(g.size(), 0);
  if (s == skip) return seen;
  std::vector<int> stack = {s};
  seen[s] = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u)) {
      if (w != skip && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

inline SubgraphView largest_component(const SubgraphView& g) {
  std::vector<char> done(g.size(), 0);
  std::vector<int> best;
  for (int s = 0; s < static_cast<int>(g.size()); ++s) {
    if (done[s]) continue;
    const auto r = reach(g, s, -1);
    std::vector<int> comp;
    for (int v = 0; v < static_cast<int>(g.size()); ++v) {
      if (r[v]) {
        comp.push_back(v);
        done[v] = 1;
      }
    }
    if (comp.size() > best.size()) best = comp;
  }
  return g.induced_on(best);
}

// The largest block, found with the library's decomposition; tests that use
// it check 2-connectivity independently.
inline SubgraphView largest_block(const SubgraphView& g) {
  const auto f = block_cut_tree(g);
  std::vector<int> best;
  for (const auto& b : f.blocks) {
    if (b.size() > best.size()) best = b;
  }
  return g.induced_on(best);
}

// 2-connected by definition: connected, at least three vertices, and no
// single deletion disconnects it.
inline bool brute_two_connected(const SubgraphView& g) {
  const int n = static_cast<int>(g.size());
  if (n < 3) return false;
  const auto all = reach(g, 0, -1);
  if (std::count(all.begin(), all.end(), 1) != n) return false;
  for (int x = 0; x < n; ++x) {
    const int s = x == 0 ? 1 : 0;
    const auto r = reach(g, s, x);
    if (std::count(r.begin(), r.end(), 1) != n - 1) return false;
  }
  return true;
}

}  // namespace hcpath::testing
