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
#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "hcpath/subgraph.hpp"

namespace hcpath {

// Breadth-first shortest path from s to t using only allowed vertices; s and
// t are always allowed. An empty mask allows everything.
inline std::optional<LocalPath> shortest_path(const SubgraphView& g, int s, int t,
                                              const std::vector<char>& allowed = {}) {
  if (s == t) return LocalPath{s};
  const int n = static_cast<int>(g.size());
  std::vector<int> prev(n, -2);
  std::deque<int> queue = {s};
  prev[s] = -1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      if (prev[w] != -2) continue;
      if (w != t && !allowed.empty() && !allowed[w]) continue;
      prev[w] = u;
      if (w == t) {
        LocalPath p;
        for (int x = t; x != -1; x = prev[x]) p.push_back(x);
        std::reverse(p.begin(), p.end());
        return p;
      }
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

// BFS distances from s through allowed vertices (-1 if unreachable).
inline std::vector<int> bfs_distances(const SubgraphView& g, int s, const std::vector<char>& allowed = {}) {
  std::vector<int> dist(g.size(), -1);
  std::deque<int> queue = {s};
  dist[s] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      if (dist[w] >= 0 || (!allowed.empty() && !allowed[w])) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

namespace detail {

class UnitFlow {
 public:
  explicit UnitFlow(int nodes) : head_(nodes, -1) {}

  void add_edge(int from, int to, int cap) {
    arcs_.push_back({to, cap, head_[from]});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, 0, head_[to]});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  int max_flow(int s, int t, int limit) {
    int flow = 0;
    const int n = static_cast<int>(head_.size());
    while (flow < limit) {
      std::vector<int> via(n, -1);
      std::deque<int> queue = {s};
      via[s] = -2;
      while (!queue.empty() && via[t] == -1) {
        const int u = queue.front();
        queue.pop_front();
        for (int e = head_[u]; e >= 0; e = arcs_[e].next) {
          const int w = arcs_[e].to;
          if (arcs_[e].cap > 0 && via[w] == -1) {
            via[w] = e;
            queue.push_back(w);
          }
        }
      }
      if (via[t] == -1) break;
      for (int x = t; x != s;) {
        const int e = via[x];
        --arcs_[e].cap;
        ++arcs_[e ^ 1].cap;
        x = arcs_[e ^ 1].to;
      }
      ++flow;
    }
    return flow;
  }

  // Flow carried by the forward arc with even index e.
  int flow_on(int e) const { return arcs_[e ^ 1].cap; }

  struct Arc {
    int to;
    int cap;
    int next;
  };
  std::vector<Arc> arcs_;
  std::vector<int> head_;
};

}  // namespace detail

// Vertex-disjoint paths with unit vertex capacities. Each source emits up to
// its capacity; each sink group absorbs up to its capacity, and a path ends
// at the first group vertex it enters (group vertices are never passed
// through). Paths run from a source vertex to a group vertex.
struct DisjointPathRequest {
  std::vector<std::pair<int, int>> sources;      // (vertex, capacity)
  std::vector<std::vector<int>> sink_groups;
  std::vector<int> group_capacity;               // defaults to 1 per group
  std::vector<char> allowed;                     // internal vertices; empty = all
};

inline std::optional<std::vector<LocalPath>> disjoint_paths(const SubgraphView& g,
                                                            const DisjointPathRequest& req,
                                                            int needed) {
  const int n = static_cast<int>(g.size());
  const int groups = static_cast<int>(req.sink_groups.size());
  const int S = 2 * n + groups;
  const int T = S + 1;
  detail::UnitFlow net(T + 1);
  std::vector<int> group_of(n, -1), source_cap(n, 0);
  for (int k = 0; k < groups; ++k) {
    for (int v : req.sink_groups[k]) group_of[v] = k;
  }
  for (auto [v, cap] : req.sources) source_cap[v] += cap;
  auto usable = [&](int v) {
    return req.allowed.empty() || req.allowed[v] || source_cap[v] > 0 || group_of[v] >= 0;
  };
  for (int v = 0; v < n; ++v) {
    if (!usable(v)) continue;
    int cap = std::max(1, source_cap[v]);
    if (group_of[v] >= 0) {
      const int k = group_of[v];
      if (k < static_cast<int>(req.group_capacity.size())) cap = std::max(cap, req.group_capacity[k]);
      net.add_edge(2 * v, 2 * n + k, cap);
    } else {
      net.add_edge(2 * v, 2 * v + 1, cap);
    }
  }
  for (int u = 0; u < n; ++u) {
    if (!usable(u) || group_of[u] >= 0) continue;
    for (int w : g.neighbors(u)) {
      if (usable(w)) net.add_edge(2 * u + 1, 2 * w, 1);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (source_cap[v] > 0) net.add_edge(S, 2 * v, source_cap[v]);
  }
  for (int k = 0; k < groups; ++k) {
    const int cap = k < static_cast<int>(req.group_capacity.size()) ? req.group_capacity[k] : 1;
    net.add_edge(2 * n + k, T, cap);
  }
  if (net.max_flow(S, T, needed) < needed) return std::nullopt;

  // Decompose: repeatedly walk positive-flow arcs from S to T.
  std::vector<int> remaining(net.arcs_.size(), 0);
  for (std::size_t e = 0; e < net.arcs_.size(); e += 2) remaining[e] = net.flow_on(static_cast<int>(e));
  std::vector<LocalPath> out;
  for (int round = 0; round < needed; ++round) {
    LocalPath path;
    int x = S;
    while (x != T) {
      int chosen = -1;
      for (int e = net.head_[x]; e >= 0; e = net.arcs_[e].next) {
        if ((e & 1) == 0 && remaining[e] > 0) {
          chosen = e;
          break;
        }
      }
      if (chosen < 0) return std::nullopt;
      --remaining[chosen];
      const int y = net.arcs_[chosen].to;
      if (y < 2 * n && (y & 1) == 0) {
        const int v = y / 2;
        auto it = std::find(path.begin(), path.end(), v);
        if (it != path.end()) {
          path.erase(it + 1, path.end());
        } else {
          path.push_back(v);
        }
      }
      x = y;
    }
    out.push_back(std::move(path));
  }
  return out;
}

// Two paths from a to b sharing only their endpoints.
inline std::optional<std::pair<LocalPath, LocalPath>> two_disjoint_ab_paths(
    const SubgraphView& g, int a, int b, const std::vector<char>& allowed = {}) {
  DisjointPathRequest req;
  req.sources = {{a, 2}};
  req.sink_groups = {{b}};
  req.group_capacity = {2};
  req.allowed = allowed;
  auto paths = disjoint_paths(g, req, 2);
  if (!paths) return std::nullopt;
  return std::make_pair((*paths)[0], (*paths)[1]);
}

// A path through c joining x and y: two paths from c to x and to y that
// share only c, returned as one path x ... c ... y.
inline std::optional<LocalPath> fan_path(const SubgraphView& g, int c, int x, int y,
                                         const std::vector<char>& allowed = {}) {
  DisjointPathRequest req;
  req.sources = {{c, 2}};
  req.sink_groups = {{x}, {y}};
  req.allowed = allowed;
  auto paths = disjoint_paths(g, req, 2);
  if (!paths) return std::nullopt;
  LocalPath to_x = (*paths)[0], to_y = (*paths)[1];
  if (to_x.back() != x) std::swap(to_x, to_y);
  LocalPath out(to_x.rbegin(), to_x.rend());
  out.insert(out.end(), to_y.begin() + 1, to_y.end());
  return out;
}

// Two vertex-disjoint paths linking {s1, s2} to {t1, t2} in some pairing.
inline std::optional<std::pair<LocalPath, LocalPath>> linkage(const SubgraphView& g, int s1, int s2,
                                                              int t1, int t2,
                                                              const std::vector<char>& allowed) {
  DisjointPathRequest req;
  req.sources = {{s1, 1}, {s2, 1}};
  req.sink_groups = {{t1}, {t2}};
  req.allowed = allowed;
  auto paths = disjoint_paths(g, req, 2);
  if (!paths) return std::nullopt;
  LocalPath p = (*paths)[0], q = (*paths)[1];
  if (p.front() != s1) std::swap(p, q);
  return std::make_pair(p, q);
}

}  // namespace hcpath
