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
#include <vector>

#include "hcpath/subgraph.hpp"

namespace hcpath {

// A partition of a connected view into two connected sides, a on one side
// and b on the other, obtained by cutting one host axis and repairing.
struct SplitOutcome {
  SubgraphView side_a;
  SubgraphView side_b;
  int direction = -1;
  std::vector<int> side_a_locals;  // local indices of the input view
  std::vector<int> side_b_locals;
  std::vector<char> in_a;          // membership mask over the input view
  std::vector<int> degree_loss;    // by local index of the input view
  int root_a = -1;                 // local index of a inside side_a
  int root_b = -1;                 // local index of b inside side_b

  int degree_a() const { return side_a.degree(root_a); }
  int degree_b() const { return side_b.degree(root_b); }
  int max_loss() const {
    return degree_loss.empty() ? 0 : *std::max_element(degree_loss.begin(), degree_loss.end());
  }
};

namespace detail {

// Values of one axis that go with x when x and y must be separated.
inline std::vector<char> axis_side(const HostGraph& h, int axis, int x, int y) {
  const int k = h.axis_size(axis);
  std::vector<char> with_x(k, 0);
  switch (h.kind()) {
    case HostKind::kHypercube:
      with_x[x] = 1;
      break;
    case HostKind::kGrid:
      for (int c = 0; c < k; ++c) with_x[c] = x < y ? c <= x : c >= x;
      break;
    case HostKind::kTorus: {
      // Two arcs: x's arc covers the first half of the forward gap to y and
      // the first half of the backward gap.
      const int f = ((y - x) % k + k) % k;
      const int forward = (f + 1) / 2 - 1;
      const int backward = (k - f) / 2;
      for (int off = 0; off <= forward; ++off) with_x[(x + off) % k] = 1;
      for (int off = 1; off <= backward; ++off) with_x[(x - off % k + k) % k] = 1;
      break;
    }
    case HostKind::kProduct: {
      // Voronoi cells by BFS distance in the factor, ties to x.
      std::vector<int> owner(k, -1);
      std::deque<int> queue = {x, y};
      owner[x] = 1;
      owner[y] = 0;
      while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int w : h.axis_neighbors(axis, u)) {
          if (owner[w] < 0) {
            owner[w] = owner[u];
            queue.push_back(w);
          }
        }
      }
      for (int c = 0; c < k; ++c) with_x[c] = owner[c] != 0;
      break;
    }
  }
  return with_x;
}

// Component of the masked subgraph containing s, as a mask.
inline std::vector<char> component_of(const SubgraphView& g, const std::vector<char>& allowed, int s) {
  std::vector<char> seen(g.size(), 0);
  std::vector<int> stack = {s};
  seen[s] = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u)) {
      if (allowed[w] && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

inline SplitOutcome finish_split(const SubgraphView& g, int a, int b, int axis,
                                 std::vector<char> in_a) {
  SplitOutcome out;
  out.direction = axis;
  out.in_a = std::move(in_a);
  for (int i = 0; i < static_cast<int>(g.size()); ++i) {
    (out.in_a[i] ? out.side_a_locals : out.side_b_locals).push_back(i);
  }
  out.side_a = g.induced_on(out.side_a_locals);
  out.side_b = g.induced_on(out.side_b_locals);
  out.degree_loss.assign(g.size(), 0);
  std::vector<int> local_in_side(g.size());
  for (std::size_t i = 0; i < out.side_a_locals.size(); ++i) local_in_side[out.side_a_locals[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < out.side_b_locals.size(); ++i) local_in_side[out.side_b_locals[i]] = static_cast<int>(i);
  for (int v = 0; v < static_cast<int>(g.size()); ++v) {
    const SubgraphView& side = out.in_a[v] ? out.side_a : out.side_b;
    out.degree_loss[v] = g.degree(v) - side.degree(local_in_side[v]);
  }
  out.root_a = local_in_side[a];
  out.root_b = local_in_side[b];
  return out;
}

// Cut along one axis and repair so that both sides are connected.
inline SplitOutcome split_along(const SubgraphView& g, int a, int b, int axis) {
  const HostGraph& h = g.host();
  const auto values = axis_side(h, axis, h.coord(g.id(a), axis), h.coord(g.id(b), axis));
  const int n = static_cast<int>(g.size());
  std::vector<char> second(n, 0);
  for (int v = 0; v < n; ++v) second[v] = !values[h.coord(g.id(v), axis)];
  const auto cb = component_of(g, second, b);
  std::vector<char> rest(n, 0);
  for (int v = 0; v < n; ++v) rest[v] = !cb[v];
  return finish_split(g, a, b, axis, component_of(g, rest, a));
}

}  // namespace detail

// All axis splits separating a from b, best first: both root degrees at
// least two, then the larger minimum root degree, then the lower axis.
inline std::vector<SplitOutcome> split_candidates(const SubgraphView& g, VertexId a, VertexId b) {
  const int la = g.index_of(a);
  const int lb = g.index_of(b);
  if (la < 0 || lb < 0) throw PreconditionError("split endpoints must belong to the graph");
  if (la == lb) throw PreconditionError("split needs two distinct endpoints");
  if (!is_connected(g)) throw PreconditionError("split needs a connected graph");
  const HostGraph& h = g.host();
  std::vector<SplitOutcome> out;
  for (int axis = 0; axis < h.axes(); ++axis) {
    if (h.coord(a, axis) == h.coord(b, axis)) continue;
    out.push_back(detail::split_along(g, la, lb, axis));
  }
  if (out.empty()) throw PreconditionError("endpoints agree on every axis");
  std::stable_sort(out.begin(), out.end(), [](const SplitOutcome& x, const SplitOutcome& y) {
    const bool gx = x.degree_a() >= 2 && x.degree_b() >= 2;
    const bool gy = y.degree_a() >= 2 && y.degree_b() >= 2;
    if (gx != gy) return gx;
    return std::min(x.degree_a(), x.degree_b()) > std::min(y.degree_a(), y.degree_b());
  });
  return out;
}

inline SplitOutcome split(const SubgraphView& g, VertexId a, VertexId b) {
  return std::move(split_candidates(g, a, b).front());
}

// Split that separates two seed vertices x, y and then moves a to x's side
// and b to y's side. The component of a's side containing a is kept whole
// and the remainder is organised around b.
inline SplitOutcome split_seeded(const SubgraphView& g, int a, int b, int x, int y) {
  const HostGraph& h = g.host();
  int axis = -1;
  for (int i = 0; i < h.axes(); ++i) {
    if (h.coord(g.id(x), i) != h.coord(g.id(y), i)) {
      axis = i;
      break;
    }
  }
  if (axis < 0) throw PreconditionError("seed vertices agree on every axis");
  const auto values = detail::axis_side(h, axis, h.coord(g.id(x), axis), h.coord(g.id(y), axis));
  const int n = static_cast<int>(g.size());
  std::vector<char> first(n, 0);
  for (int v = 0; v < n; ++v) first[v] = values[h.coord(g.id(v), axis)];
  first[a] = 1;
  first[b] = 0;
  const auto ca = detail::component_of(g, first, a);
  std::vector<char> rest(n, 0);
  for (int v = 0; v < n; ++v) rest[v] = !ca[v];
  const auto gb = detail::component_of(g, rest, b);
  std::vector<char> in_a(n, 0);
  for (int v = 0; v < n; ++v) in_a[v] = !gb[v];
  return detail::finish_split(g, a, b, axis, std::move(in_a));
}

}  // namespace hcpath
