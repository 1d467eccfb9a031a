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

#include <bit>
#include <optional>
#include <vector>

#include "hcpath/subgraph.hpp"

namespace hcpath {

struct SubcubeWitness {
  int dimension = 0;
  std::vector<int> free_axes;
  VertexId base = 0;
};

// Recognises views that are a full axis-aligned cube: on each free axis the
// vertices take two adjacent values, every other axis is constant, all 2^d
// combinations occur and every host edge among them is present. On a
// hypercube host this is exactly an induced subcube; on grids, tori and
// products it finds the embedded copies of Q_d built the same way.
inline std::optional<SubcubeWitness> is_subcube(const SubgraphView& g) {
  if (g.empty()) return std::nullopt;
  const HostGraph& h = g.host();
  SubcubeWitness w;
  if (h.kind() == HostKind::kHypercube) {
    const VertexId v0 = g.id(0);
    VertexId diff = 0;
    for (VertexId v : g.vertices()) diff |= v ^ v0;
    w.dimension = std::popcount(diff);
    for (int i = 0; i < h.axes(); ++i) {
      if ((diff >> i) & 1U) w.free_axes.push_back(i);
    }
    w.base = v0 & ~diff;
  } else {
    std::vector<VertexId> base_coords;
    VertexId base = g.id(0);
    for (int axis = 0; axis < h.axes(); ++axis) {
      int lo = h.coord(g.id(0), axis);
      int hi = lo;
      bool third = false;
      for (VertexId v : g.vertices()) {
        const int c = h.coord(v, axis);
        if (c == lo || c == hi) continue;
        if (lo == hi) {
          hi = c;
        } else {
          third = true;
          break;
        }
      }
      if (third) return std::nullopt;
      if (lo != hi) {
        if (!h.axis_adjacent(axis, lo, hi)) return std::nullopt;
        w.free_axes.push_back(axis);
        base = h.with_coord(base, axis, std::min(lo, hi));
      }
    }
    w.dimension = static_cast<int>(w.free_axes.size());
    w.base = base;
  }
  if (w.dimension >= 62) return std::nullopt;
  const std::uint64_t expected = std::uint64_t{1} << w.dimension;
  if (g.size() != expected) return std::nullopt;
  if (g.edge_count() != static_cast<std::size_t>(w.dimension) * (expected / 2)) {
    return std::nullopt;
  }
  return w;
}

// Number of axes on which two vertices differ.
inline int hamming(const HostGraph& h, VertexId u, VertexId v) {
  if (h.kind() == HostKind::kHypercube) return std::popcount(u ^ v);
  int count = 0;
  for (int i = 0; i < h.axes(); ++i) count += h.coord(u, i) != h.coord(v, i);
  return count;
}

}  // namespace hcpath
