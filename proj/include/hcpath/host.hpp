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
#include <bit>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hcpath/common.hpp"

namespace hcpath {

enum class HostKind { kHypercube, kGrid, kTorus, kProduct };

// An explicit small graph used as one factor of a Cartesian product host.
struct FactorGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
};

struct HostSpec {
  HostKind kind = HostKind::kHypercube;
  int n = 0;
  // Grid: inclusive [lo, hi] per axis.
  std::vector<std::pair<std::int64_t, std::int64_t>> box;
  // Torus: cycle length per axis.
  std::vector<int> cycle;
  // Product: one factor per axis.
  std::vector<FactorGraph> factors;

  static HostSpec hypercube(int n) {
    HostSpec s;
    s.kind = HostKind::kHypercube;
    s.n = n;
    return s;
  }
  static HostSpec grid(std::vector<std::pair<std::int64_t, std::int64_t>> box) {
    HostSpec s;
    s.kind = HostKind::kGrid;
    s.n = static_cast<int>(box.size());
    s.box = std::move(box);
    return s;
  }
  static HostSpec torus(std::vector<int> lengths) {
    HostSpec s;
    s.kind = HostKind::kTorus;
    s.n = static_cast<int>(lengths.size());
    s.cycle = std::move(lengths);
    return s;
  }
  static HostSpec torus(int n, int k) { return torus(std::vector<int>(n, k)); }
  static HostSpec product(std::vector<FactorGraph> factors) {
    HostSpec s;
    s.kind = HostKind::kProduct;
    s.n = static_cast<int>(factors.size());
    s.factors = std::move(factors);
    return s;
  }

  // Worst-case number of neighbours a vertex loses when the host is split
  // into two sides along one axis.
  int split_loss_k() const {
    switch (kind) {
      case HostKind::kHypercube:
      case HostKind::kGrid:
        return 1;
      case HostKind::kTorus:
        return std::any_of(cycle.begin(), cycle.end(),
                           [](int k) { return k == 3; })
                   ? 2
                   : 1;
      case HostKind::kProduct: {
        int best = 0;
        for (const auto& f : factors) {
          std::vector<int> deg(f.vertex_count, 0);
          for (auto [u, v] : f.edges) {
            ++deg[u];
            ++deg[v];
          }
          for (int x : deg) best = std::max(best, x);
        }
        return best;
      }
    }
    return 1;
  }
};

inline const char* to_string(HostKind kind) {
  switch (kind) {
    case HostKind::kHypercube:
      return "hypercube";
    case HostKind::kGrid:
      return "grid";
    case HostKind::kTorus:
      return "torus";
    case HostKind::kProduct:
      return "product";
  }
  return "?";
}

// Implicit adjacency of a host. Vertices are mixed-radix indices over the
// axes; for the hypercube this is the usual bitmask with axis i at bit i.
class HostGraph {
 public:
  explicit HostGraph(HostSpec spec) : spec_(std::move(spec)) {
    if (spec_.n < 1) throw InvalidArgument("host needs at least one axis");
    radix_.resize(spec_.n);
    switch (spec_.kind) {
      case HostKind::kHypercube:
        if (spec_.n > 64) throw InvalidArgument("hypercube dimension above 64");
        std::fill(radix_.begin(), radix_.end(), 2);
        break;
      case HostKind::kGrid:
        if (static_cast<int>(spec_.box.size()) != spec_.n) {
          throw InvalidArgument("grid box must have one range per axis");
        }
        for (int i = 0; i < spec_.n; ++i) {
          const auto [lo, hi] = spec_.box[i];
          if (hi < lo) throw InvalidArgument("grid box with hi < lo");
          if (hi - lo + 1 > (1 << 20)) throw InvalidArgument("grid axis too long");
          radix_[i] = static_cast<int>(hi - lo + 1);
        }
        break;
      case HostKind::kTorus:
        if (static_cast<int>(spec_.cycle.size()) != spec_.n) {
          throw InvalidArgument("torus needs one cycle length per axis");
        }
        for (int i = 0; i < spec_.n; ++i) {
          if (spec_.cycle[i] < 3) throw InvalidArgument("torus cycle length below 3");
          if (spec_.cycle[i] > (1 << 20)) throw InvalidArgument("torus axis too long");
          radix_[i] = spec_.cycle[i];
        }
        break;
      case HostKind::kProduct:
        if (static_cast<int>(spec_.factors.size()) != spec_.n) {
          throw InvalidArgument("product needs one factor per axis");
        }
        factor_adj_.resize(spec_.n);
        for (int i = 0; i < spec_.n; ++i) {
          const FactorGraph& f = spec_.factors[i];
          if (f.vertex_count < 2) throw InvalidArgument("product factor with fewer than 2 vertices");
          if (f.vertex_count > 4096) throw InvalidArgument("product factor too large");
          radix_[i] = f.vertex_count;
          auto& adj = factor_adj_[i];
          adj.assign(f.vertex_count, std::vector<int>());
          for (auto [u, v] : f.edges) {
            if (u < 0 || v < 0 || u >= f.vertex_count || v >= f.vertex_count || u == v) {
              throw InvalidArgument("invalid product factor edge");
            }
            adj[u].push_back(v);
            adj[v].push_back(u);
          }
          for (auto& list : adj) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
          }
        }
        break;
    }
    stride_.resize(spec_.n);
    unsigned __int128 total = 1;
    for (int i = 0; i < spec_.n; ++i) {
      stride_[i] = static_cast<std::uint64_t>(total);
      total *= static_cast<unsigned>(radix_[i]);
      if (spec_.kind != HostKind::kHypercube && total > (static_cast<unsigned __int128>(1) << 63)) {
        throw InvalidArgument("host has more than 2^63 vertices");
      }
    }
    total_ = total;
  }

  const HostSpec& spec() const { return spec_; }
  HostKind kind() const { return spec_.kind; }
  int axes() const { return spec_.n; }
  int axis_size(int axis) const { return radix_[axis]; }
  int split_loss_k() const { return spec_.split_loss_k(); }

  // Number of host vertices, saturated at 2^64 - 1 for the 64-cube.
  std::uint64_t vertex_count() const {
    return total_ > static_cast<unsigned __int128>(UINT64_MAX)
               ? UINT64_MAX
               : static_cast<std::uint64_t>(total_);
  }

  bool valid(VertexId v) const {
    return static_cast<unsigned __int128>(v) < total_;
  }

  int coord(VertexId v, int axis) const {
    if (spec_.kind == HostKind::kHypercube) return static_cast<int>((v >> axis) & 1U);
    return static_cast<int>((v / stride_[axis]) % static_cast<std::uint64_t>(radix_[axis]));
  }

  VertexId with_coord(VertexId v, int axis, int value) const {
    const int old = coord(v, axis);
    return v - static_cast<std::uint64_t>(old) * stride_[axis] +
           static_cast<std::uint64_t>(value) * stride_[axis];
  }

  // Whether two values of one axis are adjacent in that axis' factor.
  bool axis_adjacent(int axis, int x, int y) const {
    switch (spec_.kind) {
      case HostKind::kHypercube:
        return x != y;
      case HostKind::kGrid:
        return x - y == 1 || y - x == 1;
      case HostKind::kTorus: {
        const int k = radix_[axis];
        const int diff = ((x - y) % k + k) % k;
        return diff == 1 || diff == k - 1;
      }
      case HostKind::kProduct: {
        const auto& list = factor_adj_[axis][x];
        return std::binary_search(list.begin(), list.end(), y);
      }
    }
    return false;
  }

  bool adjacent(VertexId u, VertexId v) const {
    if (spec_.kind == HostKind::kHypercube) return std::popcount(u ^ v) == 1;
    if (u == v) return false;
    int differing = -1;
    for (int i = 0; i < spec_.n; ++i) {
      if (coord(u, i) != coord(v, i)) {
        if (differing >= 0) return false;
        differing = i;
      }
    }
    return axis_adjacent(differing, coord(u, differing), coord(v, differing));
  }

  // Neighbours of v in ascending order.
  std::vector<VertexId> neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (int i = 0; i < spec_.n; ++i) {
      const int c = coord(v, i);
      switch (spec_.kind) {
        case HostKind::kHypercube:
          out.push_back(v ^ (VertexId{1} << i));
          break;
        case HostKind::kGrid:
          if (c > 0) out.push_back(with_coord(v, i, c - 1));
          if (c + 1 < radix_[i]) out.push_back(with_coord(v, i, c + 1));
          break;
        case HostKind::kTorus: {
          const int k = radix_[i];
          out.push_back(with_coord(v, i, (c + 1) % k));
          out.push_back(with_coord(v, i, (c + k - 1) % k));
          break;
        }
        case HostKind::kProduct:
          for (int w : factor_adj_[i][c]) out.push_back(with_coord(v, i, w));
          break;
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // Neighbours of value x along one axis.
  std::vector<int> axis_neighbors(int axis, int x) const {
    switch (spec_.kind) {
      case HostKind::kHypercube:
        return {1 - x};
      case HostKind::kGrid: {
        std::vector<int> out;
        if (x > 0) out.push_back(x - 1);
        if (x + 1 < radix_[axis]) out.push_back(x + 1);
        return out;
      }
      case HostKind::kTorus: {
        const int k = radix_[axis];
        std::vector<int> out = {(x + k - 1) % k, (x + 1) % k};
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
      }
      case HostKind::kProduct:
        return factor_adj_[axis][x];
    }
    return {};
  }

  // External coordinates; grid coordinates include the box offset.
  std::vector<std::int64_t> coordinates(VertexId v) const {
    std::vector<std::int64_t> out(spec_.n);
    for (int i = 0; i < spec_.n; ++i) {
      out[i] = coord(v, i);
      if (spec_.kind == HostKind::kGrid) out[i] += spec_.box[i].first;
    }
    return out;
  }

  VertexId from_coordinates(const std::vector<std::int64_t>& c) const {
    if (static_cast<int>(c.size()) != spec_.n) {
      throw InvalidArgument("vertex tuple has wrong arity");
    }
    VertexId v = 0;
    for (int i = 0; i < spec_.n; ++i) {
      std::int64_t x = c[i];
      if (spec_.kind == HostKind::kGrid) x -= spec_.box[i].first;
      if (x < 0 || x >= radix_[i]) throw InvalidArgument("vertex coordinate out of range");
      v += static_cast<std::uint64_t>(x) * stride_[i];
    }
    return v;
  }

  std::vector<VertexId> all_vertices() const {
    if (total_ > (1U << 26)) throw InvalidArgument("host too large to enumerate");
    std::vector<VertexId> out(static_cast<std::size_t>(total_));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
    return out;
  }

  std::string describe() const {
    std::string s = to_string(spec_.kind);
    s += "(n=" + std::to_string(spec_.n);
    if (spec_.kind == HostKind::kTorus) {
      s += ",k=";
      for (int i = 0; i < spec_.n; ++i) s += (i ? "x" : "") + std::to_string(radix_[i]);
    } else if (spec_.kind == HostKind::kGrid) {
      s += ",box=";
      for (int i = 0; i < spec_.n; ++i) s += (i ? "x" : "") + std::to_string(radix_[i]);
    }
    return s + ")";
  }

 private:
  HostSpec spec_;
  std::vector<int> radix_;
  std::vector<std::uint64_t> stride_;
  std::vector<std::vector<std::vector<int>>> factor_adj_;
  unsigned __int128 total_ = 0;
};

using HostPtr = std::shared_ptr<const HostGraph>;

inline HostPtr build_host(HostSpec spec) {
  return std::make_shared<const HostGraph>(std::move(spec));
}

}  // namespace hcpath
