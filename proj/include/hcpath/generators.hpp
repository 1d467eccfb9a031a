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
#include <cmath>
#include <cstdint>
#include <deque>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "hcpath/oracle.hpp"
#include "hcpath/subgraph.hpp"

namespace hcpath {

// Seeded stream with draws that do not depend on the standard library's
// distribution implementations, so outputs match across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t bits() { return engine_(); }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : static_cast<std::uint64_t>(unit() * static_cast<double>(n)); }
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

// Induced copy of Q_d inside Q_n: `base` with the bits on `axes` varied.
inline SubgraphView gen_subcube(int n, int d, VertexId base, const std::vector<int>& axes) {
  if (n < 1 || n > 64) throw InvalidArgument("hypercube dimension must be in [1, 64]");
  if (d < 0 || d > n) throw InvalidArgument("subcube dimension must be in [0, n]");
  if (static_cast<int>(axes.size()) != d) throw InvalidArgument("need exactly d axes");
  std::set<int> seen;
  VertexId mask = 0;
  for (int a : axes) {
    if (a < 0 || a >= n) throw InvalidArgument("axis out of range");
    if (!seen.insert(a).second) throw InvalidArgument("axes must be distinct");
    mask |= VertexId{1} << a;
  }
  if (d > 26) throw InvalidArgument("subcube too large to enumerate");
  if (n < 64 && (base >> n) != 0) throw InvalidArgument("base vertex out of range");
  base &= ~mask;
  std::vector<VertexId> vs;
  vs.reserve(std::size_t{1} << d);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << d); ++code) {
    VertexId v = base;
    for (int i = 0; i < d; ++i) {
      if ((code >> i) & 1U) v |= VertexId{1} << axes[i];
    }
    vs.push_back(v);
  }
  return SubgraphView::induced(build_host(HostSpec::hypercube(n)), std::move(vs));
}

// Q_(d+1) with every edge along axis d removed except the one joining 0 and
// 2^d. The long path query runs from x = 0 to y = 2^d + 1, which forces the
// path through the bridge.
struct GPrime {
  SubgraphView graph;
  VertexId x = 0;
  VertexId y = 0;
  VertexId bridge_u = 0;
  VertexId bridge_v = 0;
};

inline GPrime gen_gprime(int d) {
  if (d < 1 || d > 20) throw InvalidArgument("gen_gprime needs 1 <= d <= 20");
  auto host = build_host(HostSpec::hypercube(d + 1));
  const VertexId top = VertexId{1} << d;
  std::vector<VertexId> vs = host->all_vertices();
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u : vs) {
    for (int i = 0; i <= d; ++i) {
      const VertexId w = u ^ (VertexId{1} << i);
      if (w < u) continue;
      if (i == d && u != 0) continue;
      edges.push_back({u, w});
    }
  }
  GPrime out;
  out.graph = SubgraphView::with_edges(host, std::move(vs), edges);
  out.x = 0;
  out.y = top | 1;
  out.bridge_u = 0;
  out.bridge_v = top;
  return out;
}

namespace detail {

// Sampling window for gen_random_mindeg: a random subcube on hypercube hosts,
// otherwise a breadth-first ball around a random vertex.
inline std::vector<VertexId> sample_window(const HostGraph& h, std::size_t want, Rng& rng) {
  if (h.kind() == HostKind::kHypercube) {
    const int n = h.axes();
    int m = 0;
    while (m < n && (std::uint64_t{1} << m) < want) ++m;
    std::vector<int> axes(n);
    for (int i = 0; i < n; ++i) axes[i] = i;
    for (int i = 0; i < m; ++i) std::swap(axes[i], axes[i + static_cast<int>(rng.below(n - i))]);
    axes.resize(m);
    std::sort(axes.begin(), axes.end());
    VertexId base = n == 64 ? rng.bits() : rng.bits() & ((VertexId{1} << n) - 1);
    const auto cube = gen_subcube(n, m, base, axes);
    return {cube.vertices().begin(), cube.vertices().end()};
  }
  const std::uint64_t total = h.vertex_count();
  const VertexId centre = rng.below(total);
  std::vector<VertexId> out = {centre};
  std::set<VertexId> seen = {centre};
  std::deque<VertexId> queue = {centre};
  while (!queue.empty() && out.size() < want) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : h.neighbors(u)) {
      if (out.size() >= want) break;
      if (seen.insert(w).second) {
        out.push_back(w);
        queue.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// Random induced subgraph peeled to minimum degree d. Vertices of a window
// of about target_size / 0.75 host vertices are kept independently with the
// probability that makes the expected count target_size. The result may be
// empty.
inline SubgraphView gen_random_mindeg(const HostPtr& host, int d, std::size_t target_size, std::uint64_t seed) {
  if (target_size == 0) throw InvalidArgument("target size must be positive");
  if (d < 0) throw InvalidArgument("d must be non-negative");
  Rng rng(seed);
  const std::size_t want = std::max<std::size_t>(target_size, static_cast<std::size_t>(std::ceil(target_size / 0.75)));
  const auto window = detail::sample_window(*host, want, rng);
  const double p = std::min(1.0, static_cast<double>(target_size) / static_cast<double>(window.size()));
  std::vector<VertexId> kept;
  for (VertexId v : window) {
    if (rng.chance(p)) kept.push_back(v);
  }
  return dcore_peel(SubgraphView::induced(host, std::move(kept)), Rational(d));
}

// Random induced subgraph with average degree at least d and no peeling.
// Starts like gen_random_mindeg, then adds window vertices in random order
// until the average reaches d. Hypercube windows have dimension above d so
// that this always succeeds.
inline SubgraphView gen_random_avgdeg(const HostPtr& host, int d, std::size_t target_size, std::uint64_t seed) {
  if (target_size == 0) throw InvalidArgument("target size must be positive");
  if (d < 0) throw InvalidArgument("d must be non-negative");
  Rng rng(seed);
  std::size_t want = std::max<std::size_t>(target_size, static_cast<std::size_t>(std::ceil(target_size / 0.75)));
  if (host->kind() == HostKind::kHypercube && d + 1 < host->axes() && d + 1 < 26) {
    want = std::max<std::size_t>(want, std::size_t{1} << (d + 1));
  }
  const auto window = detail::sample_window(*host, want, rng);
  const double p = std::min(1.0, static_cast<double>(target_size) / static_cast<double>(window.size()));
  std::set<VertexId> kept;
  std::vector<VertexId> rest;
  for (VertexId v : window) {
    if (rng.chance(p)) {
      kept.insert(v);
    } else {
      rest.push_back(v);
    }
  }
  std::int64_t twice_edges = 0;
  for (VertexId v : kept) {
    for (VertexId w : host->neighbors(v)) twice_edges += kept.count(w);
  }
  for (std::size_t i = 0; i < rest.size(); ++i) {
    std::swap(rest[i], rest[i + rng.below(rest.size() - i)]);
  }
  std::size_t next = 0;
  while (kept.empty() || twice_edges < static_cast<std::int64_t>(d) * static_cast<std::int64_t>(kept.size())) {
    if (next == rest.size()) throw PreconditionError("window cannot reach the requested average degree");
    const VertexId v = rest[next++];
    for (VertexId w : host->neighbors(v)) twice_edges += 2 * static_cast<std::int64_t>(kept.count(w));
    kept.insert(v);
  }
  return SubgraphView::induced(host, {kept.begin(), kept.end()});
}

}  // namespace hcpath
