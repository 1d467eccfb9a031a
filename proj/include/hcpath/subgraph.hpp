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
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "hcpath/common.hpp"
#include "hcpath/host.hpp"

namespace hcpath {

// An explicit vertex and edge subset of a host. Vertices are kept sorted by
// id; algorithms address them through dense local indices in that order, so
// iteration order is reproducible everywhere.
class SubgraphView {
 public:
  SubgraphView() = default;

  static SubgraphView induced(HostPtr host, std::vector<VertexId> vertices) {
    SubgraphView g = with_vertices(std::move(host), std::move(vertices));
    std::vector<std::vector<int>> adj(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (VertexId w : g.host_->neighbors(g.ids_[i])) {
        const int j = g.index_of(w);
        if (j >= 0) adj[i].push_back(j);
      }
    }
    g.set_adjacency(adj);
    g.induced_ = true;
    return g;
  }

  static SubgraphView with_edges(HostPtr host, std::vector<VertexId> vertices,
                                 const std::vector<std::pair<VertexId, VertexId>>& edges) {
    SubgraphView g = with_vertices(std::move(host), std::move(vertices));
    std::vector<std::vector<int>> adj(g.size());
    for (auto [u, v] : edges) {
      const int i = g.index_of(u);
      const int j = g.index_of(v);
      if (i < 0 || j < 0) throw InvalidArgument("edge endpoint is not a member vertex");
      if (!g.host_->adjacent(u, v)) throw InvalidArgument("edge is not a host edge");
      adj[i].push_back(j);
      adj[j].push_back(i);
    }
    for (auto& list : adj) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    g.set_adjacency(adj);
    std::size_t host_edges = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (VertexId w : g.host_->neighbors(g.ids_[i])) {
        if (w > g.ids_[i] && g.index_of(w) >= 0) ++host_edges;
      }
    }
    g.induced_ = host_edges == g.edge_count();
    return g;
  }

  const HostGraph& host() const { return *host_; }
  const HostPtr& host_ptr() const { return host_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  std::size_t edge_count() const { return adj_.size() / 2; }
  bool induced() const { return induced_; }

  std::span<const VertexId> vertices() const { return ids_; }
  VertexId id(int local) const { return ids_[local]; }

  int index_of(VertexId v) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) return -1;
    return static_cast<int>(it - ids_.begin());
  }
  bool contains(VertexId v) const { return index_of(v) >= 0; }

  std::span<const int> neighbors(int local) const {
    return {adj_.data() + offsets_[local], adj_.data() + offsets_[local + 1]};
  }
  int degree(int local) const {
    return static_cast<int>(offsets_[local + 1] - offsets_[local]);
  }
  bool has_edge(int u, int v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count());
    for (int u = 0; u < static_cast<int>(size()); ++u) {
      for (int v : neighbors(u)) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  // Subgraph of this view induced by a sorted set of local indices. Local
  // index i of the result corresponds to locals[i] here.
  SubgraphView induced_on(std::span<const int> locals) const {
    SubgraphView g;
    g.host_ = host_;
    g.ids_.reserve(locals.size());
    std::vector<int> remap(size(), -1);
    for (std::size_t i = 0; i < locals.size(); ++i) {
      if (i > 0 && locals[i] <= locals[i - 1]) {
        throw InvalidArgument("induced_on expects strictly increasing indices");
      }
      remap[locals[i]] = static_cast<int>(i);
      g.ids_.push_back(ids_[locals[i]]);
    }
    g.offsets_.assign(locals.size() + 1, 0);
    for (std::size_t i = 0; i < locals.size(); ++i) {
      for (int w : neighbors(locals[i])) {
        if (remap[w] >= 0) g.adj_.push_back(remap[w]);
      }
      g.offsets_[i + 1] = g.adj_.size();
    }
    g.induced_ = induced_;
    return g;
  }

  // Local indices selected by a membership mask.
  static std::vector<int> members(const std::vector<char>& mask) {
    std::vector<int> out;
    for (std::size_t i = 0; i < mask.size(); ++i) {
      if (mask[i]) out.push_back(static_cast<int>(i));
    }
    return out;
  }

  SubgraphView induced_on_mask(const std::vector<char>& mask) const {
    const auto locals = members(mask);
    return induced_on(locals);
  }

 private:
  static SubgraphView with_vertices(HostPtr host, std::vector<VertexId> vertices) {
    if (!host) throw InvalidArgument("null host");
    SubgraphView g;
    g.host_ = std::move(host);
    for (VertexId v : vertices) {
      if (!g.host_->valid(v)) throw InvalidArgument("vertex out of host range");
    }
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
      throw InvalidArgument("duplicate vertex");
    }
    g.ids_ = std::move(vertices);
    return g;
  }

  void set_adjacency(const std::vector<std::vector<int>>& adj) {
    offsets_.assign(adj.size() + 1, 0);
    adj_.clear();
    for (std::size_t i = 0; i < adj.size(); ++i) {
      adj_.insert(adj_.end(), adj[i].begin(), adj[i].end());
      offsets_[i + 1] = adj_.size();
    }
  }

  HostPtr host_;
  std::vector<VertexId> ids_;
  std::vector<std::size_t> offsets_ = {0};
  std::vector<int> adj_;
  bool induced_ = true;
};

inline SubgraphView induced_subgraph(HostPtr host, std::vector<VertexId> vertices) {
  return SubgraphView::induced(std::move(host), std::move(vertices));
}

inline SubgraphView full_host(HostPtr host) {
  auto all = host->all_vertices();
  return SubgraphView::induced(std::move(host), std::move(all));
}

struct DegreeStats {
  int min_degree = 0;
  int max_degree = 0;
  Rational average;
  std::vector<int> degrees;  // by local index
};

inline DegreeStats degree_stats(const SubgraphView& g) {
  DegreeStats s;
  if (g.empty()) return s;
  s.degrees.resize(g.size());
  s.min_degree = g.degree(0);
  for (int i = 0; i < static_cast<int>(g.size()); ++i) {
    s.degrees[i] = g.degree(i);
    s.min_degree = std::min(s.min_degree, s.degrees[i]);
    s.max_degree = std::max(s.max_degree, s.degrees[i]);
  }
  s.average = Rational(static_cast<std::int64_t>(2 * g.edge_count()),
                       static_cast<std::int64_t>(g.size()));
  return s;
}

// Minimum degree over vertices other than the excluded locals; returns a
// large value when no vertex qualifies.
inline int min_degree_excluding(const SubgraphView& g, std::initializer_list<int> skip) {
  int best = 1 << 30;
  for (int i = 0; i < static_cast<int>(g.size()); ++i) {
    if (std::find(skip.begin(), skip.end(), i) != skip.end()) continue;
    best = std::min(best, g.degree(i));
  }
  return best;
}

// Component label per local vertex (labels in order of smallest member).
inline std::vector<int> component_labels(const SubgraphView& g, int* count = nullptr) {
  std::vector<int> label(g.size(), -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < static_cast<int>(g.size()); ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u)) {
        if (label[w] < 0) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

inline bool is_connected(const SubgraphView& g) {
  int count = 0;
  component_labels(g, &count);
  return count <= 1;
}

}  // namespace hcpath
