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
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hcpath/subgraph.hpp"

namespace hcpath {

// Blocks (maximal 2-connected pieces, bridges, isolated vertices) of a view
// and the block-cutvertex incidences between them. Everything is in local
// indices of the view the forest was computed on.
struct BlockForest {
  std::vector<std::vector<int>> blocks;      // sorted members, blocks ordered by smallest member
  std::vector<std::size_t> block_edges;      // edges per block
  std::vector<char> is_cut;                  // per vertex
  std::vector<int> cutvertices;              // ascending
  std::vector<std::vector<int>> blocks_of;   // per vertex, ascending block ids
  std::vector<int> endblocks;                // blocks with at most one cutvertex
  std::vector<int> cut_of;                   // per block: its cutvertex if an endblock with one, else -1
  int components = 0;
  bool connected = true;

  bool is_endblock(int block) const {
    return std::binary_search(endblocks.begin(), endblocks.end(), block);
  }
  // Block members other than the endblock's cutvertex.
  std::vector<int> interior(int block) const {
    std::vector<int> out;
    for (int v : blocks[block]) {
      if (v != cut_of[block]) out.push_back(v);
    }
    return out;
  }
  bool in_block(int block, int v) const {
    return std::binary_search(blocks[block].begin(), blocks[block].end(), v);
  }
  bool in_interior(int block, int v) const { return v != cut_of[block] && in_block(block, v); }
  std::vector<int> cuts_of_block(int block) const {
    std::vector<int> out;
    for (int v : blocks[block]) {
      if (is_cut[v]) out.push_back(v);
    }
    return out;
  }
};

inline BlockForest block_cut_tree(const SubgraphView& g) {
  const int n = static_cast<int>(g.size());
  BlockForest f;
  f.is_cut.assign(n, 0);
  f.blocks_of.assign(n, {});
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::size_t> next_edge(n, 0);
  std::vector<std::pair<int, int>> edge_stack;
  std::vector<std::pair<std::vector<int>, std::size_t>> raw;
  int timer = 0;

  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    ++f.components;
    if (g.degree(root) == 0) {
      disc[root] = timer++;
      raw.push_back({{root}, 0});
      continue;
    }
    int root_children = 0;
    std::vector<int> stack = {root};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      const int u = stack.back();
      auto nb = g.neighbors(u);
      if (next_edge[u] < nb.size()) {
        const int w = nb[next_edge[u]++];
        if (disc[w] < 0) {
          parent[w] = u;
          disc[w] = low[w] = timer++;
          edge_stack.emplace_back(u, w);
          stack.push_back(w);
          if (u == root) ++root_children;
        } else if (w != parent[u] && disc[w] < disc[u]) {
          edge_stack.emplace_back(u, w);
          low[u] = std::min(low[u], disc[w]);
        }
        continue;
      }
      stack.pop_back();
      const int p = parent[u];
      if (p < 0) continue;
      low[p] = std::min(low[p], low[u]);
      if (low[u] >= disc[p]) {
        if (p != root) f.is_cut[p] = 1;
        std::vector<int> members;
        std::size_t edges = 0;
        while (true) {
          const auto e = edge_stack.back();
          edge_stack.pop_back();
          members.push_back(e.first);
          members.push_back(e.second);
          ++edges;
          if (e.first == p && e.second == u) break;
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        raw.emplace_back(std::move(members), edges);
      }
    }
    if (root_children > 1) f.is_cut[root] = 1;
  }

  std::sort(raw.begin(), raw.end());
  for (auto& [members, edges] : raw) {
    const int id = static_cast<int>(f.blocks.size());
    for (int v : members) f.blocks_of[v].push_back(id);
    f.blocks.push_back(std::move(members));
    f.block_edges.push_back(edges);
  }
  for (int v = 0; v < n; ++v) {
    if (f.is_cut[v]) f.cutvertices.push_back(v);
  }
  f.cut_of.assign(f.blocks.size(), -1);
  for (int b = 0; b < static_cast<int>(f.blocks.size()); ++b) {
    const auto cuts = f.cuts_of_block(b);
    if (cuts.size() <= 1) {
      f.endblocks.push_back(b);
      if (cuts.size() == 1) f.cut_of[b] = cuts[0];
    }
  }
  f.connected = f.components <= 1;
  return f;
}

// Connected with at least two vertices and a single block. A lone edge
// counts, matching the usual biconnected-component convention.
inline bool is_two_connected(const SubgraphView& g) {
  if (g.size() < 2) return false;
  const BlockForest f = block_cut_tree(g);
  return f.connected && f.blocks.size() == 1;
}

// Graphviz rendering of the block-cutvertex tree: blocks as boxes,
// cutvertices as circles.
inline std::string to_dot(const SubgraphView& g, const BlockForest& f) {
  auto name = [&](int v) {
    const HostGraph& h = g.host();
    if (h.kind() == HostKind::kHypercube) return std::to_string(g.id(v));
    std::string s = "(";
    const auto c = h.coordinates(g.id(v));
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
  };
  std::ostringstream out;
  out << "graph block_cut_tree {\n";
  for (std::size_t b = 0; b < f.blocks.size(); ++b) {
    out << "  B" << b << " [shape=box,label=\"B" << b << ": {";
    for (std::size_t i = 0; i < f.blocks[b].size(); ++i) {
      out << (i ? " " : "") << name(f.blocks[b][i]);
    }
    out << "}\"];\n";
  }
  for (int c : f.cutvertices) {
    out << "  C" << c << " [shape=circle,label=\"" << name(c) << "\"];\n";
  }
  for (int c : f.cutvertices) {
    for (int b : f.blocks_of[c]) out << "  B" << b << " -- C" << c << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace hcpath
