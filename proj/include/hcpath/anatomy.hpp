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

#include "hcpath/blocks.hpp"
#include "hcpath/split.hpp"

namespace hcpath {

// An interior vertex of an endblock on one side together with its unique
// neighbour on the other side. Indices are locals of the split graph.
struct ExitVertexRecord {
  int endblock = -1;
  int exit = -1;
  int partner = -1;
};

// Exit vertices of one endblock of a split side. `forest` must be the block
// forest of that side. Throws when an interior vertex has two partners,
// which means the split lost more than one neighbour at that vertex.
inline std::vector<ExitVertexRecord> exit_vertices(const SubgraphView& g, const SplitOutcome& s,
                                                   bool a_side, const BlockForest& forest,
                                                   int endblock) {
  const auto& locals = a_side ? s.side_a_locals : s.side_b_locals;
  std::vector<ExitVertexRecord> out;
  for (int v : forest.interior(endblock)) {
    const int x = locals[v];
    int partner = -1;
    for (int w : g.neighbors(x)) {
      if (static_cast<bool>(s.in_a[w]) == a_side) continue;
      if (partner >= 0) throw ConstructionGap("exit vertex with more than one partner");
      partner = w;
    }
    if (partner >= 0) out.push_back({endblock, x, partner});
  }
  return out;
}

// Endblocks of either split side that hold neither the side's root in
// their interior nor two exit vertices. A smallest counterexample to the
// tight bound has none; on other inputs this is only a statistic.
inline int exit_shortfalls(const SubgraphView& g, const SplitOutcome& s) {
  int count = 0;
  for (bool a_side : {true, false}) {
    const SubgraphView& side = a_side ? s.side_a : s.side_b;
    const int root = a_side ? s.root_a : s.root_b;
    const BlockForest f = block_cut_tree(side);
    for (int e : f.endblocks) {
      if (f.blocks[e].size() < 2 || f.in_interior(e, root)) continue;
      if (exit_vertices(g, s, a_side, f, e).size() < 2) ++count;
    }
  }
  return count;
}

struct Limb {
  std::vector<int> vertices;  // sorted, includes the joint
  int joint = -1;
};

// Body, Core and limbs of a root vertex inside one connected side graph, in
// local indices of that side. When the root is not a cutvertex, every
// cutvertex of the body carries its own limb; `adjacent_joints` marks the
// case where two such cutvertices are adjacent, which is where this differs
// from taking components of side - Core.
struct LimbDecomposition {
  int root = -1;
  std::vector<int> body;
  std::vector<int> core;
  std::vector<Limb> limbs;
  std::vector<int> limb_of;  // per vertex: owning limb, -1 on the body
  bool adjacent_joints = false;
};

inline LimbDecomposition body_core_limbs(const SubgraphView& side, const BlockForest& forest, int root) {
  const int n = static_cast<int>(side.size());
  LimbDecomposition d;
  d.root = root;
  d.limb_of.assign(n, -1);
  std::vector<char> in_body(n, 0);
  if (forest.is_cut[root]) {
    d.body = {root};
    in_body[root] = 1;
  } else {
    d.body = forest.blocks[forest.blocks_of[root].front()];
    for (int v : d.body) {
      in_body[v] = 1;
      if (!forest.is_cut[v]) d.core.push_back(v);
    }
  }
  // Hanging pieces: components of side - body, each attached to exactly one
  // body vertex; group them by that vertex.
  std::vector<int> comp(n, -1);
  std::vector<int> comp_joint;
  for (int s = 0; s < n; ++s) {
    if (in_body[s] || comp[s] >= 0) continue;
    const int id = static_cast<int>(comp_joint.size());
    comp_joint.push_back(-1);
    std::vector<int> stack = {s};
    comp[s] = id;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : side.neighbors(u)) {
        if (in_body[w]) {
          comp_joint[id] = w;
        } else if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  const bool root_is_cut = forest.is_cut[root];
  std::vector<int> limb_for_joint(n, -1);
  std::vector<int> limb_for_comp(comp_joint.size(), -1);
  for (std::size_t c = 0; c < comp_joint.size(); ++c) {
    const int j = comp_joint[c];
    int id;
    if (root_is_cut || limb_for_joint[j] < 0) {
      id = static_cast<int>(d.limbs.size());
      d.limbs.push_back({{j}, j});
      if (!root_is_cut) limb_for_joint[j] = id;
    } else {
      id = limb_for_joint[j];
    }
    limb_for_comp[c] = id;
  }
  for (int v = 0; v < n; ++v) {
    if (comp[v] >= 0) {
      const int id = limb_for_comp[comp[v]];
      d.limb_of[v] = id;
      d.limbs[id].vertices.push_back(v);
    }
  }
  for (auto& limb : d.limbs) std::sort(limb.vertices.begin(), limb.vertices.end());
  if (!root_is_cut) {
    for (int u : d.body) {
      if (!forest.is_cut[u]) continue;
      for (int w : side.neighbors(u)) {
        if (w > u && in_body[w] && forest.is_cut[w]) d.adjacent_joints = true;
      }
    }
  }
  return d;
}

inline LimbDecomposition body_core_limbs(const SubgraphView& side, int root) {
  return body_core_limbs(side, block_cut_tree(side), root);
}

// All vertices lying on a path between two members of S, plus S. Computed
// on the block-cutvertex tree: the minimal subtree spanning S, then every
// block in it that actually lies between two members.
inline std::vector<int> span(const SubgraphView& g, const BlockForest& f, const std::vector<int>& S) {
  const int n = static_cast<int>(g.size());
  const int nb = static_cast<int>(f.blocks.size());
  // Tree nodes: blocks 0..nb-1, then one node per vertex (used only for cutvertices).
  const int nodes = nb + n;
  std::vector<std::vector<int>> adj(nodes);
  for (int c : f.cutvertices) {
    for (int b : f.blocks_of[c]) {
      adj[b].push_back(nb + c);
      adj[nb + c].push_back(b);
    }
  }
  std::vector<char> alive(nodes, 0), marked(nodes, 0);
  for (int b = 0; b < nb; ++b) alive[b] = 1;
  for (int c : f.cutvertices) alive[nb + c] = 1;
  std::vector<int> s_count(nodes, 0);
  std::vector<char> in_s(n, 0);
  for (int v : S) {
    if (in_s[v]) continue;
    in_s[v] = 1;
    const int node = f.is_cut[v] ? nb + v : f.blocks_of[v].front();
    marked[node] = 1;
    ++s_count[node];
  }
  std::vector<int> degree(nodes, 0);
  std::deque<int> leaves;
  for (int x = 0; x < nodes; ++x) {
    if (!alive[x]) continue;
    degree[x] = static_cast<int>(adj[x].size());
    if (degree[x] <= 1 && !marked[x]) leaves.push_back(x);
  }
  while (!leaves.empty()) {
    const int x = leaves.front();
    leaves.pop_front();
    if (!alive[x]) continue;
    alive[x] = 0;
    for (int y : adj[x]) {
      if (alive[y] && --degree[y] <= 1 && !marked[y]) leaves.push_back(y);
    }
  }
  std::vector<char> out(in_s.begin(), in_s.end());
  for (int b = 0; b < nb; ++b) {
    if (!alive[b]) continue;
    // A lone surviving block only lies between members if it holds two.
    if (degree[b] == 0 && s_count[b] < 2) continue;
    for (int v : f.blocks[b]) out[v] = 1;
  }
  return SubgraphView::members(out);
}

inline std::vector<int> span(const SubgraphView& g, const std::vector<int>& S) {
  return span(g, block_cut_tree(g), S);
}

}  // namespace hcpath
