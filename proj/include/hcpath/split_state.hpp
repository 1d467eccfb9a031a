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
#include <memory>
#include <utility>
#include <vector>

#include "hcpath/anatomy.hpp"
#include "hcpath/blocks.hpp"
#include "hcpath/paths.hpp"
#include "hcpath/split.hpp"

namespace hcpath {

// An endblock of one side, translated to locals of the split graph.
struct SideEndblock {
  int block = -1;               // id in the side's forest
  int cut = -1;                 // cutvertex, -1 if the side is a single block
  std::vector<int> members;     // sorted
  std::vector<int> interior;    // sorted
  std::vector<ExitVertexRecord> exits;
  int limb = -1;                // limb of the side root holding the interior, -1 if none
};

// One side of a split seen from the split graph: its block structure and the
// Body/Core/limb anatomy around its root.
struct SideInfo {
  SubgraphView view;
  std::vector<int> locals;      // side local -> graph local
  BlockForest forest;
  LimbDecomposition anatomy;
  int root = -1;                // graph local
  std::vector<int> body;        // graph locals
  std::vector<int> core;
  std::vector<std::vector<int>> limbs;  // graph locals, sorted
  std::vector<int> joints;
  std::vector<SideEndblock> endblocks;

  bool two_connected() const { return forest.blocks.size() == 1 && view.size() >= 2; }
  bool root_is_cut() const { return anatomy.body.size() == 1 && anatomy.body[0] == anatomy.root && view.size() > 1; }
};

// The split graph together with both sides. `a`, `b` are the endpoints of
// the path under construction; `ra`, `rb` are the roots of the limb
// anatomy, which differ from the endpoints only in the degree-one variant
// (a has a single neighbour ra on its side and is kept out of the middle).
struct SplitState {
  const SubgraphView* g = nullptr;
  int a = -1, b = -1;
  int ra = -1, rb = -1;
  std::shared_ptr<const SideInfo> A, B;
  std::vector<char> side;       // 0 on A, 1 on B
  std::vector<int> to_side;     // graph local -> side local
  std::vector<char> blocked;    // never used in the middle of a path
  int direction = -1;
  bool mirrored = false;
  int pendant = -1;             // degree-one variant: the endpoint kept off the middle

  bool on_a(int v) const { return side[v] == 0; }
  const SideInfo& side_of(int v) const { return on_a(v) ? *A : *B; }

  SplitState mirror() const {
    SplitState m = *this;
    std::swap(m.a, m.b);
    std::swap(m.ra, m.rb);
    std::swap(m.A, m.B);
    for (auto& s : m.side) s = static_cast<char>(1 - s);
    m.mirrored = !mirrored;
    return m;
  }

  // Graph-local membership mask of a list.
  std::vector<char> mask(const std::vector<int>& vs) const {
    std::vector<char> m(g->size(), 0);
    for (int v : vs) m[v] = 1;
    return m;
  }
};

namespace detail {

inline std::shared_ptr<SideInfo> make_side(const SubgraphView& g, const SplitOutcome& s, bool a_side,
                                           int root) {
  auto info = std::make_shared<SideInfo>();
  info->view = a_side ? s.side_a : s.side_b;
  info->locals = a_side ? s.side_a_locals : s.side_b_locals;
  info->root = root;
  info->forest = block_cut_tree(info->view);
  std::vector<int> to_side(g.size(), -1);
  for (std::size_t i = 0; i < info->locals.size(); ++i) to_side[info->locals[i]] = static_cast<int>(i);
  info->anatomy = body_core_limbs(info->view, info->forest, to_side[root]);
  auto lift = [&](const std::vector<int>& vs) {
    std::vector<int> out;
    out.reserve(vs.size());
    for (int v : vs) out.push_back(info->locals[v]);
    return out;
  };
  info->body = lift(info->anatomy.body);
  info->core = lift(info->anatomy.core);
  for (const auto& limb : info->anatomy.limbs) {
    info->limbs.push_back(lift(limb.vertices));
    info->joints.push_back(info->locals[limb.joint]);
  }
  for (int e : info->forest.endblocks) {
    if (info->forest.blocks.size() == 1 && info->view.size() == 1) break;
    SideEndblock eb;
    eb.block = e;
    eb.cut = info->forest.cut_of[e] >= 0 ? info->locals[info->forest.cut_of[e]] : -1;
    eb.members = lift(info->forest.blocks[e]);
    eb.interior = lift(info->forest.interior(e));
    if (eb.cut >= 0) {
      eb.exits = exit_vertices(g, s, a_side, info->forest, e);
      for (int v : info->forest.interior(e)) {
        if (info->anatomy.limb_of[v] >= 0) {
          eb.limb = info->anatomy.limb_of[v];
          break;
        }
      }
    }
    info->endblocks.push_back(std::move(eb));
  }
  return info;
}

}  // namespace detail

inline SplitState make_split_state(const SubgraphView& g, const SplitOutcome& s, int a, int b,
                                   int ra, int rb) {
  SplitState st;
  st.g = &g;
  st.a = a;
  st.b = b;
  st.ra = ra;
  st.rb = rb;
  st.direction = s.direction;
  st.side.assign(g.size(), 1);
  st.to_side.assign(g.size(), -1);
  for (std::size_t i = 0; i < s.side_a_locals.size(); ++i) {
    st.side[s.side_a_locals[i]] = 0;
    st.to_side[s.side_a_locals[i]] = static_cast<int>(i);
  }
  for (std::size_t i = 0; i < s.side_b_locals.size(); ++i) st.to_side[s.side_b_locals[i]] = static_cast<int>(i);
  st.A = detail::make_side(g, s, true, ra);
  st.B = detail::make_side(g, s, false, rb);
  st.blocked.assign(g.size(), 0);
  return st;
}

}  // namespace hcpath
