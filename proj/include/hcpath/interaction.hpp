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
#include <functional>
#include <string>
#include <vector>

#include "hcpath/split_state.hpp"

namespace hcpath {

enum class HVariant { kWeak, kTight, kDegreeOne };

// Node of the interaction digraph: the core or one limb of either root.
struct HNode {
  bool a_side = true;
  bool core = false;
  int limb = -1;                // index into the side's limbs, -1 for a core
  std::vector<int> vertices;    // graph locals, sorted
  int joint = -1;               // -1 for a core
};

// One arc per limb endblock: from the node holding its chosen exit to the
// node holding that exit's partner.
struct HArc {
  int from = -1, to = -1;
  bool from_a = true;
  int endblock = -1;            // index into the side's endblocks
  int exit = -1;
  int partner = -1;
};

struct InteractionDigraph {
  HVariant variant = HVariant::kWeak;
  std::vector<HNode> nodes;
  std::vector<HArc> arcs;
  std::vector<int> node_of;     // graph local -> node, -1 for a cut root
  int special = -1;             // degree-one variant: the limb holding a
  int core_a = -1, core_b = -1;

  std::vector<int> out_degree() const {
    std::vector<int> d(nodes.size(), 0);
    for (const auto& e : arcs) ++d[e.from];
    return d;
  }

  // Undirected components of the underlying multigraph.
  std::vector<std::vector<int>> components() const {
    const int n = static_cast<int>(nodes.size());
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : arcs) {
      adj[e.from].push_back(e.to);
      adj[e.to].push_back(e.from);
    }
    std::vector<int> seen(n, 0);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
      if (seen[s]) continue;
      std::vector<int> comp, stack = {s};
      seen[s] = 1;
      while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        comp.push_back(u);
        for (int w : adj[u]) {
          if (!seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }

  std::vector<int> arcs_between(int u, int v) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      const auto& e = arcs[i];
      if ((e.from == u && e.to == v) || (e.from == v && e.to == u)) out.push_back(static_cast<int>(i));
    }
    return out;
  }

  std::vector<int> neighbours(int u) const {
    std::vector<int> out;
    for (const auto& e : arcs) {
      if (e.from == u) out.push_back(e.to);
      if (e.to == u) out.push_back(e.from);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

// Builds the digraph for a split state. `admits(endblock side, index, x)`
// is consulted in the tight variant: it must say whether the endblock can
// supply a long enough path from its cutvertex to x. In the degree-one
// variant `forced_exit` is the neighbour of a across the split; its
// endblock must use it. Throws ConstructionGap when some limb endblock has
// no usable exit.
inline InteractionDigraph build_interaction_digraph(
    const SplitState& st, HVariant variant,
    const std::function<bool(bool, int, int)>& admits = {}, int forced_exit = -1) {
  const SubgraphView& g = *st.g;
  InteractionDigraph H;
  H.variant = variant;
  H.node_of.assign(g.size(), -1);
  auto add_side = [&](const SideInfo& side, bool a_side) {
    HNode core;
    core.a_side = a_side;
    core.core = true;
    core.vertices = side.core;
    std::sort(core.vertices.begin(), core.vertices.end());
    const int core_id = static_cast<int>(H.nodes.size());
    for (int v : core.vertices) H.node_of[v] = core_id;
    H.nodes.push_back(std::move(core));
    (a_side ? H.core_a : H.core_b) = core_id;
    for (std::size_t i = 0; i < side.limbs.size(); ++i) {
      HNode node;
      node.a_side = a_side;
      node.limb = static_cast<int>(i);
      node.vertices = side.limbs[i];
      node.joint = side.joints[i];
      const int id = static_cast<int>(H.nodes.size());
      for (int v : node.vertices) {
        if (v != side.root || !side.root_is_cut()) H.node_of[v] = id;
      }
      H.nodes.push_back(std::move(node));
    }
  };
  add_side(*st.A, true);
  add_side(*st.B, false);
  auto limb_node = [&](bool a_side, int limb) {
    int seen = -1;
    for (std::size_t i = 0; i < H.nodes.size(); ++i) {
      if (H.nodes[i].a_side == a_side && H.nodes[i].limb == limb) seen = static_cast<int>(i);
    }
    return seen;
  };
  if (variant == HVariant::kDegreeOne) H.special = H.node_of[st.pendant >= 0 ? st.pendant : st.a];

  // Candidate exits per limb endblock, then a backtracking choice that keeps
  // the pairing condition: no chosen exit is the partner of another.
  struct Slot {
    bool a_side;
    int endblock;
    int node;
    std::vector<ExitVertexRecord> options;
  };
  std::vector<Slot> slots;
  auto collect = [&](const SideInfo& side, bool a_side) {
    for (std::size_t e = 0; e < side.endblocks.size(); ++e) {
      const auto& eb = side.endblocks[e];
      if (eb.limb < 0) continue;
      const int node = limb_node(a_side, eb.limb);
      if (node == H.special && node >= 0) continue;
      Slot slot{a_side, static_cast<int>(e), node, {}};
      const bool forced = forced_exit >= 0 &&
                          std::binary_search(eb.interior.begin(), eb.interior.end(), forced_exit);
      for (const auto& x : eb.exits) {
        if (forced) {
          if (x.exit == forced_exit) slot.options.push_back(x);
          continue;
        }
        if (x.partner == st.a || x.partner == st.b || x.partner == st.ra || x.partner == st.rb) continue;
        if (variant == HVariant::kTight && admits && !admits(a_side, static_cast<int>(e), x.exit)) continue;
        slot.options.push_back(x);
      }
      if (slot.options.empty()) {
        throw ConstructionGap(std::string("limb endblock without a usable exit on side ") +
                              (a_side ? "A" : "B"));
      }
      slots.push_back(std::move(slot));
    }
  };
  collect(*st.A, true);
  collect(*st.B, false);

  std::vector<int> choice(slots.size(), -1);
  std::vector<char> chosen_exit(g.size(), 0), chosen_partner(g.size(), 0);
  long steps = 0;
  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == slots.size()) return true;
    if (++steps > 200000) return false;
    for (std::size_t k = 0; k < slots[i].options.size(); ++k) {
      const auto& x = slots[i].options[k];
      if (chosen_partner[x.exit] || chosen_exit[x.partner]) continue;
      ++chosen_exit[x.exit];
      ++chosen_partner[x.partner];
      choice[i] = static_cast<int>(k);
      if (assign(i + 1)) return true;
      --chosen_exit[x.exit];
      --chosen_partner[x.partner];
    }
    return false;
  };
  if (!assign(0)) throw ConstructionGap("no exit choice avoids pairing exits with partners");

  for (std::size_t i = 0; i < slots.size(); ++i) {
    const auto& x = slots[i].options[choice[i]];
    HArc arc;
    arc.from = slots[i].node;
    arc.to = H.node_of[x.partner];
    arc.from_a = slots[i].a_side;
    arc.endblock = slots[i].endblock;
    arc.exit = x.exit;
    arc.partner = x.partner;
    if (arc.to < 0) throw ConstructionGap("exit partner is a cut root");
    H.arcs.push_back(arc);
  }
  return H;
}

}  // namespace hcpath
