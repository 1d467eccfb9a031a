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
#include <iterator>
#include <string>
#include <vector>

#include "hcpath/interaction.hpp"

namespace hcpath {

// A 2-connected piece J of a component of the interaction digraph, glued to
// the rest of the graph only at a1 (towards ra) and b1 (towards rb).
struct JExtraction {
  std::vector<int> J;           // graph locals, sorted
  int a1 = -1, b1 = -1;
  int closure_repairs = 0;
  bool multi_limb = false;
  bool two_connected = false;
  std::string diagnostic;
};

namespace detail {

struct JSeeds {
  std::vector<int> SA, SB;
  std::vector<int> forcedA, forcedB;
};

inline std::vector<int> side_span(const SplitState& st, const SideInfo& side, std::vector<int> seeds) {
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  if (seeds.empty()) return {};
  std::vector<int> local;
  for (int v : seeds) local.push_back(st.to_side[v]);
  std::vector<int> out;
  for (int v : span(side.view, side.forest, local)) out.push_back(side.locals[v]);
  std::sort(out.begin(), out.end());
  return out;
}

inline int nearest_to_root(const SplitState& st, const SideInfo& side, const std::vector<int>& set) {
  const auto dist = bfs_distances(side.view, st.to_side[side.root]);
  int best = -1;
  for (int v : set) {
    const int dv = dist[st.to_side[v]];
    if (dv < 0) continue;
    if (best < 0 || dv < dist[st.to_side[best]]) best = v;
  }
  return best;
}

inline JExtraction close_J(const SplitState& st, const std::vector<char>& in_gc, JSeeds seeds) {
  const SubgraphView& g = *st.g;
  JExtraction out;
  for (int round = 0; round <= static_cast<int>(g.size()); ++round) {
    std::vector<int> sa = seeds.SA, sb = seeds.SB;
    sa.insert(sa.end(), seeds.forcedA.begin(), seeds.forcedA.end());
    sb.insert(sb.end(), seeds.forcedB.begin(), seeds.forcedB.end());
    const auto JA = side_span(st, *st.A, sa);
    const auto JB = side_span(st, *st.B, sb);
    out.a1 = nearest_to_root(st, *st.A, JA);
    out.b1 = nearest_to_root(st, *st.B, JB);
    out.J = JA;
    out.J.insert(out.J.end(), JB.begin(), JB.end());
    std::sort(out.J.begin(), out.J.end());
    std::vector<char> in_j(g.size(), 0);
    for (int v : out.J) in_j[v] = 1;
    bool changed = false;
    auto adjoin = [&](int v) {
      (st.on_a(v) ? seeds.SA : seeds.SB).push_back(v);
      in_j[v] = 1;
      changed = true;
    };
    for (int r : {st.ra, st.rb}) {
      if (in_j[r]) continue;
      for (int w : g.neighbors(r)) {
        if (in_j[w] && w != out.a1 && w != out.b1) {
          adjoin(r);
          break;
        }
      }
    }
    for (int v : out.J) {
      if (v == out.a1 || v == out.b1) continue;
      for (int w : g.neighbors(v)) {
        if (!in_j[w] && in_gc[w] && !st.blocked[w]) {
          adjoin(w);
          ++out.closure_repairs;
        }
      }
    }
    if (!changed) break;
  }
  if (out.a1 < 0 || out.b1 < 0) {
    out.diagnostic = "J misses one side";
    return out;
  }
  out.two_connected = out.J.size() >= 3 && is_two_connected(g.induced_on(out.J));
  if (!out.two_connected) out.diagnostic = "J is not 2-connected";
  return out;
}

// Vertices of `from` (minus root) with a neighbour in `into` (minus root).
inline std::vector<int> facing(const SubgraphView& g, const std::vector<int>& from, int from_root,
                               const std::vector<char>& into) {
  std::vector<int> out;
  for (int v : from) {
    if (v == from_root) continue;
    for (int w : g.neighbors(v)) {
      if (into[w]) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

}  // namespace detail

// Extracts J from a component made only of limbs: either one limb on each
// side, or one limb on one side facing several limbs of the other root.
inline JExtraction extract_J(const SplitState& st, const InteractionDigraph& H,
                             const std::vector<int>& component) {
  const SubgraphView& g = *st.g;
  std::vector<int> on_a, on_b;
  std::vector<char> in_gc(g.size(), 0);
  for (int id : component) {
    const auto& node = H.nodes[id];
    if (node.core || id == H.special) {
      JExtraction bad;
      bad.diagnostic = "component holds a core or the special limb";
      return bad;
    }
    (node.a_side ? on_a : on_b).push_back(id);
    for (int v : node.vertices) in_gc[v] = 1;
  }
  if (on_a.empty() || on_b.empty() || (on_a.size() > 1 && on_b.size() > 1)) {
    JExtraction bad;
    bad.diagnostic = "component shape not handled";
    return bad;
  }

  auto mask_without = [&](const std::vector<int>& vs, int root) {
    std::vector<char> m(g.size(), 0);
    for (int v : vs) {
      if (v != root) m[v] = 1;
    }
    return m;
  };
  auto two_limb = [&](int k, int l) {
    const auto& K = H.nodes[k];
    const auto& L = H.nodes[l];
    const int rk = K.a_side ? st.ra : st.rb;
    const int rl = L.a_side ? st.ra : st.rb;
    detail::JSeeds s;
    auto sk = detail::facing(g, K.vertices, rk, mask_without(L.vertices, rl));
    auto sl = detail::facing(g, L.vertices, rl, mask_without(K.vertices, rk));
    (K.a_side ? s.SA : s.SB) = sk;
    (L.a_side ? s.SA : s.SB) = sl;
    return detail::close_J(st, in_gc, s);
  };
  if (on_a.size() == 1 && on_b.size() == 1) return two_limb(on_a[0], on_b[0]);

  // One limb K facing limbs L_1..L_t of the other root.
  const bool k_on_a = on_a.size() == 1;
  const int k = k_on_a ? on_a[0] : on_b[0];
  const auto& Ls = k_on_a ? on_b : on_a;
  const auto& K = H.nodes[k];
  const int rk = k_on_a ? st.ra : st.rb;
  const int rl = k_on_a ? st.rb : st.ra;
  const SideInfo& kside = k_on_a ? *st.A : *st.B;
  const int t = static_cast<int>(Ls.size());
  std::vector<std::vector<int>> S(t), T(t);
  for (int i = 0; i < t; ++i) {
    const auto& L = H.nodes[Ls[i]];
    S[i] = detail::facing(g, K.vertices, rk, mask_without(L.vertices, rl));
    T[i] = detail::facing(g, L.vertices, rl, mask_without(K.vertices, rk));
  }
  std::vector<int> big, small;
  for (int i = 0; i < t; ++i) (T[i].size() >= 2 ? big : small).push_back(i);

  // Merge groups whose spans on K's side share two vertices.
  std::vector<std::vector<int>> groups;
  for (int i : big) groups.push_back({i});
  auto group_span = [&](const std::vector<int>& grp) {
    std::vector<int> seeds;
    for (int i : grp) seeds.insert(seeds.end(), S[i].begin(), S[i].end());
    return detail::side_span(st, kside, seeds);
  };
  for (bool merged = true; merged;) {
    merged = false;
    for (std::size_t x = 0; x < groups.size() && !merged; ++x) {
      for (std::size_t y = x + 1; y < groups.size() && !merged; ++y) {
        const auto sx = group_span(groups[x]), sy = group_span(groups[y]);
        std::vector<int> common;
        std::set_intersection(sx.begin(), sx.end(), sy.begin(), sy.end(), std::back_inserter(common));
        if (common.size() >= 2) {
          groups[x].insert(groups[x].end(), groups[y].begin(), groups[y].end());
          groups.erase(groups.begin() + static_cast<long>(y));
          merged = true;
        }
      }
    }
  }

  JExtraction last;
  last.diagnostic = "no limb group gives a 2-connected J";
  for (const auto& grp : groups) {
    const auto sm = group_span(grp);
    const int attach = detail::nearest_to_root(st, kside, sm);
    std::vector<char> in_sm(g.size(), 0);
    for (int v : sm) {
      if (v != attach) in_sm[v] = 1;
    }
    std::vector<int> I = grp;
    for (int i : small) {
      const auto& L = H.nodes[Ls[i]];
      for (int v : L.vertices) {
        if (v == rl) continue;
        bool hit = false;
        for (int w : g.neighbors(v)) hit = hit || in_sm[w];
        if (hit) {
          I.push_back(i);
          break;
        }
      }
    }
    JExtraction r;
    if (I.size() == 1) {
      r = two_limb(k, Ls[I[0]]);
    } else {
      detail::JSeeds s;
      auto& sk = k_on_a ? s.SA : s.SB;
      auto& fl = k_on_a ? s.forcedB : s.forcedA;
      for (int i : I) {
        sk.insert(sk.end(), S[i].begin(), S[i].end());
        const auto& L = H.nodes[Ls[i]];
        fl.insert(fl.end(), L.vertices.begin(), L.vertices.end());
      }
      r = detail::close_J(st, in_gc, s);
      r.multi_limb = true;
    }
    if (r.two_connected) return r;
    last = r;
  }

  // Every limb of the other root at once.
  detail::JSeeds s;
  auto& sk = k_on_a ? s.SA : s.SB;
  auto& fl = k_on_a ? s.forcedB : s.forcedA;
  for (int i = 0; i < t; ++i) {
    sk.insert(sk.end(), S[i].begin(), S[i].end());
    const auto& L = H.nodes[Ls[i]];
    fl.insert(fl.end(), L.vertices.begin(), L.vertices.end());
  }
  auto r = detail::close_J(st, in_gc, s);
  r.multi_limb = true;
  if (r.two_connected) return r;
  return last.J.empty() ? r : last;
}

}  // namespace hcpath
