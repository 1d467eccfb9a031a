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

// The recursive path builder. Every call works on one SubgraphView in its
// local indices, splits it, and tries the construction rules in a fixed
// order: C1..C4 on endblocks of the two sides, C5/C6 on the interaction
// digraph, C7/C8 on the extracted piece J, and C9 when a split root has a
// single neighbour on its side. A rule is accepted only when its assembled
// path is simple, joins the requested endpoints and meets the bound.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hcpath/certificate.hpp"
#include "hcpath/extract_j.hpp"
#include "hcpath/interaction.hpp"
#include "hcpath/oracle.hpp"
#include "hcpath/paths.hpp"
#include "hcpath/split_state.hpp"

namespace hcpath {

struct EngineOptions {
  int oracle_threshold = 20;
  std::uint64_t fallback_budget = 20'000'000;
  int max_candidates = 3;
  int max_directions = 2;
  int max_h_paths = 12;
  int max_trace = 4000;
  bool use_cache = true;
  // Rule ids to skip ("C2", "C9", "G3", ...). Used to exercise later rules.
  std::vector<std::string> disabled_rules;
  // Try splits whose sides have the most blocks first.
  bool prefer_fragmented_splits = false;

  bool enabled(std::string_view rule) const {
    return std::find(disabled_rules.begin(), disabled_rules.end(), rule) == disabled_rules.end();
  }
};

struct EngineStats {
  long calls = 0;
  long oracle_leaves = 0;
  long cache_hits = 0;
  long fallbacks = 0;
  long j_extractions = 0;
  long j_failures = 0;
  long closure_repairs = 0;
  long adjacent_joints = 0;
  long construction_gaps = 0;
  int max_depth = 0;
  // (length, d) of every accepted C5 path.
  std::vector<std::pair<std::int64_t, int>> c5_paths;
  std::vector<std::string> diagnostics;
};

// A path in locals of the graph it was built in, with the rules behind it.
struct Built {
  LocalPath path;
  std::vector<std::pair<int, std::string>> trace;  // (depth, rule)
  bool fallback = false;
  std::int64_t length() const { return static_cast<std::int64_t>(path.size()) - 1; }
};

namespace engine_detail {

inline std::vector<char> mask_of(std::size_t n, const std::vector<int>& vs) {
  std::vector<char> m(n, 0);
  for (int v : vs) m[v] = 1;
  return m;
}

inline bool contains_sorted(const std::vector<int>& v, int x) {
  return std::binary_search(v.begin(), v.end(), x);
}

inline bool simple_path(const SubgraphView& g, const LocalPath& p, int a, int b) {
  if (p.empty() || p.front() != a || p.back() != b) return false;
  std::vector<char> seen(g.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] >= static_cast<int>(g.size()) || seen[p[i]]) return false;
    seen[p[i]] = 1;
    if (i > 0 && !g.has_edge(p[i - 1], p[i])) return false;
  }
  return true;
}

// Concatenates pieces; consecutive pieces share their boundary vertex or are
// joined by an edge (checked later, when the whole path is validated).
class Chain {
 public:
  Chain& add(const LocalPath& piece) {
    for (int v : piece) push(v);
    return *this;
  }
  Chain& add_reversed(const LocalPath& piece) {
    for (auto it = piece.rbegin(); it != piece.rend(); ++it) push(*it);
    return *this;
  }
  Chain& add(const Built& piece) {
    absorb(piece);
    return add(piece.path);
  }
  Chain& add_reversed(const Built& piece) {
    absorb(piece);
    return add_reversed(piece.path);
  }
  Chain& vertex(int v) {
    push(v);
    return *this;
  }
  Built take(const std::string& rule) {
    Built b;
    b.path = std::move(path_);
    b.fallback = fallback_;
    b.trace.push_back({0, rule});
    for (auto& [depth, r] : trace_) b.trace.push_back({depth + 1, r});
    return b;
  }
  const LocalPath& path() const { return path_; }

 private:
  void push(int v) {
    if (path_.empty() || path_.back() != v) path_.push_back(v);
  }
  void absorb(const Built& piece) {
    fallback_ = fallback_ || piece.fallback;
    trace_.insert(trace_.end(), piece.trace.begin(), piece.trace.end());
  }
  LocalPath path_;
  std::vector<std::pair<int, std::string>> trace_;
  bool fallback_ = false;
};

inline LocalPath reversed(LocalPath p) {
  std::reverse(p.begin(), p.end());
  return p;
}

}  // namespace engine_detail

class Engine {
 public:
  explicit Engine(Mode mode, int k = 1, EngineOptions opt = {}) : mode_(mode), k_(k), opt_(opt) {}

  const EngineStats& stats() const { return stats_; }
  const EngineOptions& options() const { return opt_; }
  Mode mode() const { return mode_; }

  // Bound the mode guarantees for (g, a, b, d).
  std::int64_t target(const SubgraphView& g, int a, int b, int d) const {
    switch (mode_) {
      case Mode::kWeak:
        return weak_bound(d);
      case Mode::kTight:
        return tight_bound(d, even_cube_case(g, g.id(a), g.id(b), d));
      case Mode::kGeneral:
        return general_bound(d, k_);
    }
    return 0;
  }

  // True when (g, a, b, d) satisfies the hypotheses of the construction.
  static bool admissible(const SubgraphView& g, int a, int b, int d) {
    const int n = static_cast<int>(g.size());
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) return false;
    if (n == 2) return d <= 1 && g.has_edge(a, b);
    if (!is_two_connected(g)) return false;
    return min_degree_excluding(g, {a, b}) >= d;
  }

  // A path from a to b. Returns nullopt when the hypotheses fail; otherwise
  // the path is always valid and meets the bound unless every rule and the
  // bounded search came up short (then the best path found is returned and
  // `fallback` is set).
  std::optional<Built> solve(const SubgraphView& g, int a, int b, int d) {
    if (!admissible(g, a, b, d)) return std::nullopt;
    if (!frames_.empty()) {
      const auto [size, dd] = frames_.back();
      if (!(g.size() < size || (g.size() == size && d < dd))) {
        throw std::logic_error("recursion does not shrink (|V|, d)");
      }
    }
    ++stats_.calls;
    std::string key;
    if (opt_.use_cache) {
      key = cache_key(g, a, b, d);
      auto it = cache_.find(key);
      if (it != cache_.end()) {
        ++stats_.cache_hits;
        Built out;
        out.trace = it->second.trace;
        out.fallback = it->second.fallback;
        for (VertexId id : it->second.ids) out.path.push_back(g.index_of(id));
        return out;
      }
    }
    frames_.push_back({g.size(), d});
    stats_.max_depth = std::max(stats_.max_depth, static_cast<int>(frames_.size()) - 1);
    struct Pop {
      std::vector<std::pair<std::size_t, int>>& f;
      ~Pop() { f.pop_back(); }
    } pop{frames_};
    Built out = solve_uncached(g, a, b, d);
    if (static_cast<int>(out.trace.size()) > opt_.max_trace) {
      out.trace.resize(opt_.max_trace);
      out.trace.push_back({0, "TRUNCATED"});
    }
    if (opt_.use_cache) {
      CacheEntry e;
      for (int v : out.path) e.ids.push_back(g.id(v));
      e.trace = out.trace;
      e.fallback = out.fallback;
      cache_.emplace(std::move(key), std::move(e));
    }
    return out;
  }

 private:
  struct CacheEntry {
    std::vector<VertexId> ids;
    std::vector<std::pair<int, std::string>> trace;
    bool fallback = false;
  };

  static std::string cache_key(const SubgraphView& g, int a, int b, int d) {
    std::string key;
    key.reserve(8 * (g.size() + 4));
    auto put = [&](std::uint64_t x) { key.append(reinterpret_cast<const char*>(&x), sizeof x); };
    put(g.size());
    put(g.edge_count());
    put(g.id(a));
    put(g.id(b));
    put(static_cast<std::uint64_t>(d));
    for (VertexId id : g.vertices()) put(id);
    return key;
  }

  void diagnose(std::string msg) {
    if (stats_.diagnostics.size() < 200) stats_.diagnostics.push_back(std::move(msg));
  }

  // ---- small helpers on one graph -------------------------------------------------------

  struct Piece {
    SubgraphView view;
    std::vector<int> locals;
    int index(int v) const {
      auto it = std::lower_bound(locals.begin(), locals.end(), v);
      return it != locals.end() && *it == v ? static_cast<int>(it - locals.begin()) : -1;
    }
  };

  static Piece piece(const SubgraphView& g, std::vector<int> locals) {
    std::sort(locals.begin(), locals.end());
    locals.erase(std::unique(locals.begin(), locals.end()), locals.end());
    Piece p;
    p.view = g.induced_on(locals);
    p.locals = std::move(locals);
    return p;
  }

  // Recursive call on g[locals] between s and t. With `relax`, d is lowered
  // to what the piece actually offers, which keeps the call admissible.
  std::optional<Built> sub(const SubgraphView& g, const std::vector<int>& locals, int s, int t, int d,
                           bool relax = true) {
    Piece p = piece(g, locals);
    const int cs = p.index(s), ct = p.index(t);
    if (cs < 0 || ct < 0 || cs == ct) return std::nullopt;
    if (p.view.size() == 2) {
      if (!p.view.has_edge(cs, ct)) return std::nullopt;
      Built b;
      b.path = {s, t};
      b.trace.push_back({0, "EDGE"});
      return b;
    }
    int dd = d;
    if (relax) dd = std::max(0, std::min(d, min_degree_excluding(p.view, {cs, ct})));
    auto r = solve(p.view, cs, ct, dd);
    if (!r) return std::nullopt;
    for (int& v : r->path) v = p.locals[v];
    return r;
  }

  std::int64_t predict(const SubgraphView& g, const std::vector<int>& locals, int s, int t, int d) {
    if (locals.size() == 2) return 1;
    Piece p = piece(g, locals);
    const int cs = p.index(s), ct = p.index(t);
    if (cs < 0 || ct < 0 || cs == ct) return 0;
    return target(p.view, cs, ct, d);
  }

  static std::optional<LocalPath> connect(const SubgraphView& g, int s, int t, const std::vector<char>& allowed) {
    if (s == t) return LocalPath{s};
    return shortest_path(g, s, t, allowed);
  }

  std::vector<char> side_mask(const SplitState& st, const SideInfo& side, const std::vector<char>* used) const {
    std::vector<char> m(st.g->size(), 0);
    for (int v : side.locals) m[v] = !st.blocked[v] && !(used && (*used)[v]);
    return m;
  }

  static void clear(std::vector<char>& m, const std::vector<int>& vs) {
    for (int v : vs) m[v] = 0;
  }
  static void clear(std::vector<char>& m, const LocalPath& vs, int keep) {
    for (int v : vs) {
      if (v != keep) m[v] = 0;
    }
  }

  bool accept(const SubgraphView& g, int a, int b, std::int64_t tgt, Built& built, const SplitState* st = nullptr) {
    if (st && st->mirrored) std::reverse(built.path.begin(), built.path.end());
    if (!engine_detail::simple_path(g, built.path, a, b)) return false;
    if (!best_ || built.length() > best_->length()) best_ = built;
    return built.length() >= tgt;
  }

  // ---- top level of one call ------------------------------------------------------------

  Built solve_uncached(const SubgraphView& g, int a, int b, int d) {
    const std::int64_t tgt = target(g, a, b, d);
    auto saved_best = std::move(best_);
    best_.reset();
    struct Restore {
      std::optional<Built>& slot;
      std::optional<Built> saved;
      ~Restore() { slot = std::move(saved); }
    } restore{best_, std::move(saved_best)};

    const int base_limit = mode_ == Mode::kGeneral ? k_ + 3 : 2;
    if (d <= base_limit) {
      if (auto r = base_case(g, a, b, d, tgt)) return *r;
    } else if (static_cast<int>(g.size()) <= opt_.oracle_threshold) {
      ++stats_.oracle_leaves;
      const auto r = oracle_detail::longest_between(g, a, b, opt_.fallback_budget);
      Built out;
      out.path = r.witness;
      out.trace.push_back({0, "ORACLE"});
      if (engine_detail::simple_path(g, out.path, a, b) && out.length() >= tgt) return out;
      if (engine_detail::simple_path(g, out.path, a, b)) best_ = out;
    } else {
      std::optional<Built> r;
      try {
        r = mode_ == Mode::kGeneral ? general_rules(g, a, b, d, tgt) : rules(g, a, b, d, tgt);
      } catch (const ConstructionGap& e) {
        ++stats_.construction_gaps;
        diagnose(std::string("construction gap: ") + e.what());
      }
      if (r) return *r;
    }
    return fallback(g, a, b, d, tgt);
  }

  Built fallback(const SubgraphView& g, int a, int b, int d, std::int64_t tgt) {
    ++stats_.fallbacks;
    diagnose("fallback search on |V|=" + std::to_string(g.size()) + " d=" + std::to_string(d) +
             " target=" + std::to_string(tgt));
    Built out;
    out.fallback = true;
    out.trace.push_back({0, "FALLBACK"});
    if (auto p = oracle_detail::path_at_least(g, a, b, tgt, opt_.fallback_budget)) {
      out.path = *p;
      return out;
    }
    if (best_) {
      out.path = best_->path;
      return out;
    }
    out.path = *shortest_path(g, a, b);
    return out;
  }

  // Two internally disjoint paths, then a fan through a far vertex, then a
  // bounded search. The bound here is small.
  std::optional<Built> base_case(const SubgraphView& g, int a, int b, int d, std::int64_t tgt) {
    (void)d;
    Built out;
    if (tgt <= 1) {
      out.path = *shortest_path(g, a, b);
      out.trace.push_back({0, "BASE"});
      return out;
    }
    if (auto two = two_disjoint_ab_paths(g, a, b)) {
      out.path = two->first.size() >= two->second.size() ? two->first : two->second;
      out.trace.push_back({0, "BASE"});
      if (accept(g, a, b, tgt, out)) return out;
    }
    const auto da = bfs_distances(g, a), db = bfs_distances(g, b);
    std::vector<int> order;
    for (int v = 0; v < static_cast<int>(g.size()); ++v) {
      if (v != a && v != b) order.push_back(v);
    }
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return da[x] + db[x] > da[y] + db[y]; });
    for (std::size_t i = 0; i < order.size() && i < 8; ++i) {
      if (auto p = fan_path(g, order[i], a, b)) {
        out.path = *p;
        out.trace = {{0, "BASE-FAN"}};
        if (accept(g, a, b, tgt, out)) return out;
      }
    }
    if (auto p = oracle_detail::path_at_least(g, a, b, tgt, opt_.fallback_budget)) {
      out.path = *p;
      out.trace = {{0, "BASE-SEARCH"}};
      return out;
    }
    return std::nullopt;
  }

  // ---- weak / tight rules ---------------------------------------------------------------

  std::optional<Built> rules(const SubgraphView& g, int a, int b, int d, std::int64_t tgt) {
    auto cands = split_candidates(g, g.id(a), g.id(b));
    if (opt_.prefer_fragmented_splits) {
      auto blocks = [](const SplitOutcome& s) {
        return block_cut_tree(s.side_a).blocks.size() + block_cut_tree(s.side_b).blocks.size();
      };
      std::vector<std::pair<std::size_t, std::size_t>> order;
      for (std::size_t i = 0; i < cands.size(); ++i) order.push_back({blocks(cands[i]), i});
      std::stable_sort(order.begin(), order.end(), [&](const auto& x, const auto& y) {
        const bool mx = cands[x.second].degree_a() >= 2 && cands[x.second].degree_b() >= 2;
        const bool my = cands[y.second].degree_a() >= 2 && cands[y.second].degree_b() >= 2;
        if (mx != my) return mx;
        return x.first > y.first;
      });
      std::vector<SplitOutcome> sorted;
      for (const auto& [count, i] : order) sorted.push_back(std::move(cands[i]));
      cands = std::move(sorted);
    }
    int tried = 0;
    bool degree_one_done = false;
    for (auto& s : cands) {
      if (tried >= opt_.max_directions) break;
      const bool main = s.degree_a() >= 2 && s.degree_b() >= 2;
      if (!main) {
        if (degree_one_done) continue;
        degree_one_done = true;
        ++tried;
        if (auto r = degree_one(g, a, b, d, tgt, cands)) return r;
        continue;
      }
      ++tried;
      SplitState st;
      try {
        st = make_split_state(g, s, a, b, a, b);
      } catch (const ConstructionGap& e) {
        diagnose(std::string("split skipped: ") + e.what());
        continue;
      }
      stats_.adjacent_joints += st.A->anatomy.adjacent_joints + st.B->anatomy.adjacent_joints;
      if (auto r = main_rules(st, d, tgt)) return r;
    }
    if (!degree_one_done && (g.degree(a) == 2 || g.degree(b) == 2)) {
      if (auto r = degree_one(g, a, b, d, tgt, cands)) return r;
    }
    return std::nullopt;
  }

  // C1..C4 from both roots' points of view.
  std::optional<Built> endblock_rules(const SplitState& st, int d, std::int64_t tgt) {
    const SplitState mt = st.mirror();
    for (const SplitState* s : {&st, &mt}) {
      if (auto r = rule_c1(*s, d, tgt)) return r;
    }
    for (const SplitState* s : {&st, &mt}) {
      if (auto r = rule_c2(*s, d, tgt)) return r;
    }
    for (const SplitState* s : {&st, &mt}) {
      if (auto r = rule_c3(*s, d, tgt)) return r;
    }
    for (const SplitState* s : {&st, &mt}) {
      if (auto r = rule_c4(*s, d, tgt)) return r;
    }
    return std::nullopt;
  }

  std::optional<Built> main_rules(const SplitState& st, int d, std::int64_t tgt) {
    if (auto r = endblock_rules(st, d, tgt)) return r;
    return h_rules(st, d, tgt, -1);
  }

  // Rules driven by the interaction digraph, for the main and the
  // degree-one variants.
  std::optional<Built> h_rules(const SplitState& st, int d, std::int64_t tgt, int forced_exit) {
    const SplitState mt = st.mirror();
    const HVariant variant = forced_exit >= 0 ? HVariant::kDegreeOne
                             : mode_ == Mode::kTight ? HVariant::kTight
                                                      : HVariant::kWeak;
    auto build = [&](const SplitState& s) -> std::optional<InteractionDigraph> {
      try {
        return build_interaction_digraph(
            s, variant,
            [&](bool a_side, int e, int x) { return endblock_admits(s, a_side, e, x, d); }, forced_exit);
      } catch (const ConstructionGap& e) {
        ++stats_.construction_gaps;
        diagnose(std::string("interaction digraph: ") + e.what());
        return std::nullopt;
      }
    };
    auto H = build(st);
    if (!H) return std::nullopt;
    auto Hm = build(mt);
    if (auto r = rule_c5(st, *H, d, tgt)) return r;
    if (Hm) {
      if (auto r = rule_c5(mt, *Hm, d, tgt)) return r;
    }
    if (auto r = rule_c6(st, *H, d, tgt)) return r;
    if (Hm) {
      if (auto r = rule_c6(mt, *Hm, d, tgt)) return r;
    }
    return j_rules(st, *H, d, tgt);
  }

  // Tight variant: the endblock offers a path of the full length from its
  // cutvertex to x unless it is a (d-1)-cube with x at even distance.
  bool endblock_admits(const SplitState& st, bool a_side, int e, int x, int d) {
    const SideInfo& side = a_side ? *st.A : *st.B;
    const auto& eb = side.endblocks[e];
    if (eb.cut < 0) return true;
    const auto p = piece(*st.g, eb.members);
    const auto w = is_subcube(p.view);
    if (!w || w->dimension != d - 1) return true;
    return hamming(st.g->host(), st.g->id(eb.cut), st.g->id(x)) % 2 == 1;
  }

  std::optional<Built> ep(const SubgraphView& g, const SideEndblock& E, int from, int to, int d) {
    return sub(g, E.members, from, to, d);
  }

  // C1: an endblock with a single exit vertex x. Its other interior vertices
  // keep every neighbour, so the recursion runs at full degree.
  std::optional<Built> rule_c1(const SplitState& st, int d, std::int64_t tgt) {
    if (!opt_.enabled("C1")) return std::nullopt;
    const SubgraphView& g = *st.g;
    int tries = 0;
    for (const auto& E : st.A->endblocks) {
      if (E.cut < 0 || E.exits.size() != 1) continue;
      if (engine_detail::contains_sorted(E.interior, st.a)) continue;
      if (tries++ >= opt_.max_candidates) break;
      const int x = E.exits[0].exit, p = E.exits[0].partner;
      auto allowed_a = side_mask(st, *st.A, nullptr);
      clear(allowed_a, E.interior);
      auto p1 = connect(g, st.a, E.cut, allowed_a);
      if (!p1) continue;
      auto allowed_b = side_mask(st, *st.B, nullptr);
      auto p3 = connect(g, p, st.b, allowed_b);
      if (!p3) continue;
      auto p2 = ep(g, E, E.cut, x, d);
      if (!p2) continue;
      engine_detail::Chain c;
      c.add(*p1).add(*p2).add(*p3);
      Built out = c.take("C1");
      if (accept(g, st.mirrored ? st.b : st.a, st.mirrored ? st.a : st.b, tgt, out, &st)) return out;
    }
    return std::nullopt;
  }

  struct Candidate {
    std::int64_t score;
    std::vector<int> key;
    std::function<std::optional<Built>()> build;
  };

  std::optional<Built> run_candidates(const SplitState& st, std::vector<Candidate>& cands, std::int64_t tgt,
                                      const std::string& rule) {
    std::stable_sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) {
      if (x.score != y.score) return x.score > y.score;
      return x.key < y.key;
    });
    int tries = 0;
    for (auto& c : cands) {
      if (tries++ >= opt_.max_candidates) break;
      auto r = c.build();
      if (!r) continue;
      if (r->trace.empty() || r->trace.front().second != rule) {
        engine_detail::Chain ch;
        ch.add(*r);
        *r = ch.take(rule);
      }
      if (accept(*st.g, st.mirrored ? st.b : st.a, st.mirrored ? st.a : st.b, tgt, *r, &st)) return r;
    }
    return std::nullopt;
  }

  // Bound for a recursive call on a whole side; the cube test runs once.
  std::int64_t side_target(const SideInfo& side, std::optional<SubcubeWitness>& cube, bool& cube_known,
                           VertexId s, VertexId t, int d) {
    if (mode_ != Mode::kTight) return mode_ == Mode::kWeak ? weak_bound(d) : general_bound(d, k_);
    if (!cube_known) {
      cube = is_subcube(side.view);
      cube_known = true;
    }
    return tight_bound(d, cube && cube->dimension == d && hamming(side.view.host(), s, t) % 2 == 0);
  }

  // C2: one side is 2-connected; join a long path inside it with a long path
  // or an endblock path on the other side through a cross edge.
  std::optional<Built> rule_c2(const SplitState& st, int d, std::int64_t tgt) {
    if (!opt_.enabled("C2")) return std::nullopt;
    const SubgraphView& g = *st.g;
    const SideInfo& A = *st.A;
    const SideInfo& B = *st.B;
    if (!A.two_connected()) return std::nullopt;
    std::optional<SubcubeWitness> cube_a, cube_b;
    bool known_a = false, known_b = false;
    std::vector<Candidate> cands;
    if (B.two_connected()) {
      for (int u : A.locals) {
        if (u == st.a) continue;
        for (int w : g.neighbors(u)) {
          if (st.on_a(w) || w == st.b) continue;
          const std::int64_t s = side_target(A, cube_a, known_a, g.id(st.a), g.id(u), d - 1) + 1 +
                                 side_target(B, cube_b, known_b, g.id(w), g.id(st.b), d - 1);
          cands.push_back({s, {u, w}, [this, &st, &g, u, w, d]() -> std::optional<Built> {
                             auto p1 = sub(g, st.A->locals, st.a, u, d - 1);
                             if (!p1) return std::nullopt;
                             auto p2 = sub(g, st.B->locals, w, st.b, d - 1);
                             if (!p2) return std::nullopt;
                             engine_detail::Chain c;
                             c.add(*p1).add(*p2);
                             return c.take("C2");
                           }});
        }
      }
    } else {
      for (std::size_t f = 0; f < B.endblocks.size(); ++f) {
        const auto& F = B.endblocks[f];
        if (F.cut < 0 || engine_detail::contains_sorted(F.interior, st.b)) continue;
        auto allowed = side_mask(st, B, nullptr);
        clear(allowed, F.interior);
        const auto dist = bfs_distances(g, F.cut, allowed);
        if (dist[st.b] < 0) continue;
        for (const auto& y : F.exits) {
          const int u = y.partner;
          if (u == st.a) continue;
          const std::int64_t s = side_target(A, cube_a, known_a, g.id(st.a), g.id(u), d - 1) + 1 +
                                 predict(g, F.members, y.exit, F.cut, d - 1) + dist[st.b];
          const int fi = static_cast<int>(f);
          const int yx = y.exit;
          cands.push_back({s, {u, yx}, [this, &st, &g, u, yx, fi, d]() -> std::optional<Built> {
                             const auto& F = st.B->endblocks[fi];
                             auto p1 = sub(g, st.A->locals, st.a, u, d - 1);
                             if (!p1) return std::nullopt;
                             auto p2 = ep(g, F, yx, F.cut, d - 1);
                             if (!p2) return std::nullopt;
                             auto allowed = side_mask(st, *st.B, nullptr);
                             clear(allowed, F.interior);
                             auto p3 = connect(g, F.cut, st.b, allowed);
                             if (!p3) return std::nullopt;
                             engine_detail::Chain c;
                             c.add(*p1).add(*p2).add(*p3);
                             return c.take("C2");
                           }});
        }
      }
    }
    return run_candidates(st, cands, tgt, "C2");
  }

  // C3: a sits inside an endblock of its side; run through that endblock to
  // its cutvertex, on to a second endblock and across.
  std::optional<Built> rule_c3(const SplitState& st, int d, std::int64_t tgt) {
    if (!opt_.enabled("C3")) return std::nullopt;
    const SubgraphView& g = *st.g;
    const SideInfo& A = *st.A;
    int ea = -1;
    for (std::size_t e = 0; e < A.endblocks.size(); ++e) {
      if (A.endblocks[e].cut >= 0 && engine_detail::contains_sorted(A.endblocks[e].interior, st.a)) {
        ea = static_cast<int>(e);
      }
    }
    if (ea < 0) return std::nullopt;
    const auto& Ea = A.endblocks[ea];
    const std::int64_t first = predict(g, Ea.members, st.a, Ea.cut, d - 1);
    std::vector<Candidate> cands;
    for (std::size_t e = 0; e < A.endblocks.size(); ++e) {
      if (static_cast<int>(e) == ea) continue;
      const auto& E = A.endblocks[e];
      if (E.cut < 0) continue;
      auto allowed = side_mask(st, A, nullptr);
      clear(allowed, Ea.interior);
      clear(allowed, E.interior);
      const auto dist = bfs_distances(g, Ea.cut, allowed);
      if (dist[E.cut] < 0 && E.cut != Ea.cut) continue;
      const int link = E.cut == Ea.cut ? 0 : dist[E.cut];
      auto allowed_b = side_mask(st, *st.B, nullptr);
      const auto distb = bfs_distances(g, st.b, allowed_b);
      for (const auto& x : E.exits) {
        if (distb[x.partner] < 0) continue;
        const std::int64_t s = first + link + predict(g, E.members, E.cut, x.exit, d - 1) + 1 + distb[x.partner];
        const int ei = static_cast<int>(e), xe = x.exit, xp = x.partner;
        cands.push_back({s, {xe}, [this, &st, &g, ea, ei, xe, xp, d]() -> std::optional<Built> {
                           const auto& Ea = st.A->endblocks[ea];
                           const auto& E = st.A->endblocks[ei];
                           auto allowed = side_mask(st, *st.A, nullptr);
                           clear(allowed, Ea.interior);
                           clear(allowed, E.interior);
                           auto link = connect(g, Ea.cut, E.cut, allowed);
                           if (!link) return std::nullopt;
                           auto allowed_b = side_mask(st, *st.B, nullptr);
                           auto tail = connect(g, xp, st.b, allowed_b);
                           if (!tail) return std::nullopt;
                           auto p1 = ep(g, Ea, st.a, Ea.cut, d - 1);
                           if (!p1) return std::nullopt;
                           auto p2 = ep(g, E, E.cut, xe, d - 1);
                           if (!p2) return std::nullopt;
                           engine_detail::Chain c;
                           c.add(*p1).add(*link).add(*p2).add(*tail);
                           return c.take("C3");
                         }});
      }
    }
    return run_candidates(st, cands, tgt, "C3");
  }

  // C4: an exit vertex whose partner lies inside an endblock of the other
  // side; two endblock paths meet across that edge.
  std::optional<Built> rule_c4(const SplitState& st, int d, std::int64_t tgt) {
    if (!opt_.enabled("C4")) return std::nullopt;
    const SubgraphView& g = *st.g;
    const SideInfo& A = *st.A;
    const SideInfo& B = *st.B;
    std::vector<int> eb_of(g.size(), -1);
    for (std::size_t f = 0; f < B.endblocks.size(); ++f) {
      const auto& F = B.endblocks[f];
      if (F.cut < 0 || engine_detail::contains_sorted(F.interior, st.b)) continue;
      for (int v : F.interior) eb_of[v] = static_cast<int>(f);
    }
    std::vector<Candidate> cands;
    for (std::size_t e = 0; e < A.endblocks.size(); ++e) {
      const auto& E = A.endblocks[e];
      if (E.cut < 0 || engine_detail::contains_sorted(E.interior, st.a)) continue;
      auto allowed_a = side_mask(st, A, nullptr);
      clear(allowed_a, E.interior);
      const auto dist_a = bfs_distances(g, st.a, allowed_a);
      if (dist_a[E.cut] < 0) continue;
      for (const auto& x : E.exits) {
        const int f = eb_of[x.partner];
        if (f < 0) continue;
        const auto& F = B.endblocks[f];
        auto allowed_b = side_mask(st, B, nullptr);
        clear(allowed_b, F.interior);
        const auto dist_b = bfs_distances(g, st.b, allowed_b);
        if (dist_b[F.cut] < 0) continue;
        const std::int64_t s = dist_a[E.cut] + predict(g, E.members, E.cut, x.exit, d - 1) + 1 +
                               predict(g, F.members, x.partner, F.cut, d - 1) + dist_b[F.cut];
        const int ei = static_cast<int>(e), xe = x.exit, xp = x.partner;
        cands.push_back({s, {xe}, [this, &st, &g, ei, f, xe, xp, d]() -> std::optional<Built> {
                           const auto& E = st.A->endblocks[ei];
                           const auto& F = st.B->endblocks[f];
                           auto allowed_a = side_mask(st, *st.A, nullptr);
                           clear(allowed_a, E.interior);
                           auto p1 = connect(g, st.a, E.cut, allowed_a);
                           auto allowed_b = side_mask(st, *st.B, nullptr);
                           clear(allowed_b, F.interior);
                           auto p4 = connect(g, F.cut, st.b, allowed_b);
                           if (!p1 || !p4) return std::nullopt;
                           auto p2 = ep(g, E, E.cut, xe, d - 1);
                           if (!p2) return std::nullopt;
                           auto p3 = ep(g, F, xp, F.cut, d - 1);
                           if (!p3) return std::nullopt;
                           engine_detail::Chain c;
                           c.add(*p1).add(*p2).add(*p3).add(*p4);
                           return c.take("C4");
                         }});
      }
    }
    return run_candidates(st, cands, tgt, "C4");
  }

  // ---- walks through the interaction digraph ----------------------------------------------

  struct Walk {
    Built built;
    int first = -1, last = -1;
  };

  // Path through the nodes of an undirected walk in H, entering and leaving
  // each limb through the arcs' endblocks. A core node is a single vertex
  // of the path. Ends at limbs are their joints unless given.
  std::optional<Walk> assemble_walk(const SplitState& st, const InteractionDigraph& H, const std::vector<int>& nodes,
                                    const std::vector<int>& arcs, std::vector<char>& used, int d) {
    const SubgraphView& g = *st.g;
    const int m = static_cast<int>(nodes.size()) - 1;
    if (m < 1 || static_cast<int>(arcs.size()) != m) return std::nullopt;
    std::vector<int> ain(m + 1, -1), bout(m + 1, -1), in_eb(m + 1, -1), out_eb(m + 1, -1);
    for (int i = 0; i < m; ++i) {
      const HArc& e = H.arcs[arcs[i]];
      if (e.from == nodes[i] && e.to == nodes[i + 1]) {
        bout[i] = e.exit;
        ain[i + 1] = e.partner;
        out_eb[i] = e.endblock;
      } else if (e.to == nodes[i] && e.from == nodes[i + 1]) {
        bout[i] = e.partner;
        ain[i + 1] = e.exit;
        in_eb[i + 1] = e.endblock;
      } else {
        return std::nullopt;
      }
    }
    const HNode& first = H.nodes[nodes[0]];
    const HNode& last = H.nodes[nodes[m]];
    ain[0] = first.core ? bout[0] : first.joint;
    bout[m] = last.core ? ain[m] : last.joint;

    struct Seg {
      const SideEndblock* E = nullptr;
      const SideEndblock* F = nullptr;
      LocalPath conn;
    };
    std::vector<Seg> segs(m + 1);
    std::vector<char> local_used = used;
    for (int i = 0; i <= m; ++i) {
      const HNode& node = H.nodes[nodes[i]];
      const SideInfo& side = node.a_side ? *st.A : *st.B;
      if (node.core) {
        if (ain[i] != bout[i] || local_used[ain[i]]) return std::nullopt;
        segs[i].conn = {ain[i]};
        local_used[ain[i]] = 1;
        continue;
      }
      const SideEndblock* E = in_eb[i] >= 0 ? &side.endblocks[in_eb[i]] : nullptr;
      const SideEndblock* F = out_eb[i] >= 0 ? &side.endblocks[out_eb[i]] : nullptr;
      if (E && F && E == F) return std::nullopt;
      const int s = E ? E->cut : ain[i];
      const int t = F ? F->cut : bout[i];
      if (E && (engine_detail::contains_sorted(E->interior, bout[i]) || engine_detail::contains_sorted(E->interior, t))) {
        return std::nullopt;
      }
      if (F && (engine_detail::contains_sorted(F->interior, ain[i]) || engine_detail::contains_sorted(F->interior, s))) {
        return std::nullopt;
      }
      if (local_used[s] || local_used[t] || local_used[ain[i]] || local_used[bout[i]]) return std::nullopt;
      std::vector<char> allowed(g.size(), 0);
      for (int v : node.vertices) allowed[v] = !local_used[v] && !st.blocked[v];
      for (int r : {st.a, st.b, st.ra, st.rb}) allowed[r] = 0;
      if (E) clear(allowed, E->interior);
      if (F) clear(allowed, F->interior);
      auto conn = connect(g, s, t, allowed);
      if (!conn) return std::nullopt;
      for (int v : *conn) local_used[v] = 1;
      if (E) {
        for (int v : E->interior) local_used[v] = 1;
      }
      if (F) {
        for (int v : F->interior) local_used[v] = 1;
      }
      local_used[ain[i]] = local_used[bout[i]] = 1;
      segs[i] = {E, F, std::move(*conn)};
    }
    engine_detail::Chain c;
    for (int i = 0; i <= m; ++i) {
      if (segs[i].E) {
        auto p = ep(g, *segs[i].E, ain[i], segs[i].E->cut, d - 1);
        if (!p) return std::nullopt;
        c.add(*p);
      }
      c.add(segs[i].conn);
      if (segs[i].F) {
        auto p = ep(g, *segs[i].F, segs[i].F->cut, bout[i], d - 1);
        if (!p) return std::nullopt;
        c.add(*p);
      }
    }
    Walk w;
    w.built = c.take("WALK");
    w.built.trace.erase(w.built.trace.begin());
    for (auto& t : w.built.trace) --t.first;
    w.first = ain[0];
    w.last = bout[m];
    for (int v : w.built.path) local_used[v] = 1;
    used = std::move(local_used);
    return w;
  }

  std::vector<char> body_allowed(const SplitState& st, const SideInfo& side, const std::vector<char>& used) const {
    std::vector<char> m(st.g->size(), 0);
    for (int v : side.body) m[v] = !used[v] && !st.blocked[v];
    return m;
  }

  // Joins `from` to the root of `side` inside its body, falling back to the
  // whole side; vertices in `used` are avoided.
  std::optional<LocalPath> to_root(const SplitState& st, const SideInfo& side, int from, const std::vector<char>& used) {
    if (from == side.root) return LocalPath{from};
    auto allowed = body_allowed(st, side, used);
    if (auto p = connect(*st.g, from, side.root, allowed)) return p;
    allowed = side_mask(st, side, &used);
    return connect(*st.g, from, side.root, allowed);
  }

  // Prefix a / suffix b when the anatomy roots differ from the endpoints.
  Built finish(const SplitState& st, engine_detail::Chain& c, const std::string& rule) {
    engine_detail::Chain full;
    if (st.a != st.ra) full.vertex(st.a);
    Built mid = c.take(rule);
    full.add(mid);
    if (st.b != st.rb) full.vertex(st.b);
    Built out = full.take(rule);
    // `full.take` nested the rule once more; flatten it.
    out.trace.erase(out.trace.begin());
    for (auto& t : out.trace) --t.first;
    return out;
  }

  std::vector<std::vector<int>> arc_choices(const InteractionDigraph& H, const std::vector<int>& nodes) {
    std::vector<std::vector<int>> per;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
      auto a = H.arcs_between(nodes[i], nodes[i + 1]);
      if (a.size() > 2) a.resize(2);
      per.push_back(a);
    }
    std::vector<std::vector<int>> out = {{}};
    for (const auto& options : per) {
      std::vector<std::vector<int>> next;
      for (const auto& prefix : out) {
        for (int o : options) {
          auto p = prefix;
          p.push_back(o);
          next.push_back(std::move(p));
        }
      }
      out = std::move(next);
    }
    return out;
  }

  bool usable_node(const SplitState& st, const InteractionDigraph& H, int id) const {
    (void)st;
    const HNode& n = H.nodes[id];
    return id != H.special && !n.vertices.empty();
  }

  // C5: an undirected path V0 V1 V2 V3 in H starting on a's side.
  std::optional<Built> rule_c5(const SplitState& st, const InteractionDigraph& H, int d, std::int64_t tgt) {
    if (!opt_.enabled("C5")) return std::nullopt;
    const SubgraphView& g = *st.g;
    int attempts = 0;
    const int n = static_cast<int>(H.nodes.size());
    std::vector<std::vector<int>> adj(n);
    for (int u = 0; u < n; ++u) adj[u] = H.neighbours(u);
    for (int v0 = 0; v0 < n; ++v0) {
      if (!H.nodes[v0].a_side || !usable_node(st, H, v0)) continue;
      for (int v1 : adj[v0]) {
        if (!usable_node(st, H, v1) || H.nodes[v1].core) continue;
        for (int v2 : adj[v1]) {
          if (v2 == v0 || !usable_node(st, H, v2)) continue;
          for (int v3 : adj[v2]) {
            if (v3 == v1 || !usable_node(st, H, v3)) continue;
            const std::vector<int> nodes = {v0, v1, v2, v3};
            for (const auto& arcs : arc_choices(H, nodes)) {
              if (attempts++ >= opt_.max_h_paths) return std::nullopt;
              std::optional<Built> r = H.nodes[v2].core ? c5_core_middle(st, H, nodes, arcs, d)
                                                        : c5_plain(st, H, nodes, arcs, d);
              if (!r) continue;
              if (accept(g, st.mirrored ? st.b : st.a, st.mirrored ? st.a : st.b, tgt, *r, &st)) {
                stats_.c5_paths.push_back({r->length(), d});
                return r;
              }
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Built> c5_plain(const SplitState& st, const InteractionDigraph& H, const std::vector<int>& nodes,
                                const std::vector<int>& arcs, int d) {
    std::vector<char> used(st.g->size(), 0);
    used[st.ra] = used[st.rb] = 1;
    if (H.nodes[nodes[0]].joint == st.ra) used[st.ra] = 0;
    if (H.nodes[nodes[3]].joint == st.rb) used[st.rb] = 0;
    auto w = assemble_walk(st, H, nodes, arcs, used, d);
    if (!w) return std::nullopt;
    used[st.ra] = used[st.rb] = 0;
    for (int v : w->built.path) used[v] = 1;
    used[w->first] = 0;
    auto head = to_root(st, *st.A, w->first, used);
    if (!head) return std::nullopt;
    for (int v : *head) used[v] = 1;
    used[w->last] = 0;
    auto tail = to_root(st, *st.B, w->last, used);
    if (!tail) return std::nullopt;
    engine_detail::Chain c;
    c.add_reversed(*head).add(w->built).add(*tail);
    return finish(st, c, "C5");
  }

  // V2 is the core of a: two chains meet it and are rejoined through the
  // body of a by two disjoint paths.
  std::optional<Built> c5_core_middle(const SplitState& st, const InteractionDigraph& H, const std::vector<int>& nodes,
                                      const std::vector<int>& arcs, int d) {
    const SubgraphView& g = *st.g;
    std::vector<char> used(g.size(), 0);
    used[st.ra] = used[st.rb] = 1;
    if (H.nodes[nodes[0]].joint == st.ra) used[st.ra] = 0;
    if (H.nodes[nodes[3]].joint == st.rb) used[st.rb] = 0;
    auto w1 = assemble_walk(st, H, {nodes[0], nodes[1], nodes[2]}, {arcs[0], arcs[1]}, used, d);
    if (!w1) return std::nullopt;
    auto w2 = assemble_walk(st, H, {nodes[2], nodes[3]}, {arcs[2]}, used, d);
    if (!w2) return std::nullopt;
    // w1 ends at a2 in the core; w2 starts at b2 in the core. Drop the shared
    // core vertex handling: w2 starts with its own core vertex.
    const int a0 = w1->first, a2 = w1->last, b2 = w2->first, b3 = w2->last;
    if (a2 == b2) return std::nullopt;
    std::vector<char> taken(g.size(), 0);
    for (int v : w1->built.path) taken[v] = 1;
    for (int v : w2->built.path) taken[v] = 1;
    auto allowed = body_allowed(st, *st.A, taken);
    engine_detail::Chain c;
    if (a0 == st.ra) {
      allowed[st.ra] = 0;
      auto link = connect(g, a2, b2, allowed);
      if (!link) return std::nullopt;
      c.add(w1->built).add(*link).add(w2->built);
    } else {
      auto lk = linkage(g, a0, a2, st.ra, b2, allowed);
      if (!lk) return std::nullopt;
      const auto& [p, q] = *lk;
      if (p.back() == st.ra) {
        c.add_reversed(p).add(w1->built).add(q).add(w2->built);
      } else {
        c.add_reversed(q).add_reversed(w1->built).add(p).add(w2->built);
      }
    }
    for (int v : c.path()) taken[v] = 1;
    taken[b3] = 0;
    auto tail = to_root(st, *st.B, b3, taken);
    if (!tail) return std::nullopt;
    c.add(*tail);
    return finish(st, c, "C5");
  }

  // C6: two nodes on a's side share a neighbour W in H while Body(a) is
  // more than a; three chains are combined through both bodies.
  std::optional<Built> rule_c6(const SplitState& st, const InteractionDigraph& H, int d, std::int64_t tgt) {
    if (!opt_.enabled("C6")) return std::nullopt;
    const SubgraphView& g = *st.g;
    if (st.A->root_is_cut()) return std::nullopt;
    const int n = static_cast<int>(H.nodes.size());
    int attempts = 0;
    for (int w = 0; w < n; ++w) {
      if (H.nodes[w].a_side || !usable_node(st, H, w)) continue;
      std::vector<int> vs;
      for (int u : H.neighbours(w)) {
        if (H.nodes[u].a_side && usable_node(st, H, u)) vs.push_back(u);
      }
      for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
          if (attempts++ >= opt_.max_h_paths) return std::nullopt;
          auto r = H.nodes[w].core ? c6_core(st, H, vs[i], vs[j], w, d) : c6_limb(st, H, vs[i], vs[j], w, d);
          if (r && accept(g, st.mirrored ? st.b : st.a, st.mirrored ? st.a : st.b, tgt, *r, &st)) return r;
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Built> c6_core(const SplitState& st, const InteractionDigraph& H, int v1, int v2, int w, int d) {
    const SubgraphView& g = *st.g;
    if (H.nodes[v1].core || H.nodes[v2].core || st.B->root_is_cut()) return std::nullopt;
    std::vector<char> used(g.size(), 0);
    used[st.ra] = used[st.rb] = 1;
    auto first_arc = [&](int x, int y) {
      auto a = H.arcs_between(x, y);
      return a.empty() ? -1 : a.front();
    };
    auto w1 = assemble_walk(st, H, {v1, w}, {first_arc(v1, w)}, used, d);
    if (!w1) return std::nullopt;
    auto w2 = assemble_walk(st, H, {v2, w}, {first_arc(v2, w)}, used, d);
    if (!w2) return std::nullopt;
    // Third chain from another component: an arc between a node X on a's
    // side and a limb L of b.
    const auto comps = H.components();
    std::vector<int> comp_of(H.nodes.size(), -1);
    for (std::size_t c = 0; c < comps.size(); ++c) {
      for (int x : comps[c]) comp_of[x] = static_cast<int>(c);
    }
    for (std::size_t e = 0; e < H.arcs.size(); ++e) {
      const HArc& arc = H.arcs[e];
      const int x = arc.from_a ? arc.from : arc.to;
      const int l = arc.from_a ? arc.to : arc.from;
      if (comp_of[x] == comp_of[w] || H.nodes[l].core || !usable_node(st, H, x) || !usable_node(st, H, l)) continue;
      auto used3 = used;
      auto w3 = assemble_walk(st, H, {x, l}, {static_cast<int>(e)}, used3, d);
      if (!w3) continue;
      auto r = glue_three(st, *w1, *w2, *w3, used3);
      if (r) return r;
    }
    return std::nullopt;
  }

  // Chains P1: a1->b1, P2: a2->b2, P3: a3->b3 with a_i in Body(a) and b_i in
  // Body(b). Links b with b3 to {b1, b2} inside Body(b), then a with the
  // remaining chain end to the two free ends inside Body(a).
  std::optional<Built> glue_three(const SplitState& st, const Walk& p1, const Walk& p2, const Walk& p3,
                                  std::vector<char> used) {
    const SubgraphView& g = *st.g;
    used[st.ra] = used[st.rb] = 0;
    for (int v : {p1.last, p2.last, p3.last, p1.first, p2.first, p3.first}) used[v] = 1;
    auto allowed_b = body_allowed(st, *st.B, used);
    auto lb = linkage(g, st.rb, p3.last, p1.last, p2.last, allowed_b);
    if (!lb) return std::nullopt;
    const auto& [from_b, from_b3] = *lb;
    // D runs a3 -> ... -> e (an A-end); T runs t -> ... -> rb.
    engine_detail::Chain D, T;
    int e, t;
    if (from_b.back() == p1.last) {
      D.add(p3.built).add(from_b3).add_reversed(p2.built);
      e = p2.first;
      T.add(p1.built).add_reversed(from_b);
      t = p1.first;
    } else {
      D.add(p3.built).add(from_b3).add_reversed(p1.built);
      e = p1.first;
      T.add(p2.built).add_reversed(from_b);
      t = p2.first;
    }
    Built dpath = D.take("D"), tpath = T.take("T");
    std::vector<char> taken = used;
    for (int v : dpath.path) taken[v] = 1;
    for (int v : tpath.path) taken[v] = 1;
    for (int v : {p3.first, e, t}) taken[v] = 0;
    auto allowed_a = body_allowed(st, *st.A, taken);
    auto la = linkage(g, st.ra, t, p3.first, e, allowed_a);
    if (!la) return std::nullopt;
    const auto& [from_a, from_t] = *la;
    engine_detail::Chain c;
    auto strip = [](Built b) {
      b.trace.erase(b.trace.begin());
      for (auto& x : b.trace) --x.first;
      return b;
    };
    dpath = strip(dpath);
    tpath = strip(tpath);
    if (from_a.back() == p3.first) {
      c.add(from_a).add(dpath).add_reversed(from_t).add(tpath);
    } else {
      c.add(from_a).add_reversed(dpath).add_reversed(from_t).add(tpath);
    }
    return finish(st, c, "C6");
  }

  std::optional<Built> c6_limb(const SplitState& st, const InteractionDigraph& H, int v1, int v2, int w, int d) {
    const SubgraphView& g = *st.g;
    for (const auto& arcs : arc_choices(H, {v1, w, v2})) {
      std::vector<char> used(g.size(), 0);
      used[st.ra] = used[st.rb] = 1;
      auto w1 = assemble_walk(st, H, {v1, w, v2}, arcs, used, d);
      if (!w1) continue;
      for (std::size_t e = 0; e < H.arcs.size(); ++e) {
        const HArc& arc = H.arcs[e];
        const int x = arc.from_a ? arc.from : arc.to;
        const int y = arc.from_a ? arc.to : arc.from;
        if (x == v1 || x == v2 || y == w || !usable_node(st, H, x) || !usable_node(st, H, y)) continue;
        auto used2 = used;
        auto w2 = assemble_walk(st, H, {x, y}, {static_cast<int>(e)}, used2, d);
        if (!w2) continue;
        std::vector<char> taken = used2;
        taken[st.ra] = taken[st.rb] = 0;
        for (int v : {w1->first, w1->last, w2->first}) taken[v] = 0;
        auto allowed_a = body_allowed(st, *st.A, taken);
        auto la = linkage(g, st.ra, w2->first, w1->first, w1->last, allowed_a);
        if (!la) continue;
        const auto& [from_a, from_3] = *la;
        engine_detail::Chain c;
        if (from_a.back() == w1->first) {
          c.add(from_a).add(w1->built).add_reversed(from_3).add(w2->built);
        } else {
          c.add(from_a).add_reversed(w1->built).add_reversed(from_3).add(w2->built);
        }
        for (int v : c.path()) taken[v] = 1;
        taken[w2->last] = 0;
        taken[st.rb] = 0;
        auto tail = to_root(st, *st.B, w2->last, taken);
        if (!tail) continue;
        c.add(*tail);
        return finish(st, c, "C6");
      }
    }
    return std::nullopt;
  }

  // ---- the extracted piece J --------------------------------------------------------------

  // A path inside J from `from` to `to` avoiding `avoid`, routed through an
  // endblock F of a side lying in J: two disjoint paths carry {from, to} to
  // cutv(F) and to some interior vertex of F, joined by an endblock path.
  std::optional<Built> j_path(const SplitState& st, const std::vector<int>& J, int from, int to, int avoid, int d) {
    const SubgraphView& g = *st.g;
    std::vector<char> in_j = engine_detail::mask_of(g.size(), J);
    std::vector<const SideEndblock*> fs;
    for (const SideInfo* side : {st.A.get(), st.B.get()}) {
      for (const auto& F : side->endblocks) {
        if (F.cut < 0) continue;
        bool inside = true;
        for (int v : F.members) inside = inside && in_j[v];
        if (!inside) continue;
        if (engine_detail::contains_sorted(F.interior, from) || engine_detail::contains_sorted(F.interior, to) ||
            engine_detail::contains_sorted(F.members, avoid)) {
          continue;
        }
        fs.push_back(&F);
      }
    }
    std::stable_sort(fs.begin(), fs.end(),
                     [](const SideEndblock* x, const SideEndblock* y) { return x->members.size() > y->members.size(); });
    int tries = 0;
    for (const SideEndblock* F : fs) {
      if (tries++ >= 3) break;
      DisjointPathRequest req;
      req.sources = {{from, 1}, {to, 1}};
      req.sink_groups = {{F->cut}, F->interior};
      req.allowed = in_j;
      if (avoid >= 0) req.allowed[avoid] = 0;
      for (int v : J) {
        if (st.blocked[v]) req.allowed[v] = 0;
      }
      auto paths = disjoint_paths(g, req, 2);
      if (!paths) continue;
      LocalPath pf = (*paths)[0], pt = (*paths)[1];
      if (pf.front() != from) std::swap(pf, pt);
      const bool from_to_interior = engine_detail::contains_sorted(F->interior, pf.back());
      const int w = from_to_interior ? pf.back() : pt.back();
      auto mid = from_to_interior ? ep(g, *F, w, F->cut, d - 1) : ep(g, *F, F->cut, w, d - 1);
      if (!mid) continue;
      engine_detail::Chain c;
      c.add(pf).add(*mid).add_reversed(pt);
      Built out = c.take("JPATH");
      if (engine_detail::simple_path(g, out.path, from, to)) return out;
    }
    // No usable endblock: a plain path inside J.
    std::vector<char> allowed = in_j;
    if (avoid >= 0) allowed[avoid] = 0;
    auto p = connect(g, from, to, allowed);
    if (!p) return std::nullopt;
    Built out;
    out.path = *p;
    out.trace.push_back({0, "JPATH-SHORT"});
    return out;
  }

  std::optional<Built> j_rules(const SplitState& st, const InteractionDigraph& H, int d, std::int64_t tgt) {
    const SubgraphView& g = *st.g;
    int done = 0;
    for (const auto& comp : H.components()) {
      bool all_limbs = true;
      for (int id : comp) all_limbs = all_limbs && !H.nodes[id].core && id != H.special;
      if (!all_limbs || comp.size() < 2) continue;
      if (done++ >= 2) break;
      ++stats_.j_extractions;
      const JExtraction jx = extract_J(st, H, comp);
      stats_.closure_repairs += jx.closure_repairs;
      if (!jx.two_connected) {
        ++stats_.j_failures;
        diagnose("J extraction: " + jx.diagnostic);
        continue;
      }
      std::vector<char> in_j = engine_detail::mask_of(g.size(), jx.J);
      std::vector<std::pair<int, int>> boundary;
      for (int v : jx.J) {
        if (v == jx.a1 || v == jx.b1) continue;
        for (int w : g.neighbors(v)) {
          if (!in_j[w]) boundary.push_back({v, w});
        }
      }
      if (boundary.empty()) {
        if (auto r = rule_c8(st, jx, d, tgt)) return r;
        continue;
      }
      int tries = 0;
      for (auto [v, w] : boundary) {
        if (tries++ >= 4) break;
        std::optional<Built> r;
        if (st.on_a(w)) {
          r = rule_c7(st, H, comp, jx, v, w, d, tgt);
        } else {
          JExtraction swapped = jx;
          std::swap(swapped.a1, swapped.b1);
          const SplitState mt = st.mirror();
          r = rule_c7(mt, H, comp, swapped, v, w, d, tgt);
        }
        if (r) return r;
      }
      if (auto r = rule_c8(st, jx, d, tgt)) return r;
    }
    return std::nullopt;
  }

  // C8: recurse on J between a1 and b1 and extend to a and b.
  std::optional<Built> rule_c8(const SplitState& st, const JExtraction& jx, int d, std::int64_t tgt) {
    if (!opt_.enabled("C8")) return std::nullopt;
    const SubgraphView& g = *st.g;
    std::vector<char> outside(g.size(), 1);
    for (int v : jx.J) outside[v] = 0;
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (st.blocked[v]) outside[v] = 0;
    }
    auto head = connect(g, st.a, jx.a1, outside);
    if (!head) return std::nullopt;
    auto rest = outside;
    for (int v : *head) rest[v] = 0;
    auto tail = connect(g, jx.b1, st.b, rest);
    if (!tail) return std::nullopt;
    auto inner = sub(g, jx.J, jx.a1, jx.b1, d);
    if (inner) {
      engine_detail::Chain c;
      c.add(*head).add(*inner).add(*tail);
      Built out = c.take("C8");
      if (accept(g, st.a, st.b, tgt, out)) return out;
    }
    // A cube J with even-distance ends falls one short; try the rest of G.
    if (mode_ == Mode::kTight && jx.a1 == st.a && jx.b1 == st.b) {
      std::vector<int> rest_v;
      std::vector<char> in_j = engine_detail::mask_of(g.size(), jx.J);
      for (int v = 0; v < static_cast<int>(g.size()); ++v) {
        if (!in_j[v] || v == st.a || v == st.b) rest_v.push_back(v);
      }
      if (auto r = sub(g, rest_v, st.a, st.b, d)) {
        engine_detail::Chain c;
        c.add(*r);
        Built out = c.take("C8-ESCAPE");
        if (accept(g, st.a, st.b, tgt, out)) return out;
      }
    }
    return std::nullopt;
  }

  // C7: an edge vw leaves J at v (not a1, b1) towards w on a's side.
  std::optional<Built> rule_c7(const SplitState& st, const InteractionDigraph& H, const std::vector<int>& comp,
                               const JExtraction& jx, int v, int w, int d, std::int64_t tgt) {
    if (!opt_.enabled("C7")) return std::nullopt;
    const SubgraphView& g = *st.g;
    const int ga = st.mirrored ? st.b : st.a;
    const int gb = st.mirrored ? st.a : st.b;
    if (st.blocked[w]) return std::nullopt;
    std::vector<char> in_j = engine_detail::mask_of(g.size(), jx.J);
    std::vector<char> in_comp(H.nodes.size(), 0);
    for (int id : comp) in_comp[id] = 1;
    std::vector<int> a_nodes;
    for (int id : comp) {
      if (H.nodes[id].a_side) a_nodes.push_back(id);
    }
    const int jc = a_nodes.size() == 1 ? H.nodes[a_nodes[0]].joint : st.ra;

    // w in the body of a.
    if (!st.A->root_is_cut() && engine_detail::contains_sorted(st.A->body, w)) {
      if (w == jc) return std::nullopt;
      std::vector<char> gc_a(g.size(), 0);
      for (int id : a_nodes) {
        for (int x : H.nodes[id].vertices) gc_a[x] = !in_j[x];
      }
      gc_a[jx.a1] = 1;
      auto head = connect(g, jc, jx.a1, gc_a);
      if (!head) return std::nullopt;
      auto jp = j_path(st, jx.J, jx.a1, v, jx.b1, d);
      if (!jp) return std::nullopt;
      engine_detail::Chain p1c;
      p1c.add(*head).add(*jp).vertex(w);
      Built p1 = p1c.take("P1");
      if (!engine_detail::simple_path(g, p1.path, jc, w)) return std::nullopt;
      std::vector<char> used(g.size(), 0);
      for (int x : p1.path) used[x] = 1;
      used[st.ra] = used[st.rb] = 1;
      for (std::size_t e = 0; e < H.arcs.size(); ++e) {
        const HArc& arc = H.arcs[e];
        if (!arc.from_a || in_comp[arc.from] || arc.from == H.special || !usable_node(st, H, arc.to)) continue;
        auto used2 = used;
        auto w2 = assemble_walk(st, H, {arc.from, arc.to}, {static_cast<int>(e)}, used2, d);
        if (!w2) continue;
        auto taken = used2;
        taken[st.ra] = 0;
        for (int x : {jc, w, w2->first}) taken[x] = 0;
        auto allowed_a = body_allowed(st, *st.A, taken);
        auto la = linkage(g, st.ra, w2->first, jc, w, allowed_a);
        if (!la) continue;
        const auto& [from_a, from_k] = *la;
        engine_detail::Chain c;
        if (from_a.back() == jc) {
          c.add(from_a).add(p1).add_reversed(from_k).add(w2->built);
        } else {
          c.add(from_a).add_reversed(p1).add_reversed(from_k).add(w2->built);
        }
        for (int x : c.path()) taken[x] = 1;
        taken[w2->last] = 0;
        taken[st.rb] = 0;
        auto tail = to_root(st, *st.B, w2->last, taken);
        if (!tail) continue;
        c.add(*tail);
        Built out = finish(st, c, "C7");
        if (accept(g, ga, gb, tgt, out, &st)) return out;
      }
      return std::nullopt;
    }

    // w in a limb K of a outside the component.
    const int k = H.node_of[w];
    if (k < 0 || in_comp[k] || k == H.special || H.nodes[k].core) return std::nullopt;
    const HNode& K = H.nodes[k];
    const SideEndblock* Ew = nullptr;
    for (const auto& E : st.A->endblocks) {
      if (E.cut >= 0 && engine_detail::contains_sorted(E.interior, w)) Ew = &E;
    }
    std::vector<char> outside_j(g.size(), 1);
    for (int x : jx.J) outside_j[x] = 0;
    for (std::size_t x = 0; x < g.size(); ++x) {
      if (st.blocked[x]) outside_j[x] = 0;
    }
    auto side_outside_j = [&](const SideInfo& side, const std::vector<char>& extra) {
      std::vector<char> m(g.size(), 0);
      for (int x : side.locals) m[x] = outside_j[x] && !extra[x];
      return m;
    };
    std::vector<char> none(g.size(), 0);

    // Through the endblock holding w and out of K at its joint.
    if (Ew) {
      auto allowed_k = engine_detail::mask_of(g.size(), K.vertices);
      clear(allowed_k, Ew->interior);
      for (int x : jx.J) allowed_k[x] = 0;
      auto down = connect(g, Ew->cut, K.joint, allowed_k);
      auto jp = j_path(st, jx.J, v, jx.b1, jx.a1, d);
      if (down && jp) {
        std::vector<char> used(g.size(), 0);
        for (int x : *down) used[x] = 1;
        for (int x : Ew->interior) used[x] = 1;
        for (int x : jp->path) used[x] = 1;
        used[K.joint] = 0;
        auto head = to_root(st, *st.A, K.joint, used);
        if (head) {
          for (int x : *head) used[x] = 1;
          used[jx.b1] = 0;
          auto tail = connect(g, jx.b1, st.rb, side_outside_j(*st.B, used));
          auto mid = ep(g, *Ew, w, Ew->cut, d - 1);
          if (tail && mid) {
            engine_detail::Chain c;
            c.add_reversed(*head).add_reversed(*down).add_reversed(*mid).add(*jp).add(*tail);
            Built out = finish(st, c, "C7");
            if (accept(g, ga, gb, tgt, out, &st)) return out;
          }
        }
      }
    }

    // Into K at w, through an endblock of K with its chosen exit, across.
    auto head_j = connect(g, st.ra, jx.a1, [&] {
      auto m = side_outside_j(*st.A, none);
      m[jx.a1] = 1;
      return m;
    }());
    if (!head_j) return std::nullopt;
    auto jp = j_path(st, jx.J, jx.a1, v, jx.b1, d);
    if (!jp) return std::nullopt;
    for (const HArc& arc : H.arcs) {
      if (arc.from != k) continue;
      const auto& E = st.A->endblocks[arc.endblock];
      if (Ew && &E == Ew) continue;
      std::vector<char> used(g.size(), 0);
      for (int x : *head_j) used[x] = 1;
      for (int x : jp->path) used[x] = 1;
      if (used[w] || used[arc.partner]) continue;
      engine_detail::Chain c;
      c.add(*head_j).add(*jp).vertex(w);
      used[w] = 1;
      int from = w;
      if (Ew) {
        auto mid = ep(g, *Ew, w, Ew->cut, d - 1);
        if (!mid) continue;
        c.add(*mid);
        for (int x : Ew->members) used[x] = 1;
        from = Ew->cut;
        used[from] = 0;
      }
      auto allowed_k = engine_detail::mask_of(g.size(), K.vertices);
      for (std::size_t x = 0; x < g.size(); ++x) {
        if (used[x] || !outside_j[x]) allowed_k[x] = 0;
      }
      clear(allowed_k, E.interior);
      for (int r : {st.a, st.ra}) allowed_k[r] = 0;
      auto link = connect(g, from, E.cut, allowed_k);
      if (!link) continue;
      for (int x : *link) used[x] = 1;
      auto mid2 = ep(g, E, E.cut, arc.exit, d - 1);
      if (!mid2) continue;
      for (int x : mid2->path) used[x] = 1;
      auto tail = connect(g, arc.partner, st.rb, side_outside_j(*st.B, used));
      if (!tail) continue;
      c.add(*link).add(*mid2).add(*tail);
      Built out = finish(st, c, "C7");
      if (accept(g, ga, gb, tgt, out, &st)) return out;
    }
    return std::nullopt;
  }

  // ---- one root with a single neighbour on its side ----------------------------------------

  std::optional<Built> degree_one(const SubgraphView& g, int a, int b, int d, std::int64_t tgt,
                                  const std::vector<SplitOutcome>& cands) {
    if (!opt_.enabled("C9")) return std::nullopt;
    auto flip = [&](std::optional<Built> r) {
      if (r) std::reverse(r->path.begin(), r->path.end());
      return r;
    };
    const bool a_low = g.degree(a) == 2;
    const bool b_low = g.degree(b) == 2;
    if (a_low || !b_low) {
      if (auto r = degree_one_oriented(g, a, b, d, tgt, cands, false)) return r;
    }
    if (b_low) {
      if (auto r = flip(degree_one_oriented(g, b, a, d, tgt, cands, true))) return r;
    }
    return std::nullopt;
  }

  // `swapped`: candidates were computed for (b, a), so sides are mirrored.
  std::optional<Built> degree_one_oriented(const SubgraphView& g, int a, int b, int d, std::int64_t tgt,
                                           const std::vector<SplitOutcome>& cands, bool swapped) {
    const int n = static_cast<int>(g.size());
    std::vector<int> others;
    for (int v = 0; v < n; ++v) {
      if (v != a) others.push_back(v);
    }
    const Piece rest = piece(g, others);

    // C9: G - a not 2-connected; enter an endblock of G - a at a neighbour of a.
    const BlockForest rf = block_cut_tree(rest.view);
    if (rf.blocks.size() > 1) {
      int tries = 0;
      for (int e : rf.endblocks) {
        const int cut = rf.cut_of[e];
        if (cut < 0) continue;
        std::vector<int> members, interior;
        for (int x : rf.blocks[e]) members.push_back(rest.locals[x]);
        for (int x : rf.interior(e)) interior.push_back(rest.locals[x]);
        if (engine_detail::contains_sorted(interior, b)) continue;
        for (int w : g.neighbors(a)) {
          if (!engine_detail::contains_sorted(interior, w)) continue;
          if (tries++ >= opt_.max_candidates) break;
          std::vector<char> allowed(n, 1);
          allowed[a] = 0;
          clear(allowed, interior);
          auto tail = connect(g, rest.locals[cut], b, allowed);
          if (!tail) continue;
          auto mid = sub(g, members, w, rest.locals[cut], d);
          if (!mid) continue;
          engine_detail::Chain c;
          c.vertex(a).add(*mid).add(*tail);
          Built out = c.take("C9-CUT");
          if (accept(g, a, b, tgt, out)) return out;
        }
      }
    }

    // C9: both ends of degree two and adjacent, or sharing both neighbours.
    if (g.degree(a) == 2 && g.degree(b) == 2) {
      const auto na = g.neighbors(a);
      const auto nb = g.neighbors(b);
      int p = -1, q = -1;
      if (g.has_edge(a, b)) {
        p = na[0] == b ? na[1] : na[0];
        q = nb[0] == a ? nb[1] : nb[0];
      } else if (na[0] == nb[0] && na[1] == nb[1]) {
        p = na[0];
        q = na[1];
      }
      if (p >= 0 && q >= 0 && p != q) {
        std::vector<int> inner;
        for (int v = 0; v < n; ++v) {
          if (v != a && v != b) inner.push_back(v);
        }
        if (auto mid = pair_path(g, inner, p, q, d)) {
          engine_detail::Chain c;
          c.vertex(a).add(*mid).vertex(b);
          Built out = c.take("C9-PAIR");
          if (accept(g, a, b, tgt, out)) return out;
        }
      }
    }

    // C9: a adjacent to b; drop a and start from its other neighbour.
    if (g.has_edge(a, b) && g.degree(a) == 2) {
      const auto na = g.neighbors(a);
      const int a2 = na[0] == b ? na[1] : na[0];
      if (auto mid = sub(g, others, a2, b, d, false)) {
        engine_detail::Chain c;
        c.vertex(a).add(*mid);
        Built out = c.take("C9-DROP");
        if (accept(g, a, b, tgt, out)) return out;
      }
    }

    // Splits with a single neighbour of a on its side and b keeping two.
    int tried = 0;
    for (const auto& s0 : cands) {
      const int deg_a = swapped ? s0.degree_b() : s0.degree_a();
      const int deg_b = swapped ? s0.degree_a() : s0.degree_b();
      if (deg_a != 1 || deg_b < 2 || g.degree(a) != 2) continue;
      if (tried++ >= opt_.max_directions) break;
      SplitOutcome s = s0;
      if (swapped) {
        std::swap(s.side_a, s.side_b);
        std::swap(s.side_a_locals, s.side_b_locals);
        for (auto& x : s.in_a) x = !x;
        std::swap(s.root_a, s.root_b);
      }
      int a1 = -1, v = -1;
      for (int w : g.neighbors(a)) (s.in_a[w] ? a1 : v) = w;
      if (a1 < 0 || v < 0) continue;
      if (v == b) continue;
      SplitState st;
      try {
        st = make_split_state(g, s, a, b, a1, b);
      } catch (const ConstructionGap& e) {
        diagnose(std::string("degree-one split skipped: ") + e.what());
        continue;
      }
      st.blocked[a] = 1;
      st.pendant = a;
      if (auto r = endblock_rules(st, d, tgt)) return r;
      if (auto r = five_piece(st, v, d, tgt)) return r;
      if (auto r = h_rules(st, d, tgt, v)) return r;
      diagnose("C9: split along " + std::to_string(s.direction) + " gave no path");
    }
    if (tried == 0) diagnose("C9: no split leaves a single neighbour of a on its side");
    return std::nullopt;
  }

  // Path p ... q in g[inner]: by recursion when 2-connected, otherwise
  // through the two endblocks holding p and q.
  std::optional<Built> pair_path(const SubgraphView& g, const std::vector<int>& inner, int p, int q, int d) {
    const Piece pc = piece(g, inner);
    if (is_two_connected(pc.view)) return sub(g, inner, p, q, d);
    const BlockForest f = block_cut_tree(pc.view);
    if (!f.connected) return std::nullopt;
    const int lp = pc.index(p), lq = pc.index(q);
    int ep_p = -1, ep_q = -1;
    for (int e : f.endblocks) {
      if (f.cut_of[e] < 0) continue;
      if (f.in_interior(e, lp)) ep_p = e;
      if (f.in_interior(e, lq)) ep_q = e;
    }
    if (ep_p < 0 || ep_q < 0 || ep_p == ep_q) return std::nullopt;
    auto lift = [&](const std::vector<int>& xs) {
      std::vector<int> out;
      for (int x : xs) out.push_back(pc.locals[x]);
      return out;
    };
    const int cp = pc.locals[f.cut_of[ep_p]], cq = pc.locals[f.cut_of[ep_q]];
    std::vector<char> allowed = engine_detail::mask_of(g.size(), inner);
    clear(allowed, lift(f.interior(ep_p)));
    clear(allowed, lift(f.interior(ep_q)));
    auto link = connect(g, cp, cq, allowed);
    if (!link) return std::nullopt;
    auto x = sub(g, lift(f.blocks[ep_p]), p, cp, d);
    auto y = sub(g, lift(f.blocks[ep_q]), cq, q, d);
    if (!x || !y) return std::nullopt;
    engine_detail::Chain c;
    c.add(*x).add(*link).add(*y);
    return c.take("ENDBLOCKS");
  }

  // C9: v, the neighbour of a across the split, is not inside an endblock of
  // b's side. Two endblocks of that side are threaded with a path on a's side.
  std::optional<Built> five_piece(const SplitState& st, int v, int d, std::int64_t tgt) {
    const SubgraphView& g = *st.g;
    const SideInfo& B = *st.B;
    std::vector<int> ebs;
    for (std::size_t e = 0; e < B.endblocks.size(); ++e) {
      const auto& E = B.endblocks[e];
      if (E.cut < 0 || engine_detail::contains_sorted(E.interior, st.b)) continue;
      if (engine_detail::contains_sorted(E.interior, v)) return std::nullopt;
      ebs.push_back(static_cast<int>(e));
    }
    int tries = 0;
    for (std::size_t i = 0; i < ebs.size(); ++i) {
      for (std::size_t j = 0; j < ebs.size(); ++j) {
        if (i == j) continue;
        const auto& E1 = B.endblocks[ebs[i]];
        const auto& E2 = B.endblocks[ebs[j]];
        if (E1.cut == E2.cut) continue;
        if (tries++ >= 2 * opt_.max_candidates) return std::nullopt;
        DisjointPathRequest req;
        req.sources = {{v, 1}, {st.b, 1}};
        req.sink_groups = {{E1.cut}, {E2.cut}};
        req.allowed = side_mask(st, B, nullptr);
        clear(req.allowed, E1.interior);
        clear(req.allowed, E2.interior);
        auto paths = disjoint_paths(g, req, 2);
        if (!paths) continue;
        LocalPath pv = (*paths)[0], pb = (*paths)[1];
        if (pv.front() != v) std::swap(pv, pb);
        if (pv.back() != E1.cut) continue;
        for (const auto& x1 : E1.exits) {
          if (x1.partner == st.a) continue;
          for (const auto& x2 : E2.exits) {
            if (x2.partner == st.a || x2.partner == x1.partner) continue;
            auto allowed_a = side_mask(st, *st.A, nullptr);
            allowed_a[st.a] = 0;
            auto p3 = connect(g, x1.partner, x2.partner, allowed_a);
            if (!p3) continue;
            auto p2 = ep(g, E1, E1.cut, x1.exit, d - 1);
            auto p4 = ep(g, E2, x2.exit, E2.cut, d - 1);
            if (!p2 || !p4) continue;
            engine_detail::Chain c;
            c.vertex(st.a).add(pv).add(*p2).add(*p3).add(*p4).add_reversed(pb);
            Built out = c.take("C9-FIVE");
            if (accept(g, st.a, st.b, tgt, out)) return out;
            break;
          }
          break;
        }
      }
    }
    return std::nullopt;
  }

  // ---- general split systems ------------------------------------------------------------------

  std::optional<Built> general_rules(const SubgraphView& g, int a, int b, int d, std::int64_t tgt) {
    const int loss = k_ + 1;
    std::vector<std::pair<int, int>> seeds;
    for (int x : g.neighbors(a)) {
      if (x == b) continue;
      for (int y : g.neighbors(b)) {
        if (y == a || y == x) continue;
        seeds.push_back({x, y});
      }
    }
    int tried = 0;
    for (auto [x, y] : seeds) {
      if (tried >= opt_.max_directions) break;
      SplitOutcome s;
      try {
        s = split_seeded(g, a, b, x, y);
      } catch (const PreconditionError&) {
        continue;
      }
      ++tried;
      if (s.side_a.empty() || s.side_b.empty()) continue;
      for (bool flip : {false, true}) {
        if (auto r = general_on_split(g, s, a, b, d, tgt, loss, flip)) return r;
      }
    }
    return std::nullopt;
  }

  struct GSide {
    std::vector<int> locals;
    SubgraphView view;
    BlockForest forest;
  };

  std::optional<Built> general_on_split(const SubgraphView& g, const SplitOutcome& s, int a, int b, int d,
                                        std::int64_t tgt, int loss, bool flip) {
    const int n = static_cast<int>(g.size());
    GSide A{flip ? s.side_b_locals : s.side_a_locals, flip ? s.side_b : s.side_a, {}};
    GSide B{flip ? s.side_a_locals : s.side_b_locals, flip ? s.side_a : s.side_b, {}};
    const int ra = flip ? b : a, rb = flip ? a : b;
    A.forest = block_cut_tree(A.view);
    B.forest = block_cut_tree(B.view);
    std::vector<char> on_a(n, 0);
    for (int v : A.locals) on_a[v] = 1;
    auto lift = [](const GSide& side, const std::vector<int>& xs) {
      std::vector<int> out;
      for (int x : xs) out.push_back(side.locals[x]);
      return out;
    };
    auto oriented = [&](Built out) -> std::optional<Built> {
      if (flip) std::reverse(out.path.begin(), out.path.end());
      if (accept(g, a, b, tgt, out)) return out;
      return std::nullopt;
    };
    const int ra_local = static_cast<int>(std::lower_bound(A.locals.begin(), A.locals.end(), ra) - A.locals.begin());

    // A is a single block: a long ra..y piece in A, a cross edge yx, then x..rb
    // through B (through an endblock of B when B has one).
    if (A.forest.connected && A.forest.blocks.size() == 1) {
      if (!opt_.enabled("G-BLOCK")) return std::nullopt;
      if (auto r = block_side(g, A, B, on_a, ra, rb, d, loss)) return oriented(*r);
      return std::nullopt;
    }

    // Endblocks of A not containing ra, farthest from ra's block first.
    std::vector<int> order;
    for (int e : A.forest.endblocks) {
      if (A.forest.cut_of[e] >= 0 && !A.forest.in_block(e, ra_local)) order.push_back(e);
    }
    const auto dist = bfs_distances(A.view, ra_local);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
      return dist[A.forest.cut_of[x]] > dist[A.forest.cut_of[y]];
    });
    int tries = 0;
    for (int e : order) {
      if (tries++ >= opt_.max_candidates) break;
      const auto members = lift(A, A.forest.blocks[e]);
      const auto interior = lift(A, A.forest.interior(e));
      const int cut = A.locals[A.forest.cut_of[e]];
      std::vector<std::pair<int, int>> exits;
      for (int x : interior) {
        for (int y : g.neighbors(x)) {
          if (!on_a[y]) exits.push_back({x, y});
        }
      }
      if (exits.empty()) continue;
      std::vector<char> rest_a(n, 0);
      for (int x : A.locals) rest_a[x] = 1;
      clear(rest_a, interior);
      auto head = connect(g, ra, cut, rest_a);
      if (!head) continue;
      std::vector<char> all_b(n, 0);
      for (int x : B.locals) all_b[x] = 1;

      // G1: a single exit vertex.
      std::vector<int> exit_vs;
      for (auto [x, y] : exits) exit_vs.push_back(x);
      std::sort(exit_vs.begin(), exit_vs.end());
      exit_vs.erase(std::unique(exit_vs.begin(), exit_vs.end()), exit_vs.end());
      if (exit_vs.size() == 1 && opt_.enabled("G1")) {
        const auto [x, y] = exits.front();
        auto tail = connect(g, y, rb, all_b);
        auto mid = sub(g, members, cut, x, d);
        if (tail && mid) {
          engine_detail::Chain c;
          c.add(*head).add(*mid).add(*tail);
          if (auto r = oriented(c.take("G1"))) return r;
        }
      }
      // G2: every exit goes to the same vertex y.
      bool single_target = true;
      for (auto [x, y] : exits) single_target = single_target && y == exits.front().second;
      if (single_target) {
        if (!opt_.enabled("G2")) continue;
        const int y = exits.front().second;
        auto ext = members;
        ext.push_back(y);
        auto tail = connect(g, y, rb, all_b);
        auto mid = sub(g, ext, cut, y, d);
        if (tail && mid) {
          engine_detail::Chain c;
          c.add(*head).add(*mid).add(*tail);
          if (auto r = oriented(c.take("G2"))) return r;
        }
        continue;
      }
      // G3: two disjoint exit edges x1y1, x2y2, an endblock F of B, and the
      // five-piece path a..v u..cutv(F)..y1 x1..x2 y2..b.
      if (!opt_.enabled("G3")) continue;
      for (std::size_t i = 0; i < exits.size(); ++i) {
        for (std::size_t j = 0; j < exits.size(); ++j) {
          const auto [x1, y1] = exits[i];
          const auto [x2, y2] = exits[j];
          if (x1 == x2 || y1 == y2) continue;
          if (auto r = five_path(g, A, B, on_a, ra, rb, members, interior, cut, x1, y1, x2, y2, d, loss)) {
            if (auto ok = oriented(*r)) return ok;
          }
          goto next_endblock;
        }
      }
    next_endblock:;
    }
    return std::nullopt;
  }

  std::optional<Built> block_side(const SubgraphView& g, const GSide& A, const GSide& B, const std::vector<char>& on_a,
                                  int ra, int rb, int d, int loss) {
    const int n = static_cast<int>(g.size());
    const int rb_local = static_cast<int>(std::lower_bound(B.locals.begin(), B.locals.end(), rb) - B.locals.begin());
    auto lift = [&](const std::vector<int>& xs) {
      std::vector<int> out;
      for (int x : xs) out.push_back(B.locals[x]);
      return out;
    };
    int tries = 0;
    auto cross = [&](const std::vector<int>& from, int to, const std::vector<int>& piece_b,
                     const std::vector<char>* rest) -> std::optional<Built> {
      for (int x : from) {
        if (x == rb) continue;
        for (int y : g.neighbors(x)) {
          if (!on_a[y] || y == ra) continue;
          if (tries++ >= 4 * opt_.max_candidates) return std::nullopt;
          auto p1 = sub(g, A.locals, ra, y, d - loss);
          if (!p1) continue;
          auto p2 = sub(g, piece_b, x, to, d - loss);
          if (!p2) continue;
          engine_detail::Chain c;
          c.add(*p1).add(*p2);
          if (rest) {
            auto p3 = connect(g, to, rb, *rest);
            if (!p3) continue;
            c.add(*p3);
          }
          return c.take("G-BLOCK");
        }
      }
      return std::nullopt;
    };
    if (B.forest.connected && B.forest.blocks.size() == 1) return cross(B.locals, rb, B.locals, nullptr);
    for (int f : B.forest.endblocks) {
      const int fc = B.forest.cut_of[f];
      if (fc < 0 || B.forest.in_interior(f, rb_local)) continue;
      const auto f_members = lift(B.forest.blocks[f]);
      const auto f_interior = lift(B.forest.interior(f));
      std::vector<char> rest(n, 0);
      for (int x : B.locals) rest[x] = 1;
      clear(rest, f_interior);
      if (auto r = cross(f_interior, B.locals[fc], f_members, &rest)) return r;
    }
    return std::nullopt;
  }

  std::optional<Built> five_path(const SubgraphView& g, const GSide& A, const GSide& B, const std::vector<char>& on_a,
                                 int ra, int rb, const std::vector<int>& e_members, const std::vector<int>& e_interior,
                                 int e_cut, int x1, int y1, int x2, int y2, int d, int loss) {
    const int n = static_cast<int>(g.size());
    const int rb_local = static_cast<int>(std::lower_bound(B.locals.begin(), B.locals.end(), rb) - B.locals.begin());
    auto lift = [&](const std::vector<int>& xs) {
      std::vector<int> out;
      for (int x : xs) out.push_back(B.locals[x]);
      return out;
    };
    std::vector<char> e_mask = engine_detail::mask_of(n, e_members);
    for (int f : B.forest.endblocks) {
      const int fc = B.forest.cut_of[f];
      if (fc < 0 || B.forest.in_interior(f, rb_local)) continue;
      const auto f_members = lift(B.forest.blocks[f]);
      const auto f_interior = lift(B.forest.interior(f));
      const int f_cut = B.locals[fc];
      if (engine_detail::contains_sorted(f_interior, y1) || engine_detail::contains_sorted(f_interior, y2)) continue;
      DisjointPathRequest req;
      req.sources = {{y1, 1}, {y2, 1}};
      req.sink_groups = {{rb}, {f_cut}};
      req.allowed.assign(n, 0);
      for (int x : B.locals) req.allowed[x] = 1;
      clear(req.allowed, f_interior);
      auto paths = disjoint_paths(g, req, 2);
      if (!paths) continue;
      LocalPath p_first = (*paths)[0], p_second = (*paths)[1];
      if (p_first.front() != y1) std::swap(p_first, p_second);
      // p3 joins cutv(F) and one y; p5 joins the other y and b.
      const bool y1_to_f = p_first.back() == f_cut;
      const LocalPath& to_f = y1_to_f ? p_first : p_second;
      const LocalPath& to_b = y1_to_f ? p_second : p_first;
      const int yf = y1_to_f ? y1 : y2, xf = y1_to_f ? x1 : x2;
      const int yb = y1_to_f ? y2 : y1, xb = y1_to_f ? x2 : x1;
      for (int u : f_interior) {
        for (int vv : g.neighbors(u)) {
          if (!on_a[vv] || vv == e_cut || e_mask[vv]) continue;
          std::vector<char> allowed_a(n, 0);
          for (int x : A.locals) allowed_a[x] = !e_mask[x];
          auto p1 = connect(g, ra, vv, allowed_a);
          if (!p1) continue;
          auto p2 = sub(g, f_members, u, f_cut, d - loss);
          auto p4 = interior_path(g, e_members, e_interior, e_cut, xf, xb, d, loss);
          if (!p2 || !p4) return std::nullopt;
          (void)yf;
          (void)yb;
          engine_detail::Chain full;
          full.add(*p1).add(*p2).add_reversed(to_f).add(*p4).add(to_b);
          return full.take("G3");
        }
      }
    }
    return std::nullopt;
  }

  // Path between two interior vertices u, v of an endblock E of a side,
  // following the endblocks of E - cutv(E).
  std::optional<Built> interior_path(const SubgraphView& g, const std::vector<int>& e_members,
                                     const std::vector<int>& e_interior, int e_cut, int u, int v, int d, int loss) {
    (void)e_members;
    const int dd = d - loss - 1;
    const Piece inner = piece(g, e_interior);
    if (is_two_connected(inner.view)) {
      if (auto r = sub(g, e_interior, u, v, dd)) {
        engine_detail::Chain c;
        c.add(*r);
        return c.take("G-INTERIOR");
      }
      return std::nullopt;
    }
    const BlockForest f = block_cut_tree(inner.view);
    if (!f.connected) return std::nullopt;
    const int lu = inner.index(u), lv = inner.index(v);
    auto lift = [&](const std::vector<int>& xs) {
      std::vector<int> out;
      for (int x : xs) out.push_back(inner.locals[x]);
      return out;
    };
    int fu = -1, fv = -1;
    for (int e : f.endblocks) {
      if (f.cut_of[e] < 0) continue;
      if (f.in_interior(e, lu)) fu = e;
      if (f.in_interior(e, lv)) fv = e;
    }
    if (fu >= 0 && fv >= 0 && fu != fv) {
      if (auto r = pair_path(g, e_interior, u, v, dd)) return r;
    }
    std::vector<char> e_mask = engine_detail::mask_of(g.size(), e_members);
    for (int e : f.endblocks) {
      if (f.cut_of[e] < 0 || e == fu || e == fv) continue;
      const auto F = lift(f.blocks[e]);
      const auto Fi = lift(f.interior(e));
      const int fc = inner.locals[f.cut_of[e]];
      DisjointPathRequest req;
      req.sources = {{u, 1}, {v, 1}};
      req.sink_groups = {{fc}, Fi};
      req.allowed = e_mask;
      auto paths = disjoint_paths(g, req, 2);
      if (!paths) continue;
      LocalPath pu = (*paths)[0], pv = (*paths)[1];
      if (pu.front() != u) std::swap(pu, pv);
      const bool u_to_interior = engine_detail::contains_sorted(Fi, pu.back());
      const int w = u_to_interior ? pu.back() : pv.back();
      auto mid = u_to_interior ? sub(g, F, w, fc, dd) : sub(g, F, fc, w, dd);
      if (!mid) continue;
      engine_detail::Chain c;
      c.add(pu).add(*mid).add_reversed(pv);
      Built out = c.take("G-INTERIOR");
      if (engine_detail::simple_path(g, out.path, u, v)) return out;
    }
    (void)e_cut;
    return std::nullopt;
  }

  Mode mode_;
  int k_;
  EngineOptions opt_;
  EngineStats stats_;
  std::vector<std::pair<std::size_t, int>> frames_;
  std::unordered_map<std::string, CacheEntry> cache_;
  std::optional<Built> best_;
};

}  // namespace hcpath
