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
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "hcpath/certificate.hpp"
#include "hcpath/subgraph.hpp"

namespace hcpath {

inline constexpr int kDpVertexLimit = 24;
inline constexpr std::uint64_t kDefaultBudget = 200'000'000;

struct OracleResult {
  std::int64_t length = -1;          // -1: no path/cycle exists
  std::vector<VertexId> witness;
  std::uint64_t explored = 0;
  bool exact = false;
};

namespace oracle_detail {

struct LocalResult {
  std::int64_t length = -1;
  LocalPath witness;
  std::uint64_t explored = 0;
  bool exact = false;
};

inline std::vector<std::uint32_t> adjacency_masks(const SubgraphView& g) {
  std::vector<std::uint32_t> adj(g.size(), 0);
  for (int u = 0; u < static_cast<int>(g.size()); ++u) {
    for (int w : g.neighbors(u)) adj[u] |= std::uint32_t{1} << w;
  }
  return adj;
}

// dp[mask] = endpoints v such that some path covering exactly `mask` ends at
// v. Paths start at `start` when start >= 0, anywhere otherwise; with
// cycles, each path starts at the lowest vertex of its mask.
enum class DpKind { kFromStart, kAnyStart, kCycle };

inline LocalResult dp_search(const SubgraphView& g, DpKind kind, int start, int end) {
  const int n = static_cast<int>(g.size());
  const auto adj = adjacency_masks(g);
  const std::uint32_t full = n == 32 ? ~0U : ((1U << n) - 1);
  std::vector<std::uint32_t> dp(std::size_t{1} << n, 0);
  if (kind == DpKind::kFromStart) {
    dp[1U << start] = 1U << start;
  } else {
    for (int v = 0; v < n; ++v) dp[1U << v] = 1U << v;
  }
  LocalResult r;
  r.exact = true;
  std::uint32_t best_mask = 0;
  int best_end = -1;
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    std::uint32_t ends = dp[mask];
    if (!ends) continue;
    const int low = std::countr_zero(mask);
    const int count = std::popcount(mask);
    std::uint32_t it = ends;
    while (it) {
      const int v = std::countr_zero(it);
      it &= it - 1;
      ++r.explored;
      switch (kind) {
        case DpKind::kFromStart:
          if (v == end && count - 1 > r.length) {
            r.length = count - 1;
            best_mask = mask;
            best_end = v;
          }
          break;
        case DpKind::kAnyStart:
          if (count - 1 > r.length) {
            r.length = count - 1;
            best_mask = mask;
            best_end = v;
          }
          break;
        case DpKind::kCycle:
          if (count >= 3 && ((adj[v] >> low) & 1U) && count > r.length) {
            r.length = count;
            best_mask = mask;
            best_end = v;
          }
          break;
      }
      if (kind == DpKind::kFromStart && v == end) continue;
      std::uint32_t next = adj[v] & ~mask;
      if (kind == DpKind::kCycle) next &= ~((2U << low) - 1);
      while (next) {
        const int w = std::countr_zero(next);
        next &= next - 1;
        dp[mask | (1U << w)] |= 1U << w;
      }
    }
  }
  if (best_end >= 0) {
    std::uint32_t mask = best_mask;
    int v = best_end;
    r.witness.push_back(v);
    while (std::popcount(mask) > 1) {
      const std::uint32_t prev_mask = mask & ~(1U << v);
      std::uint32_t cand = dp[prev_mask] & adj[v];
      if (kind == DpKind::kFromStart) cand &= ~(1U << end);
      const int u = std::countr_zero(cand);
      r.witness.push_back(u);
      mask = prev_mask;
      v = u;
    }
    std::reverse(r.witness.begin(), r.witness.end());
  }
  return r;
}

// Depth-first branch and bound. The bound is the current length plus the
// number of unvisited vertices still reachable, tightened by colour counts
// when the graph is bipartite.
class BranchAndBound {
 public:
  BranchAndBound(const SubgraphView& g, std::uint64_t budget) : g_(g), budget_(budget) {
    const int n = static_cast<int>(g.size());
    color_.assign(n, -1);
    bipartite_ = true;
    for (int s = 0; s < n; ++s) {
      if (color_[s] >= 0) continue;
      color_[s] = 0;
      std::deque<int> q = {s};
      while (!q.empty()) {
        const int u = q.front();
        q.pop_front();
        for (int w : g.neighbors(u)) {
          if (color_[w] < 0) {
            color_[w] = 1 - color_[u];
            q.push_back(w);
          } else if (color_[w] == color_[u]) {
            bipartite_ = false;
          }
        }
      }
    }
    visited_.assign(n, 0);
    mark_.assign(n, 0);
  }

  // Longest path from s; ends at t when t >= 0. With `floor_vertex` >= 0
  // only vertices above it may be used and the path must close into a
  // cycle back to s. Stops early once `stop_at` is reached.
  void search(int s, int t, bool cycle, std::int64_t stop_at) {
    target_ = t;
    cycle_ = cycle;
    start_ = s;
    stop_at_ = stop_at;
    path_ = {s};
    visited_[s] = 1;
    dfs(s);
    visited_[s] = 0;
  }

  std::int64_t best() const { return best_; }
  const LocalPath& best_path() const { return best_path_; }
  std::uint64_t explored() const { return explored_; }
  bool exhausted() const { return explored_ >= budget_; }
  bool done() const { return exhausted() || (stop_at_ >= 0 && best_ >= stop_at_); }

 private:
  bool usable(int w) const { return !visited_[w] && (!cycle_ || w > start_); }

  // Largest number of extra vertices a path leaving u could still add.
  std::int64_t extension_bound(int u) {
    ++stamp_;
    std::int64_t count[2] = {0, 0};
    bool target_seen = target_ < 0;
    bool closes = !cycle_;
    std::vector<int>& stack = scratch_;
    stack.clear();
    stack.push_back(u);
    mark_[u] = stamp_;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int w : g_.neighbors(x)) {
        if (cycle_ && w == start_ && x != u) closes = true;
        if (!usable(w) || mark_[w] == stamp_) continue;
        mark_[w] = stamp_;
        if (w == target_) {
          target_seen = true;
          ++count[color_[w]];
          continue;
        }
        ++count[color_[w]];
        stack.push_back(w);
      }
    }
    if (cycle_ && g_.has_edge(u, start_) && path_.size() >= 3) closes = true;
    if (!target_seen || !closes) return -1;
    if (!bipartite_) return count[0] + count[1];
    const int c = color_[u];
    const std::int64_t other = count[1 - c], same = count[c];
    std::int64_t k = std::min(2 * other, 2 * same + 1);
    if (target_ >= 0) {
      // Parity of the remaining segment is fixed by the target's colour.
      const bool odd = color_[target_] != c;
      if ((k % 2 == 1) != odd) --k;
    }
    return k;
  }

  void record() {
    const std::int64_t len = cycle_ ? static_cast<std::int64_t>(path_.size())
                                    : static_cast<std::int64_t>(path_.size()) - 1;
    if (len > best_) {
      best_ = len;
      best_path_ = path_;
    }
  }

  void dfs(int u) {
    if (done()) return;
    ++explored_;
    const std::int64_t cur = static_cast<std::int64_t>(path_.size()) - 1;
    if (target_ >= 0 ? u == target_ : true) {
      if (!cycle_) record();
    }
    if (cycle_ && path_.size() >= 3 && g_.has_edge(u, start_)) record();
    if (target_ >= 0 && u == target_) return;
    const std::int64_t ext = extension_bound(u);
    if (ext < 0) return;
    const std::int64_t bound = cycle_ ? cur + ext + 1 : cur + ext;
    if (bound <= best_) return;
    // Visit neighbours with the fewest onward options first.
    std::vector<std::pair<int, int>> order;
    for (int w : g_.neighbors(u)) {
      if (!usable(w)) continue;
      int onward = 0;
      for (int z : g_.neighbors(w)) onward += usable(z) ? 1 : 0;
      order.emplace_back(onward, w);
    }
    std::sort(order.begin(), order.end());
    for (auto [onward, w] : order) {
      (void)onward;
      visited_[w] = 1;
      path_.push_back(w);
      dfs(w);
      path_.pop_back();
      visited_[w] = 0;
      if (done()) return;
    }
  }

  const SubgraphView& g_;
  std::uint64_t budget_;
  std::vector<int> color_;
  bool bipartite_ = true;
  std::vector<char> visited_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t stamp_ = 0;
  std::vector<int> scratch_;
  LocalPath path_;
  LocalPath best_path_;
  std::int64_t best_ = -1;
  std::uint64_t explored_ = 0;
  int target_ = -1;
  int start_ = -1;
  bool cycle_ = false;
  std::int64_t stop_at_ = -1;
};

inline void check_budget(std::uint64_t budget) {
  if (budget == 0) throw InvalidArgument("oracle budget must be positive");
}

inline LocalResult longest_between(const SubgraphView& g, int a, int b, std::uint64_t budget) {
  check_budget(budget);
  if (a == b) return {0, {a}, 1, true};
  if (static_cast<int>(g.size()) <= kDpVertexLimit) return dp_search(g, DpKind::kFromStart, a, b);
  BranchAndBound bb(g, budget);
  bb.search(a, b, false, -1);
  return {bb.best(), bb.best_path(), bb.explored(), !bb.exhausted()};
}

inline LocalResult longest_any(const SubgraphView& g, std::uint64_t budget) {
  check_budget(budget);
  if (g.empty()) return {-1, {}, 0, true};
  if (static_cast<int>(g.size()) <= kDpVertexLimit) return dp_search(g, DpKind::kAnyStart, -1, -1);
  BranchAndBound bb(g, budget);
  const std::int64_t cap = static_cast<std::int64_t>(g.size()) - 1;
  for (int s = 0; s < static_cast<int>(g.size()) && !bb.done(); ++s) bb.search(s, -1, false, cap);
  return {bb.best(), bb.best_path(), bb.explored(), !bb.exhausted()};
}

inline LocalResult longest_cycle_local(const SubgraphView& g, std::uint64_t budget) {
  check_budget(budget);
  if (g.size() < 3) return {-1, {}, 0, true};
  if (static_cast<int>(g.size()) <= kDpVertexLimit) return dp_search(g, DpKind::kCycle, -1, -1);
  BranchAndBound bb(g, budget);
  const std::int64_t cap = static_cast<std::int64_t>(g.size());
  for (int s = 0; s < static_cast<int>(g.size()) && !bb.done(); ++s) bb.search(s, -1, true, cap);
  return {bb.best(), bb.best_path(), bb.explored(), !bb.exhausted()};
}

// Some a-b path of length >= target, if the search finds one in budget.
inline std::optional<LocalPath> path_at_least(const SubgraphView& g, int a, int b, std::int64_t target,
                                              std::uint64_t budget) {
  check_budget(budget);
  if (a == b) return target <= 0 ? std::optional<LocalPath>(LocalPath{a}) : std::nullopt;
  if (static_cast<int>(g.size()) <= kDpVertexLimit) {
    auto r = dp_search(g, DpKind::kFromStart, a, b);
    if (r.length >= target) return r.witness;
    return std::nullopt;
  }
  BranchAndBound bb(g, budget);
  bb.search(a, b, false, target);
  if (bb.best() >= target) return bb.best_path();
  return std::nullopt;
}

inline OracleResult lift(const SubgraphView& g, const LocalResult& r) {
  OracleResult out;
  out.length = r.length;
  out.explored = r.explored;
  out.exact = r.exact;
  for (int v : r.witness) out.witness.push_back(g.id(v));
  return out;
}

}  // namespace oracle_detail

inline OracleResult longest_path_between(const SubgraphView& g, VertexId a, VertexId b,
                                         std::uint64_t budget = kDefaultBudget) {
  const int la = g.index_of(a), lb = g.index_of(b);
  if (la < 0 || lb < 0) throw InvalidArgument("oracle endpoints must belong to the graph");
  return oracle_detail::lift(g, oracle_detail::longest_between(g, la, lb, budget));
}

inline OracleResult longest_path(const SubgraphView& g, std::uint64_t budget = kDefaultBudget) {
  return oracle_detail::lift(g, oracle_detail::longest_any(g, budget));
}

inline OracleResult longest_cycle(const SubgraphView& g, std::uint64_t budget = kDefaultBudget) {
  return oracle_detail::lift(g, oracle_detail::longest_cycle_local(g, budget));
}

struct ValidationReport {
  bool valid = false;
  std::int64_t length = -1;
  bool bound_met = false;
  bool bound_formula_ok = false;
  std::string problem;

  bool ok() const { return valid && bound_met && bound_formula_ok; }
};

namespace oracle_detail {

inline bool check_walk(const SubgraphView& g, const std::vector<VertexId>& seq, bool closed,
                       ValidationReport& r) {
  if (seq.empty()) {
    r.problem = "empty vertex sequence";
    return false;
  }
  std::vector<int> local;
  for (VertexId v : seq) {
    const int l = g.index_of(v);
    if (l < 0) {
      r.problem = "vertex " + std::to_string(v) + " not in graph";
      return false;
    }
    local.push_back(l);
  }
  auto sorted = local;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    r.problem = "repeated vertex";
    return false;
  }
  for (std::size_t i = 0; i + 1 < local.size(); ++i) {
    if (!g.has_edge(local[i], local[i + 1])) {
      r.problem = "missing edge at position " + std::to_string(i);
      return false;
    }
  }
  if (closed && (local.size() < 3 || !g.has_edge(local.back(), local.front()))) {
    r.problem = "cycle does not close";
    return false;
  }
  return true;
}

}  // namespace oracle_detail

// Checks simplicity, adjacency, optional endpoints, and the bound arithmetic
// for the certificate's mode.
inline ValidationReport validate_certificate(const SubgraphView& g, const PathCertificate& c,
                                             std::optional<VertexId> a = std::nullopt,
                                             std::optional<VertexId> b = std::nullopt) {
  ValidationReport r;
  r.valid = oracle_detail::check_walk(g, c.path, false, r);
  if (r.valid && a && c.path.front() != *a) {
    r.valid = false;
    r.problem = "path does not start at a";
  }
  if (r.valid && b && c.path.back() != *b) {
    r.valid = false;
    r.problem = "path does not end at b";
  }
  r.length = c.length();
  r.bound_formula_ok = c.claimed_bound == expected_bound(g, c);
  if (!r.bound_formula_ok && r.problem.empty()) r.problem = "claimed bound does not match the mode formula";
  r.bound_met = r.valid && r.length >= c.claimed_bound;
  if (r.valid && !r.bound_met && r.problem.empty()) r.problem = "length below claimed bound";
  return r;
}

inline ValidationReport validate_certificate(const SubgraphView& g, const CycleCertificate& c) {
  ValidationReport r;
  r.valid = oracle_detail::check_walk(g, c.cycle, true, r);
  r.length = c.length();
  r.bound_formula_ok = c.claimed_bound == (c.d <= 0 ? 1 : pow2(c.d));
  if (!r.bound_formula_ok && r.problem.empty()) r.problem = "claimed bound does not match 2^d";
  r.bound_met = r.valid && r.length >= c.claimed_bound;
  if (r.valid && !r.bound_met && r.problem.empty()) r.problem = "length below claimed bound";
  return r;
}

// Repeatedly deletes vertices of degree below t. The result has minimum
// degree at least t and is empty only if no such subgraph exists.
inline SubgraphView dcore_peel(const SubgraphView& g, Rational t) {
  if (t < Rational(0)) throw InvalidArgument("peel threshold must be non-negative");
  const int n = static_cast<int>(g.size());
  std::vector<int> deg(n);
  std::vector<char> alive(n, 1);
  auto below = [&](int v) { return Rational(deg[v]) < t; };
  std::vector<int> stack;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (below(v)) {
      alive[v] = 0;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (!alive[w]) continue;
      --deg[w];
      if (below(w)) {
        alive[w] = 0;
        stack.push_back(w);
      }
    }
  }
  return g.induced_on_mask(alive);
}

}  // namespace hcpath
