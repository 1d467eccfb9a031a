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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcpath/subcube.hpp"

namespace hcpath {

// Which lower bound a path construction is held to.
//   weak    : 2^(d-1)
//   tight   : 2^d - 1, or 2^d - 2 when G is a d-cube and a, b are at even distance
//   general : ceil(2^(d/(k+2))) for hosts losing at most k neighbours per split
enum class Mode { kWeak, kTight, kGeneral };

inline const char* to_string(Mode m) {
  switch (m) {
    case Mode::kWeak:
      return "weak";
    case Mode::kTight:
      return "tight";
    case Mode::kGeneral:
      return "general";
  }
  return "?";
}

inline Mode parse_mode(const std::string& s) {
  if (s == "weak") return Mode::kWeak;
  if (s == "tight") return Mode::kTight;
  if (s == "general") return Mode::kGeneral;
  throw InvalidArgument("unknown mode '" + s + "'");
}

inline std::int64_t weak_bound(int d) { return d <= 1 ? 1 : pow2(d - 1); }

inline std::int64_t tight_bound(int d, bool even_cube) {
  if (d <= 0) return 0;
  return std::max<std::int64_t>(1, pow2(d) - (even_cube ? 2 : 1));
}

// Smallest integer L >= 1 with L^(k+2) >= 2^d.
inline std::int64_t general_bound(int d, int k) {
  if (d <= 0) return 1;
  if (k < 0) throw InvalidArgument("negative split loss");
  const int e = k + 2;
  auto reaches = [&](std::int64_t L) {
    unsigned __int128 p = 1;
    const unsigned __int128 goal = static_cast<unsigned __int128>(1) << d;
    for (int i = 0; i < e; ++i) {
      p *= static_cast<unsigned __int128>(L);
      if (p >= goal) return true;
    }
    return p >= goal;
  };
  std::int64_t lo = 1, hi = 1;
  while (!reaches(hi)) hi *= 2;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (reaches(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

// True when g is a d-cube and the two vertices sit at even distance in it.
inline bool even_cube_case(const SubgraphView& g, VertexId a, VertexId b, int d) {
  const auto w = is_subcube(g);
  return w && w->dimension == d && hamming(g.host(), a, b) % 2 == 0;
}

struct PathCertificate {
  std::vector<VertexId> path;
  std::int64_t claimed_bound = 0;
  Mode mode = Mode::kTight;
  int d = 0;
  int k = 1;
  // Endpoints chosen by the constructor rather than requested by the caller;
  // the tight bound then carries no parity exception.
  bool free_endpoints = false;
  std::vector<std::string> trace;
  bool fallback_used = false;
  std::vector<std::string> diagnostics;

  std::int64_t length() const { return path.empty() ? -1 : static_cast<std::int64_t>(path.size()) - 1; }
};

struct CycleCertificate {
  std::vector<VertexId> cycle;  // closing edge back to cycle.front() is implied
  std::int64_t claimed_bound = 0;
  int d = 0;
  std::vector<std::string> trace;
  bool fallback_used = false;

  std::int64_t length() const { return static_cast<std::int64_t>(cycle.size()); }
};

// Bound a certificate of this mode must claim on this instance.
inline std::int64_t expected_bound(const SubgraphView& g, const PathCertificate& c) {
  switch (c.mode) {
    case Mode::kWeak:
      return weak_bound(c.d);
    case Mode::kTight:
      if (c.free_endpoints || c.path.empty()) return tight_bound(c.d, false);
      return tight_bound(c.d, even_cube_case(g, c.path.front(), c.path.back(), c.d));
    case Mode::kGeneral:
      return general_bound(c.d, c.k);
  }
  return 0;
}

}  // namespace hcpath
