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

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hcpath/certificate.hpp"
#include "hcpath/host.hpp"
#include "hcpath/oracle.hpp"
#include "hcpath/subgraph.hpp"

namespace hcpath {

using Json = nlohmann::ordered_json;

namespace io_detail {

inline std::int64_t parse_int(std::string_view s, const char* what) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || p != end) throw InvalidArgument(std::string("bad ") + what + ": '" + std::string(s) + "'");
  return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace io_detail

// Host strings: "Q7" or "hypercube:7"; "torus:3x3x3" or "C3^3"; "grid:4x4"
// (box [0,3]^2) or "grid:-1..2x0..3". Product hosts only come from JSON.
inline HostSpec parse_host(std::string_view s) {
  using io_detail::parse_int;
  if (s.empty()) throw InvalidArgument("empty host string");
  if (s.front() == 'Q') return HostSpec::hypercube(static_cast<int>(parse_int(s.substr(1), "hypercube dimension")));
  if (s.front() == 'C') {
    const auto caret = s.find('^');
    if (caret == std::string_view::npos) throw InvalidArgument("torus shorthand is Ck^n");
    const int k = static_cast<int>(parse_int(s.substr(1, caret - 1), "cycle length"));
    const int n = static_cast<int>(parse_int(s.substr(caret + 1), "torus dimension"));
    if (n < 1) throw InvalidArgument("torus dimension must be positive");
    return HostSpec::torus(n, k);
  }
  const auto colon = s.find(':');
  if (colon == std::string_view::npos) throw InvalidArgument("unknown host '" + std::string(s) + "'");
  const auto kind = s.substr(0, colon);
  const auto rest = s.substr(colon + 1);
  if (kind == "hypercube") return HostSpec::hypercube(static_cast<int>(parse_int(rest, "hypercube dimension")));
  if (kind == "torus") {
    std::vector<int> ks;
    for (auto part : io_detail::split(rest, 'x')) ks.push_back(static_cast<int>(parse_int(part, "cycle length")));
    return HostSpec::torus(ks);
  }
  if (kind == "grid") {
    std::vector<std::pair<std::int64_t, std::int64_t>> box;
    for (auto part : io_detail::split(rest, 'x')) {
      const auto dots = part.find("..");
      if (dots == std::string_view::npos) {
        box.push_back({0, parse_int(part, "grid side") - 1});
      } else {
        box.push_back({parse_int(part.substr(0, dots), "grid bound"), parse_int(part.substr(dots + 2), "grid bound")});
      }
    }
    return HostSpec::grid(box);
  }
  throw InvalidArgument("unknown host kind '" + std::string(kind) + "'");
}

inline Json host_to_json(const HostSpec& h) {
  Json j;
  j["kind"] = to_string(h.kind);
  j["n"] = h.n;
  switch (h.kind) {
    case HostKind::kHypercube:
      break;
    case HostKind::kGrid: {
      Json box = Json::array();
      for (auto [lo, hi] : h.box) box.push_back({lo, hi});
      j["box"] = box;
      break;
    }
    case HostKind::kTorus:
      j["k"] = h.cycle;
      break;
    case HostKind::kProduct: {
      Json fs = Json::array();
      for (const auto& f : h.factors) {
        Json e = Json::array();
        for (auto [u, v] : f.edges) e.push_back({u, v});
        fs.push_back({{"vertices", f.vertex_count}, {"edges", e}});
      }
      j["factors"] = fs;
      break;
    }
  }
  return j;
}

inline HostSpec host_from_json(const Json& j) {
  if (j.is_string()) return parse_host(j.get<std::string>());
  if (!j.is_object() || !j.contains("kind")) throw InvalidArgument("host must be a string or an object with 'kind'");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "hypercube") return HostSpec::hypercube(j.at("n").get<int>());
  if (kind == "torus") {
    if (j.at("k").is_array()) return HostSpec::torus(j.at("k").get<std::vector<int>>());
    return HostSpec::torus(j.at("n").get<int>(), j.at("k").get<int>());
  }
  if (kind == "grid") {
    std::vector<std::pair<std::int64_t, std::int64_t>> box;
    for (const auto& b : j.at("box")) box.push_back({b.at(0).get<std::int64_t>(), b.at(1).get<std::int64_t>()});
    return HostSpec::grid(box);
  }
  if (kind == "product") {
    std::vector<FactorGraph> fs;
    for (const auto& f : j.at("factors")) {
      FactorGraph fg;
      fg.vertex_count = f.at("vertices").get<int>();
      for (const auto& e : f.at("edges")) fg.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
      fs.push_back(std::move(fg));
    }
    return HostSpec::product(fs);
  }
  throw InvalidArgument("unknown host kind '" + kind + "'");
}

// Hypercube vertices are plain integers; other hosts use coordinate tuples.
inline Json vertex_to_json(const HostGraph& h, VertexId v) {
  if (h.kind() == HostKind::kHypercube) return v;
  return h.coordinates(v);
}

inline VertexId vertex_from_json(const HostGraph& h, const Json& j) {
  if (j.is_array()) return h.from_coordinates(j.get<std::vector<std::int64_t>>());
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw InvalidArgument("vertex must be a non-negative integer or a coordinate tuple");
  }
  const VertexId v = j.get<VertexId>();
  if (!h.valid(v)) throw InvalidArgument("vertex " + std::to_string(v) + " is outside the host");
  return v;
}

// CLI form of a vertex: "13" or "1,0,2".
inline VertexId parse_vertex(const HostGraph& h, std::string_view s) {
  if (s.find(',') == std::string_view::npos) {
    const auto v = io_detail::parse_int(s, "vertex");
    if (v < 0 || !h.valid(static_cast<VertexId>(v))) throw InvalidArgument("vertex outside the host");
    return static_cast<VertexId>(v);
  }
  std::vector<std::int64_t> c;
  for (auto part : io_detail::split(s, ',')) c.push_back(io_detail::parse_int(part, "coordinate"));
  return h.from_coordinates(c);
}

inline Json graph_to_json(const SubgraphView& g) {
  const HostGraph& h = g.host();
  Json j;
  j["host"] = host_to_json(h.spec());
  Json vs = Json::array();
  for (VertexId v : g.vertices()) vs.push_back(vertex_to_json(h, v));
  j["vertices"] = vs;
  if (g.induced()) {
    j["induced"] = true;
  } else {
    Json es = Json::array();
    for (auto [u, v] : g.edges()) es.push_back({vertex_to_json(h, g.id(u)), vertex_to_json(h, g.id(v))});
    j["edges"] = es;
  }
  return j;
}

inline SubgraphView graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("host") || !j.contains("vertices")) {
    throw InvalidArgument("graph JSON needs 'host' and 'vertices'");
  }
  auto host = build_host(host_from_json(j.at("host")));
  std::vector<VertexId> vs;
  for (const auto& v : j.at("vertices")) vs.push_back(vertex_from_json(*host, v));
  if (j.contains("edges")) {
    std::vector<std::pair<VertexId, VertexId>> es;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InvalidArgument("edges are pairs of vertices");
      es.push_back({vertex_from_json(*host, e.at(0)), vertex_from_json(*host, e.at(1))});
    }
    return SubgraphView::with_edges(host, std::move(vs), es);
  }
  if (!j.value("induced", true)) throw InvalidArgument("a non-induced graph must list its edges");
  return SubgraphView::induced(host, std::move(vs));
}

inline Json certificate_to_json(const HostGraph& h, const PathCertificate& c) {
  Json j;
  Json p = Json::array();
  for (VertexId v : c.path) p.push_back(vertex_to_json(h, v));
  j["path"] = p;
  j["length"] = c.length();
  j["bound"] = c.claimed_bound;
  j["mode"] = to_string(c.mode);
  j["d"] = c.d;
  if (c.mode == Mode::kGeneral) j["k"] = c.k;
  j["trace"] = c.trace;
  j["fallback_used"] = c.fallback_used;
  if (!c.diagnostics.empty()) j["diagnostics"] = c.diagnostics;
  return j;
}

inline Json certificate_to_json(const HostGraph& h, const CycleCertificate& c) {
  Json j;
  Json p = Json::array();
  for (VertexId v : c.cycle) p.push_back(vertex_to_json(h, v));
  j["cycle"] = p;
  j["length"] = c.length();
  j["bound"] = c.claimed_bound;
  j["d"] = c.d;
  j["trace"] = c.trace;
  j["fallback_used"] = c.fallback_used;
  return j;
}

inline Json oracle_to_json(const HostGraph& h, const OracleResult& r) {
  Json j;
  j["length"] = r.length;
  Json w = Json::array();
  for (VertexId v : r.witness) w.push_back(vertex_to_json(h, v));
  j["witness"] = w;
  j["explored"] = r.explored;
  j["exact"] = r.exact;
  return j;
}

// FNV-1a over the host description, vertex ids and edge list.
inline std::uint64_t instance_hash(const SubgraphView& g) {
  std::uint64_t x = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      x ^= (v >> (8 * i)) & 0xffU;
      x *= 0x100000001b3ULL;
    }
  };
  for (char c : g.host().describe()) mix(static_cast<unsigned char>(c));
  mix(g.size());
  for (VertexId v : g.vertices()) mix(v);
  for (auto [u, v] : g.edges()) {
    mix(static_cast<std::uint64_t>(u));
    mix(static_cast<std::uint64_t>(v));
  }
  return x;
}

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidArgument("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace hcpath
