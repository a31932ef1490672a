// Copyright 2026 The cuttree Authors
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

#include "cuttree/json_io.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "cuttree/errors.hpp"
#include "cuttree/flow.hpp"

namespace cuttree {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(std::string("missing JSON field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad JSON field '") + key + "': " + e.what());
  }
}

VertexId vertex_from_json(const Json& v, std::size_t n) {
  if (!v.is_number_integer()) throw FormatError("vertex ids must be integers");
  const auto id = v.get<long long>();
  if (id < 1 || static_cast<unsigned long long>(id) > n) {
    throw FormatError("vertex " + std::to_string(id) + " out of range 1.." + std::to_string(n));
  }
  return static_cast<VertexId>(id - 1);
}

}  // namespace

Json graph_to_json(const Multigraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u + 1, e.v + 1, e.multiplicity});
  return Json{{"n", g.n()}, {"edges", std::move(edges)}};
}

Multigraph graph_from_json(const Json& j) {
  const auto n = field<long long>(j, "n");
  if (n < 0) throw FormatError("negative vertex count");
  const auto size = static_cast<std::size_t>(n);
  std::vector<EdgeSpec> edges;
  for (const auto& e : field<Json>(j, "edges")) {
    if (!e.is_array() || e.size() != 3 || !e[2].is_number_integer()) {
      throw FormatError("edges must be [u, v, mult] triples");
    }
    const VertexId u = vertex_from_json(e[0], size);
    const VertexId v = vertex_from_json(e[1], size);
    const auto mult = e[2].get<long long>();
    if (u == v) throw FormatError("self-loop in JSON graph");
    if (mult < 1) throw FormatError("multiplicity must be >= 1");
    edges.push_back({u, v, mult});
  }
  return Multigraph(size, edges);
}

Json tree_to_json(const BlockTree& t, TreeKind kind) {
  const auto blocks = t.partition();
  std::vector<std::size_t> index(t.vertex_count());
  Json jb = Json::array();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    Json vs = Json::array();
    for (auto v : blocks[i]) {
      index[v] = i;
      vs.push_back(v + 1);
    }
    jb.push_back(std::move(vs));
  }
  Json je = Json::array();
  for (const auto& e : t.edges()) {
    std::size_t a = index[t.block(e.a).front()];
    std::size_t b = index[t.block(e.b).front()];
    auto reps = e.representatives;
    if (a > b) {
      std::swap(a, b);
      if (reps) reps = RepPair{reps->second, reps->first};
    }
    Json edge{{"a", a}, {"b", b}, {"c", e.cut_value}};
    edge["reps"] = reps ? Json{reps->first + 1, reps->second + 1} : Json(nullptr);
    je.push_back(std::move(edge));
  }
  std::sort(je.begin(), je.end(), [](const Json& x, const Json& y) {
    return std::make_pair(x["a"].get<std::size_t>(), x["b"].get<std::size_t>()) <
           std::make_pair(y["a"].get<std::size_t>(), y["b"].get<std::size_t>());
  });
  return Json{{"kind", to_string(kind)}, {"blocks", std::move(jb)}, {"edges", std::move(je)}};
}

std::pair<BlockTree, TreeKind> tree_from_json(const Json& j, const Multigraph& g) {
  const TreeKind kind = tree_kind_from_string(field<std::string>(j, "kind"));
  std::vector<VertexSet> blocks;
  for (const auto& jb : field<Json>(j, "blocks")) {
    if (!jb.is_array()) throw FormatError("blocks must be arrays of vertices");
    VertexSet block;
    for (const auto& v : jb) block.push_back(vertex_from_json(v, g.n()));
    blocks.push_back(std::move(block));
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::optional<RepPair>> reps;
  std::vector<Weight> values;
  for (const auto& je : field<Json>(j, "edges")) {
    const auto a = field<std::size_t>(je, "a");
    const auto b = field<std::size_t>(je, "b");
    if (a >= blocks.size() || b >= blocks.size()) throw FormatError("edge block index out of range");
    edges.emplace_back(a, b);
    values.push_back(field<Weight>(je, "c"));
    if (je.contains("reps") && !je["reps"].is_null()) {
      const auto& r = je["reps"];
      if (!r.is_array() || r.size() != 2) throw FormatError("reps must be a vertex pair");
      reps.emplace_back(RepPair{vertex_from_json(r[0], g.n()), vertex_from_json(r[1], g.n())});
    } else {
      reps.emplace_back(std::nullopt);
    }
  }
  BlockTree t;
  try {
    t = BlockTree::from_parts(g, blocks, edges, reps);
  } catch (const FormatError&) {
    throw;
  } catch (const InputError& e) {
    throw FormatError(std::string("invalid tree: ") + e.what());
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto a = static_cast<BlockId>(edges[i].first);
    const auto b = static_cast<BlockId>(edges[i].second);
    if (t.cut_value(a, b) != values[i]) {
      throw FormatError("edge " + std::to_string(i) + " stores c = " + std::to_string(values[i]) +
                        " but the graph gives " + std::to_string(t.cut_value(a, b)));
    }
  }
  return {std::move(t), kind};
}

Json graph_digest(const Multigraph& g) {
  Json d{{"n", g.n()}, {"m", g.edge_units()}, {"pairs", g.pair_count()}, {"simple", g.is_simple()}};
  d["delta"] = g.n() > 0 ? Json(min_degree(g)) : Json(nullptr);
  d["lambda"] = g.n() >= 2 ? Json(global_edge_connectivity(g)) : Json(nullptr);
  return d;
}

Json validation_to_json(const ValidationReport& report) {
  return Json{{"ok", report.ok()}, {"checks", report.checks}, {"failures", report.failures}};
}

Json sparsify_to_json(const SparsifyReport& r) {
  Json blocks = Json::array();
  for (const auto& b : r.blocks) {
    Json vs = Json::array();
    for (auto v : b) vs.push_back(v + 1);
    blocks.push_back(std::move(vs));
  }
  return Json{{"mode", to_string(r.mode)},
              {"vertices_before", r.vertices_before},
              {"vertices_after", r.vertices_after},
              {"edge_units_before", r.edge_units_before},
              {"edge_units_after", r.edge_units_after},
              {"blocks", std::move(blocks)},
              {"preserved_family_size", r.preserved_family_size},
              {"verified", r.verified},
              {"violations", r.violations}};
}

}  // namespace cuttree
