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

#include "cuttree/kec.hpp"

#include <algorithm>

#include "cuttree/errors.hpp"
#include "cuttree/flow.hpp"
#include "cuttree/oracle.hpp"
#include "tree_builder.hpp"

namespace cuttree {

KecTreeBuild build_kec_tree_with_stats(const Multigraph& g, Weight k) {
  if (k < 1) throw InputError("k must be at least 1");
  KecTreeBuild out;
  out.tree = detail::split_until_related(
      g, detail::degree_order(g), [k](VertexId, VertexId) { return k; }, out.stats);
  return out;
}

BlockTree build_kec_tree(const Multigraph& g, Weight k) {
  return build_kec_tree_with_stats(g, k).tree;
}

std::vector<VertexSet> kec_components(const Multigraph& g, Weight k) {
  return build_kec_tree(g, k).partition();
}

ValidationReport validate_kec_tree(const Multigraph& g, const BlockTree& t, Weight k,
                                   const ValidationOptions& options) {
  ValidationReport report;
  check_tree_structure(g, t, report);
  if (!report.ok()) return report;
  std::vector<std::vector<Weight>> matrix;
  if (options.use_oracle) matrix = oracle::brute_all_pairs_lambda(g, options.oracle_limit);
  FlowNetwork network(g);
  auto lambda = [&](VertexId a, VertexId b, Weight limit) {
    return matrix.empty() ? network.max_flow(a, b, limit) : std::min(matrix[a][b], limit);
  };

  for (auto id : t.block_ids()) {
    const auto& block = t.block(id);
    // λ >= k is transitive, so a chain through the block suffices
    for (std::size_t i = 0; i + 1 < block.size(); ++i) {
      report.expect(lambda(block[i], block[i + 1], k) >= k,
                    "(i) vertices " + std::to_string(block[i]) + " and " +
                        std::to_string(block[i + 1]) + " are not " + std::to_string(k) +
                        "-edge-connected");
    }
  }
  for (const auto& e : t.edges()) {
    const std::string name = "edge (" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
    if (!e.representatives) {
      report.expect(false, "(ii) " + name + " has no representatives");
      continue;
    }
    const auto [ra, rb] = *e.representatives;
    const bool placed = t.block_of(ra) == e.a && t.block_of(rb) == e.b;
    report.expect(placed, "(ii) " + name + ": representatives lie outside the edge's blocks");
    if (!placed) continue;
    report.expect(lambda(ra, rb, k) == e.cut_value,
                  "(ii) " + name + ": c differs from lambda of the representatives");
    report.expect(e.cut_value < k, "(ii) " + name + ": c = " + std::to_string(e.cut_value) +
                                       " is not below k = " + std::to_string(k));
  }
  return report;
}

std::string to_string(SparsifyMode mode) {
  return mode == SparsifyMode::kNtmc ? "ntmc" : "cuts-below-delta";
}

SparsifyMode sparsify_mode_from_string(const std::string& tag) {
  if (tag == "ntmc") return SparsifyMode::kNtmc;
  if (tag == "below-delta" || tag == "cuts-below-delta") return SparsifyMode::kBelowDelta;
  throw InputError("unknown sparsify mode '" + tag + "'");
}

SparsifyReport sparsify(const Multigraph& g, const BlockTree& t, SparsifyMode mode,
                        std::size_t oracle_limit) {
  if (t.vertex_count() != g.n()) throw InputError("tree and graph sizes differ");
  SparsifyReport r;
  r.mode = mode;
  r.vertices_before = g.n();
  r.edge_units_before = g.edge_units();
  r.blocks = t.partition();
  auto contracted = contract_partition(g, r.blocks);
  r.contracted = std::move(contracted.graph);
  r.vertices_after = r.contracted.n();
  r.edge_units_after = r.contracted.edge_units();
  if (g.n() < 2 || g.n() > oracle_limit) return r;

  std::vector<Cut> family;
  if (mode == SparsifyMode::kNtmc) {
    family = oracle::enumerate_cuts(g, oracle_limit).nontrivial_min_cuts;
  } else {
    family = oracle::cuts_below(g, min_degree(g), oracle_limit);
  }
  r.preserved_family_size = family.size();
  r.verified = true;
  for (const auto& c : family) {
    for (const auto& block : r.blocks) {
      if (!splits(c.side, block)) continue;
      std::string side;
      for (auto v : c.side) side += (side.empty() ? "" : ",") + std::to_string(v + 1);
      r.violations.push_back("cut {" + side + "} of weight " + std::to_string(c.weight) +
                             " splits a block");
      break;
    }
  }
  return r;
}

ComponentCountReport check_component_count(const Multigraph& g) {
  if (g.n() == 0) throw InputError("empty graph");
  const Weight delta = min_degree(g);
  if (delta == 0) throw InputError("minimum degree is 0");
  ComponentCountReport r;
  r.n = g.n();
  r.components = kec_components(g, delta).size();
  if (g.is_simple()) {
    r.hypothesis = evaluate_hypothesis(g);
  } else {
    r.hypothesis.delta = delta;
  }
  r.ratio = static_cast<double>(r.components) * static_cast<double>(delta) /
            static_cast<double>(r.n);
  r.bound_holds =
      static_cast<Weight>(r.components) * (delta + 12) <= 12 * static_cast<Weight>(r.n);
  return r;
}

}  // namespace cuttree
