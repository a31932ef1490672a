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

#include "cuttree/validation.hpp"

#include <algorithm>

#include "cuttree/flow.hpp"
#include "cuttree/vertex_connectivity.hpp"

namespace cuttree {

Hypothesis evaluate_hypothesis(const Multigraph& g) {
  Hypothesis h;
  h.simple = g.is_simple();
  if (g.n() == 0) return h;
  h.delta = min_degree(g);
  h.lambda = g.n() >= 2 ? global_edge_connectivity(g) : 0;
  h.kappa = vertex_connectivity(g);
  return h;
}

void check_tree_structure(const Multigraph& g, const BlockTree& t, ValidationReport& report) {
  report.expect(t.vertex_count() == g.n(), "tree covers " + std::to_string(t.vertex_count()) +
                                               " vertices, graph has " + std::to_string(g.n()));
  if (t.vertex_count() != g.n()) return;
  std::size_t covered = 0;
  for (auto id : t.block_ids()) {
    const auto& vs = t.block(id);
    report.expect(!vs.empty(), "block " + std::to_string(id) + " is empty");
    covered += vs.size();
    for (auto v : vs) {
      report.expect(t.block_of(v) == id, "vertex " + std::to_string(v) +
                                             " has an inconsistent block reference");
    }
  }
  report.expect(covered == g.n(), "blocks do not partition V");
  report.expect(t.edges().size() + 1 == t.block_count(), "edge count is not blocks - 1");
  for (const auto& e : t.edges()) {
    const auto side = t.side_set(e.a, e.b);
    report.expect(!side.empty() && side.size() < g.n() && cut_weight(g, side) == e.cut_value,
                  "cached c(" + std::to_string(e.a) + "," + std::to_string(e.b) +
                      ") disagrees with the recomputed cut weight");
  }
}

}  // namespace cuttree
