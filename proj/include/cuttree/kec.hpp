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

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cuttree/block_tree.hpp"
#include "cuttree/graph.hpp"
#include "cuttree/validation.hpp"

namespace cuttree {

/// Classes of the relation λ(v, w) >= k, listed by smallest vertex.
std::vector<VertexSet> kec_components(const Multigraph& g, Weight k);

struct KecTreeBuild {
  BlockTree tree;
  BuildStats stats;
};

/// Blocks are the k-edge-connected components; each edge carries
/// representatives with c(ab) = λ(a*, b*) < k. Components of a disconnected
/// graph are joined by weight-0 edges.
BlockTree build_kec_tree(const Multigraph& g, Weight k);
KecTreeBuild build_kec_tree_with_stats(const Multigraph& g, Weight k);

ValidationReport validate_kec_tree(const Multigraph& g, const BlockTree& t, Weight k,
                                   const ValidationOptions& options = {});

enum class SparsifyMode { kNtmc, kBelowDelta };

std::string to_string(SparsifyMode mode);
/// Accepts "ntmc", "below-delta" and "cuts-below-delta".
SparsifyMode sparsify_mode_from_string(const std::string& tag);

struct SparsifyReport {
  SparsifyMode mode = SparsifyMode::kBelowDelta;
  std::size_t vertices_before = 0;
  std::size_t vertices_after = 0;
  Weight edge_units_before = 0;
  Weight edge_units_after = 0;
  std::vector<VertexSet> blocks;
  Multigraph contracted;
  /// Number of cuts in the family that must survive contraction.
  std::size_t preserved_family_size = 0;
  /// False when the graph exceeds the oracle limit and nothing was checked.
  bool verified = false;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Contracts every block of `t`. At oracle scale, checks that every member of
/// the mode's cut family (non-trivial min cuts, or cuts of weight below δ) is
/// a union of blocks.
SparsifyReport sparsify(const Multigraph& g, const BlockTree& t, SparsifyMode mode,
                        std::size_t oracle_limit = 10);

struct ComponentCountReport {
  Hypothesis hypothesis;
  std::size_t n = 0;
  std::size_t components = 0;
  /// components · δ / n.
  double ratio = 0.0;
  /// components <= 12n / (δ + 12).
  bool bound_holds = false;

  bool applicable() const { return hypothesis.holds(); }
  bool ok() const { return !applicable() || bound_holds; }
};

/// Counts δ-edge-connected components. Throws InputError when δ = 0.
ComponentCountReport check_component_count(const Multigraph& g);

}  // namespace cuttree
