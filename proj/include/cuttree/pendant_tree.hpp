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
#include <map>

#include "cuttree/block_tree.hpp"
#include "cuttree/graph.hpp"
#include "cuttree/validation.hpp"

namespace cuttree {

/// λ(v, w) = min{d(v), d(w)}, decided with one bounded flow.
bool is_pendant(const Multigraph& g, VertexId v, VertexId w);

struct PendantTreeBuild {
  BlockTree tree;
  BuildStats stats;
};

/// Pendant tree: every pair inside a block is pendant, the maximum-degree
/// vertices of adjacent blocks are not, and each edge carries representatives
/// (a*, b*) with c(ab) = λ(a*, b*). Works for any graph with n >= 1.
BlockTree build_pendant_tree(const Multigraph& g);
PendantTreeBuild build_pendant_tree_with_stats(const Multigraph& g);

/// Checks the three defining conditions, the cut-value bound
/// c(ab) < d(a_max), leaf sizes, and (for simple graphs) the leaf, 2-path and
/// singleton-star bounds. Oracle mode decides pendancy by enumeration.
ValidationReport validate_pendant_tree(const Multigraph& g, const BlockTree& t,
                                       const ValidationOptions& options = {});

struct PendantPairCount {
  /// Σ over blocks of C(|S|, 2).
  Weight lower_bound = 0;
  /// Pairs with λ(v, w) = min{d(v), d(w)}, via a flow-equivalent tree.
  Weight exact = 0;
};

PendantPairCount count_pendant_pairs(const Multigraph& g);
/// Lower bound taken from an existing tree.
PendantPairCount count_pendant_pairs(const Multigraph& g, const BlockTree& t);

struct PendantBoundReport {
  Hypothesis hypothesis;
  std::size_t n = 0;
  std::size_t blocks = 0;
  PendantPairCount pairs;
  /// Block sizes to number of blocks of that size.
  std::map<std::size_t, std::size_t> block_size_histogram;
  /// |V(T)| <= 12n / (δ + 12).
  bool block_bound_holds = false;
  /// pendant pairs >= δn / 30.
  bool pair_bound_holds = false;

  bool applicable() const { return hypothesis.holds(); }
  /// True when the hypothesis fails or both bounds hold.
  bool ok() const { return !applicable() || (block_bound_holds && pair_bound_holds); }
};

PendantBoundReport check_pendant_theorems(const Multigraph& g);
PendantBoundReport check_pendant_theorems(const Multigraph& g, const BlockTree& t);

}  // namespace cuttree
