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
#include <cstdint>

#include "cuttree/block_tree.hpp"
#include "cuttree/graph.hpp"
#include "cuttree/oracle.hpp"
#include "cuttree/validation.hpp"

namespace cuttree {

struct NtmcTreeBuild {
  BlockTree tree;
  Weight lambda = 0;
  BuildStats stats;
};

/// Tree whose edge sides are non-trivial min cuts and whose blocks are never
/// split by a non-trivial min cut. Requires a simple graph with λ ∉ {0, 2};
/// throws UnsupportedInput otherwise.
BlockTree build_ntmc_tree(const Multigraph& g);
NtmcTreeBuild build_ntmc_tree_with_stats(const Multigraph& g);

/// Edge sides are non-trivial cuts of weight λ; no block is split by a
/// non-trivial min cut (all such cuts enumerated in oracle mode, frontier
/// pairs checked by flow otherwise); leaf, 2-path and star size bounds.
ValidationReport validate_ntmc_tree(const Multigraph& g, const BlockTree& t,
                                    const ValidationOptions& options = {});

/// Exact number of distinct non-trivial min cuts. Enumerates g directly when
/// n <= limit, else enumerates the graph left by contracting an ntmc tree or
/// the δ-edge-connected components. Throws SizeRefusal when neither fits.
std::uint64_t count_nontrivial_mincuts(const Multigraph& g,
                                       std::size_t limit = oracle::kDefaultLimit);

}  // namespace cuttree
