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

#include <functional>
#include <vector>

#include "cuttree/block_tree.hpp"
#include "cuttree/graph.hpp"
#include "cuttree/validation.hpp"

namespace cuttree::detail {

/// Pair test of the splitting loop: u and w stay together iff λ(u, w) >=
/// threshold(u, w).
using PairThreshold = std::function<Weight(VertexId, VertexId)>;

/// Iterative block splitting shared by the pendant tree and the
/// k-edge-connectivity tree. Each block keeps its vertices in `order` and a
/// verified prefix; the frontier pair is tested with one flow and, on
/// failure, the block is split along a minimum cut computed with every
/// component of T − B contracted. New edges get the frontier pair as
/// representatives; stale representatives of reattached edges are replaced.
BlockTree split_until_related(const Multigraph& g, const std::vector<VertexId>& order,
                              const PairThreshold& threshold, BuildStats& stats);

/// Vertices sorted by degree (descending), ties by ascending id.
std::vector<VertexId> degree_order(const Multigraph& g);

/// Vertex of maximum degree in a block, smallest id among ties.
VertexId max_degree_vertex(const Multigraph& g, const VertexSet& block);

}  // namespace cuttree::detail
