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
#include <optional>
#include <utility>
#include <vector>

#include "cuttree/graph.hpp"

/// Exhaustive reference implementations. Every routine enumerates all
/// 2^(n-1) - 1 unordered bipartitions, so they are for small graphs only.
namespace cuttree::oracle {

inline constexpr std::size_t kDefaultLimit = 20;
/// Sweeps that touch every vertex pair per bipartition use a lower default.
inline constexpr std::size_t kDefaultPairLimit = 10;

struct CutEnumeration {
  /// One entry per unordered bipartition; each side contains vertex 0.
  std::vector<Cut> all_cuts;
  Weight min_weight = 0;
  std::vector<Cut> min_cuts;
  std::vector<Cut> nontrivial_min_cuts;
};

using VertexPair = std::pair<VertexId, VertexId>;

CutEnumeration enumerate_cuts(const Multigraph& g, std::size_t limit = kDefaultLimit);

/// Every cut (side containing vertex 0) whose weight is strictly below `bound`.
std::vector<Cut> cuts_below(const Multigraph& g, Weight bound, std::size_t limit = kDefaultLimit);

Weight brute_lambda(const Multigraph& g, VertexId v, VertexId w,
                    std::size_t limit = kDefaultLimit);
/// Minimum weight of a non-trivial v-w cut; empty when none exists.
std::optional<Weight> brute_nontrivial_lambda(const Multigraph& g, VertexId v, VertexId w,
                                              std::size_t limit = kDefaultLimit);
/// λ(v, w) for all pairs; the diagonal is 0.
std::vector<std::vector<Weight>> brute_all_pairs_lambda(const Multigraph& g,
                                                        std::size_t limit = kDefaultPairLimit);

/// Pairs (v < w) with λ(v, w) = min{d(v), d(w)}, sorted.
std::vector<VertexPair> brute_pendant_pairs(const Multigraph& g,
                                            std::size_t limit = kDefaultPairLimit);

/// Classes of the relation λ(v, w) >= k, each sorted, listed by smallest vertex.
std::vector<VertexSet> brute_kec_components(const Multigraph& g, Weight k,
                                            std::size_t limit = kDefaultPairLimit);

}  // namespace cuttree::oracle
