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

#include "cuttree/graph.hpp"

/// Deterministic graph families. All throw InputError on invalid parameters.
namespace cuttree::gen {

/// k copies of K_{δ+1} in a ring; consecutive cliques share one edge from
/// local vertex 1 of one clique to local vertex 0 of the next. δ >= 2, k >= 3.
Multigraph clique_cycle(std::size_t delta, std::size_t k);

/// k copies of K_{δ+1} visited in the same order by λ/2 vertex-disjoint
/// cycles; cycle j uses local vertices 2j and 2j+1. λ even, 2 <= λ < δ, k >= 3.
Multigraph multi_cycle_clique(std::size_t delta, std::size_t lambda, std::size_t k);

/// k disjoint copies of K_{δ+1}.
Multigraph disjoint_cliques(std::size_t delta, std::size_t k);

/// Path on n vertices; the two end edges have multiplicity δ, the inner ones
/// δ/2. δ even and >= 2, n >= 4.
Multigraph multiplicity_path(std::size_t delta, std::size_t n);

/// Two K_5 caps joined by a square-of-path chain of `length` degree-4
/// vertices. δ = 4, λ = 3, κ = 2 and exactly 20 pendant pairs for every
/// length >= 1. Vertices 0..4 and n-5..n-1 form the caps.
Multigraph bone_family(std::size_t length);

/// Simple graph including each pair independently with probability
/// p_per_mille / 1000. Deterministic per seed.
Multigraph random_graph(std::size_t n, std::uint32_t p_per_mille, std::uint64_t seed);

}  // namespace cuttree::gen
