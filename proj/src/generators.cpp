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

#include "cuttree/generators.hpp"

#include <random>
#include <string>
#include <vector>

#include "cuttree/errors.hpp"

namespace cuttree::gen {

namespace {

void add_clique(std::vector<EdgeSpec>& edges, VertexId first, std::size_t size) {
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) {
      edges.push_back({static_cast<VertexId>(first + i), static_cast<VertexId>(first + j), 1});
    }
  }
}

Multigraph ring_of_cliques(std::size_t delta, std::size_t cycles, std::size_t k) {
  const std::size_t size = delta + 1;
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < k; ++i) add_clique(edges, static_cast<VertexId>(i * size), size);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t next = (i + 1) % k;
    for (std::size_t j = 0; j < cycles; ++j) {
      edges.push_back({static_cast<VertexId>(i * size + 2 * j + 1),
                       static_cast<VertexId>(next * size + 2 * j), 1});
    }
  }
  return Multigraph(k * size, edges);
}

}  // namespace

Multigraph clique_cycle(std::size_t delta, std::size_t k) {
  if (delta < 2) throw InputError("clique_cycle needs delta >= 2");
  if (k < 3) throw InputError("clique_cycle needs k >= 3");
  return ring_of_cliques(delta, 1, k);
}

Multigraph multi_cycle_clique(std::size_t delta, std::size_t lambda, std::size_t k) {
  if (lambda < 2 || lambda % 2 != 0) throw InputError("lambda must be even and at least 2");
  if (lambda >= delta) {
    throw InputError("lambda = " + std::to_string(lambda) + " must be below delta = " +
                     std::to_string(delta));
  }
  if (k < 3) throw InputError("multi_cycle_clique needs k >= 3");
  return ring_of_cliques(delta, lambda / 2, k);
}

Multigraph disjoint_cliques(std::size_t delta, std::size_t k) {
  if (k < 1) throw InputError("disjoint_cliques needs k >= 1");
  const std::size_t size = delta + 1;
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < k; ++i) add_clique(edges, static_cast<VertexId>(i * size), size);
  return Multigraph(k * size, edges);
}

Multigraph multiplicity_path(std::size_t delta, std::size_t n) {
  if (delta < 2 || delta % 2 != 0) throw InputError("multiplicity_path needs an even delta >= 2");
  if (n < 4) throw InputError("multiplicity_path needs n >= 4");
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const bool end = i == 0 || i + 2 == n;
    edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1),
                     static_cast<Weight>(end ? delta : delta / 2)});
  }
  return Multigraph(n, edges);
}

Multigraph bone_family(std::size_t length) {
  if (length < 1) throw InputError("bone_family needs length >= 1");
  const std::size_t n = 10 + length;
  std::vector<EdgeSpec> edges;
  add_clique(edges, 0, 5);
  add_clique(edges, static_cast<VertexId>(n - 5), 5);
  // chain: cap vertices 3, 4, the middle vertices, then n-5, n-4
  std::vector<VertexId> chain{3, 4};
  for (std::size_t i = 0; i < length; ++i) chain.push_back(static_cast<VertexId>(5 + i));
  chain.push_back(static_cast<VertexId>(n - 5));
  chain.push_back(static_cast<VertexId>(n - 4));
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (std::size_t step = 1; step <= 2 && i + step < chain.size(); ++step) {
      const VertexId u = chain[i];
      const VertexId v = chain[i + step];
      const bool same_cap = (u < 5 && v < 5) || (u >= n - 5 && v >= n - 5);
      if (!same_cap) edges.push_back({u, v, 1});
    }
  }
  return Multigraph(n, edges);
}

Multigraph random_graph(std::size_t n, std::uint32_t p_per_mille, std::uint64_t seed) {
  if (p_per_mille > 1000) throw InputError("p_per_mille must be at most 1000");
  std::mt19937_64 rng(seed);
  std::vector<EdgeSpec> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng() % 1000 < p_per_mille) {
        edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), 1});
      }
    }
  }
  return Multigraph(n, edges);
}

}  // namespace cuttree::gen
