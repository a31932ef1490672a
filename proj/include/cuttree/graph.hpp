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
#include <initializer_list>
#include <span>
#include <vector>

namespace cuttree {

using VertexId = std::uint32_t;
/// Edge units. Multiplicities and cut weights share this type.
using Weight = std::int64_t;
/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<VertexId>;

struct Neighbor {
  VertexId vertex;
  Weight multiplicity;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

struct EdgeSpec {
  VertexId u;
  VertexId v;
  Weight multiplicity = 1;

  friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

/// Undirected multigraph on vertices 0..n-1 with positive integer edge
/// multiplicities and no self-loops. Immutable once constructed.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(std::size_t n) : adjacency_(n), degree_(n, 0) {}
  /// Parallel entries for the same unordered pair are summed.
  Multigraph(std::size_t n, std::span<const EdgeSpec> edges);
  Multigraph(std::size_t n, std::initializer_list<EdgeSpec> edges)
      : Multigraph(n, std::span<const EdgeSpec>(edges.begin(), edges.size())) {}

  std::size_t n() const { return adjacency_.size(); }
  /// Total number of edges counted with multiplicity.
  Weight edge_units() const { return edge_units_; }
  /// Number of adjacent unordered vertex pairs.
  std::size_t pair_count() const { return pair_count_; }
  bool is_simple() const { return simple_; }

  Weight degree(VertexId v) const;
  /// Neighbors of v sorted by vertex id.
  std::span<const Neighbor> neighbors(VertexId v) const;
  /// 0 when u and v are not adjacent.
  Weight multiplicity(VertexId u, VertexId v) const;
  /// One entry per adjacent pair with u < v, sorted lexicographically.
  std::vector<EdgeSpec> edges() const;

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  void check_vertex(VertexId v) const;

  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<Weight> degree_;
  Weight edge_units_ = 0;
  std::size_t pair_count_ = 0;
  bool simple_ = true;
};

/// One side of a vertex bipartition together with its crossing weight d(X).
struct Cut {
  VertexSet side;
  Weight weight = 0;

  bool is_trivial(std::size_t n) const { return side.size() == 1 || side.size() + 1 == n; }
  bool contains(VertexId v) const;

  friend bool operator==(const Cut&, const Cut&) = default;
};

struct ContractionResult {
  Multigraph graph;
  /// origin[p] lists the original vertices merged into new vertex p.
  std::vector<VertexSet> origin;
};

Weight degree(const Multigraph& g, VertexId v);
Weight min_degree(const Multigraph& g);

/// d(X). Requires a non-empty proper subset.
Weight cut_weight(const Multigraph& g, std::span<const VertexId> side);
/// d(X, Y) for non-empty disjoint X and Y.
Weight cross_weight(const Multigraph& g, std::span<const VertexId> x, std::span<const VertexId> y);

/// Validates and normalizes `side`, then pairs it with its weight.
Cut make_cut(const Multigraph& g, VertexSet side);

/// Identifies each block into one vertex; blocks need not induce connected
/// subgraphs. New vertex p corresponds to blocks[p].
ContractionResult contract_partition(const Multigraph& g, std::span<const VertexSet> blocks);
/// Same contraction driven by a dense label per vertex (labels 0..count-1).
Multigraph contract_labels(const Multigraph& g, std::span<const std::uint32_t> label,
                           std::size_t count);

// Set helpers shared by the cut-tree code.

/// Sorts and deduplicates; throws InputError for ids >= n.
VertexSet normalize_set(std::size_t n, VertexSet set);
VertexSet complement(std::size_t n, std::span<const VertexId> side);
std::vector<char> membership(std::size_t n, std::span<const VertexId> side);
VertexSet set_intersection(std::span<const VertexId> a, std::span<const VertexId> b);
VertexSet set_difference(std::span<const VertexId> a, std::span<const VertexId> b);
VertexSet set_union(std::span<const VertexId> a, std::span<const VertexId> b);
bool is_subset(std::span<const VertexId> a, std::span<const VertexId> b);
bool intersects(std::span<const VertexId> a, std::span<const VertexId> b);
/// All four of X∩Y, X−Y, Y−X and V−(X∪Y) are non-empty.
bool crosses(std::size_t n, std::span<const VertexId> x, std::span<const VertexId> y);
/// True when `side` contains some but not all vertices of `block`.
bool splits(std::span<const VertexId> side, std::span<const VertexId> block);

}  // namespace cuttree
