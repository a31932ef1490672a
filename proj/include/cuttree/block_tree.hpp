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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cuttree/graph.hpp"

namespace cuttree {

using BlockId = std::uint32_t;

enum class TreeKind { kPendant, kNtmc, kKec };

std::string to_string(TreeKind kind);
TreeKind tree_kind_from_string(const std::string& tag);

/// Representative pair of a tree edge: `first` lies in the edge's `a` block,
/// `second` in its `b` block.
using RepPair = std::pair<VertexId, VertexId>;

struct TreeEdge {
  BlockId a;
  BlockId b;
  /// c(ab) = d(C_ab), the weight of either side of T − ab.
  Weight cut_value;
  std::optional<RepPair> representatives;
};

/// A tree whose nodes ("blocks") partition the vertex set of a graph. Block
/// ids are never reused: splits and contractions allocate fresh ids.
class BlockTree {
 public:
  BlockTree() = default;
  /// The one-block tree {V}.
  explicit BlockTree(std::size_t n);

  /// Assembles a tree from explicit blocks and block-index edges, computing
  /// every cut value from `g`. Block i receives BlockId i. Throws InputError
  /// unless the blocks partition V and the edges form a spanning tree.
  static BlockTree from_parts(const Multigraph& g, std::vector<VertexSet> blocks,
                              const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                              const std::vector<std::optional<RepPair>>& representatives = {});

  std::size_t vertex_count() const { return owner_.size(); }
  std::size_t block_count() const { return blocks_.size(); }
  std::vector<BlockId> block_ids() const;
  bool has_block(BlockId b) const { return blocks_.count(b) > 0; }
  const VertexSet& block(BlockId b) const;
  BlockId block_of(VertexId v) const;

  std::size_t degree(BlockId b) const;
  /// Tree neighbors in ascending id order.
  const std::vector<BlockId>& neighbors(BlockId b) const;
  bool has_edge(BlockId a, BlockId b) const;
  /// Edges with a < b, in lexicographic order.
  std::vector<TreeEdge> edges() const;
  Weight cut_value(BlockId a, BlockId b) const;
  /// Oriented so that `first` lies in a.
  std::optional<RepPair> representatives(BlockId a, BlockId b) const;
  void set_representatives(BlockId a, BlockId b, VertexId in_a, VertexId in_b);

  /// C_ab: union of the blocks on a's side of T − ab. Sorted.
  VertexSet side_set(BlockId a, BlockId b) const;

  /// Replaces b by b ∩ z and b − z. Each former neighbor is reattached to the
  /// part on its own side of z. `z` must not cross any tree side and must
  /// split b. The new edge receives `new_reps` (first in b ∩ z); a reattached
  /// edge whose representative left its block takes the new representative of
  /// the part it now touches, or loses its pair when `new_reps` is empty.
  /// Returns (id of b ∩ z, id of b − z).
  std::pair<BlockId, BlockId> split(const Multigraph& g, BlockId b, const VertexSet& z,
                                    std::optional<RepPair> new_reps = std::nullopt);

  /// Merges the endpoints of a tree edge; other edges keep their data.
  BlockId contract(BlockId a, BlockId b);

  /// Blocks sorted by smallest vertex.
  std::vector<VertexSet> partition() const;

 private:
  static std::pair<BlockId, BlockId> key(BlockId a, BlockId b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  }
  struct EdgeData {
    Weight cut_value = 0;
    // oriented by key(): first in the smaller id
    std::optional<RepPair> reps;
  };
  void link(BlockId a, BlockId b, EdgeData data);
  void unlink(BlockId a, BlockId b);
  const EdgeData& edge_data(BlockId a, BlockId b) const;

  std::map<BlockId, VertexSet> blocks_;
  std::map<BlockId, std::vector<BlockId>> adjacency_;
  std::map<std::pair<BlockId, BlockId>, EdgeData> edges_;
  std::vector<BlockId> owner_;
  BlockId next_id_ = 0;
};

// Free-function forms with value semantics.

VertexSet side_set(const BlockTree& t, BlockId a, BlockId b);
BlockTree split_block(BlockTree t, BlockId b, const Cut& z, const Multigraph& g);
BlockTree contract_tree_edge(BlockTree t, BlockId a, BlockId b);

struct DegreeClasses {
  std::vector<BlockId> leaves;       // V_1
  std::vector<BlockId> two_inner;    // V_2^in
  std::vector<BlockId> two_outer;    // V_2^out
  std::vector<BlockId> high_degree;  // V_{>2}
  /// Maximal paths of degree-2 blocks, each listed end to end starting from
  /// its smaller end id; paths ordered by smallest contained id.
  std::vector<std::vector<BlockId>> two_paths;
};

/// All classes are empty for a one-block tree.
DegreeClasses classify(const BlockTree& t);

/// |V_{>2}| <= |V_1| − 2 and |V_2^out| <= 4|V_1| − 6. Requires > 1 block.
bool check_leafbound(const BlockTree& t);

struct StarDiagnostics {
  BlockId center = 0;
  std::size_t r = 0;
  /// Σ_{i<j} d(C_i, C_j) over the sides C_i beyond each neighbor.
  Weight gamma = 0;
  Weight center_degree = 0;
};

/// True when `center` has tree degree >= 2, is a singleton, and every
/// neighbor is a singleton block of tree degree 2.
bool is_singleton_star(const BlockTree& t, BlockId center);
/// Requires is_singleton_star(t, center).
StarDiagnostics star_diagnostics(const BlockTree& t, const Multigraph& g, BlockId center);

}  // namespace cuttree
