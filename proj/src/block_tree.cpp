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

#include "cuttree/block_tree.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "cuttree/errors.hpp"

namespace cuttree {

std::string to_string(TreeKind kind) {
  switch (kind) {
    case TreeKind::kPendant:
      return "pendant";
    case TreeKind::kNtmc:
      return "ntmc";
    case TreeKind::kKec:
      return "kec";
  }
  return "unknown";
}

TreeKind tree_kind_from_string(const std::string& tag) {
  if (tag == "pendant") return TreeKind::kPendant;
  if (tag == "ntmc") return TreeKind::kNtmc;
  if (tag == "kec") return TreeKind::kKec;
  throw FormatError("unknown tree kind '" + tag + "'");
}

BlockTree::BlockTree(std::size_t n) : owner_(n, 0) {
  if (n == 0) throw InputError("a block tree needs at least one vertex");
  VertexSet all(n);
  std::iota(all.begin(), all.end(), VertexId{0});
  blocks_.emplace(0, std::move(all));
  adjacency_.emplace(0, std::vector<BlockId>{});
  next_id_ = 1;
}

BlockTree BlockTree::from_parts(const Multigraph& g, std::vector<VertexSet> blocks,
                                const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                const std::vector<std::optional<RepPair>>& representatives) {
  const auto n = g.n();
  if (blocks.empty()) throw InputError("a block tree needs at least one block");
  BlockTree t;
  constexpr BlockId kUnset = ~BlockId{0};
  t.owner_.assign(n, kUnset);
  for (BlockId b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw InputError("empty block");
    auto block = normalize_set(n, blocks[b]);
    if (block.size() != blocks[b].size()) throw InputError("block lists a vertex twice");
    for (auto v : block) {
      if (t.owner_[v] != kUnset) throw InputError("blocks overlap");
      t.owner_[v] = b;
    }
    t.blocks_.emplace(b, std::move(block));
    t.adjacency_.emplace(b, std::vector<BlockId>{});
  }
  if (std::find(t.owner_.begin(), t.owner_.end(), kUnset) != t.owner_.end()) {
    throw InputError("blocks do not cover every vertex");
  }
  if (edges.size() + 1 != blocks.size()) throw InputError("a tree on k blocks has k-1 edges");
  if (!representatives.empty() && representatives.size() != edges.size()) {
    throw InputError("one representative entry per edge required");
  }
  // union-find for acyclicity
  std::vector<std::size_t> parent(blocks.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [a, b] = edges[i];
    if (a >= blocks.size() || b >= blocks.size() || a == b) throw InputError("bad tree edge");
    auto ra = find(a), rb = find(b);
    if (ra == rb) throw InputError("tree edges contain a cycle");
    parent[ra] = rb;
    t.link(static_cast<BlockId>(a), static_cast<BlockId>(b), EdgeData{});
  }
  t.next_id_ = static_cast<BlockId>(blocks.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto a = static_cast<BlockId>(edges[i].first);
    auto b = static_cast<BlockId>(edges[i].second);
    auto& data = t.edges_.at(key(a, b));
    data.cut_value = cut_weight(g, t.side_set(a, b));
    if (!representatives.empty() && representatives[i]) {
      t.set_representatives(a, b, representatives[i]->first, representatives[i]->second);
    }
  }
  return t;
}

std::vector<BlockId> BlockTree::block_ids() const {
  std::vector<BlockId> ids;
  ids.reserve(blocks_.size());
  for (const auto& [id, _] : blocks_) ids.push_back(id);
  return ids;
}

const VertexSet& BlockTree::block(BlockId b) const {
  auto it = blocks_.find(b);
  if (it == blocks_.end()) throw InputError("unknown block " + std::to_string(b));
  return it->second;
}

BlockId BlockTree::block_of(VertexId v) const {
  if (v >= owner_.size()) throw InputError("vertex out of range");
  return owner_[v];
}

std::size_t BlockTree::degree(BlockId b) const { return neighbors(b).size(); }

const std::vector<BlockId>& BlockTree::neighbors(BlockId b) const {
  auto it = adjacency_.find(b);
  if (it == adjacency_.end()) throw InputError("unknown block " + std::to_string(b));
  return it->second;
}

bool BlockTree::has_edge(BlockId a, BlockId b) const { return edges_.count(key(a, b)) > 0; }

const BlockTree::EdgeData& BlockTree::edge_data(BlockId a, BlockId b) const {
  auto it = edges_.find(key(a, b));
  if (it == edges_.end()) {
    throw InputError("blocks " + std::to_string(a) + " and " + std::to_string(b) +
                     " are not adjacent");
  }
  return it->second;
}

std::vector<TreeEdge> BlockTree::edges() const {
  std::vector<TreeEdge> out;
  out.reserve(edges_.size());
  for (const auto& [k, data] : edges_) out.push_back({k.first, k.second, data.cut_value, data.reps});
  return out;
}

Weight BlockTree::cut_value(BlockId a, BlockId b) const { return edge_data(a, b).cut_value; }

std::optional<RepPair> BlockTree::representatives(BlockId a, BlockId b) const {
  auto reps = edge_data(a, b).reps;
  if (reps && a > b) std::swap(reps->first, reps->second);
  return reps;
}

void BlockTree::set_representatives(BlockId a, BlockId b, VertexId in_a, VertexId in_b) {
  if (!has_edge(a, b)) throw InputError("set_representatives on a non-edge");
  if (block_of(in_a) != a || block_of(in_b) != b) {
    throw InputError("representatives must lie in their blocks");
  }
  auto& data = edges_.at(key(a, b));
  data.reps = a < b ? RepPair{in_a, in_b} : RepPair{in_b, in_a};
}

void BlockTree::link(BlockId a, BlockId b, EdgeData data) {
  auto insert_sorted = [](std::vector<BlockId>& list, BlockId x) {
    list.insert(std::lower_bound(list.begin(), list.end(), x), x);
  };
  insert_sorted(adjacency_[a], b);
  insert_sorted(adjacency_[b], a);
  edges_[key(a, b)] = std::move(data);
}

void BlockTree::unlink(BlockId a, BlockId b) {
  auto erase = [](std::vector<BlockId>& list, BlockId x) {
    list.erase(std::lower_bound(list.begin(), list.end(), x));
  };
  erase(adjacency_.at(a), b);
  erase(adjacency_.at(b), a);
  edges_.erase(key(a, b));
}

VertexSet BlockTree::side_set(BlockId a, BlockId b) const {
  if (!has_edge(a, b)) {
    throw InputError("side_set: blocks " + std::to_string(a) + " and " + std::to_string(b) +
                     " are not adjacent");
  }
  VertexSet side;
  std::vector<std::pair<BlockId, BlockId>> stack{{a, b}};
  while (!stack.empty()) {
    auto [x, from] = stack.back();
    stack.pop_back();
    const auto& vs = blocks_.at(x);
    side.insert(side.end(), vs.begin(), vs.end());
    for (auto y : adjacency_.at(x)) {
      if (y != from) stack.emplace_back(y, x);
    }
  }
  std::sort(side.begin(), side.end());
  return side;
}

std::pair<BlockId, BlockId> BlockTree::split(const Multigraph& g, BlockId b, const VertexSet& z,
                                            std::optional<RepPair> new_reps) {
  const auto& old = block(b);
  auto inside = set_intersection(old, z);
  auto outside = set_difference(old, z);
  if (inside.empty() || outside.empty()) {
    throw InputError("split: the cut does not separate vertices of the block");
  }
  // A side C beyond neighbor A excludes b, so z crosses it unless C ⊆ z or
  // C ∩ z = ∅; sides deeper in that component then cannot cross z either.
  std::vector<std::pair<BlockId, bool>> attach;
  for (auto a : neighbors(b)) {
    auto side = side_set(a, b);
    if (is_subset(side, z)) {
      attach.emplace_back(a, true);
    } else if (!intersects(side, z)) {
      attach.emplace_back(a, false);
    } else {
      throw ContractViolation("split: the cut crosses the side of tree edge (" +
                              std::to_string(a) + ", " + std::to_string(b) + ")");
    }
  }
  if (new_reps && (!std::binary_search(inside.begin(), inside.end(), new_reps->first) ||
                   !std::binary_search(outside.begin(), outside.end(), new_reps->second))) {
    throw InputError("split: new representatives must lie on their respective parts");
  }

  const BlockId b0 = next_id_++;
  const BlockId b1 = next_id_++;
  std::vector<EdgeData> moved;
  for (auto [a, to_inside] : attach) {
    moved.push_back(edges_.at(key(a, b)));
    unlink(a, b);
  }
  for (auto v : inside) owner_[v] = b0;
  for (auto v : outside) owner_[v] = b1;
  blocks_.erase(b);
  adjacency_.erase(b);
  blocks_.emplace(b0, std::move(inside));
  blocks_.emplace(b1, std::move(outside));
  adjacency_.emplace(b0, std::vector<BlockId>{});
  adjacency_.emplace(b1, std::vector<BlockId>{});

  for (std::size_t i = 0; i < attach.size(); ++i) {
    auto [a, to_inside] = attach[i];
    auto data = moved[i];
    const BlockId part = to_inside ? b0 : b1;
    std::optional<RepPair> reps;  // first in a, second in the old block
    if (data.reps) reps = a < b ? *data.reps : RepPair{data.reps->second, data.reps->first};
    data.reps.reset();
    link(a, part, data);
    if (reps) {
      if (owner_[reps->second] == part) {
        set_representatives(a, part, reps->first, reps->second);
      } else if (new_reps) {
        set_representatives(a, part, reps->first, to_inside ? new_reps->first : new_reps->second);
      }
    }
  }
  link(b0, b1, EdgeData{});
  edges_.at(key(b0, b1)).cut_value = cut_weight(g, side_set(b0, b1));
  if (new_reps) set_representatives(b0, b1, new_reps->first, new_reps->second);
  return {b0, b1};
}

BlockId BlockTree::contract(BlockId a, BlockId b) {
  if (!has_edge(a, b)) throw InputError("contract: blocks are not adjacent");
  const BlockId merged = next_id_++;
  std::vector<std::tuple<BlockId, BlockId, EdgeData>> moved;  // (neighbor, old end, data)
  for (auto end : {a, b}) {
    for (auto x : std::vector<BlockId>(neighbors(end))) {
      if (x == a || x == b) continue;
      moved.emplace_back(x, end, edges_.at(key(x, end)));
      unlink(x, end);
    }
  }
  unlink(a, b);
  VertexSet vertices = set_union(blocks_.at(a), blocks_.at(b));
  for (auto v : vertices) owner_[v] = merged;
  blocks_.erase(a);
  blocks_.erase(b);
  adjacency_.erase(a);
  adjacency_.erase(b);
  blocks_.emplace(merged, std::move(vertices));
  adjacency_.emplace(merged, std::vector<BlockId>{});
  for (auto& [x, end, data] : moved) {
    std::optional<RepPair> reps;  // first in x
    if (data.reps) reps = x < end ? *data.reps : RepPair{data.reps->second, data.reps->first};
    data.reps.reset();
    link(x, merged, data);
    if (reps) set_representatives(x, merged, reps->first, reps->second);
  }
  return merged;
}

std::vector<VertexSet> BlockTree::partition() const {
  std::vector<VertexSet> out;
  out.reserve(blocks_.size());
  for (const auto& [_, vs] : blocks_) out.push_back(vs);
  std::sort(out.begin(), out.end(),
            [](const VertexSet& x, const VertexSet& y) { return x.front() < y.front(); });
  return out;
}

VertexSet side_set(const BlockTree& t, BlockId a, BlockId b) { return t.side_set(a, b); }

BlockTree split_block(BlockTree t, BlockId b, const Cut& z, const Multigraph& g) {
  t.split(g, b, z.side);
  return t;
}

BlockTree contract_tree_edge(BlockTree t, BlockId a, BlockId b) {
  t.contract(a, b);
  return t;
}

DegreeClasses classify(const BlockTree& t) {
  DegreeClasses out;
  if (t.block_count() <= 1) return out;
  for (auto id : t.block_ids()) {
    const auto d = t.degree(id);
    if (d == 1) {
      out.leaves.push_back(id);
    } else if (d == 2) {
      const auto& nb = t.neighbors(id);
      const bool inner = t.degree(nb[0]) == 2 && t.degree(nb[1]) == 2;
      (inner ? out.two_inner : out.two_outer).push_back(id);
    } else if (d > 2) {
      out.high_degree.push_back(id);
    }
  }
  // Each 2-path has one or two ends in V_2^out; walk from the smaller end.
  std::map<BlockId, bool> used;
  for (auto start : out.two_outer) {
    if (used[start]) continue;
    std::vector<BlockId> path{start};
    used[start] = true;
    BlockId prev = start;
    BlockId cur = start;
    while (true) {
      BlockId next = cur;
      for (auto y : t.neighbors(cur)) {
        if (y != prev && t.degree(y) == 2 && !used[y]) {
          next = y;
          break;
        }
      }
      if (next == cur) break;
      used[next] = true;
      path.push_back(next);
      prev = cur;
      cur = next;
    }
    if (path.back() < path.front()) std::reverse(path.begin(), path.end());
    out.two_paths.push_back(std::move(path));
  }
  std::sort(out.two_paths.begin(), out.two_paths.end(), [](const auto& x, const auto& y) {
    return *std::min_element(x.begin(), x.end()) < *std::min_element(y.begin(), y.end());
  });
  return out;
}

bool check_leafbound(const BlockTree& t) {
  if (t.block_count() <= 1) throw InputError("check_leafbound needs at least two blocks");
  const auto c = classify(t);
  const auto leaves = static_cast<long long>(c.leaves.size());
  const auto high = static_cast<long long>(c.high_degree.size());
  const auto outer = static_cast<long long>(c.two_outer.size());
  return high <= leaves - 2 && outer <= 4 * leaves - 6;
}

bool is_singleton_star(const BlockTree& t, BlockId center) {
  if (!t.has_block(center)) return false;
  if (t.degree(center) < 2 || t.block(center).size() != 1) return false;
  for (auto b : t.neighbors(center)) {
    if (t.degree(b) != 2 || t.block(b).size() != 1) return false;
  }
  return true;
}

StarDiagnostics star_diagnostics(const BlockTree& t, const Multigraph& g, BlockId center) {
  if (!is_singleton_star(t, center)) {
    throw InputError("star_diagnostics: center " + std::to_string(center) +
                     " is not a singleton star with degree-2 singleton neighbors");
  }
  StarDiagnostics out;
  out.center = center;
  out.r = t.degree(center);
  out.center_degree = g.degree(t.block(center).front());
  std::vector<VertexSet> beyond;
  for (auto b : t.neighbors(center)) {
    const auto& nb = t.neighbors(b);
    const BlockId outer = nb[0] == center ? nb[1] : nb[0];
    beyond.push_back(t.side_set(outer, b));
  }
  for (std::size_t i = 0; i < beyond.size(); ++i) {
    for (std::size_t j = i + 1; j < beyond.size(); ++j) {
      out.gamma += cross_weight(g, beyond[i], beyond[j]);
    }
  }
  return out;
}

}  // namespace cuttree
