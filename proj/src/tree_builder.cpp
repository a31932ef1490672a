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

#include "tree_builder.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "cuttree/errors.hpp"
#include "cuttree/flow.hpp"

namespace cuttree::detail {

std::vector<VertexId> degree_order(const Multigraph& g) {
  std::vector<VertexId> order(g.n());
  std::iota(order.begin(), order.end(), VertexId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
  return order;
}

VertexId max_degree_vertex(const Multigraph& g, const VertexSet& block) {
  VertexId best = block.front();
  for (auto v : block) {
    if (g.degree(v) > g.degree(best)) best = v;
  }
  return best;
}

namespace {

struct BlockState {
  std::vector<VertexId> list;
  // list[0 .. verified) are pairwise related; verified >= 1
  std::size_t verified = 1;
};

}  // namespace

BlockTree split_until_related(const Multigraph& g, const std::vector<VertexId>& order,
                              const PairThreshold& threshold, BuildStats& stats) {
  if (g.n() == 0) throw InputError("cannot build a tree for an empty graph");
  BlockTree tree(g.n());
  FlowNetwork network(g);
  std::map<BlockId, BlockState> state;
  // blocks with unverified vertices, keyed by their smallest vertex
  std::set<std::pair<VertexId, BlockId>> pending;

  auto enqueue = [&](BlockId b, BlockState s) {
    if (s.verified < s.list.size()) pending.emplace(tree.block(b).front(), b);
    state[b] = std::move(s);
  };
  enqueue(tree.block_ids().front(), BlockState{order, 1});

  while (!pending.empty()) {
    const auto [first_vertex, b] = *pending.begin();
    pending.erase(pending.begin());
    auto s = std::move(state.at(b));
    state.erase(b);

    const VertexId u = s.list[s.verified - 1];
    const VertexId w = s.list[s.verified];
    const Weight target = threshold(u, w);
    ++stats.flow_calls;
    const Weight lambda = network.max_flow(u, w, target);
    if (lambda >= target) {
      ++s.verified;
      enqueue(b, std::move(s));
      continue;
    }

    std::vector<VertexSet> groups;
    for (auto a : tree.neighbors(b)) groups.push_back(tree.side_set(a, b));
    ++stats.flow_calls;
    const Cut cut = min_st_cut_with_groups(g, groups, u, w);
    if (cut.weight != lambda) {
      throw InternalError("non-crossing cut weight " + std::to_string(cut.weight) +
                          " differs from lambda " + std::to_string(lambda));
    }
    auto in_cut = membership(g.n(), cut.side);
    for (std::size_t i = 0; i < s.verified; ++i) {
      if (!in_cut[s.list[i]]) throw InternalError("split separated a verified prefix");
    }
    const auto [b0, b1] = tree.split(g, b, cut.side, RepPair{u, w});
    ++stats.splits;

    BlockState s0, s1;
    for (auto v : s.list) (in_cut[v] ? s0.list : s1.list).push_back(v);
    s0.verified = s.verified;
    enqueue(b0, std::move(s0));
    enqueue(b1, std::move(s1));
  }
  return tree;
}

}  // namespace cuttree::detail
