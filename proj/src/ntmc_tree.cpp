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

#include "cuttree/ntmc_tree.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "cuttree/errors.hpp"
#include "cuttree/flow.hpp"
#include "cuttree/kec.hpp"

namespace cuttree {

namespace {

struct Frontier {
  std::vector<VertexId> list;
  std::size_t verified = 1;
};

void require_supported(const Multigraph& g, Weight lambda) {
  if (!g.is_simple()) {
    throw UnsupportedInput("non-trivial min-cut trees are only built for simple graphs");
  }
  if (lambda == 0 || lambda == 2) {
    throw UnsupportedInput("edge connectivity " + std::to_string(lambda) +
                           " is unsupported: a cycle of length at least four has no "
                           "non-trivial min-cut tree");
  }
}

// Turns a non-trivial min cut X that splits block b into one that also
// crosses no tree side. Returns the side containing s.
VertexSet noncrossing_cut(const Multigraph& g, const BlockTree& t, BlockId b, Weight lambda,
                          Cut x, VertexId s) {
  const std::size_t n = g.n();
  const VertexSet& block = t.block(b);
  std::vector<VertexSet> sides;
  for (auto a : t.neighbors(b)) sides.push_back(t.side_set(a, b));

  auto trim_crossing = [&](Cut cur, std::size_t skip) {
    for (std::size_t i = 0; i < sides.size(); ++i) {
      if (i == skip || !crosses(n, cur.side, sides[i])) continue;
      cur = trim_by_mincut(g, cur, make_cut(g, sides[i]), lambda);
    }
    return cur;
  };

  const auto in_block = set_intersection(x.side, block);
  const std::size_t inside = in_block.size();
  const std::size_t outside = block.size() - inside;
  if (inside >= 2 && outside >= 2) return trim_crossing(std::move(x), sides.size()).side;

  // Orient X so that X ∩ B is a single vertex.
  if (inside != 1) x = make_cut(g, complement(n, x.side));
  VertexSet z;
  if (t.degree(b) == 1) {
    if (lambda == 1) {
      z = x.side;
    } else {
      z = set_intersection(complement(n, x.side), block);
    }
  } else {
    std::size_t first_meeting = sides.size();
    bool any_inside = false;
    for (std::size_t i = 0; i < sides.size(); ++i) {
      if (is_subset(sides[i], x.side)) any_inside = true;
      if (first_meeting == sides.size() && intersects(sides[i], x.side)) first_meeting = i;
    }
    if (any_inside) {
      z = trim_crossing(std::move(x), sides.size()).side;
    } else {
      if (first_meeting == sides.size()) {
        throw InternalError("non-trivial cut meets no side beyond its block");
      }
      const Cut outer = trim_by_mincut(g, make_cut(g, complement(n, x.side)),
                                       make_cut(g, sides[first_meeting]), lambda);
      z = trim_crossing(make_cut(g, complement(n, outer.side)), first_meeting).side;
    }
  }
  if (!std::binary_search(z.begin(), z.end(), s)) z = complement(n, z);
  return z;
}

}  // namespace

NtmcTreeBuild build_ntmc_tree_with_stats(const Multigraph& g) {
  if (g.n() == 0) throw InputError("cannot build a tree for an empty graph");
  NtmcTreeBuild out;
  out.tree = BlockTree(g.n());
  if (g.n() == 1) return out;
  const Weight lambda = global_edge_connectivity(g);
  out.lambda = lambda;
  require_supported(g, lambda);

  const std::size_t n = g.n();
  BlockTree& t = out.tree;
  auto& stats = out.stats;
  stats.flow_calls += n - 1;
  FlowNetwork network(g);
  std::map<BlockId, Frontier> state;
  std::set<std::pair<VertexId, BlockId>> pending;
  auto enqueue = [&](BlockId b, Frontier f) {
    if (f.verified < f.list.size()) pending.emplace(t.block(b).front(), b);
    state[b] = std::move(f);
  };
  {
    Frontier f;
    f.list = t.block(t.block_ids().front());
    enqueue(t.block_ids().front(), std::move(f));
  }

  while (!pending.empty()) {
    const BlockId b = pending.begin()->second;
    pending.erase(pending.begin());
    Frontier f = std::move(state.at(b));
    state.erase(b);
    const VertexId s = f.list[f.verified - 1];
    const VertexId w = f.list[f.verified];

    ++stats.flow_calls;
    std::optional<Cut> x;
    if (network.max_flow(s, w, lambda + 1) <= lambda) {
      ++stats.flow_calls;
      x = nontrivial_st_mincut(g, s, w, lambda);
    }
    if (!x) {
      ++f.verified;
      enqueue(b, std::move(f));
      continue;
    }

    const VertexSet z = noncrossing_cut(g, t, b, lambda, std::move(*x), s);
    const Cut zc = make_cut(g, z);
    const bool in_z = std::binary_search(z.begin(), z.end(), s);
    const bool w_out = !std::binary_search(z.begin(), z.end(), w);
    if (zc.weight != lambda || zc.is_trivial(n) || !in_z || !w_out) {
      throw InternalError("derived cut is not a non-trivial min cut separating " +
                          std::to_string(s) + " and " + std::to_string(w));
    }
    if (stats.splits + 1 > n - 1) throw InternalError("split budget of n - 1 exceeded");
    const auto [b0, b1] = t.split(g, b, z);
    ++stats.splits;

    const auto inside = membership(n, z);
    Frontier f0, f1;
    for (auto v : f.list) (inside[v] ? f0.list : f1.list).push_back(v);
    enqueue(b0, std::move(f0));
    enqueue(b1, std::move(f1));
  }
  return out;
}

BlockTree build_ntmc_tree(const Multigraph& g) { return build_ntmc_tree_with_stats(g).tree; }

ValidationReport validate_ntmc_tree(const Multigraph& g, const BlockTree& t,
                                    const ValidationOptions& options) {
  ValidationReport report;
  check_tree_structure(g, t, report);
  if (!report.ok() || g.n() < 2) return report;
  const std::size_t n = g.n();
  const Weight lambda = global_edge_connectivity(g);

  for (const auto& e : t.edges()) {
    const auto side = t.side_set(e.a, e.b);
    const std::string name = "edge (" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
    report.expect(e.cut_value == lambda, "(i) " + name + ": c = " + std::to_string(e.cut_value) +
                                             " but lambda = " + std::to_string(lambda));
    report.expect(side.size() >= 2 && side.size() + 2 <= n, "(i) " + name + " is a trivial cut");
  }

  if (options.use_oracle) {
    const auto all = oracle::enumerate_cuts(g, options.oracle_limit);
    for (const auto& c : all.nontrivial_min_cuts) {
      bool respects = true;
      for (auto id : t.block_ids()) respects = respects && !splits(c.side, t.block(id));
      report.expect(respects, "(ii) a non-trivial min cut splits a block");
    }
  } else {
    FlowNetwork network(g);
    for (auto id : t.block_ids()) {
      const auto& block = t.block(id);
      for (std::size_t i = 0; i + 1 < block.size(); ++i) {
        const VertexId s = block[i];
        const VertexId w = block[i + 1];
        const bool separated =
            network.max_flow(s, w, lambda + 1) <= lambda && nontrivial_st_mincut(g, s, w, lambda);
        report.expect(!separated, "(ii) a non-trivial min cut separates " + std::to_string(s) +
                                      " and " + std::to_string(w) + " in block " +
                                      std::to_string(id));
      }
    }
  }

  if (t.block_count() < 2) return report;
  const auto classes = classify(t);
  report.expect(check_leafbound(t), "leaf-count bound violated");
  if (lambda != 0) {
    for (auto leaf : classes.leaves) {
      report.expect(t.block(leaf).size() >= 2,
                    "leaf block " + std::to_string(leaf) + " is a singleton");
    }
  }
  if (!options.check_size_bounds || !g.is_simple()) return report;

  const Weight delta = min_degree(g);
  for (auto leaf : classes.leaves) {
    report.expect(static_cast<Weight>(t.block(leaf).size()) >= delta,
                  "leaf block " + std::to_string(leaf) + " is smaller than delta");
  }
  for (const auto& path : classes.two_paths) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      const std::size_t pq = t.block(path[i]).size() + t.block(path[i + 1]).size();
      report.expect(pq <= 2 || 2 * static_cast<Weight>(pq) >= delta,
                    "adjacent 2-path blocks " + std::to_string(path[i]) + "," +
                        std::to_string(path[i + 1]) + " hold fewer than delta/2 vertices");
    }
  }
  for (auto center : t.block_ids()) {
    if (!is_singleton_star(t, center)) continue;
    const auto r = static_cast<Weight>(t.degree(center));
    report.expect(delta <= r * r + r,
                  "singleton star at block " + std::to_string(center) + " with delta > r^2 + r");
  }
  return report;
}

namespace {

std::uint64_t count_on_contraction(const Multigraph& g, const std::vector<VertexSet>& blocks,
                                   Weight lambda, std::size_t limit) {
  const std::size_t n = g.n();
  if (blocks.size() < 2) return 0;
  if (blocks.size() > limit) {
    throw SizeRefusal("contracted graph has " + std::to_string(blocks.size()) +
                      " vertices, above the enumeration limit " + std::to_string(limit));
  }
  const auto contracted = contract_partition(g, blocks);
  const auto all = oracle::enumerate_cuts(contracted.graph, limit);
  std::uint64_t count = 0;
  for (const auto& c : all.all_cuts) {
    if (c.weight != lambda) continue;
    std::size_t size = 0;
    for (auto p : c.side) size += contracted.origin[p].size();
    if (size >= 2 && size + 2 <= n) ++count;
  }
  return count;
}

}  // namespace

std::uint64_t count_nontrivial_mincuts(const Multigraph& g, std::size_t limit) {
  const std::size_t n = g.n();
  if (n < 2) return 0;
  if (n <= limit) return oracle::enumerate_cuts(g, limit).nontrivial_min_cuts.size();
  const Weight lambda = global_edge_connectivity(g);
  const Weight delta = min_degree(g);
  if (g.is_simple() && lambda != 0 && lambda != 2) {
    const auto blocks = build_ntmc_tree(g).partition();
    if (blocks.size() <= limit) return count_on_contraction(g, blocks, lambda, limit);
  }
  if (lambda < delta) {
    // every min cut has weight below δ, so it is a union of δ-ec components
    const auto blocks = kec_components(g, delta);
    if (blocks.size() <= limit) return count_on_contraction(g, blocks, lambda, limit);
  }
  throw SizeRefusal("graph has " + std::to_string(n) +
                    " vertices and no contraction brings it within the enumeration limit " +
                    std::to_string(limit));
}

}  // namespace cuttree
