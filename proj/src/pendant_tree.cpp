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

#include "cuttree/pendant_tree.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>
#include <utility>

#include "cuttree/errors.hpp"
#include "cuttree/flow.hpp"
#include "cuttree/oracle.hpp"
#include "tree_builder.hpp"

namespace cuttree {

namespace {

std::string pair_str(VertexId a, VertexId b) {
  return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

std::string edge_str(BlockId a, BlockId b) {
  return "edge (" + std::to_string(a) + "," + std::to_string(b) + ")";
}

Weight pair_bound(const Multigraph& g, VertexId v, VertexId w) {
  return std::min(g.degree(v), g.degree(w));
}

// Pair relation backed either by the oracle matrix or by bounded flows.
class PendancyTester {
 public:
  PendancyTester(const Multigraph& g, const ValidationOptions& options) : g_(g), network_(g) {
    if (options.use_oracle) lambda_ = oracle::brute_all_pairs_lambda(g, options.oracle_limit);
  }

  Weight lambda(VertexId v, VertexId w) {
    if (!lambda_.empty()) return lambda_[v][w];
    return network_.max_flow(v, w);
  }

  bool pendant(VertexId v, VertexId w) {
    const Weight bound = pair_bound(g_, v, w);
    if (!lambda_.empty()) return lambda_[v][w] == bound;
    return network_.max_flow(v, w, bound) >= bound;
  }

  bool exhaustive() const { return !lambda_.empty(); }

 private:
  const Multigraph& g_;
  FlowNetwork network_;
  std::vector<std::vector<Weight>> lambda_;
};

}  // namespace

bool is_pendant(const Multigraph& g, VertexId v, VertexId w) {
  if (v >= g.n() || w >= g.n()) throw InputError("vertex out of range");
  if (v == w) throw InputError("is_pendant needs two distinct vertices");
  FlowNetwork network(g);
  const Weight bound = pair_bound(g, v, w);
  return network.max_flow(v, w, bound) >= bound;
}

PendantTreeBuild build_pendant_tree_with_stats(const Multigraph& g) {
  PendantTreeBuild out;
  auto& stats = out.stats;
  const auto order = detail::degree_order(g);
  out.tree = detail::split_until_related(
      g, order, [&](VertexId u, VertexId w) { return pair_bound(g, u, w); }, stats);

  BlockTree& t = out.tree;
  FlowNetwork network(g);
  std::set<std::pair<VertexId, VertexId>> non_pendant;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& e : t.edges()) {
      VertexId a = detail::max_degree_vertex(g, t.block(e.a));
      VertexId b = detail::max_degree_vertex(g, t.block(e.b));
      if (a > b) std::swap(a, b);
      if (non_pendant.count({a, b})) continue;
      ++stats.flow_calls;
      const Weight bound = pair_bound(g, a, b);
      if (network.max_flow(a, b, bound) >= bound) {
        t.contract(e.a, e.b);
        ++stats.contractions;
        changed = true;
        break;
      }
      non_pendant.emplace(a, b);
    }
  }
  return out;
}

BlockTree build_pendant_tree(const Multigraph& g) { return build_pendant_tree_with_stats(g).tree; }

ValidationReport validate_pendant_tree(const Multigraph& g, const BlockTree& t,
                                       const ValidationOptions& options) {
  ValidationReport report;
  check_tree_structure(g, t, report);
  if (!report.ok()) return report;
  PendancyTester tester(g, options);

  for (auto id : t.block_ids()) {
    const auto& block = t.block(id);
    if (tester.exhaustive()) {
      for (std::size_t i = 0; i < block.size(); ++i) {
        for (std::size_t j = i + 1; j < block.size(); ++j) {
          report.expect(tester.pendant(block[i], block[j]),
                        "(i) pair " + pair_str(block[i], block[j]) + " in block " +
                            std::to_string(id) + " is not pendant");
        }
      }
    } else {
      // consecutive pairs in degree order suffice by transitivity of λ
      std::vector<VertexId> sorted(block.begin(), block.end());
      std::stable_sort(sorted.begin(), sorted.end(),
                       [&](VertexId x, VertexId y) { return g.degree(x) > g.degree(y); });
      for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        report.expect(tester.pendant(sorted[i], sorted[i + 1]),
                      "(i) pair " + pair_str(sorted[i], sorted[i + 1]) + " in block " +
                          std::to_string(id) + " is not pendant");
      }
    }
  }

  for (const auto& e : t.edges()) {
    const VertexId a_max = detail::max_degree_vertex(g, t.block(e.a));
    const VertexId b_max = detail::max_degree_vertex(g, t.block(e.b));
    report.expect(!tester.pendant(a_max, b_max),
                  "(ii) " + edge_str(e.a, e.b) + ": maximum-degree pair " +
                      pair_str(a_max, b_max) + " is pendant");
    if (!e.representatives) {
      report.expect(false, "(iii) " + edge_str(e.a, e.b) + " has no representatives");
    } else {
      const auto [ra, rb] = *e.representatives;
      const bool placed = t.block_of(ra) == e.a && t.block_of(rb) == e.b;
      report.expect(placed, "(iii) " + edge_str(e.a, e.b) + ": representatives " +
                                pair_str(ra, rb) + " are not in the edge's blocks");
      if (placed) {
        report.expect(tester.lambda(ra, rb) == e.cut_value,
                      "(iii) " + edge_str(e.a, e.b) + ": c = " + std::to_string(e.cut_value) +
                          " differs from lambda of representatives " + pair_str(ra, rb));
      }
    }
    report.expect(e.cut_value < g.degree(a_max) && e.cut_value < g.degree(b_max),
                  edge_str(e.a, e.b) + ": c = " + std::to_string(e.cut_value) +
                      " is not below the maximum degree of both blocks");
  }

  if (t.block_count() < 2) return report;
  const auto classes = classify(t);
  report.expect(check_leafbound(t), "leaf-count bound violated");
  for (auto leaf : classes.leaves) {
    report.expect(t.block(leaf).size() >= 2,
                  "leaf block " + std::to_string(leaf) + " is a singleton");
  }
  if (!options.check_size_bounds || !g.is_simple()) return report;

  const Weight delta = min_degree(g);
  for (auto leaf : classes.leaves) {
    const auto& block = t.block(leaf);
    report.expect(static_cast<Weight>(block.size()) > delta,
                  "leaf block " + std::to_string(leaf) + " has " + std::to_string(block.size()) +
                      " vertices, not more than delta = " + std::to_string(delta));
    const auto inside = membership(g.n(), block);
    const bool closed = std::any_of(block.begin(), block.end(), [&](VertexId v) {
      const auto nb = g.neighbors(v);
      return std::all_of(nb.begin(), nb.end(), [&](const Neighbor& x) { return inside[x.vertex]; });
    });
    report.expect(closed, "leaf block " + std::to_string(leaf) +
                              " has no vertex whose neighborhood lies inside it");
  }

  for (const auto& path : classes.two_paths) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      const std::size_t pq = t.block(path[i]).size() + t.block(path[i + 1]).size();
      report.expect(pq <= 2 || static_cast<Weight>(pq) >= delta - 1,
                    "adjacent 2-path blocks " + std::to_string(path[i]) + "," +
                        std::to_string(path[i + 1]) + " have " + std::to_string(pq) +
                        " vertices, below delta - 1");
    }
  }

  const Hypothesis h = evaluate_hypothesis(g);
  if (h.holds()) {
    const Weight unit = std::max<Weight>(4, delta);
    for (const auto& path : classes.two_paths) {
      Weight total = 0;
      for (auto b : path) total += static_cast<Weight>(t.block(b).size());
      const auto len = static_cast<Weight>(path.size());
      report.expect(3 * total >= (len - 2) * unit + 6,
                    "2-path starting at block " + std::to_string(path.front()) + " holds only " +
                        std::to_string(total) + " vertices");
    }
    // consecutive edges AB, BC inside a 2-path, with the outer ends included
    for (const auto& path : classes.two_paths) {
      for (std::size_t i = 0; i < path.size(); ++i) {
        const BlockId mid = path[i];
        const auto& nb = t.neighbors(mid);
        const std::size_t total =
            t.block(nb[0]).size() + t.block(mid).size() + t.block(nb[1]).size();
        const bool inner_triple = t.degree(nb[0]) == 2 && t.degree(nb[1]) == 2;
        if (inner_triple) {
          report.expect(total > 3, "three singleton blocks around 2-path block " +
                                       std::to_string(mid));
        }
      }
    }
  }

  for (auto center : t.block_ids()) {
    if (!is_singleton_star(t, center)) continue;
    const auto diag = star_diagnostics(t, g, center);
    const auto r2 = static_cast<Weight>(diag.r * diag.r);
    report.expect(diag.center_degree <= r2 - 2 * diag.gamma,
                  "singleton star at block " + std::to_string(center) + ": degree " +
                      std::to_string(diag.center_degree) + " exceeds r^2 - 2*gamma");
    report.expect(delta <= r2, "singleton star at block " + std::to_string(center) +
                                   ": delta exceeds r^2");
    report.expect(h.lambda < r2, "singleton star at block " + std::to_string(center) +
                                     ": lambda is not below r^2");
  }
  return report;
}

namespace {

Weight tree_lower_bound(const BlockTree& t) {
  Weight total = 0;
  for (auto id : t.block_ids()) {
    const auto s = static_cast<Weight>(t.block(id).size());
    total += s * (s - 1) / 2;
  }
  return total;
}

Weight exact_pendant_pairs(const Multigraph& g) {
  const std::size_t n = g.n();
  if (n < 2) return 0;
  const GomoryHuTree gh = gomory_hu(g);
  std::vector<std::vector<std::pair<VertexId, Weight>>> adj(n);
  for (const auto& e : gh.edges) {
    adj[e.u].emplace_back(e.v, e.weight);
    adj[e.v].emplace_back(e.u, e.weight);
  }
  Weight count = 0;
  std::vector<Weight> path_min(n);
  std::vector<VertexId> parent(n);
  std::vector<VertexId> stack;
  for (VertexId root = 0; root < n; ++root) {
    path_min[root] = std::numeric_limits<Weight>::max();
    parent[root] = root;
    stack.assign(1, root);
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      if (x > root && path_min[x] == pair_bound(g, root, x)) ++count;
      for (const auto& [y, w] : adj[x]) {
        if (y == parent[x]) continue;
        parent[y] = x;
        path_min[y] = std::min(path_min[x], w);
        stack.push_back(y);
      }
    }
  }
  return count;
}

}  // namespace

PendantPairCount count_pendant_pairs(const Multigraph& g, const BlockTree& t) {
  return PendantPairCount{tree_lower_bound(t), exact_pendant_pairs(g)};
}

PendantPairCount count_pendant_pairs(const Multigraph& g) {
  if (g.n() == 0) return {};
  return count_pendant_pairs(g, build_pendant_tree(g));
}

PendantBoundReport check_pendant_theorems(const Multigraph& g, const BlockTree& t) {
  PendantBoundReport r;
  r.n = g.n();
  r.blocks = t.block_count();
  r.pairs = count_pendant_pairs(g, t);
  for (auto id : t.block_ids()) ++r.block_size_histogram[t.block(id).size()];
  if (g.is_simple() && g.n() > 0) {
    r.hypothesis = evaluate_hypothesis(g);
  } else {
    r.hypothesis.simple = g.is_simple();
    if (g.n() > 0) r.hypothesis.delta = min_degree(g);
  }
  const auto n = static_cast<Weight>(r.n);
  const Weight delta = r.hypothesis.delta;
  r.block_bound_holds = static_cast<Weight>(r.blocks) * (delta + 12) <= 12 * n;
  r.pair_bound_holds = 30 * r.pairs.exact >= delta * n;
  return r;
}

PendantBoundReport check_pendant_theorems(const Multigraph& g) {
  if (g.n() == 0) throw InputError("empty graph");
  return check_pendant_theorems(g, build_pendant_tree(g));
}

}  // namespace cuttree
