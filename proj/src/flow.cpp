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

#include "cuttree/flow.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "cuttree/errors.hpp"
#include "dinic.hpp"

namespace cuttree {

namespace {

detail::Dinic undirected_network(const Multigraph& g) {
  detail::Dinic net(g.n());
  for (const auto& e : g.edges()) net.add_arc_pair(e.u, e.v, e.multiplicity, e.multiplicity);
  net.finalize();
  return net;
}

void check_terminals(const Multigraph& g, VertexId s, VertexId t) {
  if (s >= g.n() || t >= g.n()) throw InputError("flow terminal out of range");
  if (s == t) throw InputError("source and sink must differ");
}

VertexSet collect(const std::vector<char>& flag, bool value) {
  VertexSet out;
  for (VertexId v = 0; v < flag.size(); ++v) {
    if (static_cast<bool>(flag[v]) == value) out.push_back(v);
  }
  return out;
}

// Tarjan's algorithm over arcs with positive residual capacity; components
// renumbered by their smallest vertex.
ResidualScc residual_components(const detail::Dinic& net, VertexId s, VertexId t) {
  const auto n = static_cast<std::uint32_t>(net.nodes());
  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  std::vector<std::uint32_t> index(n, kNone), low(n, 0), comp(n, kNone);
  std::vector<char> on_stack(n, 0);
  std::vector<std::uint32_t> stack;
  std::vector<std::pair<std::uint32_t, const std::uint32_t*>> frames;
  std::uint32_t counter = 0;
  std::uint32_t comp_count = 0;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kNone) continue;
    frames.emplace_back(root, net.out_begin(root));
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [u, it] = frames.back();
      if (it != net.out_end(u)) {
        auto arc = *it++;
        if (net.residual(arc) <= 0) continue;
        auto v = net.arc_head(arc);
        if (index[v] == kNone) {
          index[v] = low[v] = counter++;
          stack.push_back(v);
          on_stack[v] = 1;
          frames.emplace_back(v, net.out_begin(v));
        } else if (on_stack[v]) {
          low[u] = std::min(low[u], index[v]);
        }
        continue;
      }
      auto done = u;
      frames.pop_back();
      if (!frames.empty()) {
        auto parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        std::uint32_t w = kNone;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = comp_count;
        } while (w != done);
        ++comp_count;
      }
    }
  }

  // renumber by smallest member
  std::vector<std::uint32_t> rank(comp_count, kNone);
  std::uint32_t next = 0;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (rank[comp[v]] == kNone) rank[comp[v]] = next++;
  }
  ResidualScc out;
  out.components.resize(comp_count);
  out.component_of.resize(n);
  out.successors.resize(comp_count);
  for (std::uint32_t v = 0; v < n; ++v) {
    out.component_of[v] = rank[comp[v]];
    out.components[rank[comp[v]]].push_back(v);
  }
  for (std::uint32_t u = 0; u < n; ++u) {
    for (auto it = net.out_begin(u); it != net.out_end(u); ++it) {
      if (net.residual(*it) <= 0) continue;
      auto cu = out.component_of[u];
      auto cv = out.component_of[net.arc_head(*it)];
      if (cu != cv) out.successors[cu].push_back(cv);
    }
  }
  for (auto& succ : out.successors) {
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
  }
  out.source_component = out.component_of[s];
  out.sink_component = out.component_of[t];
  return out;
}

FlowResult finish_flow(const Multigraph& g, const detail::Dinic& net, Weight value, VertexId s,
                       VertexId t) {
  FlowResult result;
  result.value = value;
  result.min_source_side = Cut{collect(net.reachable_from(s), true), value};
  result.min_sink_side = Cut{collect(net.reaching(t), true), value};
  result.residual = residual_components(net, s, t);
  if (cut_weight(g, result.min_source_side.side) != value) {
    throw InternalError("max-flow value disagrees with its residual cut");
  }
  return result;
}

bool smaller_side(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

FlowNetwork::FlowNetwork(const Multigraph& g)
    : n_(g.n()), dinic_(std::make_unique<detail::Dinic>(undirected_network(g))) {}

FlowNetwork::~FlowNetwork() = default;
FlowNetwork::FlowNetwork(FlowNetwork&&) noexcept = default;
FlowNetwork& FlowNetwork::operator=(FlowNetwork&&) noexcept = default;

Weight FlowNetwork::max_flow(VertexId s, VertexId t, Weight limit) {
  if (s >= n_ || t >= n_) throw InputError("flow terminal out of range");
  if (s == t) throw InputError("source and sink must differ");
  ++calls_;
  dinic_->reset();
  last_source_ = s;
  return dinic_->augment(s, t, limit);
}

VertexSet FlowNetwork::min_source_side() const {
  return collect(dinic_->reachable_from(last_source_), true);
}

FlowResult max_flow(const Multigraph& g, VertexId s, VertexId t) {
  check_terminals(g, s, t);
  auto net = undirected_network(g);
  Weight value = net.augment(s, t);
  return finish_flow(g, net, value, s, t);
}

Weight local_edge_connectivity(const Multigraph& g, VertexId s, VertexId t) {
  check_terminals(g, s, t);
  auto net = undirected_network(g);
  return net.augment(s, t);
}

Weight global_edge_connectivity(const Multigraph& g) {
  if (g.n() < 2) throw InputError("edge connectivity needs at least two vertices");
  FlowNetwork net(g);
  Weight best = net.max_flow(0, 1);
  for (VertexId w = 2; w < g.n() && best > 0; ++w) {
    best = std::min(best, net.max_flow(0, w, best));
  }
  return best;
}

std::optional<Cut> nontrivial_st_mincut(const Multigraph& g, const FlowResult& flow, VertexId s,
                                        VertexId t) {
  check_terminals(g, s, t);
  const auto n = g.n();
  const auto& scc = flow.residual;
  const auto k = scc.components.size();
  std::vector<std::vector<std::uint32_t>> predecessors(k);
  for (std::uint32_t c = 0; c < k; ++c) {
    for (auto d : scc.successors[c]) predecessors[d].push_back(c);
  }
  auto closure = [&](const std::vector<std::vector<std::uint32_t>>& arcs, std::uint32_t a,
                     std::uint32_t b) {
    std::vector<char> in(k, 0);
    std::vector<std::uint32_t> stack{a, b};
    in[a] = in[b] = 1;
    while (!stack.empty()) {
      auto c = stack.back();
      stack.pop_back();
      for (auto d : arcs[c]) {
        if (!in[d]) {
          in[d] = 1;
          stack.push_back(d);
        }
      }
    }
    return in;
  };
  auto expand = [&](const std::vector<char>& in_comp, bool value) {
    VertexSet side;
    for (VertexId v = 0; v < n; ++v) {
      if (static_cast<bool>(in_comp[scc.component_of[v]]) == value) side.push_back(v);
    }
    return side;
  };

  std::optional<VertexSet> best;
  auto consider = [&](VertexSet side) {
    if (side.size() < 2 || side.size() + 2 > n) return;
    if (!best || smaller_side(side, *best)) best = std::move(side);
  };
  consider(flow.min_source_side.side);
  consider(complement(n, flow.min_sink_side.side));
  for (std::uint32_t c = 0; c < k; ++c) {
    if (c == scc.source_component || c == scc.sink_component) continue;
    auto fwd = closure(scc.successors, scc.source_component, c);
    if (!fwd[scc.sink_component]) consider(expand(fwd, true));
    auto bwd = closure(predecessors, scc.sink_component, c);
    if (!bwd[scc.source_component]) consider(expand(bwd, false));
  }
  if (!best) return std::nullopt;
  Cut cut{std::move(*best), flow.value};
  if (cut_weight(g, cut.side) != flow.value) {
    throw InternalError("residual closure is not a minimum cut");
  }
  return cut;
}

std::optional<Cut> nontrivial_st_mincut(const Multigraph& g, VertexId s, VertexId t,
                                        std::optional<Weight> cap) {
  check_terminals(g, s, t);
  auto net = undirected_network(g);
  Weight value = 0;
  if (cap) {
    value = net.augment(s, t, *cap + 1);
    if (value > *cap) return std::nullopt;
  }
  value += net.augment(s, t);
  auto flow = finish_flow(g, net, value, s, t);
  return nontrivial_st_mincut(g, flow, s, t);
}

Cut min_st_cut_with_groups(const Multigraph& g, std::span<const VertexSet> groups, VertexId s,
                           VertexId t) {
  check_terminals(g, s, t);
  constexpr std::uint32_t kFree = ~std::uint32_t{0};
  std::vector<std::uint32_t> label(g.n(), kFree);
  for (std::uint32_t i = 0; i < groups.size(); ++i) {
    for (VertexId v : groups[i]) {
      if (v >= g.n()) throw InputError("group vertex out of range");
      if (label[v] != kFree) throw InputError("groups overlap");
      label[v] = i;
    }
  }
  if (label[s] != kFree || label[t] != kFree) {
    throw InputError("flow terminals must stay uncontracted");
  }
  std::uint32_t next = static_cast<std::uint32_t>(groups.size());
  for (VertexId v = 0; v < g.n(); ++v) {
    if (label[v] == kFree) label[v] = next++;
  }
  auto contracted = contract_labels(g, label, next);
  auto net = undirected_network(contracted);
  Weight value = net.augment(label[s], label[t]);
  auto reach = net.reachable_from(label[s]);
  VertexSet side;
  for (VertexId v = 0; v < g.n(); ++v) {
    if (reach[label[v]]) side.push_back(v);
  }
  return Cut{std::move(side), value};
}

Cut uncross_min_cut(const Multigraph& g, const Cut& fixed, VertexId s, VertexId t) {
  if (!fixed.contains(s) || !fixed.contains(t)) {
    throw InputError("uncross_min_cut: s and t must lie in the fixed side");
  }
  if (fixed.side.empty() || fixed.side.size() >= g.n()) {
    throw InputError("uncross_min_cut: fixed is not a proper cut");
  }
  std::vector<VertexSet> groups{complement(g.n(), fixed.side)};
  return min_st_cut_with_groups(g, groups, s, t);
}

Cut trim_by_mincut(const Multigraph& g, const Cut& x, const Cut& c, std::optional<Weight> lambda) {
  if (!crosses(g.n(), x.side, c.side)) {
    throw ContractViolation("trim_by_mincut: the two cuts do not cross");
  }
  const Weight target = lambda ? *lambda : global_edge_connectivity(g);
  if (cut_weight(g, x.side) != target || cut_weight(g, c.side) != target) {
    throw ContractViolation("trim_by_mincut: inputs must both be global minimum cuts");
  }
  Cut out{set_difference(x.side, c.side), 0};
  out.weight = cut_weight(g, out.side);
  if (out.weight != target) throw InternalError("trimmed cut is not minimum");
  return out;
}

GomoryHuTree gomory_hu(const Multigraph& g) {
  if (g.n() < 2) throw InputError("gomory_hu needs at least two vertices");
  const auto n = g.n();
  FlowNetwork net(g);
  std::vector<VertexId> parent(n, 0);
  GomoryHuTree tree;
  tree.n = n;
  for (VertexId i = 1; i < n; ++i) {
    Weight value = net.max_flow(i, parent[i]);
    auto side = net.min_source_side();
    auto in = membership(n, side);
    for (VertexId j = i + 1; j < n; ++j) {
      if (in[j] && parent[j] == parent[i]) parent[j] = i;
    }
    tree.edges.push_back({i, parent[i], value});
  }
  return tree;
}

Weight GomoryHuTree::path_min(VertexId u, VertexId v) const {
  if (u >= n || v >= n) throw InputError("vertex out of range");
  if (u == v) throw InputError("path_min needs distinct vertices");
  std::vector<std::vector<std::pair<VertexId, Weight>>> adj(n);
  for (const auto& e : edges) {
    adj[e.u].emplace_back(e.v, e.weight);
    adj[e.v].emplace_back(e.u, e.weight);
  }
  std::vector<Weight> best(n, -1);
  best[u] = std::numeric_limits<Weight>::max();
  std::vector<VertexId> stack{u};
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    for (auto [y, w] : adj[x]) {
      if (best[y] >= 0) continue;
      best[y] = std::min(best[x], w);
      stack.push_back(y);
    }
  }
  if (best[v] < 0) throw InternalError("Gomory-Hu tree is not spanning");
  return best[v];
}

std::vector<std::vector<Weight>> GomoryHuTree::all_pairs() const {
  std::vector<std::vector<std::pair<VertexId, Weight>>> adj(n);
  for (const auto& e : edges) {
    adj[e.u].emplace_back(e.v, e.weight);
    adj[e.v].emplace_back(e.u, e.weight);
  }
  constexpr Weight kInf = std::numeric_limits<Weight>::max();
  std::vector<std::vector<Weight>> out(n, std::vector<Weight>(n, 0));
  std::vector<VertexId> stack;
  std::vector<char> seen(n);
  for (VertexId root = 0; root < n; ++root) {
    std::fill(seen.begin(), seen.end(), 0);
    auto& row = out[root];
    row[root] = kInf;
    seen[root] = 1;
    stack.assign(1, root);
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (auto [v, w] : adj[u]) {
        if (seen[v]) continue;
        seen[v] = 1;
        row[v] = std::min(row[u], w);
        stack.push_back(v);
      }
    }
    row[root] = 0;
  }
  return out;
}

}  // namespace cuttree
