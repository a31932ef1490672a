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

#include "cuttree/graph.hpp"

#include <algorithm>
#include <string>

#include "cuttree/errors.hpp"

namespace cuttree {

Multigraph::Multigraph(std::size_t n, std::span<const EdgeSpec> edges)
    : adjacency_(n), degree_(n, 0) {
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw InputError("edge endpoint out of range: {" + std::to_string(e.u) + ", " +
                       std::to_string(e.v) + "} with n = " + std::to_string(n));
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (e.multiplicity <= 0) throw InputError("edge multiplicity must be positive");
    adjacency_[e.u].push_back({e.v, e.multiplicity});
    adjacency_[e.v].push_back({e.u, e.multiplicity});
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& adj = adjacency_[v];
    std::sort(adj.begin(), adj.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
    // merge parallel entries
    std::size_t out = 0;
    for (std::size_t i = 0; i < adj.size(); ++i) {
      if (out > 0 && adj[out - 1].vertex == adj[i].vertex) {
        adj[out - 1].multiplicity += adj[i].multiplicity;
      } else {
        adj[out++] = adj[i];
      }
    }
    adj.resize(out);
    for (const auto& nb : adj) {
      degree_[v] += nb.multiplicity;
      if (nb.multiplicity != 1) simple_ = false;
    }
    edge_units_ += degree_[v];
    pair_count_ += adj.size();
  }
  edge_units_ /= 2;
  pair_count_ /= 2;
}

void Multigraph::check_vertex(VertexId v) const {
  if (v >= n()) {
    throw InputError("vertex " + std::to_string(v) + " out of range (n = " + std::to_string(n()) +
                     ")");
  }
}

Weight Multigraph::degree(VertexId v) const {
  check_vertex(v);
  return degree_[v];
}

std::span<const Neighbor> Multigraph::neighbors(VertexId v) const {
  check_vertex(v);
  return adjacency_[v];
}

Weight Multigraph::multiplicity(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& adj = adjacency_[u];
  auto it = std::lower_bound(adj.begin(), adj.end(), v,
                             [](const Neighbor& a, VertexId x) { return a.vertex < x; });
  return (it != adj.end() && it->vertex == v) ? it->multiplicity : 0;
}

std::vector<EdgeSpec> Multigraph::edges() const {
  std::vector<EdgeSpec> out;
  out.reserve(pair_count_);
  for (VertexId u = 0; u < n(); ++u) {
    for (const auto& nb : adjacency_[u]) {
      if (u < nb.vertex) out.push_back({u, nb.vertex, nb.multiplicity});
    }
  }
  return out;
}

bool Cut::contains(VertexId v) const { return std::binary_search(side.begin(), side.end(), v); }

Weight degree(const Multigraph& g, VertexId v) { return g.degree(v); }

Weight min_degree(const Multigraph& g) {
  if (g.n() == 0) throw InputError("min_degree of an empty graph");
  Weight best = g.degree(0);
  for (VertexId v = 1; v < g.n(); ++v) best = std::min(best, g.degree(v));
  return best;
}

VertexSet normalize_set(std::size_t n, VertexSet set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  if (!set.empty() && set.back() >= n) {
    throw InputError("vertex " + std::to_string(set.back()) + " out of range (n = " +
                     std::to_string(n) + ")");
  }
  return set;
}

std::vector<char> membership(std::size_t n, std::span<const VertexId> side) {
  std::vector<char> in(n, 0);
  for (VertexId v : side) {
    if (v >= n) throw InputError("vertex " + std::to_string(v) + " out of range");
    in[v] = 1;
  }
  return in;
}

namespace {

Weight boundary_weight(const Multigraph& g, const std::vector<char>& in,
                       std::span<const VertexId> side) {
  Weight w = 0;
  for (VertexId v : side) {
    for (const auto& nb : g.neighbors(v)) {
      if (!in[nb.vertex]) w += nb.multiplicity;
    }
  }
  return w;
}

}  // namespace

Weight cut_weight(const Multigraph& g, std::span<const VertexId> side) {
  auto in = membership(g.n(), side);
  std::size_t size = 0;
  for (char c : in) size += c != 0;
  if (size == 0 || size == g.n()) {
    throw InputError("a cut side must be a non-empty proper subset of V");
  }
  VertexSet unique_side;
  unique_side.reserve(size);
  for (VertexId v = 0; v < g.n(); ++v) {
    if (in[v]) unique_side.push_back(v);
  }
  return boundary_weight(g, in, unique_side);
}

Weight cross_weight(const Multigraph& g, std::span<const VertexId> x, std::span<const VertexId> y) {
  if (x.empty() || y.empty()) throw InputError("cross_weight needs non-empty sets");
  auto in_x = membership(g.n(), x);
  auto in_y = membership(g.n(), y);
  for (VertexId v = 0; v < g.n(); ++v) {
    if (in_x[v] && in_y[v]) throw InputError("cross_weight needs disjoint sets");
  }
  Weight w = 0;
  for (VertexId v = 0; v < g.n(); ++v) {
    if (!in_x[v]) continue;
    for (const auto& nb : g.neighbors(v)) {
      if (in_y[nb.vertex]) w += nb.multiplicity;
    }
  }
  return w;
}

Cut make_cut(const Multigraph& g, VertexSet side) {
  side = normalize_set(g.n(), std::move(side));
  if (side.empty() || side.size() == g.n()) {
    throw InputError("a cut side must be a non-empty proper subset of V");
  }
  auto in = membership(g.n(), side);
  Weight w = boundary_weight(g, in, side);
  return Cut{std::move(side), w};
}

Multigraph contract_labels(const Multigraph& g, std::span<const std::uint32_t> label,
                           std::size_t count) {
  if (label.size() != g.n()) throw InputError("one label per vertex required");
  std::vector<EdgeSpec> edges;
  edges.reserve(g.pair_count());
  for (VertexId u = 0; u < g.n(); ++u) {
    if (label[u] >= count) throw InputError("label out of range");
    for (const auto& nb : g.neighbors(u)) {
      if (u < nb.vertex && label[u] != label[nb.vertex]) {
        edges.push_back({label[u], label[nb.vertex], nb.multiplicity});
      }
    }
  }
  return Multigraph(count, edges);
}

ContractionResult contract_partition(const Multigraph& g, std::span<const VertexSet> blocks) {
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> label(g.n(), kUnset);
  std::vector<VertexSet> origin;
  origin.reserve(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw InputError("partition contains an empty block");
    VertexSet block = normalize_set(g.n(), blocks[b]);
    if (block.size() != blocks[b].size()) throw InputError("block lists a vertex twice");
    for (VertexId v : block) {
      if (label[v] != kUnset) {
        throw InputError("blocks overlap at vertex " + std::to_string(v));
      }
      label[v] = static_cast<std::uint32_t>(b);
    }
    origin.push_back(std::move(block));
  }
  for (VertexId v = 0; v < g.n(); ++v) {
    if (label[v] == kUnset) {
      throw InputError("blocks do not cover vertex " + std::to_string(v));
    }
  }
  return ContractionResult{contract_labels(g, label, blocks.size()), std::move(origin)};
}

VertexSet complement(std::size_t n, std::span<const VertexId> side) {
  auto in = membership(n, side);
  VertexSet out;
  for (VertexId v = 0; v < n; ++v) {
    if (!in[v]) out.push_back(v);
  }
  return out;
}

VertexSet set_intersection(std::span<const VertexId> a, std::span<const VertexId> b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(std::span<const VertexId> a, std::span<const VertexId> b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_union(std::span<const VertexId> a, std::span<const VertexId> b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(std::span<const VertexId> a, std::span<const VertexId> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool intersects(std::span<const VertexId> a, std::span<const VertexId> b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

bool crosses(std::size_t n, std::span<const VertexId> x, std::span<const VertexId> y) {
  if (!intersects(x, y)) return false;
  if (is_subset(x, y) || is_subset(y, x)) return false;
  return set_union(x, y).size() < n;
}

bool splits(std::span<const VertexId> side, std::span<const VertexId> block) {
  return intersects(side, block) && !is_subset(block, side);
}

}  // namespace cuttree
