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

#include "cuttree/vertex_connectivity.hpp"

#include <algorithm>

#include "cuttree/errors.hpp"
#include "dinic.hpp"

namespace cuttree {

namespace {

// Vertex v becomes the arc 2v -> 2v+1 of capacity 1; each adjacency becomes
// two uncapacitated arcs between the split copies.
detail::Dinic split_network(const Multigraph& g) {
  const auto n = static_cast<std::uint32_t>(g.n());
  const Weight big = static_cast<Weight>(g.n()) + 1;
  detail::Dinic net(2 * g.n());
  for (std::uint32_t v = 0; v < n; ++v) net.add_arc_pair(2 * v, 2 * v + 1, 1, 0);
  for (const auto& e : g.edges()) {
    net.add_arc_pair(2 * e.u + 1, 2 * e.v, big, 0);
    net.add_arc_pair(2 * e.v + 1, 2 * e.u, big, 0);
  }
  net.finalize();
  return net;
}

}  // namespace

Weight local_vertex_connectivity(const Multigraph& g, VertexId s, VertexId t) {
  if (s >= g.n() || t >= g.n() || s == t) throw InputError("invalid terminals");
  if (g.multiplicity(s, t) > 0) throw InputError("terminals must be non-adjacent");
  auto net = split_network(g);
  return net.augment(2 * s + 1, 2 * t);
}

Weight vertex_connectivity(const Multigraph& g) {
  const auto n = g.n();
  if (n <= 1) return 0;
  auto net = split_network(g);
  Weight best = static_cast<Weight>(n) - 1;
  // Even's scheme: some vertex among the first best+1 lies outside a minimum
  // separator, and it suffices to pair it with every later vertex.
  for (VertexId i = 0; i < n && static_cast<Weight>(i) <= best; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      if (g.multiplicity(i, j) > 0) continue;
      net.reset();
      best = std::min(best, net.augment(2 * i + 1, 2 * j, best));
      if (best == 0) return 0;
    }
  }
  return best;
}

}  // namespace cuttree
