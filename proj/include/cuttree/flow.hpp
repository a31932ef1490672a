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
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "cuttree/graph.hpp"

namespace cuttree {

namespace detail {
class Dinic;
}

/// Strongly connected components of a residual network and the quotient DAG.
/// successors[c] lists components d != c with a residual arc from c into d.
/// A set of vertices containing the source and closed under residual
/// reachability is exactly the source side of a minimum cut.
struct ResidualScc {
  std::vector<VertexSet> components;
  std::vector<std::uint32_t> component_of;
  std::vector<std::vector<std::uint32_t>> successors;
  std::uint32_t source_component = 0;
  std::uint32_t sink_component = 0;
};

struct FlowResult {
  Weight value = 0;
  /// Inclusion-minimal minimum cut containing the source.
  Cut min_source_side;
  /// Inclusion-minimal minimum cut containing the sink, i.e. the complement
  /// of the inclusion-maximal source side.
  Cut min_sink_side;
  ResidualScc residual;
};

/// A reusable max-flow instance over one undirected multigraph. Each call
/// starts from zero flow. Not safe for concurrent use; build one per thread.
class FlowNetwork {
 public:
  explicit FlowNetwork(const Multigraph& g);
  ~FlowNetwork();
  FlowNetwork(FlowNetwork&&) noexcept;
  FlowNetwork& operator=(FlowNetwork&&) noexcept;

  std::size_t n() const { return n_; }

  /// λ(s, t), or `limit` if the flow reaches it first.
  Weight max_flow(VertexId s, VertexId t, Weight limit = std::numeric_limits<Weight>::max());
  /// Source side of the inclusion-minimal min cut of the most recent run.
  /// Only meaningful when that run was not stopped by its limit.
  VertexSet min_source_side() const;

  std::uint64_t calls() const { return calls_; }

 private:
  std::size_t n_;
  std::unique_ptr<detail::Dinic> dinic_;
  VertexId last_source_ = 0;
  std::uint64_t calls_ = 0;
};

/// λ(s, t) with the extremal min cuts and the residual SCC quotient.
FlowResult max_flow(const Multigraph& g, VertexId s, VertexId t);

Weight local_edge_connectivity(const Multigraph& g, VertexId s, VertexId t);

/// λ(G) = min over w != 0 of λ(0, w); 0 for disconnected graphs.
Weight global_edge_connectivity(const Multigraph& g);

/// A non-trivial cut X with s ∈ X, t ∉ X and d(X) = λ(s, t), if one exists.
/// With `cap` set, returns nothing as soon as λ(s, t) > cap. Among qualifying
/// candidates the smallest side wins, ties broken lexicographically.
std::optional<Cut> nontrivial_st_mincut(const Multigraph& g, VertexId s, VertexId t,
                                        std::optional<Weight> cap = std::nullopt);
/// Same search on an existing flow result.
std::optional<Cut> nontrivial_st_mincut(const Multigraph& g, const FlowResult& flow,
                                        VertexId s, VertexId t);

/// Minimum s-t cut after contracting each of `groups` to a single vertex;
/// returns the inclusion-minimal source side expanded back to G. s and t must
/// not belong to any group. Every listed group ends up wholly on one side.
Cut min_st_cut_with_groups(const Multigraph& g, std::span<const VertexSet> groups, VertexId s,
                           VertexId t);

/// A minimum s-t cut that does not cross `fixed`, found by contracting the
/// complement of fixed.side. Requires s, t ∈ fixed.side.
Cut uncross_min_cut(const Multigraph& g, const Cut& fixed, VertexId s, VertexId t);

/// x − c for two crossing global min cuts. `lambda` is recomputed when absent.
Cut trim_by_mincut(const Multigraph& g, const Cut& x, const Cut& c,
                   std::optional<Weight> lambda = std::nullopt);

struct WeightedTreeEdge {
  VertexId u;
  VertexId v;
  Weight weight;
};

/// Flow-equivalent tree: λ(u, v) is the minimum edge weight on the tree path.
struct GomoryHuTree {
  std::size_t n = 0;
  std::vector<WeightedTreeEdge> edges;

  Weight path_min(VertexId u, VertexId v) const;
  /// Matrix of path minima; the diagonal is 0.
  std::vector<std::vector<Weight>> all_pairs() const;
};

/// n−1 max-flow calls (Gusfield). Disconnected graphs yield weight-0 edges.
GomoryHuTree gomory_hu(const Multigraph& g);

}  // namespace cuttree
