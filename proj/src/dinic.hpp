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
#include <limits>
#include <vector>

#include "cuttree/graph.hpp"

namespace cuttree::detail {

/// Dinic blocking-flow max-flow over a directed arc list with integer
/// capacities. Arcs are added in pairs (a, a^1) that are each other's reverse.
/// After finalize() the network can be solved repeatedly; reset() restores the
/// original capacities in time proportional to the arcs a run touched.
class Dinic {
 public:
  static constexpr Weight kUnlimited = std::numeric_limits<Weight>::max();

  explicit Dinic(std::size_t nodes) : nodes_(nodes) {}

  std::size_t nodes() const { return nodes_; }

  /// Adds u->v with capacity `forward` and v->u with capacity `backward`.
  /// Returns the index of the u->v arc.
  std::uint32_t add_arc_pair(std::uint32_t u, std::uint32_t v, Weight forward, Weight backward);
  void finalize();

  /// Augments from the current residual state until no s-t path remains or
  /// `limit` additional units have been sent. Returns the units sent.
  Weight augment(std::uint32_t s, std::uint32_t t, Weight limit = kUnlimited);
  void reset();

  Weight residual(std::uint32_t arc) const { return cap_[arc]; }
  std::uint32_t arc_head(std::uint32_t arc) const { return head_[arc]; }
  std::size_t arc_count() const { return head_.size(); }

  /// Arc indices leaving u.
  const std::uint32_t* out_begin(std::uint32_t u) const { return order_.data() + first_[u]; }
  const std::uint32_t* out_end(std::uint32_t u) const { return order_.data() + first_[u + 1]; }

  /// Nodes reachable from s along arcs with positive residual capacity.
  std::vector<char> reachable_from(std::uint32_t s) const;
  /// Nodes that reach t along arcs with positive residual capacity.
  std::vector<char> reaching(std::uint32_t t) const;

 private:
  bool build_levels(std::uint32_t s, std::uint32_t t);
  Weight blocking_flow(std::uint32_t s, std::uint32_t t, Weight limit);
  void touch(std::uint32_t arc);

  std::size_t nodes_;
  std::vector<std::uint32_t> tail_;
  std::vector<std::uint32_t> head_;
  std::vector<Weight> cap_;
  std::vector<Weight> original_;
  std::vector<char> touched_flag_;
  std::vector<std::uint32_t> touched_;

  std::vector<std::uint32_t> first_;
  std::vector<std::uint32_t> order_;

  // Per-phase scratch, reset lazily through visited_.
  std::vector<std::int32_t> level_;
  std::vector<std::uint32_t> next_arc_;
  std::vector<std::uint32_t> visited_;
  std::vector<std::uint32_t> queue_;
  std::vector<std::uint32_t> path_;
};

}  // namespace cuttree::detail
