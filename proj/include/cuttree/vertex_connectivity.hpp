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

#include "cuttree/graph.hpp"

namespace cuttree {

/// Number of internally vertex-disjoint s-t paths for non-adjacent s and t.
Weight local_vertex_connectivity(const Multigraph& g, VertexId s, VertexId t);

/// κ(G): n−1 for complete graphs, otherwise the size of a minimum vertex
/// separator. Edge multiplicities are ignored.
Weight vertex_connectivity(const Multigraph& g);

}  // namespace cuttree
