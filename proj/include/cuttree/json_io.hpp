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

#include <utility>

#include "cuttree/block_tree.hpp"
#include "cuttree/graph.hpp"
#include "cuttree/kec.hpp"
#include "cuttree/validation.hpp"
#include "json.hpp"

namespace cuttree {

using Json = nlohmann::json;

inline constexpr int kJsonSchema = 1;

/// {"n": n, "edges": [[u, v, mult], ...]} with 1-based vertices.
Json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const Json& j);

/// {"kind", "blocks": [[1-based vertices]], "edges": [{"a", "b", "c", "reps"}]}.
/// Blocks are listed by smallest vertex; "a" and "b" index that list from 0;
/// "reps" holds 1-based vertices, the first in block "a".
Json tree_to_json(const BlockTree& t, TreeKind kind);
/// Rebuilds a tree over `g`. Throws FormatError on malformed input or when a
/// stored cut value disagrees with `g`.
std::pair<BlockTree, TreeKind> tree_from_json(const Json& j, const Multigraph& g);

/// n, m (edge units), pairs, delta, lambda and the simple flag.
Json graph_digest(const Multigraph& g);
Json validation_to_json(const ValidationReport& report);
Json sparsify_to_json(const SparsifyReport& report);

}  // namespace cuttree
