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
#include <string>
#include <vector>

#include "cuttree/block_tree.hpp"
#include "cuttree/graph.hpp"

namespace cuttree {

/// Itemized outcome of a tree validator; empty `failures` means valid.
struct ValidationReport {
  std::vector<std::string> failures;
  /// Number of individual conditions evaluated.
  std::size_t checks = 0;

  bool ok() const { return failures.empty(); }
  void expect(bool condition, std::string message) {
    ++checks;
    if (!condition) failures.push_back(std::move(message));
  }
};

struct ValidationOptions {
  /// Decide pair relations and cut families by exhaustive enumeration.
  bool use_oracle = false;
  std::size_t oracle_limit = 10;
  /// Also assert the size bounds that every valid tree of a simple
  /// graph satisfies (leaf sizes, 2-path sizes, star bounds).
  bool check_size_bounds = true;
};

/// The degree/connectivity hypothesis δ >= 5 or λ >= 4 or κ >= 3 on a
/// simple graph, under which the block-count and pendant-pair bounds apply.
struct Hypothesis {
  bool simple = false;
  Weight delta = 0;
  Weight lambda = 0;
  Weight kappa = 0;

  bool holds() const { return simple && (delta >= 5 || lambda >= 4 || kappa >= 3); }
};

Hypothesis evaluate_hypothesis(const Multigraph& g);

/// Partition/tree consistency and cached cut values against `g`.
void check_tree_structure(const Multigraph& g, const BlockTree& t, ValidationReport& report);

/// Counters reported by the tree builders.
struct BuildStats {
  std::uint64_t flow_calls = 0;
  std::size_t splits = 0;
  std::size_t contractions = 0;
};

}  // namespace cuttree
