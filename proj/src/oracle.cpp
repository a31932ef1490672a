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

#include "cuttree/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

#include "cuttree/errors.hpp"

namespace cuttree::oracle {

namespace {

constexpr std::size_t kHardCap = 30;

void check_size(const Multigraph& g, std::size_t limit) {
  if (g.n() == 0) throw InputError("the oracle needs a non-empty graph");
  if (g.n() > limit || g.n() > kHardCap) {
    throw SizeRefusal("oracle refuses n = " + std::to_string(g.n()) + " (limit " +
                      std::to_string(std::min(limit, kHardCap)) + ")");
  }
}

// Weights of all sides {0} ∪ {i : bit i-1 of mask}, computed along a Gray
// code. Index 2^(n-1) - 1 is V itself and is left at 0.
std::vector<Weight> side_weights(const Multigraph& g) {
  const std::size_t bits = g.n() - 1;
  const std::size_t count = std::size_t{1} << bits;
  std::vector<Weight> weight(count, 0);
  std::vector<char> in(g.n(), 0);
  in[0] = 1;
  Weight current = g.degree(0);
  weight[0] = current;
  std::size_t gray = 0;
  for (std::size_t step = 1; step < count; ++step) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(step));
    const auto v = static_cast<VertexId>(bit + 1);
    Weight to_side = 0;
    for (const auto& nb : g.neighbors(v)) {
      if (in[nb.vertex]) to_side += nb.multiplicity;
    }
    if (in[v]) {
      current -= g.degree(v) - 2 * to_side;
      in[v] = 0;
    } else {
      current += g.degree(v) - 2 * to_side;
      in[v] = 1;
    }
    gray ^= std::size_t{1} << bit;
    weight[gray] = current;
  }
  weight[count - 1] = 0;
  return weight;
}

VertexSet side_of(std::size_t n, std::size_t mask) {
  VertexSet side{0};
  for (VertexId v = 1; v < n; ++v) {
    if (mask >> (v - 1) & 1U) side.push_back(v);
  }
  return side;
}

bool in_side(std::size_t mask, VertexId v) { return v == 0 || (mask >> (v - 1) & 1U); }

}  // namespace

CutEnumeration enumerate_cuts(const Multigraph& g, std::size_t limit) {
  check_size(g, limit);
  CutEnumeration out;
  if (g.n() < 2) return out;
  const auto weight = side_weights(g);
  const std::size_t proper = weight.size() - 1;
  out.all_cuts.reserve(proper);
  out.min_weight = std::numeric_limits<Weight>::max();
  for (std::size_t mask = 0; mask < proper; ++mask) {
    out.min_weight = std::min(out.min_weight, weight[mask]);
  }
  for (std::size_t mask = 0; mask < proper; ++mask) {
    Cut cut{side_of(g.n(), mask), weight[mask]};
    if (cut.weight == out.min_weight) {
      out.min_cuts.push_back(cut);
      if (!cut.is_trivial(g.n())) out.nontrivial_min_cuts.push_back(cut);
    }
    out.all_cuts.push_back(std::move(cut));
  }
  return out;
}

std::vector<Cut> cuts_below(const Multigraph& g, Weight bound, std::size_t limit) {
  check_size(g, limit);
  std::vector<Cut> out;
  if (g.n() < 2) return out;
  const auto weight = side_weights(g);
  for (std::size_t mask = 0; mask + 1 < weight.size(); ++mask) {
    if (weight[mask] < bound) out.push_back(Cut{side_of(g.n(), mask), weight[mask]});
  }
  return out;
}

Weight brute_lambda(const Multigraph& g, VertexId v, VertexId w, std::size_t limit) {
  check_size(g, limit);
  if (v >= g.n() || w >= g.n()) throw InputError("vertex out of range");
  if (v == w) throw InputError("brute_lambda needs distinct vertices");
  const auto weight = side_weights(g);
  Weight best = std::numeric_limits<Weight>::max();
  for (std::size_t mask = 0; mask + 1 < weight.size(); ++mask) {
    if (in_side(mask, v) != in_side(mask, w)) best = std::min(best, weight[mask]);
  }
  return best;
}

std::optional<Weight> brute_nontrivial_lambda(const Multigraph& g, VertexId v, VertexId w,
                                              std::size_t limit) {
  check_size(g, limit);
  if (v >= g.n() || w >= g.n()) throw InputError("vertex out of range");
  if (v == w) throw InputError("brute_nontrivial_lambda needs distinct vertices");
  const auto weight = side_weights(g);
  std::optional<Weight> best;
  for (std::size_t mask = 0; mask + 1 < weight.size(); ++mask) {
    if (in_side(mask, v) == in_side(mask, w)) continue;
    const auto size = static_cast<std::size_t>(std::popcount(mask)) + 1;
    if (size < 2 || size + 2 > g.n()) continue;
    if (!best || weight[mask] < *best) best = weight[mask];
  }
  return best;
}

std::vector<std::vector<Weight>> brute_all_pairs_lambda(const Multigraph& g, std::size_t limit) {
  check_size(g, limit);
  const auto n = g.n();
  constexpr Weight kInf = std::numeric_limits<Weight>::max();
  std::vector<std::vector<Weight>> lambda(n, std::vector<Weight>(n, kInf));
  for (VertexId v = 0; v < n; ++v) lambda[v][v] = 0;
  if (n < 2) return lambda;
  const auto weight = side_weights(g);
  std::vector<VertexId> inside, outside;
  for (std::size_t mask = 0; mask + 1 < weight.size(); ++mask) {
    inside.clear();
    outside.clear();
    for (VertexId v = 0; v < n; ++v) (in_side(mask, v) ? inside : outside).push_back(v);
    for (auto a : inside) {
      for (auto b : outside) {
        auto& cell = lambda[std::min(a, b)][std::max(a, b)];
        cell = std::min(cell, weight[mask]);
      }
    }
  }
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) lambda[b][a] = lambda[a][b];
  }
  return lambda;
}

std::vector<VertexPair> brute_pendant_pairs(const Multigraph& g, std::size_t limit) {
  const auto lambda = brute_all_pairs_lambda(g, limit);
  std::vector<VertexPair> out;
  for (VertexId v = 0; v < g.n(); ++v) {
    for (VertexId w = v + 1; w < g.n(); ++w) {
      if (lambda[v][w] == std::min(g.degree(v), g.degree(w))) out.emplace_back(v, w);
    }
  }
  return out;
}

std::vector<VertexSet> brute_kec_components(const Multigraph& g, Weight k, std::size_t limit) {
  if (k < 1) throw InputError("k must be at least 1");
  const auto lambda = brute_all_pairs_lambda(g, limit);
  const auto n = g.n();
  std::vector<VertexId> parent(n);
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w = v + 1; w < n; ++w) {
      if (lambda[v][w] >= k) {
        auto a = find(v), b = find(w);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::vector<VertexSet> classes;
  std::vector<std::int64_t> slot(n, -1);
  for (VertexId v = 0; v < n; ++v) {
    auto root = find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<std::int64_t>(classes.size());
      classes.emplace_back();
    }
    classes[static_cast<std::size_t>(slot[root])].push_back(v);
  }
  return classes;
}

}  // namespace cuttree::oracle
