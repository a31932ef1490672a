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

#include <gtest/gtest.h>

#include <set>

#include "corpus.hpp"
#include "cuttree/errors.hpp"
#include "cuttree/generators.hpp"
#include "cuttree/oracle.hpp"

namespace cuttree {
namespace {

using testing::complete;
using testing::cycle;

TEST(EnumerateCuts, Triangle) {
  const auto e = oracle::enumerate_cuts(complete(3));
  EXPECT_EQ(e.all_cuts.size(), 3u);
  EXPECT_EQ(e.min_weight, 2);
  EXPECT_EQ(e.min_cuts.size(), 3u);
  EXPECT_TRUE(e.nontrivial_min_cuts.empty());
}

TEST(EnumerateCuts, FourCycle) {
  const auto e = oracle::enumerate_cuts(cycle(4));
  EXPECT_EQ(e.min_weight, 2);
  EXPECT_EQ(e.nontrivial_min_cuts.size(), 2u);
}

TEST(EnumerateCuts, CliqueCycle) {
  EXPECT_EQ(oracle::enumerate_cuts(gen::clique_cycle(3, 3)).nontrivial_min_cuts.size(), 3u);
}

TEST(EnumerateCuts, CountsAndWeights) {
  for (const auto& [name, g] : testing::corpus(9, 40)) {
    if (g.n() < 2) continue;
    const auto e = oracle::enumerate_cuts(g);
    EXPECT_EQ(e.all_cuts.size(), (std::size_t{1} << (g.n() - 1)) - 1) << name;
    std::set<VertexSet> seen;
    for (const auto& c : e.all_cuts) {
      EXPECT_TRUE(c.contains(0));
      EXPECT_EQ(c.weight, cut_weight(g, c.side));
      EXPECT_GE(c.weight, e.min_weight);
      EXPECT_TRUE(seen.insert(c.side).second);
    }
  }
}

TEST(EnumerateCuts, RefusesLargeGraphsNamingTheLimit) {
  try {
    oracle::enumerate_cuts(complete(21));
    FAIL() << "expected a refusal";
  } catch (const SizeRefusal& e) {
    EXPECT_NE(std::string(e.what()).find("20"), std::string::npos);
  }
  EXPECT_THROW(oracle::enumerate_cuts(complete(8), 7), SizeRefusal);
}

TEST(EnumerateCuts, Deterministic) {
  const auto g = gen::random_graph(9, 500, 17);
  const auto a = oracle::enumerate_cuts(g);
  const auto b = oracle::enumerate_cuts(g);
  EXPECT_EQ(a.nontrivial_min_cuts, b.nontrivial_min_cuts);
}

TEST(BruteLambda, Examples) {
  EXPECT_EQ(oracle::brute_lambda(complete(4), 0, 1), 3);
  EXPECT_EQ(oracle::brute_lambda(gen::disjoint_cliques(2, 2), 0, 3), 0);
  EXPECT_EQ(oracle::brute_lambda(cycle(6), 0, 1), 2);
}

TEST(BrutePendantPairs, Examples) {
  EXPECT_EQ(oracle::brute_pendant_pairs(complete(5)).size(), 10u);
  const auto mp = oracle::brute_pendant_pairs(gen::multiplicity_path(4, 6));
  EXPECT_EQ(mp, (std::vector<oracle::VertexPair>{{0, 1}, {4, 5}}));
  EXPECT_EQ(oracle::brute_pendant_pairs(gen::disjoint_cliques(4, 2)).size(), 20u);
}

TEST(BruteKecComponents, Examples) {
  EXPECT_EQ(oracle::brute_kec_components(complete(5), 4).size(), 1u);
  const auto cc = oracle::brute_kec_components(gen::clique_cycle(3, 3), 3, 12);
  EXPECT_EQ(cc, (std::vector<VertexSet>{{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}}));
  const auto two = oracle::brute_kec_components(gen::disjoint_cliques(2, 2), 1);
  EXPECT_EQ(two, (std::vector<VertexSet>{{0, 1, 2}, {3, 4, 5}}));
}

TEST(OracleProperties, NontrivialMinCutsAreLarge) {
  for (const auto& [name, g] : testing::corpus(10, 150)) {
    if (!g.is_simple() || g.n() < 4) continue;
    const auto e = oracle::enumerate_cuts(g);
    const Weight delta = min_degree(g);
    for (const auto& c : e.nontrivial_min_cuts) {
      EXPECT_GE(static_cast<Weight>(c.side.size()), delta) << name;
      EXPECT_GE(static_cast<Weight>(g.n() - c.side.size()), delta) << name;
    }
  }
}

TEST(OracleProperties, PendantPairsAreDeltaConnected) {
  for (const auto& [name, g] : testing::corpus(10, 150)) {
    const Weight delta = min_degree(g);
    if (delta == 0) continue;
    const auto comps = oracle::brute_kec_components(g, delta);
    std::vector<std::size_t> comp(g.n());
    for (std::size_t i = 0; i < comps.size(); ++i) {
      for (auto v : comps[i]) comp[v] = i;
    }
    for (const auto& [v, w] : oracle::brute_pendant_pairs(g)) {
      EXPECT_EQ(comp[v], comp[w]) << name;
    }
  }
}

TEST(OracleProperties, CutsBelowBound) {
  const auto g = gen::clique_cycle(3, 3);
  const auto below = oracle::cuts_below(g, 3);
  EXPECT_EQ(below.size(), 3u);
  for (const auto& c : below) EXPECT_EQ(c.weight, 2);
}

TEST(OracleProperties, IsolatedVerticesHaveExponentiallyManyCuts) {
  for (std::size_t n = 4; n <= 10; ++n) {
    const auto e = oracle::enumerate_cuts(Multigraph(n));
    EXPECT_EQ(e.nontrivial_min_cuts.size(), (std::size_t{1} << (n - 1)) - 1 - n);
  }
}

}  // namespace
}  // namespace cuttree
