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

#include "corpus.hpp"
#include "cuttree/errors.hpp"
#include "cuttree/flow.hpp"
#include "cuttree/generators.hpp"
#include "cuttree/kec.hpp"
#include "cuttree/oracle.hpp"
#include "cuttree/pendant_tree.hpp"
#include "cuttree/vertex_connectivity.hpp"

namespace cuttree {
namespace {

TEST(CliqueCycle, Counts) {
  const auto g = gen::clique_cycle(3, 3);
  EXPECT_EQ(g.n(), 12u);
  EXPECT_EQ(g.edge_units(), 21);
  EXPECT_TRUE(g.is_simple());
  EXPECT_EQ(global_edge_connectivity(g), 2);
  EXPECT_EQ(min_degree(gen::clique_cycle(5, 3)), 5);
  const auto tri = gen::clique_cycle(2, 4);
  EXPECT_EQ(tri.n(), 12u);
  EXPECT_EQ(tri.edge_units(), 16);
  EXPECT_THROW(gen::clique_cycle(1, 3), InputError);
  EXPECT_THROW(gen::clique_cycle(3, 2), InputError);
}

TEST(MultiCycleClique, Parameters) {
  const auto twin = gen::multi_cycle_clique(5, 4, 3);
  EXPECT_EQ(twin.n(), 18u);
  EXPECT_EQ(min_degree(twin), 5);
  EXPECT_EQ(global_edge_connectivity(twin), 4);
  EXPECT_TRUE(twin.is_simple());
  EXPECT_EQ(global_edge_connectivity(gen::multi_cycle_clique(13, 4, 5)), 4);
  EXPECT_THROW(gen::multi_cycle_clique(4, 4, 3), InputError);
  EXPECT_THROW(gen::multi_cycle_clique(6, 3, 3), InputError);
  EXPECT_THROW(gen::multi_cycle_clique(6, 4, 2), InputError);
}

TEST(DisjointCliques, Shape) {
  EXPECT_EQ(gen::disjoint_cliques(5, 1), testing::complete(6));
  const auto g = gen::disjoint_cliques(5, 3);
  EXPECT_EQ(g.n(), 18u);
  EXPECT_EQ(kec_components(g, 5).size(), 3u);
  EXPECT_EQ(oracle::brute_pendant_pairs(gen::disjoint_cliques(4, 2)).size(), 20u);
  EXPECT_THROW(gen::disjoint_cliques(4, 0), InputError);
}

TEST(MultiplicityPath, Shape) {
  const auto g = gen::multiplicity_path(2, 5);
  EXPECT_EQ(g.multiplicity(1, 2), 1);
  EXPECT_EQ(g.multiplicity(0, 1), 2);
  EXPECT_EQ(g.multiplicity(3, 4), 2);
  EXPECT_EQ(min_degree(g), 2);
  EXPECT_EQ(oracle::brute_pendant_pairs(gen::multiplicity_path(4, 4)).size(), 2u);
  EXPECT_EQ(oracle::brute_pendant_pairs(gen::multiplicity_path(4, 6)).size(), 2u);
  EXPECT_THROW(gen::multiplicity_path(3, 5), InputError);
  EXPECT_THROW(gen::multiplicity_path(4, 3), InputError);
}

TEST(BoneFamily, Parameters) {
  for (std::size_t len = 1; len <= 4; ++len) {
    const auto g = gen::bone_family(len);
    EXPECT_EQ(g.n(), 10 + len);
    EXPECT_TRUE(g.is_simple());
    EXPECT_EQ(min_degree(g), 4) << len;
    EXPECT_EQ(global_edge_connectivity(g), 3) << len;
    EXPECT_EQ(vertex_connectivity(g), 2) << len;
    EXPECT_EQ(count_pendant_pairs(g).exact, 20) << len;
  }
  EXPECT_EQ(oracle::brute_pendant_pairs(gen::bone_family(1), 11).size(), 20u);
  EXPECT_THROW(gen::bone_family(0), InputError);
}

TEST(RandomGraph, Deterministic) {
  EXPECT_EQ(gen::random_graph(8, 500, 1), gen::random_graph(8, 500, 1));
  EXPECT_NE(gen::random_graph(20, 500, 1), gen::random_graph(20, 500, 2));
  EXPECT_EQ(gen::random_graph(5, 1000, 42), testing::complete(5));
  EXPECT_EQ(gen::random_graph(5, 1000, 42).edge_units(), 10);
  EXPECT_EQ(gen::random_graph(6, 0, 7), Multigraph(6));
  EXPECT_THROW(gen::random_graph(6, 1001, 7), InputError);
}

TEST(RandomGraph, DensityIsRoughlyRight) {
  const auto g = gen::random_graph(200, 300, 5);
  const double pairs = 200.0 * 199 / 2;
  EXPECT_NEAR(static_cast<double>(g.edge_units()) / pairs, 0.3, 0.02);
}

}  // namespace
}  // namespace cuttree
