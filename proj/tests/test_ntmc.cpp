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
#include "cuttree/ntmc_tree.hpp"
#include "cuttree/oracle.hpp"

namespace cuttree {
namespace {

ValidationOptions oracle_mode() {
  ValidationOptions o;
  o.use_oracle = true;
  return o;
}

std::string failures(const ValidationReport& r) {
  std::string s;
  for (const auto& f : r.failures) s += f + "\n";
  return s;
}

bool supported(const Multigraph& g) {
  const Weight lambda = global_edge_connectivity(g);
  return g.is_simple() && lambda != 0 && lambda != 2;
}

bool union_of_blocks(const VertexSet& side, const std::vector<VertexSet>& blocks) {
  for (const auto& b : blocks) {
    if (splits(side, b)) return false;
  }
  return true;
}

TEST(NtmcTree, CompleteGraphIsOneBlock) {
  for (std::size_t n = 1; n <= 9; ++n) {
    if (n == 3) continue;  // K3 has λ = 2
    const auto g = testing::complete(n);
    const auto t = build_ntmc_tree(g);
    EXPECT_EQ(t.block_count(), 1u) << n;
    EXPECT_TRUE(validate_ntmc_tree(g, t, oracle_mode()).ok()) << n;
  }
}

TEST(NtmcTree, RejectsUnsupportedInputs) {
  EXPECT_THROW(build_ntmc_tree(gen::clique_cycle(3, 4)), UnsupportedInput);
  EXPECT_THROW(build_ntmc_tree(testing::cycle(6)), UnsupportedInput);
  EXPECT_THROW(build_ntmc_tree(gen::disjoint_cliques(3, 2)), UnsupportedInput);
  EXPECT_THROW(build_ntmc_tree(gen::multiplicity_path(4, 5)), UnsupportedInput);
  try {
    build_ntmc_tree(testing::cycle(5));
    FAIL();
  } catch (const UnsupportedInput& e) {
    EXPECT_NE(std::string(e.what()).find("cycle"), std::string::npos);
  }
}

TEST(NtmcTree, MultiCycleCliqueTwin) {
  const auto g = gen::multi_cycle_clique(5, 4, 3);
  const auto build = build_ntmc_tree_with_stats(g);
  EXPECT_EQ(build.lambda, 4);
  EXPECT_EQ(build.tree.partition(),
            (std::vector<VertexSet>{{0, 1, 2, 3, 4, 5}, {6, 7, 8, 9, 10, 11}, {12, 13, 14, 15, 16, 17}}));
  for (const auto& e : build.tree.edges()) EXPECT_EQ(e.cut_value, 4);
  const auto report = validate_ntmc_tree(g, build.tree, [] {
    auto o = oracle_mode();
    o.oracle_limit = 18;
    return o;
  }());
  EXPECT_TRUE(report.ok()) << failures(report);
}

TEST(NtmcTree, MultiCycleCliqueFull) {
  const auto g = gen::multi_cycle_clique(13, 4, 5);
  const auto t = build_ntmc_tree(g);
  ASSERT_EQ(t.block_count(), 5u);
  for (const auto& b : t.partition()) EXPECT_EQ(b.size(), 14u);
  for (const auto& e : t.edges()) EXPECT_EQ(e.cut_value, 4);
  const auto report = validate_ntmc_tree(g, t);
  EXPECT_TRUE(report.ok()) << failures(report);
}

TEST(NtmcTree, OracleCorpusPassesValidation) {
  std::size_t checked = 0;
  for (const auto& [name, g] : testing::corpus(10)) {
    if (!supported(g)) continue;
    const auto t = build_ntmc_tree(g);
    const auto report = validate_ntmc_tree(g, t, oracle_mode());
    EXPECT_TRUE(report.ok()) << name << "\n" << failures(report);
    ++checked;
  }
  EXPECT_GT(checked, 50u);
}

TEST(NtmcTree, BlocksAreNeverSplitByNontrivialMinCuts) {
  for (const auto& [name, g] : testing::corpus(9)) {
    if (!supported(g)) continue;
    const auto blocks = build_ntmc_tree(g).partition();
    for (const auto& cut : oracle::enumerate_cuts(g).nontrivial_min_cuts) {
      EXPECT_TRUE(union_of_blocks(cut.side, blocks)) << name;
    }
  }
}

TEST(NtmcTree, SparseRandomGraphs) {
  // Sparse graphs with pendant-like structure exercise every split case.
  std::size_t built = 0;
  for (std::uint64_t seed = 0; seed < 400 && built < 150; ++seed) {
    const auto g = gen::random_graph(6 + seed % 5, 450 + 50 * (seed % 4), 7000 + seed);
    if (!supported(g)) continue;
    ++built;
    const auto t = build_ntmc_tree(g);
    const auto report = validate_ntmc_tree(g, t, oracle_mode());
    EXPECT_TRUE(report.ok()) << seed << "\n" << failures(report);
  }
}

TEST(NtmcTree, GluedCliquesProduceNontrivialTree) {
  // K5 - K5 - K5 chained by 3 disjoint edges each: λ = 3.
  std::vector<EdgeSpec> e;
  for (VertexId c = 0; c < 3; ++c) {
    for (VertexId i = 0; i < 5; ++i) {
      for (VertexId j = i + 1; j < 5; ++j) e.push_back({5 * c + i, 5 * c + j, 1});
    }
  }
  for (VertexId c = 0; c < 2; ++c) {
    for (VertexId i = 0; i < 3; ++i) e.push_back({5 * c + i, 5 * (c + 1) + 2 + i, 1});
  }
  const Multigraph g(15, e);
  const auto build = build_ntmc_tree_with_stats(g);
  EXPECT_EQ(build.lambda, 3);
  EXPECT_EQ(build.tree.block_count(), 3u);
  auto o = oracle_mode();
  o.oracle_limit = 15;
  const auto report = validate_ntmc_tree(g, build.tree, o);
  EXPECT_TRUE(report.ok()) << failures(report);
  EXPECT_EQ(count_nontrivial_mincuts(g), 2u);
}

TEST(ValidateNtmc, RejectsSingletonLeaf) {
  const auto g = testing::complete(5);
  const auto t = BlockTree::from_parts(g, {{0}, {1, 2, 3, 4}}, {{0, 1}});
  EXPECT_FALSE(validate_ntmc_tree(g, t, oracle_mode()).ok());
  EXPECT_FALSE(validate_ntmc_tree(g, t).ok());
}

TEST(ValidateNtmc, RejectsNonMinimumSide) {
  const auto g = testing::complete(6);
  const auto t = BlockTree::from_parts(g, {{0, 1, 2}, {3, 4, 5}}, {{0, 1}});
  EXPECT_FALSE(validate_ntmc_tree(g, t, oracle_mode()).ok());
}

TEST(ValidateNtmc, RejectsCoarseTree) {
  const auto g = gen::multi_cycle_clique(5, 4, 3);
  auto o = oracle_mode();
  o.oracle_limit = 18;
  EXPECT_FALSE(validate_ntmc_tree(g, BlockTree(g.n()), o).ok());
  EXPECT_FALSE(validate_ntmc_tree(g, BlockTree(g.n())).ok());
}

TEST(NtmcCount, Examples) {
  const std::uint64_t expect[] = {3, 6, 10, 15};
  for (std::size_t k = 3; k <= 6; ++k) {
    EXPECT_EQ(count_nontrivial_mincuts(gen::clique_cycle(3, k)), expect[k - 3]) << k;
  }
  for (std::size_t n = 4; n <= 8; ++n) {
    EXPECT_EQ(count_nontrivial_mincuts(Multigraph(n)), (std::uint64_t{1} << (n - 1)) - 1 - n) << n;
  }
  EXPECT_EQ(count_nontrivial_mincuts(testing::complete(4)), 0u);
}

TEST(NtmcCount, MatchesOracleOnCorpus) {
  std::size_t contracted = 0;
  for (const auto& [name, g] : testing::corpus(10)) {
    const auto want = oracle::enumerate_cuts(g).nontrivial_min_cuts.size();
    EXPECT_EQ(count_nontrivial_mincuts(g), want) << name;
    // Contraction routes when the graph itself is over the limit.
    if (g.n() > 4) {
      try {
        EXPECT_EQ(count_nontrivial_mincuts(g, 4), want) << name;
        ++contracted;
      } catch (const SizeRefusal&) {
      }
    }
  }
  EXPECT_GT(contracted, 20u);
}

TEST(NtmcCount, LargeGraphsUseContraction) {
  EXPECT_EQ(count_nontrivial_mincuts(gen::clique_cycle(5, 8)), 28u);
  EXPECT_EQ(count_nontrivial_mincuts(gen::multi_cycle_clique(13, 4, 5)), 10u);
  EXPECT_THROW(count_nontrivial_mincuts(testing::cycle(25)), SizeRefusal);
}

}  // namespace
}  // namespace cuttree
