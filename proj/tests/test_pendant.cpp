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

TEST(IsPendant, Examples) {
  const auto k5 = testing::complete(5);
  EXPECT_TRUE(is_pendant(k5, 0, 3));
  const auto two = gen::disjoint_cliques(4, 2);
  EXPECT_FALSE(is_pendant(two, 0, 7));
  const auto mp = gen::multiplicity_path(4, 6);
  EXPECT_TRUE(is_pendant(mp, 0, 1));
  EXPECT_TRUE(is_pendant(mp, 4, 5));
  EXPECT_FALSE(is_pendant(mp, 1, 2));
  EXPECT_THROW(is_pendant(k5, 2, 2), InputError);
  EXPECT_THROW(is_pendant(k5, 0, 5), InputError);
}

TEST(IsPendant, MatchesOracle) {
  for (const auto& [name, g] : testing::corpus(8, 80)) {
    const auto lam = oracle::brute_all_pairs_lambda(g);
    for (VertexId v = 0; v < g.n(); ++v) {
      for (VertexId w = v + 1; w < g.n(); ++w) {
        EXPECT_EQ(is_pendant(g, v, w), lam[v][w] == std::min(g.degree(v), g.degree(w)))
            << name << " " << v << "," << w;
      }
    }
  }
}

TEST(PendantTree, CompleteGraphIsOneBlock) {
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto g = testing::complete(n);
    const auto t = build_pendant_tree(g);
    EXPECT_EQ(t.block_count(), 1u);
    EXPECT_TRUE(validate_pendant_tree(g, t, oracle_mode()).ok());
  }
}

TEST(PendantTree, TwoDisjointCliques) {
  const auto g = gen::disjoint_cliques(4, 2);
  const auto t = build_pendant_tree(g);
  EXPECT_EQ(t.partition(), (std::vector<VertexSet>{{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}}));
  ASSERT_EQ(t.edges().size(), 1u);
  EXPECT_EQ(t.edges().front().cut_value, 0);
}

TEST(PendantTree, CliqueCycleBlocksAreTheCliques) {
  for (auto [delta, k] : {std::pair<std::size_t, std::size_t>{3, 3}, {5, 4}, {6, 7}}) {
    const auto g = gen::clique_cycle(delta, k);
    const auto t = build_pendant_tree(g);
    std::vector<VertexSet> want;
    for (std::size_t c = 0; c < k; ++c) {
      VertexSet s;
      for (std::size_t i = 0; i <= delta; ++i) s.push_back(static_cast<VertexId>(c * (delta + 1) + i));
      want.push_back(s);
    }
    EXPECT_EQ(t.partition(), want) << delta << "," << k;
    for (const auto& e : t.edges()) EXPECT_EQ(e.cut_value, 2);
    const auto report = validate_pendant_tree(g, t, g.n() <= 10 ? oracle_mode() : ValidationOptions{});
    EXPECT_TRUE(report.ok()) << failures(report);
  }
}

TEST(PendantTree, OracleCorpusPassesValidation) {
  for (const auto& [name, g] : testing::corpus(10)) {
    const auto build = build_pendant_tree_with_stats(g);
    const auto report = validate_pendant_tree(g, build.tree, oracle_mode());
    EXPECT_TRUE(report.ok()) << name << "\n" << failures(report);
    EXPECT_GT(report.checks, 0u);
    EXPECT_LE(build.stats.flow_calls, 3 * g.n()) << name;
  }
}

TEST(PendantTree, MultigraphsPassValidation) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const auto g = testing::random_multigraph(4 + seed % 6, 600, 4, seed);
    const auto t = build_pendant_tree(g);
    const auto report = validate_pendant_tree(g, t, oracle_mode());
    EXPECT_TRUE(report.ok()) << seed << "\n" << failures(report);
    const auto flow_report = validate_pendant_tree(g, t);
    EXPECT_TRUE(flow_report.ok()) << seed << "\n" << failures(flow_report);
  }
}

TEST(PendantTree, FlowModeAgreesOnLargerGraphs) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = gen::random_graph(30 + seed, 150, seed);
    const auto t = build_pendant_tree(g);
    const auto report = validate_pendant_tree(g, t);
    EXPECT_TRUE(report.ok()) << seed << "\n" << failures(report);
  }
}

TEST(PendantTree, Deterministic) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = gen::random_graph(12, 400, seed);
    const auto a = build_pendant_tree(g);
    const auto b = build_pendant_tree(g);
    EXPECT_EQ(a.partition(), b.partition());
    const auto ea = a.edges();
    const auto eb = b.edges();
    ASSERT_EQ(ea.size(), eb.size());
    for (std::size_t i = 0; i < ea.size(); ++i) {
      const auto& x = ea[i];
      const auto& y = eb[i];
      EXPECT_EQ(a.block(x.a), b.block(y.a));
      EXPECT_EQ(a.block(x.b), b.block(y.b));
    }
  }
}

TEST(PendantTree, RefinesDeltaComponents) {
  for (const auto& [name, g] : testing::corpus(10, 100)) {
    const Weight delta = min_degree(g);
    if (delta == 0) continue;
    const auto t = build_pendant_tree(g);
    EXPECT_EQ(testing::merge_heavy_edges(t, delta), kec_components(g, delta)) << name;
  }
}

TEST(ValidatePendant, DetectsNonPendantBlock) {
  const auto g = gen::disjoint_cliques(4, 2);
  const BlockTree one(g.n());
  const auto report = validate_pendant_tree(g, one, oracle_mode());
  EXPECT_FALSE(report.ok());
  const auto flow_report = validate_pendant_tree(g, one);
  EXPECT_FALSE(flow_report.ok());
}

TEST(ValidatePendant, DetectsPendantNeighbors) {
  const auto g = testing::complete(6);
  const auto t = BlockTree::from_parts(g, {{0, 1, 2}, {3, 4, 5}}, {{0, 1}}, {RepPair{0, 3}});
  EXPECT_FALSE(validate_pendant_tree(g, t, oracle_mode()).ok());
  EXPECT_FALSE(validate_pendant_tree(g, t).ok());
}

TEST(ValidatePendant, DetectsWrongRepresentatives) {
  const auto g = gen::disjoint_cliques(4, 2);
  const auto good = build_pendant_tree(g);
  ASSERT_TRUE(validate_pendant_tree(g, good).ok());
  const auto missing = BlockTree::from_parts(g, good.partition(), {{0, 1}});
  EXPECT_FALSE(validate_pendant_tree(g, missing).ok());
  // any correctly placed pair with the right connectivity is accepted
  const auto inside = BlockTree::from_parts(g, good.partition(), {{0, 1}}, {RepPair{0, 9}});
  EXPECT_TRUE(validate_pendant_tree(g, inside).ok());
  EXPECT_THROW(BlockTree::from_parts(g, good.partition(), {{0, 1}}, {RepPair{5, 0}}), InputError);
}

TEST(ValidatePendant, CompleteGraphPassesVacuously) {
  const auto g = testing::complete(7);
  const auto report = validate_pendant_tree(g, BlockTree(7), oracle_mode());
  EXPECT_TRUE(report.ok());
}

TEST(PendantCount, Examples) {
  EXPECT_EQ(count_pendant_pairs(gen::disjoint_cliques(4, 2)).exact, 20);
  EXPECT_EQ(count_pendant_pairs(gen::disjoint_cliques(4, 2)).lower_bound, 20);
  EXPECT_EQ(count_pendant_pairs(testing::complete(6)).exact, 15);
  EXPECT_EQ(count_pendant_pairs(gen::disjoint_cliques(5, 3)).exact, 45);
  for (std::size_t len = 1; len <= 6; ++len) {
    EXPECT_EQ(count_pendant_pairs(gen::bone_family(len)).exact, 20) << len;
  }
  for (std::size_t n = 4; n <= 6; ++n) {
    EXPECT_EQ(count_pendant_pairs(gen::multiplicity_path(4, n)).exact, 2) << n;
  }
}

TEST(PendantCount, ExactMatchesOracleAndBoundsIt) {
  for (const auto& [name, g] : testing::corpus(10, 150)) {
    const auto count = count_pendant_pairs(g);
    EXPECT_EQ(count.exact, static_cast<Weight>(oracle::brute_pendant_pairs(g).size())) << name;
    EXPECT_LE(count.lower_bound, count.exact) << name;
    const auto t = build_pendant_tree(g);
    EXPECT_EQ(count_pendant_pairs(g, t).lower_bound, count.lower_bound) << name;
  }
}

TEST(PendantBounds, Examples) {
  const auto cliques = check_pendant_theorems(gen::disjoint_cliques(5, 4));
  EXPECT_TRUE(cliques.applicable());
  EXPECT_TRUE(cliques.block_bound_holds);
  EXPECT_TRUE(cliques.pair_bound_holds);
  EXPECT_EQ(cliques.blocks, 4u);
  EXPECT_EQ(cliques.block_size_histogram.at(6), 4u);

  const auto k8 = check_pendant_theorems(testing::complete(8));
  EXPECT_TRUE(k8.ok());
  EXPECT_EQ(k8.blocks, 1u);
  EXPECT_EQ(k8.pairs.exact, 28);

  const auto bone = check_pendant_theorems(gen::bone_family(2));
  EXPECT_FALSE(bone.applicable());
  EXPECT_TRUE(bone.ok());
  EXPECT_EQ(bone.hypothesis.delta, 4);
  EXPECT_EQ(bone.hypothesis.lambda, 3);
  EXPECT_EQ(bone.hypothesis.kappa, 2);

  const auto multi = check_pendant_theorems(gen::multiplicity_path(6, 8));
  EXPECT_FALSE(multi.hypothesis.simple);
  EXPECT_FALSE(multi.applicable());
}

TEST(PendantBounds, HoldOnCorpus) {
  for (const auto& [name, g] : testing::corpus(10)) {
    const auto r = check_pendant_theorems(g);
    EXPECT_TRUE(r.ok()) << name;
  }
}

}  // namespace
}  // namespace cuttree
