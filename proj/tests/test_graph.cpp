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

#include <random>
#include <sstream>

#include "corpus.hpp"
#include "cuttree/errors.hpp"
#include "cuttree/generators.hpp"
#include "cuttree/graph.hpp"
#include "cuttree/mgraph_io.hpp"

namespace cuttree {
namespace {

using testing::complete;
using testing::cycle;

TEST(Degree, CompleteGraph) {
  const auto g = complete(4);
  for (VertexId v = 0; v < 4; ++v) EXPECT_EQ(degree(g, v), 3);
}

TEST(Degree, IsolatedVertex) { EXPECT_EQ(degree(Multigraph(3), 1), 0); }

TEST(Degree, SumsMultiplicities) {
  const Multigraph g(3, {{0, 1, 4}, {1, 2, 2}});
  EXPECT_EQ(degree(g, 1), 6);
  EXPECT_EQ(g.edge_units(), 6);
  EXPECT_FALSE(g.is_simple());
}

TEST(Degree, OutOfRange) { EXPECT_THROW(degree(complete(3), 3), InputError); }

TEST(Multigraph, ParallelEntriesAreSummed) {
  const Multigraph g(2, {{0, 1, 1}, {1, 0, 2}});
  EXPECT_EQ(g.multiplicity(0, 1), 3);
  EXPECT_EQ(g.multiplicity(1, 0), 3);
  EXPECT_EQ(g.pair_count(), 1u);
}

TEST(Multigraph, RejectsBadEdges) {
  EXPECT_THROW(Multigraph(2, {{0, 0, 1}}), InputError);
  EXPECT_THROW(Multigraph(2, {{0, 1, 0}}), InputError);
  EXPECT_THROW(Multigraph(2, {{0, 2, 1}}), InputError);
}

TEST(Multigraph, HandshakeAndSymmetry) {
  for (const auto& [name, g] : testing::corpus(10, 60)) {
    Weight sum = 0;
    for (VertexId v = 0; v < g.n(); ++v) {
      sum += g.degree(v);
      for (const auto& nb : g.neighbors(v)) EXPECT_EQ(g.multiplicity(nb.vertex, v), nb.multiplicity);
    }
    EXPECT_EQ(sum, 2 * g.edge_units()) << name;
  }
}

TEST(CutWeight, Examples) {
  EXPECT_EQ(cut_weight(complete(4), VertexSet{0, 1}), 4);
  EXPECT_EQ(cut_weight(gen::disjoint_cliques(2, 2), VertexSet{0, 1, 2}), 0);
  EXPECT_EQ(cut_weight(cycle(6), VertexSet{2, 3, 4}), 2);
}

TEST(CutWeight, RejectsEmptyAndFull) {
  EXPECT_THROW(cut_weight(complete(3), VertexSet{}), InputError);
  EXPECT_THROW(cut_weight(complete(3), VertexSet{0, 1, 2}), InputError);
}

TEST(CrossWeight, Examples) {
  EXPECT_EQ(cross_weight(complete(4), VertexSet{0}, VertexSet{1}), 1);
  EXPECT_EQ(cross_weight(cycle(6), VertexSet{0}, VertexSet{2, 3}), 0);
  EXPECT_EQ(cross_weight(complete(4), VertexSet{0, 1}, VertexSet{2, 3}), 4);
  EXPECT_THROW(cross_weight(complete(4), VertexSet{0, 1}, VertexSet{1, 2}), InputError);
}

TEST(MinDegree, Examples) {
  EXPECT_EQ(min_degree(complete(5)), 4);
  EXPECT_EQ(min_degree(gen::clique_cycle(3, 3)), 3);
  EXPECT_EQ(min_degree(Multigraph(1)), 0);
}

TEST(ContractPartition, Singletons) {
  const auto g = gen::random_graph(7, 500, 3);
  std::vector<VertexSet> blocks;
  for (VertexId v = 0; v < 7; ++v) blocks.push_back({v});
  const auto r = contract_partition(g, blocks);
  EXPECT_EQ(r.graph, g);
  for (VertexId v = 0; v < 7; ++v) EXPECT_EQ(r.origin[v], VertexSet{v});
}

TEST(ContractPartition, WholeVertexSet) {
  const auto r = contract_partition(complete(5), std::vector<VertexSet>{{0, 1, 2, 3, 4}});
  EXPECT_EQ(r.graph.n(), 1u);
  EXPECT_EQ(r.graph.edge_units(), 0);
}

TEST(ContractPartition, CliqueCycleToTriangle) {
  const auto r = contract_partition(gen::clique_cycle(3, 3),
                                    std::vector<VertexSet>{{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}});
  EXPECT_EQ(r.graph.n(), 3u);
  EXPECT_EQ(r.graph.edge_units(), 3);
  EXPECT_TRUE(r.graph.is_simple());
}

TEST(ContractPartition, RejectsNonPartitions) {
  const auto g = complete(3);
  EXPECT_THROW(contract_partition(g, std::vector<VertexSet>{{0, 1}}), InputError);
  EXPECT_THROW(contract_partition(g, std::vector<VertexSet>{{0, 1}, {1, 2}}), InputError);
}

TEST(ContractLabels, MatchesPartition) {
  const auto g = gen::random_graph(8, 600, 9);
  const std::vector<std::uint32_t> label{0, 1, 0, 2, 1, 2, 0, 1};
  const auto a = contract_labels(g, label, 3);
  const auto b = contract_partition(g, std::vector<VertexSet>{{0, 2, 6}, {1, 4, 7}, {3, 5}});
  EXPECT_EQ(a, b.graph);
}

class CutProperties : public ::testing::TestWithParam<int> {};

TEST_P(CutProperties, ComplementSubmodularityAndContraction) {
  std::mt19937_64 rng(GetParam());
  const std::size_t n = 4 + rng() % 6;
  const auto g = testing::random_multigraph(n, 600, 3, GetParam());
  auto random_side = [&] {
    VertexSet s;
    while (s.empty() || s.size() == n) {
      s.clear();
      for (VertexId v = 0; v < n; ++v) {
        if (rng() & 1) s.push_back(v);
      }
    }
    return s;
  };
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = random_side();
    const auto y = random_side();
    EXPECT_EQ(cut_weight(g, x), cut_weight(g, complement(n, x)));
    const auto meet = set_intersection(x, y);
    const auto join = set_union(x, y);
    if (!meet.empty() && join.size() < n) {
      EXPECT_GE(cut_weight(g, x) + cut_weight(g, y), cut_weight(g, meet) + cut_weight(g, join));
    }
  }
  // contraction preserves the weight of unions of blocks
  std::vector<std::uint32_t> label(n);
  for (auto& l : label) l = static_cast<std::uint32_t>(rng() % 3);
  std::vector<VertexSet> blocks(3);
  for (VertexId v = 0; v < n; ++v) blocks[label[v]].push_back(v);
  std::erase_if(blocks, [](const VertexSet& b) { return b.empty(); });
  if (blocks.size() < 2) return;
  const auto r = contract_partition(g, blocks);
  for (std::uint32_t mask = 1; mask + 1 < (1u << blocks.size()); ++mask) {
    VertexSet image, original;
    for (VertexId p = 0; p < blocks.size(); ++p) {
      if (!(mask >> p & 1)) continue;
      image.push_back(p);
      original = set_union(original, r.origin[p]);
    }
    EXPECT_EQ(cut_weight(r.graph, image), cut_weight(g, original));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, CutProperties, ::testing::Range(0, 40));

TEST(SetHelpers, CrossesAndSplits) {
  EXPECT_TRUE(crosses(4, VertexSet{0, 1}, VertexSet{1, 2}));
  EXPECT_FALSE(crosses(4, VertexSet{0, 1}, VertexSet{0, 1, 2}));
  EXPECT_FALSE(crosses(3, VertexSet{0, 1}, VertexSet{1, 2}));
  EXPECT_TRUE(splits(VertexSet{0, 3}, VertexSet{0, 1}));
  EXPECT_FALSE(splits(VertexSet{0, 1, 3}, VertexSet{0, 1}));
  EXPECT_FALSE(splits(VertexSet{3}, VertexSet{0, 1}));
}

TEST(Mgraph, RoundTrip) {
  for (const auto& [name, g] : testing::corpus(10, 40)) {
    EXPECT_EQ(parse_mgraph(format_mgraph(g)), g) << name;
  }
}

TEST(Mgraph, WriterIsSortedAndOneBased) {
  const Multigraph g(3, {{2, 1, 2}, {0, 1, 1}});
  EXPECT_EQ(format_mgraph(g), "p mgraph 3 2\ne 1 2 1\ne 2 3 2\n");
}

TEST(Mgraph, ReaderAcceptsComments) {
  const auto g = parse_mgraph("c hello\np mgraph 3 1\nc mid\ne 1 3 5\n");
  EXPECT_EQ(g.multiplicity(0, 2), 5);
}

TEST(Mgraph, ReaderRejectsMalformedInput) {
  for (const char* bad : {"e 1 2 1\n", "p mgraph 2 1\ne 1 3 1\n", "p mgraph 2 1\ne 1 1 1\n",
                          "p mgraph 2 1\ne 1 2 0\n", "p mgraph 2 2\ne 1 2 1\ne 2 1 1\n",
                          "p mgraph 2 2\ne 1 2 1\n", "p mgraph 2 1\nx 1 2\n",
                          "p mgraph 2 0\np mgraph 2 0\n", "p graph 2 0\n", ""}) {
    EXPECT_THROW(parse_mgraph(bad), FormatError) << bad;
  }
}

}  // namespace
}  // namespace cuttree
