// Copyright 2026 The Authors.
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

#include <algorithm>
#include <vector>

#include "instcomp/compress/mst.h"
#include "instcomp/io/generate.h"
#include "instcomp/verify/oracles.h"
#include "instcomp/verify/structure.h"
#include "test_util.h"

namespace instcomp {
namespace {

using testing::E;
using testing::Es;
using testing::Graph;
using testing::Vs;

// a=0, b=1, c=2; e1 = ab (1), e2 = ca (5), e3 = bc uncertain.
UncertainMstInstance Triangle() {
  return {Graph({0, 1, 2}, {{1, 0, 1, 1}, {2, 2, 0, 5}, {3, 1, 2}}), Es({3})};
}

// Every assignment of 0..wmax to the uncertain edges, in a fixed order.
std::vector<EdgeWeights> Grid(const EdgeSet& f, Weight wmax) {
  std::vector<EdgeWeights> out(1);
  for (EdgeId e : f) {
    std::vector<EdgeWeights> next;
    for (const EdgeWeights& partial : out) {
      for (Weight w = 0; w <= wmax; ++w) {
        EdgeWeights grown = partial;
        grown[e] = w;
        next.push_back(grown);
      }
    }
    out = std::move(next);
  }
  return out;
}

EdgeWeights Instantiate(const UncertainMstInstance& inst, const EdgeWeights& wf) {
  EdgeWeights w = inst.graph.EmbeddedWeights();
  w.insert(wf.begin(), wf.end());
  return w;
}

TEST(CompressMstTest, TriangleExample) {
  auto bundle = CompressMst(Triangle(), true);
  ASSERT_OK(bundle.status());
  EXPECT_EQ(bundle->k, 1u);
  EXPECT_EQ(bundle->graph.num_vertices(), 2u);
  EXPECT_EQ(bundle->uncertain, Es({3}));
  ASSERT_EQ(bundle->graph.num_edges(), 2u);
  ASSERT_TRUE(bundle->graph.HasEdge(EdgeId(2)));
  EXPECT_EQ(bundle->graph.FindEdge(EdgeId(2))->weight, 5u);
  const EdgeRecord* e2 = bundle->graph.FindEdge(EdgeId(2));
  const EdgeRecord* e3 = bundle->graph.FindEdge(EdgeId(3));
  EXPECT_EQ(std::minmax(e2->u, e2->v), std::minmax(e3->u, e3->v));

  ASSERT_TRUE(bundle->trace.has_value());
  EXPECT_EQ(bundle->trace->forest, Es({1, 2}));
  EXPECT_EQ(bundle->trace->kept, Es({1, 2, 3}));
  EXPECT_EQ(bundle->trace->zero_tree, Es({1, 3}));
  EXPECT_EQ(bundle->trace->contracted, std::vector<EdgeId>{EdgeId(1)});

  // Original optimum by enumeration: 4 for w(e3) = 3 and 6 for w(e3) = 10.
  const UncertainMstInstance tri = Triangle();
  EXPECT_EQ(*OracleMst(tri.graph, Instantiate(tri, {{EdgeId(3), 3}})), 4u);
  EXPECT_EQ(*OracleMst(tri.graph, Instantiate(tri, {{EdgeId(3), 10}})), 6u);
  EXPECT_EQ(*SolveMst(*bundle, {{EdgeId(3), 3}}), 4u);
  EXPECT_EQ(*SolveMst(*bundle, {{EdgeId(3), 10}}), 6u);
}

TEST(CompressMstTest, NoUncertaintyFoldsEverythingIntoK) {
  UncertainMstInstance inst{
      Graph({0, 1, 2, 3}, {{0, 0, 1, 4}, {1, 1, 2, 2}, {2, 2, 3, 7}, {3, 3, 0, 1}}),
      {}};
  auto bundle = CompressMst(inst);
  ASSERT_OK(bundle.status());
  EXPECT_EQ(bundle->graph.num_vertices(), 1u);
  EXPECT_EQ(bundle->graph.num_edges(), 0u);
  EXPECT_EQ(bundle->k, *OracleMst(inst.graph, inst.graph.EmbeddedWeights()));
  EXPECT_EQ(bundle->k, 7u);
  EXPECT_EQ(*SolveMst(*bundle, {}), bundle->k);
}

TEST(CompressMstTest, AllUncertainKeepsTheGraph) {
  UncertainMstInstance inst{Graph({0, 1, 2}, {{0, 0, 1}, {1, 1, 2}, {2, 2, 0}}),
                            Es({0, 1, 2})};
  auto bundle = CompressMst(inst);
  ASSERT_OK(bundle.status());
  EXPECT_EQ(bundle->graph, inst.graph);
  EXPECT_EQ(bundle->k, 0u);
}

TEST(CompressMstTest, ZeroWeightCertainEdgeDoesNotSwallowUncertainEdge) {
  // Certain 0-1 at weight 0 parallel to uncertain 0-1: the uncertain edge must
  // survive as an edge of the bundle.
  UncertainMstInstance inst{Graph({0, 1, 2}, {{0, 0, 1, 0}, {1, 0, 1}, {2, 1, 2, 3}}),
                            Es({1})};
  auto bundle = CompressMst(inst);
  ASSERT_OK(bundle.status());
  EXPECT_TRUE(bundle->graph.HasEdge(EdgeId(1)));
  for (const EdgeWeights& wf : Grid(inst.uncertain, 7)) {
    EXPECT_EQ(*SolveMst(*bundle, wf), *OracleMst(inst.graph, Instantiate(inst, wf)));
  }
}

TEST(CompressMstTest, RejectsMalformedInstances) {
  EXPECT_FALSE(CompressMst({Graph({0, 1}, {{0, 0, 1, 3}}), Es({0})}).ok());
  EXPECT_FALSE(CompressMst({Graph({0, 1}, {{0, 0, 1}}), {}}).ok());
  EXPECT_FALSE(CompressMst({Graph({0, 1, 2}, {{0, 0, 1, 3}}), {}}).ok());
  EXPECT_FALSE(CompressMst({Graph({0, 1}, {{0, 0, 1, 3}}), Es({4})}).ok());
}

TEST(CompressMstTest, OverflowIsReported) {
  const Weight half = Weight{1} << 63;
  UncertainMstInstance inst{Graph({0, 1, 2}, {{0, 0, 1, half}, {1, 1, 2, half}}), {}};
  EXPECT_EQ(CompressMst(inst).status().code(), absl::StatusCode::kOutOfRange);
}

TEST(SolveMstTest, RejectsWrongAssignments) {
  auto bundle = CompressMst(Triangle());
  ASSERT_OK(bundle.status());
  EXPECT_FALSE(SolveMst(*bundle, {}).ok());
  EXPECT_FALSE(SolveMst(*bundle, {{EdgeId(3), 1}, {EdgeId(2), 1}}).ok());
}

class MstPropertyTest : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(MstPropertyTest, EquivalentAndSmall) {
  SplitMix64 rng(GetParam());
  GraphParams p;
  p.n = rng.Between(1, 7);
  p.m = rng.Between(p.n - 1, std::max<std::size_t>(p.n - 1, 11));
  if (p.n < 2) p.m = 0;
  p.f = rng.Between(0, std::min<std::size_t>(3, p.m));
  auto inst = GenerateMst(p, GetParam());
  ASSERT_OK(inst.status());
  auto bundle = CompressMst(*inst, true);
  ASSERT_OK(bundle.status());
  EXPECT_LE(bundle->graph.num_edges() - bundle->uncertain.size(),
            bundle->uncertain.size());
  EXPECT_EQ(bundle->uncertain, inst->uncertain);
  for (const EdgeWeights& wf : Grid(inst->uncertain, 7)) {
    auto expected = OracleMst(inst->graph, Instantiate(*inst, wf));
    ASSERT_OK(expected.status());
    EXPECT_EQ(*SolveMst(*bundle, wf), *expected);
  }
}

TEST_P(MstPropertyTest, CompressingABundleChangesNothing) {
  GraphParams p{7, 12, 3, 7};
  auto inst = GenerateMst(p, GetParam());
  ASSERT_OK(inst.status());
  auto bundle = CompressMst(*inst);
  ASSERT_OK(bundle.status());
  auto again = CompressMst({bundle->graph, bundle->uncertain});
  ASSERT_OK(again.status());
  EXPECT_EQ(again->graph, bundle->graph);
  EXPECT_EQ(again->k, 0u);
}

TEST_P(MstPropertyTest, TraceContainsAnOptimumAndForcedEdges) {
  GraphParams p{6, 10, 3, 7};
  auto inst = GenerateMst(p, GetParam());
  ASSERT_OK(inst.status());
  auto bundle = CompressMst(*inst, true);
  ASSERT_OK(bundle.status());
  const MstTrace& t = *bundle->trace;
  const WeightedMultigraph g1 = inst->graph.WithEdges(t.kept);
  EdgeSet forced;
  std::set_difference(t.zero_tree.begin(), t.zero_tree.end(),
                      inst->uncertain.begin(), inst->uncertain.end(),
                      std::inserter(forced, forced.end()));
  for (const EdgeWeights& wf : Grid(inst->uncertain, 7)) {
    const EdgeWeights w = Instantiate(*inst, wf);
    auto all = AllMinimumSpanningTrees(inst->graph, w);
    ASSERT_OK(all.status());
    EXPECT_TRUE(std::any_of(all->begin(), all->end(), [&](const EdgeSet& tree) {
      return std::includes(t.kept.begin(), t.kept.end(), tree.begin(), tree.end());
    }));
    auto inner = AllMinimumSpanningTrees(g1, w);
    ASSERT_OK(inner.status());
    EXPECT_TRUE(std::any_of(inner->begin(), inner->end(), [&](const EdgeSet& tree) {
      return std::includes(tree.begin(), tree.end(), forced.begin(), forced.end());
    }));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, MstPropertyTest, ::testing::Range<std::uint64_t>(0, 40));

}  // namespace
}  // namespace instcomp
