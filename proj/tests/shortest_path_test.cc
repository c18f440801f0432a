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
#include <optional>
#include <vector>

#include "instcomp/compress/shortest_path.h"
#include "instcomp/io/generate.h"
#include "instcomp/verify/oracles.h"
#include "test_util.h"

namespace instcomp {
namespace {

using testing::E;
using testing::Es;
using testing::Graph;
using testing::Vs;

TEST(CompressShortestPathTest, NoUncertaintyGivesOneEdge) {
  // s=0, t=3; 0-1 (2), 1-3 (2), 0-2 (1), 2-3 (4).
  ShortestPathInstance inst{
      Graph({0, 1, 2, 3}, {{0, 0, 1, 2}, {1, 1, 3, 2}, {2, 0, 2, 1}, {3, 2, 3, 4}}),
      {}, VertexId(0), VertexId(3)};
  auto bundle = CompressShortestPath(inst);
  ASSERT_OK(bundle.status());
  EXPECT_EQ(bundle->graph.vertices(), Vs({0, 3}));
  ASSERT_EQ(bundle->graph.num_edges(), 1u);
  EXPECT_EQ(bundle->graph.edges().begin()->second.weight, 4u);
  EXPECT_EQ(bundle->k, 0u);
  EXPECT_EQ(*SolveShortestPath(*bundle, {}), std::optional<Weight>(4));
}

TEST(CompressShortestPathTest, PathLabelsInterior) {
  // s=0, a=1, t=2.
  ShortestPathInstance inst{Graph({0, 1, 2}, {{0, 0, 1, 1}, {1, 1, 2, 1}}), {},
                            VertexId(0), VertexId(2)};
  auto bundle = CompressShortestPath(inst);
  ASSERT_OK(bundle.status());
  ASSERT_EQ(bundle->graph.num_edges(), 1u);
  const auto& [id, rec] = *bundle->graph.edges().begin();
  EXPECT_EQ(rec.weight, 2u);
  EXPECT_EQ(bundle->labels.at(id), std::vector<VertexId>{VertexId(1)});
}

TEST(CompressShortestPathTest, UncertainShortcut) {
  ShortestPathInstance inst{
      Graph({0, 1, 2}, {{0, 0, 1, 1}, {1, 1, 2, 1}, {2, 0, 2}}), Es({2}),
      VertexId(0), VertexId(2)};
  auto bundle = CompressShortestPath(inst);
  ASSERT_OK(bundle.status());
  EXPECT_EQ(bundle->graph.num_vertices(), 2u);
  EXPECT_EQ(bundle->graph.num_edges(), 2u);
  EXPECT_TRUE(bundle->graph.HasEdge(EdgeId(2)));
  for (Weight w : {Weight{1}, Weight{5}}) {
    auto oracle = OracleShortestPath(inst.graph,
                                     {{EdgeId(0), 1}, {EdgeId(1), 1}, {EdgeId(2), w}},
                                     inst.s, inst.t);
    ASSERT_OK(oracle.status());
    EXPECT_EQ(*SolveShortestPath(*bundle, {{EdgeId(2), w}}), *oracle);
  }
  EXPECT_EQ(*SolveShortestPath(*bundle, {{EdgeId(2), 1}}), std::optional<Weight>(1));
  EXPECT_EQ(*SolveShortestPath(*bundle, {{EdgeId(2), 5}}), std::optional<Weight>(2));
}

TEST(CompressShortestPathTest, UnreachableTarget) {
  ShortestPathInstance inst{Graph({0, 1, 2}, {{0, 0, 1, 1}}), {}, VertexId(0),
                            VertexId(2)};
  auto bundle = CompressShortestPath(inst);
  ASSERT_OK(bundle.status());
  EXPECT_EQ(*SolveShortestPath(*bundle, {}), std::nullopt);
}

TEST(CompressShortestPathTest, ZeroWeightsKeepParentsAcyclic) {
  ShortestPathInstance inst{
      Graph({0, 1, 2, 3}, {{0, 0, 1, 0}, {1, 1, 2, 0}, {2, 2, 0, 0}, {3, 2, 3, 0}}),
      {}, VertexId(0), VertexId(3)};
  auto bundle = CompressShortestPath(inst);
  ASSERT_OK(bundle.status());
  EXPECT_EQ(*SolveShortestPath(*bundle, {}), std::optional<Weight>(0));
}

class ShortestPathPropertyTest : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(ShortestPathPropertyTest, SmallAndEquivalent) {
  SplitMix64 rng(GetParam());
  GraphParams p;
  p.n = rng.Between(2, 8);
  p.m = rng.Between(p.n - 1, 14);
  p.f = rng.Between(0, std::min<std::size_t>(3, p.m));
  auto inst = GenerateShortestPath(p, GetParam());
  ASSERT_OK(inst.status());
  auto bundle = CompressShortestPath(*inst);
  ASSERT_OK(bundle.status());
  EXPECT_LE(bundle->graph.num_vertices(), 2 + 2 * inst->uncertain.size());

  // Every label spells out a path of matching weight in the certain graph.
  const EdgeWeights certain = inst->graph.EmbeddedWeights();
  auto walk_weight = [&](const std::vector<VertexId>& walk) -> std::optional<Weight> {
    Weight total = 0;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
      std::optional<Weight> hop;
      for (const auto& [eid, e] : inst->graph.edges()) {
        if (inst->uncertain.contains(eid)) continue;
        if (std::minmax(e.u, e.v) == std::minmax(walk[i], walk[i + 1])) {
          hop = std::min(hop.value_or(UINT64_MAX), *e.weight);
        }
      }
      if (!hop.has_value()) return std::nullopt;
      total += *hop;
    }
    return total;
  };
  for (const auto& [id, interior] : bundle->labels) {
    const EdgeRecord& rec = bundle->graph.edges().at(id);
    std::vector<VertexId> forward = {rec.u};
    forward.insert(forward.end(), interior.begin(), interior.end());
    forward.push_back(rec.v);
    std::vector<VertexId> backward = {rec.u};
    backward.insert(backward.end(), interior.rbegin(), interior.rend());
    backward.push_back(rec.v);
    std::optional<Weight> total = walk_weight(forward);
    if (!total.has_value()) total = walk_weight(backward);
    ASSERT_TRUE(total.has_value()) << "label of edge " << id << " is not a path";
    EXPECT_EQ(*total, *rec.weight);
  }

  std::vector<EdgeWeights> grid(1);
  for (EdgeId e : inst->uncertain) {
    std::vector<EdgeWeights> next;
    for (const EdgeWeights& partial : grid) {
      for (Weight w = 0; w <= 7; ++w) {
        EdgeWeights grown = partial;
        grown[e] = w;
        next.push_back(grown);
      }
    }
    grid = std::move(next);
  }
  for (const EdgeWeights& wf : grid) {
    EdgeWeights all = certain;
    all.insert(wf.begin(), wf.end());
    auto expected = OracleShortestPath(inst->graph, all, inst->s, inst->t);
    ASSERT_OK(expected.status());
    EXPECT_EQ(*SolveShortestPath(*bundle, wf), *expected);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, ShortestPathPropertyTest,
                         ::testing::Range<std::uint64_t>(0, 40));

}  // namespace
}  // namespace instcomp
