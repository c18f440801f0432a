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

#include <cstdint>

#include "instcomp/compress/matching.h"
#include "instcomp/compress/matroid_compressor.h"
#include "instcomp/compress/mst.h"
#include "instcomp/compress/shortest_path.h"
#include "instcomp/io/generate.h"
#include "instcomp/util/random.h"
#include "instcomp/verify/oracles.h"
#include "instcomp/verify/verify.h"
#include "test_util.h"

namespace instcomp {
namespace {

using testing::Bipartite;
using testing::E;
using testing::Es;
using testing::Graph;
using testing::Vs;
using testing::Xs;

Matroid U(std::size_t rank, std::size_t n) {
  ElementSet ground;
  for (std::uint32_t i = 0; i < n; ++i) ground.insert(ElementId(i));
  return *Matroid::Uniform(rank, ground);
}

TEST(OracleMstTest, Examples) {
  const WeightedMultigraph tri = Graph({0, 1, 2}, {{1, 0, 1}, {2, 1, 2}, {3, 2, 0}});
  EXPECT_EQ(*OracleMst(tri, {{EdgeId(1), 1}, {EdgeId(2), 5}, {EdgeId(3), 0}}), 1u);
  EXPECT_EQ(*OracleMst(Graph({0, 1}, {{1, 0, 1}}), {{EdgeId(1), 7}}), 7u);
  EXPECT_EQ(*OracleMst(Graph({0, 1}, {{1, 0, 1}, {2, 1, 0}}),
                       {{EdgeId(1), 3}, {EdgeId(2), 9}}),
            3u);
}

TEST(OracleMstTest, RejectsMissingWeightAndDisconnectedGraph) {
  const WeightedMultigraph tri = Graph({0, 1, 2}, {{1, 0, 1}, {2, 1, 2}});
  EXPECT_FALSE(OracleMst(tri, {{EdgeId(1), 1}}).ok());
  EXPECT_FALSE(OracleMst(Graph({0, 1, 2}, {{1, 0, 1}}), {{EdgeId(1), 1}}).ok());
}

TEST(OracleMinBasisTest, Examples) {
  const WeightMap w3 = {{ElementId(0), 1}, {ElementId(1), 2}, {ElementId(2), 3}};
  EXPECT_EQ(*OracleMinBasis(U(2, 3), w3), 3u);
  EXPECT_EQ(*OracleMinBasis(U(0, 3), w3), 0u);
  WeightMap w4 = w3;
  w4[ElementId(3)] = 0;
  EXPECT_EQ(*OracleMinBasis(U(2, 4), w4), 1u);
}

TEST(OracleMaxMatchingTest, Examples) {
  EXPECT_EQ(*OracleMaxMatching(Bipartite(
                {1, 2}, {3, 4}, {{1, 1, 3}, {2, 1, 4}, {3, 2, 3}, {4, 2, 4}})),
            2u);
  EXPECT_EQ(*OracleMaxMatching(Bipartite({1}, {2}, {})), 0u);
  EXPECT_EQ(*OracleMaxMatching(Bipartite(
                {1, 2, 3}, {4, 5, 6},
                {{1, 1, 4}, {2, 2, 4}, {3, 2, 5}, {4, 3, 5}, {5, 3, 6}})),
            3u);
}

TEST(OracleShortestPathTest, Examples) {
  const WeightedMultigraph g = Graph({0, 1, 2}, {{1, 0, 1}, {2, 1, 2}, {3, 0, 2}});
  const EdgeWeights w = {{EdgeId(1), 1}, {EdgeId(2), 1}, {EdgeId(3), 5}};
  EXPECT_EQ(*OracleShortestPath(g, w, VertexId(0), VertexId(2)), 2u);
  EXPECT_EQ(*OracleShortestPath(g, w, VertexId(0), VertexId(0)), 0u);
  EXPECT_EQ(*OracleShortestPath(Graph({0, 1}, {}), {}, VertexId(0), VertexId(1)),
            std::nullopt);
}

TEST(OracleAgreementTest, MstAgainstKruskal) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    SplitMix64 rng(seed);
    const std::size_t n = rng.Between(2, 7);
    const std::size_t m = rng.Between(n - 1, 12);
    auto inst = GenerateMst({n, m, 0, 9}, seed);
    ASSERT_OK(inst.status());
    const EdgeWeights w = inst->graph.EmbeddedWeights();
    auto forest = KruskalMsf(inst->graph, w);
    ASSERT_OK(forest.status());
    EXPECT_EQ(*OracleMst(inst->graph, w), *TotalWeight(*forest, w)) << seed;
  }
}

TEST(OracleAgreementTest, MinBasisAgainstGreedy) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    MatroidParams p;
    p.family = static_cast<MatroidFamily>(seed % 4);
    p.ground = 2 + seed % 8;
    p.f = 0;
    auto inst = GenerateMatroid(p, seed);
    ASSERT_OK(inst.status());
    auto greedy = GreedyMinBasis(inst->matroid, inst->weights);
    ASSERT_OK(greedy.status());
    EXPECT_EQ(*OracleMinBasis(inst->matroid, inst->weights), greedy->weight)
        << seed;
  }
}

TEST(OracleAgreementTest, MatchingAgainstHopcroftKarp) {
  SplitMix64 rng(3);
  for (int round = 0; round < 1000; ++round) {
    const BipartiteGraph g = testing::RandomBipartite(
        rng.Between(0, 6), rng.Between(0, 6), rng.Between(1, 4), 6, rng);
    EXPECT_EQ(*OracleMaxMatching(g), MaxMatching(g).size());
  }
}

TEST(OracleAgreementTest, ShortestPathAgainstDijkstra) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    auto inst = GenerateShortestPath({6, 9, 0, 9}, seed);
    ASSERT_OK(inst.status());
    const EdgeWeights w = inst->graph.EmbeddedWeights();
    auto tree = Dijkstra(inst->graph, w, inst->s);
    ASSERT_OK(tree.status());
    auto oracle = OracleShortestPath(inst->graph, w, inst->s, inst->t);
    ASSERT_OK(oracle.status());
    auto it = tree->distance.find(inst->t);
    const std::optional<Weight> fast =
        it == tree->distance.end() ? std::nullopt
                                   : std::optional<Weight>(it->second);
    EXPECT_EQ(*oracle, fast) << seed;
  }
}

UncertainMstInstance Triangle() {
  return {Graph({0, 1, 2}, {{1, 0, 1, 1}, {2, 2, 0, 5}, {3, 1, 2}}), Es({3})};
}

TEST(VerifyTest, TriangleExhaustive) {
  const UncertainMstInstance inst = Triangle();
  auto bundle = CompressMst(inst);
  ASSERT_OK(bundle.status());
  auto report = VerifyMst(inst, *bundle, {});
  ASSERT_OK(report.status());
  EXPECT_EQ(report->total, 8u);
  EXPECT_TRUE(report->passed);
  EXPECT_TRUE(report->mismatches.empty());
  EXPECT_EQ(report->target, VerifyTarget::kMst);
}

TEST(VerifyTest, TamperedOffsetIsCaught) {
  const UncertainMstInstance inst = Triangle();
  auto bundle = CompressMst(inst);
  ASSERT_OK(bundle.status());
  bundle->k += 1;
  auto report = VerifyMst(inst, *bundle, {});
  ASSERT_OK(report.status());
  EXPECT_FALSE(report->passed);
  ASSERT_FALSE(report->mismatches.empty());
  const Mismatch& first = report->mismatches.front();
  ASSERT_TRUE(first.original.has_value());
  ASSERT_TRUE(first.compressed.has_value());
  EXPECT_NE(*first.original, *first.compressed + first.k);
  EXPECT_NE(FormatReport(*report).find("FAIL"), std::string::npos);
}

TEST(VerifyTest, UniformExhaustive) {
  const UncertainMatroidInstance inst{
      U(2, 4), Xs({3}), {{ElementId(0), 1}, {ElementId(1), 2}, {ElementId(2), 3}}};
  auto bundle = CompressMatroid(inst);
  ASSERT_OK(bundle.status());
  VerificationPlan plan;
  plan.weight_max = 5;
  auto report = VerifyMatroid(inst, *bundle, plan);
  ASSERT_OK(report.status());
  EXPECT_EQ(report->total, 6u);
  EXPECT_TRUE(report->passed);
}

TEST(VerifyTest, MatchingExhaustive) {
  const UncertainMatchingInstance inst{
      Bipartite({1, 2}, {3, 4}, {{1, 1, 3}, {2, 1, 4}, {3, 2, 3}}), Vs({2}),
      Vs({4}), {}};
  auto bundle = CompressMatching(inst);
  ASSERT_OK(bundle.status());
  auto report = VerifyMatching(inst, *bundle, {});
  ASSERT_OK(report.status());
  EXPECT_EQ(report->total, 4u);
  EXPECT_TRUE(report->passed);
  bundle->k += 1;
  EXPECT_FALSE(VerifyMatching(inst, *bundle, {})->passed);
}

TEST(VerifyTest, ShortestPathExhaustive) {
  auto inst = GenerateShortestPath({7, 11, 2, 7}, 4);
  ASSERT_OK(inst.status());
  auto bundle = CompressShortestPath(*inst);
  ASSERT_OK(bundle.status());
  auto report = VerifyShortestPath(*inst, *bundle, {});
  ASSERT_OK(report.status());
  EXPECT_EQ(report->total, 64u);
  EXPECT_TRUE(report->passed);
}

TEST(VerifyTest, ExhaustiveBudgetIsEnforced) {
  auto inst = GenerateMst({8, 14, 4, 7}, 2);
  ASSERT_OK(inst.status());
  auto bundle = CompressMst(*inst);
  ASSERT_OK(bundle.status());
  VerificationPlan plan;
  plan.budget = 100;
  EXPECT_EQ(VerifyMst(*inst, *bundle, plan).status().code(),
            absl::StatusCode::kResourceExhausted);
}

TEST(VerifyTest, SampledModeIsDeterministic) {
  auto inst = GenerateMst({8, 14, 4, 7}, 9);
  ASSERT_OK(inst.status());
  auto bundle = CompressMst(*inst);
  ASSERT_OK(bundle.status());
  bundle->k += 1;
  VerificationPlan plan;
  plan.mode = VerifyMode::kSampled;
  plan.samples = 50;
  plan.seed = 77;
  auto a = VerifyMst(*inst, *bundle, plan);
  auto b = VerifyMst(*inst, *bundle, plan);
  ASSERT_OK(a.status());
  ASSERT_OK(b.status());
  EXPECT_EQ(a->total, 50u);
  EXPECT_EQ(a->seed, 77u);
  EXPECT_EQ(a->mode, VerifyMode::kSampled);
  EXPECT_EQ(a->mismatches, b->mismatches);
}

TEST(VerifyTest, ParallelRunsMatchSerialRuns) {
  auto inst = GenerateMst({8, 14, 4, 7}, 5);
  ASSERT_OK(inst.status());
  auto bundle = CompressMst(*inst);
  ASSERT_OK(bundle.status());
  bundle->k += 1;
  VerificationPlan serial;
  VerificationPlan parallel;
  parallel.jobs = 4;
  auto a = VerifyMst(*inst, *bundle, serial);
  auto b = VerifyMst(*inst, *bundle, parallel);
  ASSERT_OK(a.status());
  ASSERT_OK(b.status());
  EXPECT_EQ(a->total, b->total);
  EXPECT_EQ(a->passed, b->passed);
  EXPECT_EQ(a->mismatches, b->mismatches);
}

TEST(VerifyTest, SampledPassAgreesWithExhaustivePass) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto inst = GenerateMst({7, 12, 3, 7}, seed);
    ASSERT_OK(inst.status());
    auto bundle = CompressMst(*inst);
    ASSERT_OK(bundle.status());
    VerificationPlan sampled;
    sampled.mode = VerifyMode::kSampled;
    sampled.samples = 40;
    sampled.seed = seed;
    EXPECT_TRUE(VerifyMst(*inst, *bundle, {})->passed);
    EXPECT_TRUE(VerifyMst(*inst, *bundle, sampled)->passed);
  }
}

}  // namespace
}  // namespace instcomp
