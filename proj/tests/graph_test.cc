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
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "instcomp/graph/bipartite.h"
#include "instcomp/graph/digraph.h"
#include "instcomp/graph/multigraph.h"
#include "test_util.h"

namespace instcomp {
namespace {

using testing::Bipartite;
using testing::E;
using testing::Es;
using testing::Graph;
using testing::Vs;

// ---- contraction ----

TEST(ContractEdgeTest, TriangleLeavesParallelPair) {
  // a=0, b=1, c=2.
  WeightedMultigraph g = Graph({0, 1, 2}, {{1, 0, 1}, {2, 1, 2}, {3, 2, 0}});
  auto c = ContractEdge(g, EdgeId(1));
  ASSERT_OK(c.status());
  EXPECT_EQ(c->vertices(), Vs({0, 2}));
  EXPECT_FALSE(c->HasEdge(EdgeId(1)));
  ASSERT_TRUE(c->HasEdge(EdgeId(2)));
  ASSERT_TRUE(c->HasEdge(EdgeId(3)));
  EXPECT_EQ(c->FindEdge(EdgeId(2))->u, VertexId(0));
  EXPECT_EQ(c->FindEdge(EdgeId(2))->v, VertexId(2));
  EXPECT_EQ(c->FindEdge(EdgeId(3))->Other(VertexId(0)), VertexId(2));
}

TEST(ContractEdgeTest, SingleEdgeLeavesOneVertex) {
  auto c = ContractEdge(Graph({4, 9}, {{1, 9, 4}}), EdgeId(1));
  ASSERT_OK(c.status());
  EXPECT_EQ(c->vertices(), Vs({4}));
  EXPECT_EQ(c->num_edges(), 0u);
}

TEST(ContractEdgeTest, ParallelEdgeBecomesLoopAndIsDropped) {
  auto c = ContractEdge(Graph({0, 1}, {{1, 0, 1}, {2, 0, 1}}), EdgeId(1));
  ASSERT_OK(c.status());
  EXPECT_EQ(c->num_vertices(), 1u);
  EXPECT_EQ(c->num_edges(), 0u);
}

TEST(ContractEdgeTest, UnknownEdgeIsAnError) {
  EXPECT_FALSE(ContractEdge(Graph({0, 1}, {{1, 0, 1}}), EdgeId(7)).ok());
}

TEST(ContractEdgeTest, SurvivingEdgesKeepIdsAndFollowTheMerge) {
  SplitMix64 rng(11);
  for (int round = 0; round < 200; ++round) {
    WeightedMultigraph g;
    const std::uint32_t n = static_cast<std::uint32_t>(rng.Between(2, 7));
    for (std::uint32_t v = 0; v < n; ++v) ASSERT_OK(g.AddVertex(VertexId(v)));
    const std::uint32_t m = static_cast<std::uint32_t>(rng.Between(1, 10));
    for (std::uint32_t e = 0; e < m; ++e) {
      const std::uint32_t u = static_cast<std::uint32_t>(rng.Below(n));
      std::uint32_t v = static_cast<std::uint32_t>(rng.Below(n - 1));
      if (v >= u) ++v;
      ASSERT_OK(g.AddEdge(EdgeId(e), VertexId(u), VertexId(v), rng.Below(5)));
    }
    const EdgeId target(static_cast<std::uint32_t>(rng.Below(m)));
    const EdgeRecord t = *g.FindEdge(target);
    const VertexId keep = std::min(t.u, t.v);
    const VertexId gone = std::max(t.u, t.v);
    auto merged = [&](VertexId x) { return x == gone ? keep : x; };
    auto c = ContractEdge(g, target);
    ASSERT_OK(c.status());
    EXPECT_FALSE(c->HasVertex(gone));
    for (const auto& [id, rec] : g.edges()) {
      const bool loop = merged(rec.u) == merged(rec.v);
      ASSERT_EQ(c->HasEdge(id), !loop);
      if (loop) continue;
      const EdgeRecord* after = c->FindEdge(id);
      EXPECT_EQ(std::minmax(after->u, after->v),
                std::minmax(merged(rec.u), merged(rec.v)));
      EXPECT_EQ(after->weight, rec.weight);
    }
  }
}

TEST(ContractEdgesTest, MatchesOneAtATime) {
  SplitMix64 rng(12);
  for (int round = 0; round < 200; ++round) {
    WeightedMultigraph g;
    const std::uint32_t n = static_cast<std::uint32_t>(rng.Between(2, 8));
    for (std::uint32_t v = 0; v < n; ++v) ASSERT_OK(g.AddVertex(VertexId(v)));
    const std::uint32_t m = static_cast<std::uint32_t>(rng.Between(1, 12));
    for (std::uint32_t e = 0; e < m; ++e) {
      const std::uint32_t u = static_cast<std::uint32_t>(rng.Below(n));
      std::uint32_t v = static_cast<std::uint32_t>(rng.Below(n - 1));
      if (v >= u) ++v;
      ASSERT_OK(g.AddEdge(EdgeId(e), VertexId(u), VertexId(v), rng.Below(5)));
    }
    // A random forest: a random-weight spanning forest thinned at random.
    EdgeWeights w;
    for (const auto& [id, rec] : g.edges()) w[id] = rng.Below(100);
    auto spanning = KruskalMsf(g, w);
    ASSERT_OK(spanning.status());
    EdgeSet forest;
    for (EdgeId e : *spanning) {
      if (rng.Chance(2, 3)) forest.insert(e);
    }
    WeightedMultigraph sequential = g;
    EdgeSet expected_dropped;
    for (EdgeId e : forest) {
      auto next = ContractEdge(sequential, e);
      ASSERT_OK(next.status());
      for (const auto& [id, rec] : sequential.edges()) {
        if (id != e && !next->HasEdge(id)) expected_dropped.insert(id);
      }
      sequential = *std::move(next);
    }
    EdgeSet dropped;
    auto batched = ContractEdges(g, forest, &dropped);
    ASSERT_OK(batched.status());
    EXPECT_EQ(*batched, sequential);
    EXPECT_EQ(dropped, expected_dropped);
  }
}

TEST(ContractEdgesTest, RejectsCyclesAndUnknownEdges) {
  const WeightedMultigraph tri =
      Graph({0, 1, 2}, {{1, 0, 1}, {2, 1, 2}, {3, 2, 0}});
  EXPECT_EQ(ContractEdges(tri, Es({1, 2, 3})).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(ContractEdges(tri, Es({9})).status().code(),
            absl::StatusCode::kNotFound);
  auto path = ContractEdges(tri, Es({1, 2}));
  ASSERT_OK(path.status());
  EXPECT_EQ(path->vertices(), Vs({0}));
  EXPECT_EQ(path->num_edges(), 0u);
}

// ---- Kruskal ----

TEST(KruskalTest, TriangleExample) {
  WeightedMultigraph g = Graph({0, 1, 2}, {{1, 0, 1}, {2, 1, 2}, {3, 2, 0}});
  auto f = KruskalMsf(g, {{EdgeId(1), 1}, {EdgeId(2), 5}, {EdgeId(3), 0}});
  ASSERT_OK(f.status());
  EXPECT_EQ(*f, Es({1, 3}));
}

TEST(KruskalTest, EdgelessGraph) {
  auto f = KruskalMsf(Graph({0, 1, 2, 3}, {}), {});
  ASSERT_OK(f.status());
  EXPECT_TRUE(f->empty());
}

TEST(KruskalTest, EqualParallelEdgesPickLowerId) {
  auto f = KruskalMsf(Graph({0, 1}, {{1, 0, 1}, {2, 0, 1}}),
                      {{EdgeId(1), 4}, {EdgeId(2), 4}});
  ASSERT_OK(f.status());
  EXPECT_EQ(*f, Es({1}));
}

TEST(KruskalTest, PreferredEdgesWinTies) {
  auto f = KruskalMsf(Graph({0, 1}, {{1, 0, 1}, {2, 0, 1}}),
                      {{EdgeId(1), 4}, {EdgeId(2), 4}}, Es({2}));
  ASSERT_OK(f.status());
  EXPECT_EQ(*f, Es({2}));
}

TEST(KruskalTest, MissingWeightIsAnError) {
  EXPECT_FALSE(KruskalMsf(Graph({0, 1}, {{1, 0, 1}}), {}).ok());
}

// Union-find over raw vertex ids, used only by the reference below.
struct Dsu {
  std::map<VertexId, VertexId> parent;
  VertexId Find(VertexId v) {
    auto it = parent.find(v);
    if (it == parent.end() || it->second == v) return v;
    return parent[v] = Find(it->second);
  }
  bool Union(VertexId a, VertexId b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

TEST(KruskalTest, MatchesExhaustiveMinimumForest) {
  SplitMix64 rng(5);
  for (int round = 0; round < 150; ++round) {
    WeightedMultigraph g;
    const std::uint32_t n = static_cast<std::uint32_t>(rng.Between(1, 6));
    for (std::uint32_t v = 0; v < n; ++v) ASSERT_OK(g.AddVertex(VertexId(v)));
    const std::uint32_t m = n < 2 ? 0 : static_cast<std::uint32_t>(rng.Between(0, 10));
    EdgeWeights w;
    std::vector<std::pair<EdgeId, EdgeRecord>> edges;
    for (std::uint32_t e = 0; e < m; ++e) {
      const std::uint32_t u = static_cast<std::uint32_t>(rng.Below(n));
      std::uint32_t v = static_cast<std::uint32_t>(rng.Below(n - 1));
      if (v >= u) ++v;
      ASSERT_OK(g.AddEdge(EdgeId(e), VertexId(u), VertexId(v)));
      w[EdgeId(e)] = rng.Below(6);
      edges.push_back({EdgeId(e), *g.FindEdge(EdgeId(e))});
    }
    // Maximum forests have n - components edges; take the lightest.
    Dsu all;
    std::size_t components = n;
    for (const auto& [id, rec] : edges) components -= all.Union(rec.u, rec.v);
    Weight best = UINT64_MAX;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != n - components) continue;
      Dsu dsu;
      Weight total = 0;
      bool acyclic = true;
      for (std::uint32_t i = 0; i < m && acyclic; ++i) {
        if (!(mask >> i & 1)) continue;
        acyclic = dsu.Union(edges[i].second.u, edges[i].second.v);
        total += w[edges[i].first];
      }
      if (acyclic) best = std::min(best, total);
    }
    auto forest = KruskalMsf(g, w);
    ASSERT_OK(forest.status());
    EXPECT_EQ(forest->size(), n - components);
    Dsu check;
    for (EdgeId e : *forest) {
      EXPECT_TRUE(check.Union(g.FindEdge(e)->u, g.FindEdge(e)->v)) << "cycle";
    }
    auto total = TotalWeight(*forest, w);
    ASSERT_OK(total.status());
    EXPECT_EQ(*total, best);
  }
}

TEST(WeightTest, CheckedAddReportsOverflow) {
  EXPECT_EQ(*CheckedAdd(2, 3), 5u);
  EXPECT_EQ(CheckedAdd(UINT64_MAX, 1).status().code(),
            absl::StatusCode::kOutOfRange);
}

// ---- matching ----

TEST(MaxMatchingTest, Examples) {
  EXPECT_EQ(MaxMatching(Bipartite({0, 1}, {2, 3},
                                  {{0, 0, 2}, {1, 0, 3}, {2, 1, 2}, {3, 1, 3}}))
                .size(),
            2u);
  EXPECT_EQ(MaxMatching(Bipartite({0}, {1, 2, 3}, {{0, 0, 1}, {1, 0, 2}, {2, 0, 3}}))
                .size(),
            1u);
  // l1-r1-l2-r2-l3-r3 with l = 1,2,3 and r = 4,5,6.
  BipartiteGraph path = Bipartite(
      {1, 2, 3}, {4, 5, 6}, {{0, 1, 4}, {1, 4, 2}, {2, 2, 5}, {3, 5, 3}, {4, 3, 6}});
  EXPECT_EQ(testing::BruteMatching(path), 3u);
  EXPECT_EQ(MaxMatching(path).size(), 3u);
}

TEST(MaxMatchingTest, AgreesWithSubsetEnumeration) {
  SplitMix64 rng(21);
  for (int round = 0; round < 300; ++round) {
    BipartiteGraph g = testing::RandomBipartite(rng.Between(0, 5), rng.Between(0, 5),
                                                1, 3, rng);
    const Matching m = MaxMatching(g);
    EXPECT_OK(ValidateMatching(g, m));
    EXPECT_EQ(m.size(), testing::BruteMatching(g));
  }
}

TEST(MaxMatchingTest, ValidateRejectsSharedVertices) {
  BipartiteGraph g = Bipartite({0}, {1, 2}, {{0, 0, 1}, {1, 0, 2}});
  EXPECT_FALSE(ValidateMatching(g, Es({0, 1})).ok());
  EXPECT_FALSE(ValidateMatching(g, Es({5})).ok());
}

TEST(BipartiteTest, RejectsSameSideEdgeAndDuplicates) {
  BipartiteGraph g;
  ASSERT_OK(g.AddLeft(VertexId(0)));
  ASSERT_OK(g.AddLeft(VertexId(1)));
  ASSERT_OK(g.AddRight(VertexId(2)));
  EXPECT_FALSE(g.AddEdge(EdgeId(0), VertexId(0), VertexId(1)).ok());
  EXPECT_FALSE(g.AddRight(VertexId(0)).ok());
  ASSERT_OK(g.AddEdge(EdgeId(0), VertexId(2), VertexId(0)));
  EXPECT_EQ(g.FindEdge(EdgeId(0))->left, VertexId(0));
  EXPECT_FALSE(g.AddEdge(EdgeId(0), VertexId(1), VertexId(2)).ok());
}

bool IsAugmenting(const BipartiteGraph& g, const Matching& m,
                  const AugmentingPath& p) {
  if (p.vertices.size() != p.edges.size() + 1 || p.edges.empty()) return false;
  VertexSet covered;
  for (EdgeId e : m) {
    covered.insert(g.FindEdge(e)->left);
    covered.insert(g.FindEdge(e)->right);
  }
  if (covered.contains(p.vertices.front()) || covered.contains(p.vertices.back())) {
    return false;
  }
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    const BipartiteEdge* e = g.FindEdge(p.edges[i]);
    if (e == nullptr) return false;
    const auto ends = std::minmax(p.vertices[i], p.vertices[i + 1]);
    if (ends != std::minmax(e->left, e->right)) return false;
    if (m.contains(p.edges[i]) != (i % 2 == 1)) return false;
  }
  return true;
}

TEST(AugmentingPathPackingTest, Examples) {
  BipartiteGraph k11 = Bipartite({0}, {1}, {{0, 0, 1}});
  auto one = AugmentingPathPacking(k11, {});
  ASSERT_OK(one.status());
  ASSERT_EQ(one->size(), 1u);
  EXPECT_EQ((*one)[0].edges, std::vector<EdgeId>{EdgeId(0)});

  auto none = AugmentingPathPacking(k11, Es({0}));
  ASSERT_OK(none.status());
  EXPECT_TRUE(none->empty());

  // l1=1, r1=2, l2=3, r2=4; m = {r1 l2}.
  BipartiteGraph path = Bipartite({1, 3}, {2, 4}, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}});
  auto p = AugmentingPathPacking(path, Es({1}));
  ASSERT_OK(p.status());
  ASSERT_EQ(p->size(), 1u);
  EXPECT_EQ((*p)[0].vertices,
            (std::vector<VertexId>{VertexId(1), VertexId(2), VertexId(3), VertexId(4)}));
}

TEST(AugmentingPathPackingTest, SizeIsMatchingDeficit) {
  SplitMix64 rng(8);
  for (int round = 0; round < 300; ++round) {
    BipartiteGraph g = testing::RandomBipartite(rng.Between(1, 6), rng.Between(1, 6),
                                                2, 5, rng);
    // A random maximal-by-chance matching as the starting point.
    Matching m;
    VertexSet used;
    for (const auto& [id, e] : g.edges()) {
      if (rng.Chance(1, 2) && !used.contains(e.left) && !used.contains(e.right)) {
        m.insert(id);
        used.insert(e.left);
        used.insert(e.right);
      }
    }
    auto packing = AugmentingPathPacking(g, m);
    ASSERT_OK(packing.status());
    EXPECT_EQ(packing->size(), testing::BruteMatching(g) - m.size());
    VertexSet seen;
    for (const AugmentingPath& p : *packing) {
      EXPECT_TRUE(IsAugmenting(g, m, p));
      for (VertexId v : p.vertices) EXPECT_TRUE(seen.insert(v).second);
    }
  }
}

// ---- orientation ----

TEST(OrientTest, Examples) {
  BipartiteGraph k11 = Bipartite({0}, {1}, {{0, 0, 1}});
  DiGraph matched = Orient(k11, Es({0}));
  EXPECT_TRUE(matched.HasArc(VertexId(1), VertexId(0)));
  EXPECT_EQ(matched.arcs().size(), 1u);
  DiGraph unmatched = Orient(k11, {});
  EXPECT_TRUE(unmatched.HasArc(VertexId(0), VertexId(1)));
  EXPECT_EQ(unmatched.arcs().size(), 1u);

  BipartiteGraph k12 = Bipartite({0}, {1, 2}, {{0, 0, 1}, {1, 0, 2}});
  DiGraph d = Orient(k12, Es({0}));
  EXPECT_TRUE(d.HasArc(VertexId(1), VertexId(0)));
  EXPECT_TRUE(d.HasArc(VertexId(0), VertexId(2)));
  EXPECT_EQ(d.arcs().size(), 2u);
}

// Directed free-left to free-right paths of the orientation, as vertex
// sequences, versus alternating augmenting paths found in the undirected graph.
TEST(OrientTest, DirectedPathsAreAugmentingPaths) {
  SplitMix64 rng(3);
  for (int round = 0; round < 150; ++round) {
    BipartiteGraph g = testing::RandomBipartite(rng.Between(1, 5), rng.Between(1, 5),
                                                2, 5, rng);
    Matching m;
    VertexSet used;
    for (const auto& [id, e] : g.edges()) {
      if (rng.Chance(1, 2) && !used.contains(e.left) && !used.contains(e.right)) {
        m.insert(id);
        used.insert(e.left);
        used.insert(e.right);
      }
    }
    std::map<VertexId, VertexId> partner;
    for (EdgeId e : m) {
      partner[g.FindEdge(e)->left] = g.FindEdge(e)->right;
      partner[g.FindEdge(e)->right] = g.FindEdge(e)->left;
    }
    std::set<std::vector<VertexId>> augmenting;
    std::vector<VertexId> path;
    std::function<void(VertexId, bool)> extend = [&](VertexId v, bool need_unmatched) {
      path.push_back(v);
      if (g.SideOf(v) == Side::kRight && !partner.contains(v)) augmenting.insert(path);
      for (const auto& [id, e] : g.edges()) {
        VertexId w;
        if (e.left == v) {
          w = e.right;
        } else if (e.right == v) {
          w = e.left;
        } else {
          continue;
        }
        if (m.contains(id) == need_unmatched) continue;
        if (std::find(path.begin(), path.end(), w) != path.end()) continue;
        extend(w, !need_unmatched);
      }
      path.pop_back();
    };
    for (VertexId l : g.left()) {
      if (!partner.contains(l)) extend(l, true);
    }

    const DiGraph d = Orient(g, m);
    std::set<std::vector<VertexId>> directed;
    std::function<void(VertexId)> walk = [&](VertexId v) {
      path.push_back(v);
      if (g.SideOf(v) == Side::kRight && !partner.contains(v)) directed.insert(path);
      for (VertexId w : d.OutNeighbors(v)) {
        if (std::find(path.begin(), path.end(), w) == path.end()) walk(w);
      }
      path.pop_back();
    };
    for (VertexId l : g.left()) {
      if (!partner.contains(l)) walk(l);
    }
    EXPECT_EQ(directed, augmenting);
  }
}

// ---- cuts ----

TEST(MinVertexCutTest, TwoDisjointPathsNeedTwoInteriorVertices) {
  DiGraph d;
  // s=0 -> 1 -> t=3 and s -> 2 -> t.
  d.AddArc(VertexId(0), VertexId(1));
  d.AddArc(VertexId(1), VertexId(3));
  d.AddArc(VertexId(0), VertexId(2));
  d.AddArc(VertexId(2), VertexId(3));
  // Terminals may be cut, so s alone separates.
  const VertexSet cut = MinVertexCut(d, Vs({0}), Vs({3}));
  EXPECT_EQ(cut, Vs({0}));
  EXPECT_EQ(testing::BruteMinCut(d, Vs({0}), Vs({3})), 1u);
  // With the terminals protected both interior vertices are needed.
  const auto interior = MinVertexCutWithin(d, Vs({0}), Vs({3}), Vs({1, 2}));
  ASSERT_TRUE(interior.has_value());
  EXPECT_EQ(interior->size, 2u);
  EXPECT_EQ(interior->vertices, Vs({1, 2}));
  const VertexSet cuttable = Vs({1, 2});
  EXPECT_EQ(testing::BruteMinCut(d, Vs({0}), Vs({3}), &cuttable), 2u);
  EXPECT_FALSE(testing::HasPath(d, Vs({0}), Vs({3}), interior->vertices));
}

TEST(MinVertexCutTest, SharedTerminalIsCut) {
  DiGraph d;
  d.AddArc(VertexId(0), VertexId(1));
  EXPECT_TRUE(MinVertexCut(d, Vs({0, 1}), Vs({1})).contains(VertexId(1)));
}

TEST(MinVertexCutTest, NoPathGivesEmptyCut) {
  DiGraph d;
  d.AddArc(VertexId(1), VertexId(0));
  EXPECT_TRUE(MinVertexCut(d, Vs({0}), Vs({1})).empty());
}

TEST(MinVertexCutTest, ClosestToSources) {
  DiGraph d;
  // 0 -> 1 -> 2 -> 3: every single vertex separates; the source side wins.
  d.AddArc(VertexId(0), VertexId(1));
  d.AddArc(VertexId(1), VertexId(2));
  d.AddArc(VertexId(2), VertexId(3));
  EXPECT_EQ(MinVertexCut(d, Vs({0}), Vs({3})), Vs({0}));
}

TEST(MinVertexCutTest, MatchesBruteForceSeparators) {
  SplitMix64 rng(9);
  for (int round = 0; round < 250; ++round) {
    const std::size_t n = rng.Between(2, 9);
    DiGraph d = testing::RandomDiGraph(n, 1, 4, rng);
    VertexSet s;
    VertexSet t;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (rng.Chance(1, 4)) s.insert(VertexId(v));
      if (rng.Chance(1, 4)) t.insert(VertexId(v));
    }
    const VertexSet cut = MinVertexCut(d, s, t);
    EXPECT_EQ(cut.size(), testing::BruteMinCut(d, s, t));
    EXPECT_FALSE(testing::HasPath(d, s, t, cut));

    VertexSet cuttable;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (rng.Chance(2, 3)) cuttable.insert(VertexId(v));
    }
    const std::size_t brute = testing::BruteMinCut(d, s, t, &cuttable);
    auto restricted = MinVertexCutWithin(d, s, t, cuttable);
    if (brute == SIZE_MAX) {
      EXPECT_FALSE(restricted.has_value());
    } else {
      ASSERT_TRUE(restricted.has_value());
      EXPECT_EQ(restricted->size, brute);
      EXPECT_EQ(restricted->vertices.size(), brute);
      EXPECT_FALSE(testing::HasPath(d, s, t, restricted->vertices));
    }
  }
}

// ---- reachability and torso ----

TEST(ReachAvoidingTest, Examples) {
  DiGraph chain;
  chain.AddArc(VertexId(0), VertexId(1));
  chain.AddArc(VertexId(1), VertexId(2));
  EXPECT_EQ(ReachAvoiding(chain, VertexId(0), Vs({1}), Direction::kForward), Vs({1}));
  EXPECT_EQ(ReachAvoiding(chain, VertexId(0), {}, Direction::kForward), Vs({1, 2}));
  EXPECT_EQ(ReachAvoiding(chain, VertexId(2), {}, Direction::kBackward), Vs({0, 1}));
  DiGraph lonely;
  lonely.AddVertex(VertexId(5));
  EXPECT_TRUE(ReachAvoiding(lonely, VertexId(5), {}, Direction::kForward).empty());
}

TEST(TorsoTest, Examples) {
  DiGraph d;
  d.AddArc(VertexId(0), VertexId(1));
  d.AddArc(VertexId(1), VertexId(2));
  DiGraph t = Torso(d, Vs({0, 2}));
  EXPECT_EQ(t.arcs().size(), 1u);
  EXPECT_EQ(t.KindOf(VertexId(0), VertexId(2)), ArcKind::kShortcut);

  EXPECT_EQ(Torso(d, Vs({0, 1, 2})), d);

  d.AddArc(VertexId(0), VertexId(2));
  DiGraph deduped = Torso(d, Vs({0, 2}));
  EXPECT_EQ(deduped.arcs().size(), 1u);
  EXPECT_EQ(deduped.KindOf(VertexId(0), VertexId(2)), ArcKind::kPlain);
}

TEST(TorsoTest, PreservesReachabilityWithinZ) {
  SplitMix64 rng(4);
  for (int round = 0; round < 40; ++round) {
    const std::size_t n = rng.Between(2, 7);
    DiGraph d = testing::RandomDiGraph(n, 1, 4, rng);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      VertexSet z;
      for (std::uint32_t v = 0; v < n; ++v) {
        if (mask >> v & 1) z.insert(VertexId(v));
      }
      const DiGraph t = Torso(d, z);
      for (VertexId u : z) {
        for (VertexId v : z) {
          if (u == v) continue;
          EXPECT_EQ(testing::HasPath(d, {u}, {v}, {}),
                    testing::HasPath(t, {u}, {v}, {}));
        }
      }
    }
  }
}

}  // namespace
}  // namespace instcomp
