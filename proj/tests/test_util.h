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

// Builders and brute-force reference computations shared by the tests. The
// brute-force helpers deliberately avoid the library's solvers.

#ifndef INSTCOMP_TESTS_TEST_UTIL_H_
#define INSTCOMP_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <tuple>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "gtest/gtest.h"
#include "instcomp/graph/bipartite.h"
#include "instcomp/graph/digraph.h"
#include "instcomp/graph/multigraph.h"
#include "instcomp/ids.h"
#include "instcomp/util/random.h"

#define ASSERT_OK(expr) ASSERT_TRUE(::instcomp::testing::IsOk(expr))
#define EXPECT_OK(expr) EXPECT_TRUE(::instcomp::testing::IsOk(expr))

namespace instcomp::testing {

inline ::testing::AssertionResult IsOk(const absl::Status& status) {
  if (status.ok()) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << status;
}

template <typename T>
::testing::AssertionResult IsOk(const absl::StatusOr<T>& value) {
  return IsOk(value.status());
}

struct E {
  std::uint32_t id;
  std::uint32_t u;
  std::uint32_t v;
  std::optional<Weight> w = std::nullopt;
};

inline WeightedMultigraph Graph(std::initializer_list<std::uint32_t> vertices,
                                std::initializer_list<E> edges) {
  WeightedMultigraph g;
  for (std::uint32_t v : vertices) EXPECT_TRUE(g.AddVertex(VertexId(v)).ok());
  for (const E& e : edges) {
    EXPECT_TRUE(g.AddEdge(EdgeId(e.id), VertexId(e.u), VertexId(e.v), e.w).ok());
  }
  return g;
}

inline BipartiteGraph Bipartite(
    std::initializer_list<std::uint32_t> left,
    std::initializer_list<std::uint32_t> right,
    std::initializer_list<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>
        edges) {
  BipartiteGraph g;
  for (std::uint32_t v : left) EXPECT_TRUE(g.AddLeft(VertexId(v)).ok());
  for (std::uint32_t v : right) EXPECT_TRUE(g.AddRight(VertexId(v)).ok());
  for (const auto& [id, a, b] : edges) {
    EXPECT_TRUE(g.AddEdge(EdgeId(id), VertexId(a), VertexId(b)).ok());
  }
  return g;
}

template <typename Id>
std::set<Id> Ids(std::initializer_list<std::uint32_t> raw) {
  std::set<Id> out;
  for (std::uint32_t x : raw) out.insert(Id(x));
  return out;
}

inline VertexSet Vs(std::initializer_list<std::uint32_t> raw) {
  return Ids<VertexId>(raw);
}
inline EdgeSet Es(std::initializer_list<std::uint32_t> raw) {
  return Ids<EdgeId>(raw);
}
inline ElementSet Xs(std::initializer_list<std::uint32_t> raw) {
  return Ids<ElementId>(raw);
}

// Random simple bipartite graph: left ids 0..left-1, right ids after them.
inline BipartiteGraph RandomBipartite(std::size_t left, std::size_t right,
                                      std::uint64_t num, std::uint64_t den,
                                      SplitMix64& rng) {
  BipartiteGraph g;
  for (std::size_t i = 0; i < left; ++i) {
    EXPECT_TRUE(g.AddLeft(VertexId(static_cast<std::uint32_t>(i))).ok());
  }
  for (std::size_t j = 0; j < right; ++j) {
    EXPECT_TRUE(g.AddRight(VertexId(static_cast<std::uint32_t>(left + j))).ok());
  }
  std::uint32_t next = 0;
  for (std::size_t i = 0; i < left; ++i) {
    for (std::size_t j = 0; j < right; ++j) {
      if (!rng.Chance(num, den)) continue;
      EXPECT_TRUE(g.AddEdge(EdgeId(next++), VertexId(static_cast<std::uint32_t>(i)),
                            VertexId(static_cast<std::uint32_t>(left + j)))
                      .ok());
    }
  }
  return g;
}

inline DiGraph RandomDiGraph(std::size_t n, std::uint64_t num, std::uint64_t den,
                             SplitMix64& rng) {
  DiGraph d;
  for (std::uint32_t v = 0; v < n; ++v) d.AddVertex(VertexId(v));
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (a != b && rng.Chance(num, den)) d.AddArc(VertexId(a), VertexId(b));
    }
  }
  return d;
}

// Largest matching found by trying every edge subset.
inline std::size_t BruteMatching(const BipartiteGraph& g) {
  std::vector<BipartiteEdge> edges;
  for (const auto& [id, e] : g.edges()) edges.push_back(e);
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
    VertexSet used;
    bool ok = true;
    for (std::size_t i = 0; i < edges.size() && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      ok = used.insert(edges[i].left).second && used.insert(edges[i].right).second;
    }
    if (ok) best = std::max<std::size_t>(best, __builtin_popcount(mask));
  }
  return best;
}

// Plain DFS reachability in `d` with `removed` vertices deleted.
inline bool HasPath(const DiGraph& d, const VertexSet& sources,
                    const VertexSet& sinks, const VertexSet& removed) {
  std::vector<VertexId> stack;
  VertexSet seen;
  for (VertexId s : sources) {
    if (d.HasVertex(s) && !removed.contains(s) && seen.insert(s).second) {
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    if (sinks.contains(v)) return true;
    for (VertexId w : d.OutNeighbors(v)) {
      if (!removed.contains(w) && seen.insert(w).second) stack.push_back(w);
    }
  }
  return false;
}

// Size of the smallest separating vertex set, by subset enumeration.
inline std::size_t BruteMinCut(const DiGraph& d, const VertexSet& sources,
                               const VertexSet& sinks,
                               const VertexSet* cuttable = nullptr) {
  std::vector<VertexId> pool;
  for (VertexId v : d.vertices()) {
    if (cuttable == nullptr || cuttable->contains(v)) pool.push_back(v);
  }
  std::size_t best = SIZE_MAX;
  for (std::uint32_t mask = 0; mask < (1u << pool.size()); ++mask) {
    const std::size_t size = __builtin_popcount(mask);
    if (size >= best) continue;
    VertexSet removed;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (mask >> i & 1) removed.insert(pool[i]);
    }
    if (!HasPath(d, sources, sinks, removed)) best = size;
  }
  return best;
}

}  // namespace instcomp::testing

#endif  // INSTCOMP_TESTS_TEST_UTIL_H_
