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

// Brute-force reference solvers. None of them calls into the fast solvers of
// the graph, matroid or compress libraries.

#ifndef INSTCOMP_VERIFY_ORACLES_H_
#define INSTCOMP_VERIFY_ORACLES_H_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "instcomp/graph/bipartite.h"
#include "instcomp/graph/multigraph.h"
#include "instcomp/ids.h"
#include "instcomp/matroid/matroid.h"

namespace instcomp {

inline constexpr std::size_t kTreeEnumerationLimit = 16;
inline constexpr std::size_t kBasisEnumerationLimit = 16;
inline constexpr std::size_t kMatchingOracleLimit = 24;

// Enumerates spanning trees up to kTreeEnumerationLimit edges, otherwise runs
// an O(n^2) Prim scan.
absl::StatusOr<Weight> OracleMst(const WeightedMultigraph& g,
                                 const EdgeWeights& weights);

// Enumerates every subset of the ground set.
absl::StatusOr<Weight> OracleMinBasis(const Matroid& m, const WeightMap& w);

// Memoised search over left vertices and sets of used right vertices.
absl::StatusOr<std::size_t> OracleMaxMatching(const BipartiteGraph& g);

// Enumerates simple s-t paths. nullopt when t is unreachable.
absl::StatusOr<std::optional<Weight>> OracleShortestPath(
    const WeightedMultigraph& g, const EdgeWeights& weights, VertexId s,
    VertexId t);

// Optimum over a family of candidate solutions as a function of the unknown
// weights. Each candidate is summarised by which unknowns it uses and the sum
// of its known weights; only the best sum per usage pattern is kept.
class CandidateTable {
 public:
  explicit CandidateTable(std::vector<std::uint32_t> unknown_ids)
      : unknown_ids_(std::move(unknown_ids)) {}

  void Add(std::uint32_t mask, Weight known);
  bool empty() const { return best_.empty(); }
  const std::vector<std::uint32_t>& unknown_ids() const { return unknown_ids_; }

  // `values[i]` is the weight of unknown_ids()[i]. nullopt iff empty().
  absl::StatusOr<std::optional<Weight>> Minimum(
      const std::vector<Weight>& values) const;

 private:
  std::vector<std::uint32_t> unknown_ids_;
  std::map<std::uint32_t, Weight> best_;
};

// Spanning trees of `g`; edges in `unknown` have no weight in `known`.
absl::StatusOr<CandidateTable> SpanningTreeTable(const WeightedMultigraph& g,
                                                 const EdgeWeights& known,
                                                 const EdgeSet& unknown);

absl::StatusOr<CandidateTable> BasisTable(const Matroid& m,
                                          const WeightMap& known,
                                          const ElementSet& unknown);

absl::StatusOr<CandidateTable> PathTable(const WeightedMultigraph& g,
                                         const EdgeWeights& known,
                                         const EdgeSet& unknown, VertexId s,
                                         VertexId t);

}  // namespace instcomp

#endif  // INSTCOMP_VERIFY_ORACLES_H_
