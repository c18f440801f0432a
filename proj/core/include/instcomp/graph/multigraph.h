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

#ifndef INSTCOMP_GRAPH_MULTIGRAPH_H_
#define INSTCOMP_GRAPH_MULTIGRAPH_H_

#include <map>
#include <optional>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "instcomp/ids.h"

namespace instcomp {

struct EdgeRecord {
  VertexId u;
  VertexId v;
  std::optional<Weight> weight;

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;

  VertexId Other(VertexId x) const { return x == u ? v : u; }
};

// Undirected multigraph whose edges keep their EdgeId for the lifetime of the
// graph, including across contractions. Parallel edges are allowed, self-loops
// are not.
class WeightedMultigraph {
 public:
  WeightedMultigraph() = default;

  absl::Status AddVertex(VertexId v);
  // Endpoints must already exist; the id must be unused.
  absl::Status AddEdge(EdgeId id, VertexId u, VertexId v,
                       std::optional<Weight> weight = std::nullopt);

  const VertexSet& vertices() const { return vertices_; }
  const std::map<EdgeId, EdgeRecord>& edges() const { return edges_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  bool HasVertex(VertexId v) const { return vertices_.contains(v); }
  bool HasEdge(EdgeId e) const { return edges_.contains(e); }
  const EdgeRecord* FindEdge(EdgeId e) const;

  // Smallest id strictly above every edge id in use.
  EdgeId NextEdgeId() const;
  VertexId NextVertexId() const;

  // Same vertex set, only the listed edges (unknown ids are ignored).
  WeightedMultigraph WithEdges(const EdgeSet& keep) const;
  WeightedMultigraph WithoutEdges(const EdgeSet& drop) const;

  // Weights carried on the edges themselves; edges without one are skipped.
  EdgeWeights EmbeddedWeights() const;

  friend bool operator==(const WeightedMultigraph&,
                         const WeightedMultigraph&) = default;

 private:
  VertexSet vertices_;
  std::map<EdgeId, EdgeRecord> edges_;
};

// Merges the endpoints of `e` into the smaller of the two vertex ids. `e` is
// removed, edges that turn into self-loops are dropped, and every other edge
// keeps its id with its endpoints re-homed.
absl::StatusOr<WeightedMultigraph> ContractEdge(const WeightedMultigraph& g,
                                                EdgeId e);

// Contracts every edge of `forest` at once, which must be acyclic in `g`. Each
// merged component keeps its smallest vertex id, so the result equals
// contracting the edges one by one in any order. Other edges that become
// self-loops are dropped and, if `dropped` is set, recorded there.
absl::StatusOr<WeightedMultigraph> ContractEdges(const WeightedMultigraph& g,
                                                 const EdgeSet& forest,
                                                 EdgeSet* dropped = nullptr);

// Minimum-weight spanning forest. `weights` must cover every edge. Edges are
// scanned by ascending (weight, id); an edge in `preferred` sorts before
// non-preferred edges of equal weight.
absl::StatusOr<EdgeSet> KruskalMsf(const WeightedMultigraph& g,
                                   const EdgeWeights& weights,
                                   const EdgeSet& preferred = {});

// Sum of `weights` over `edges`, checked for overflow.
absl::StatusOr<Weight> TotalWeight(const EdgeSet& edges,
                                   const EdgeWeights& weights);

bool IsConnected(const WeightedMultigraph& g);

// Merge of two weight maps with disjoint keys.
absl::StatusOr<EdgeWeights> MergeWeights(const EdgeWeights& a,
                                         const EdgeWeights& b);

}  // namespace instcomp

#endif  // INSTCOMP_GRAPH_MULTIGRAPH_H_
