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

#ifndef INSTCOMP_GRAPH_BIPARTITE_H_
#define INSTCOMP_GRAPH_BIPARTITE_H_

#include <map>
#include <optional>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "instcomp/ids.h"

namespace instcomp {

enum class Side { kLeft, kRight };

// Endpoints stored with the left vertex first.
struct BipartiteEdge {
  VertexId left;
  VertexId right;

  friend bool operator==(const BipartiteEdge&, const BipartiteEdge&) = default;
};

class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  absl::Status AddLeft(VertexId v);
  absl::Status AddRight(VertexId v);
  // The endpoints may be given in either order but must lie on opposite sides.
  absl::Status AddEdge(EdgeId id, VertexId a, VertexId b);

  const VertexSet& left() const { return left_; }
  const VertexSet& right() const { return right_; }
  const std::map<EdgeId, BipartiteEdge>& edges() const { return edges_; }
  std::size_t num_vertices() const { return left_.size() + right_.size(); }

  bool HasVertex(VertexId v) const {
    return left_.contains(v) || right_.contains(v);
  }
  std::optional<Side> SideOf(VertexId v) const;
  const BipartiteEdge* FindEdge(EdgeId e) const;

  VertexId NextVertexId() const;
  EdgeId NextEdgeId() const;

  // Induced subgraph after deleting `vertices` (and their incident edges).
  BipartiteGraph WithoutVertices(const VertexSet& vertices) const;
  BipartiteGraph WithoutEdges(const EdgeSet& edges) const;
  // Left side unchanged, right side restricted to `keep`.
  BipartiteGraph WithRightRestrictedTo(const VertexSet& keep) const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  VertexSet left_;
  VertexSet right_;
  std::map<EdgeId, BipartiteEdge> edges_;
};

using Matching = EdgeSet;

// OK iff every edge exists in `g` and no two edges share a vertex.
absl::Status ValidateMatching(const BipartiteGraph& g, const Matching& m);

// Maximum-cardinality matching by Hopcroft-Karp. Neighbours are scanned by
// ascending vertex id, and among parallel edges the lowest id is used, so the
// result is deterministic.
Matching MaxMatching(const BipartiteGraph& g);

// Same, but augments starting from the valid matching `start`; edges of
// `start` are kept unless an augmenting path flips them.
absl::StatusOr<Matching> MaxMatchingFrom(const BipartiteGraph& g,
                                         const Matching& start);

struct AugmentingPath {
  // Starts at the free left endpoint, ends at the free right endpoint.
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

// A maximum family of vertex-disjoint `m`-augmenting paths. Its size equals
// |MaxMatching(g)| - |m|; the paths are read off the symmetric difference of
// `m` with a maximum matching grown from `m`.
absl::StatusOr<std::vector<AugmentingPath>> AugmentingPathPacking(
    const BipartiteGraph& g, const Matching& m);

}  // namespace instcomp

#endif  // INSTCOMP_GRAPH_BIPARTITE_H_
