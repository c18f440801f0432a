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

#ifndef INSTCOMP_GRAPH_DIGRAPH_H_
#define INSTCOMP_GRAPH_DIGRAPH_H_

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "instcomp/graph/bipartite.h"
#include "instcomp/ids.h"

namespace instcomp {

enum class ArcKind { kPlain, kShortcut };

using Arc = std::pair<VertexId, VertexId>;

// Simple digraph: at most one arc per ordered pair.
class DiGraph {
 public:
  DiGraph() = default;

  void AddVertex(VertexId v);
  // Both endpoints are added if missing. An existing arc keeps its kind.
  void AddArc(VertexId from, VertexId to, ArcKind kind = ArcKind::kPlain);

  const VertexSet& vertices() const { return vertices_; }
  const std::map<Arc, ArcKind>& arcs() const { return arcs_; }
  bool HasVertex(VertexId v) const { return vertices_.contains(v); }
  bool HasArc(VertexId from, VertexId to) const {
    return arcs_.contains({from, to});
  }
  std::optional<ArcKind> KindOf(VertexId from, VertexId to) const;

  // Ascending by id.
  std::vector<VertexId> OutNeighbors(VertexId v) const;
  std::vector<VertexId> InNeighbors(VertexId v) const;

  DiGraph WithoutVertices(const VertexSet& drop) const;
  // d[keep]
  DiGraph Induced(const VertexSet& keep) const;

  friend bool operator==(const DiGraph&, const DiGraph&) = default;

 private:
  VertexSet vertices_;
  std::map<Arc, ArcKind> arcs_;
  std::map<Arc, ArcKind> reverse_;  // keyed (to, from)
};

// Matched edges become right-to-left arcs, all other edges left-to-right.
// `m` must be a matching of `g`.
DiGraph Orient(const BipartiteGraph& g, const Matching& m);

// Minimum vertex set whose removal leaves no directed path from `sources` to
// `sinks`. The cut may contain terminals; a vertex in both sets is always cut.
// Computed as a unit-capacity vertex-split max-flow; of all minimum cuts the
// one closest to the sources is returned.
VertexSet MinVertexCut(const DiGraph& d, const VertexSet& sources,
                       const VertexSet& sinks);

struct RestrictedCut {
  std::size_t size = 0;
  VertexSet vertices;
};

// Minimum cut using only vertices from `cuttable`; nullopt when every
// separating set would need a vertex outside it.
std::optional<RestrictedCut> MinVertexCutWithin(const DiGraph& d,
                                                const VertexSet& sources,
                                                const VertexSet& sinks,
                                                const VertexSet& cuttable);

enum class Direction { kForward, kBackward };

// Vertices joined to `v` by a directed path (away from `v` when forward,
// towards it when backward) whose internal vertices avoid `blocked`. Path
// endpoints are exempt from the restriction; `v` itself is not reported.
VertexSet ReachAvoiding(const DiGraph& d, VertexId v, const VertexSet& blocked,
                        Direction direction);

// d[z] plus a shortcut arc (u, w) for every ordered pair of distinct z
// vertices joined by a directed path with no internal vertex in z. Arcs
// already present in d[z] stay plain.
DiGraph Torso(const DiGraph& d, const VertexSet& z);

}  // namespace instcomp

#endif  // INSTCOMP_GRAPH_DIGRAPH_H_
