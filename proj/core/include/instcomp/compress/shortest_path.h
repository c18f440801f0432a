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

#ifndef INSTCOMP_COMPRESS_SHORTEST_PATH_H_
#define INSTCOMP_COMPRESS_SHORTEST_PATH_H_

#include <map>
#include <optional>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "instcomp/graph/multigraph.h"
#include "instcomp/ids.h"

namespace instcomp {

struct ShortestPathInstance {
  WeightedMultigraph graph;
  EdgeSet uncertain;
  VertexId s;
  VertexId t;

  friend bool operator==(const ShortestPathInstance&,
                         const ShortestPathInstance&) = default;
};

absl::Status ValidateShortestPathInstance(const ShortestPathInstance& inst);

// Terminals are s, t and the endpoints of uncertain edges. Each certain edge
// of `graph` joins two terminals at their distance avoiding uncertain edges;
// `labels` lists the interior vertices of one such path. Uncertain edges keep
// their ids.
struct ShortestPathBundle {
  WeightedMultigraph graph;
  EdgeSet uncertain;
  VertexId s;
  VertexId t;
  std::map<EdgeId, std::vector<VertexId>> labels;
  Weight k = 0;

  friend bool operator==(const ShortestPathBundle&,
                         const ShortestPathBundle&) = default;
};

absl::StatusOr<ShortestPathBundle> CompressShortestPath(
    const ShortestPathInstance& inst);

// nullopt when t is unreachable from s.
absl::StatusOr<std::optional<Weight>> SolveShortestPath(
    const ShortestPathBundle& bundle, const EdgeWeights& uncertain_weights);

// Dijkstra from `source` over every edge of `g` (weights from `weights`).
struct DistanceTree {
  std::map<VertexId, Weight> distance;
  std::map<VertexId, VertexId> parent;
};
absl::StatusOr<DistanceTree> Dijkstra(const WeightedMultigraph& g,
                                      const EdgeWeights& weights,
                                      VertexId source);

}  // namespace instcomp

#endif  // INSTCOMP_COMPRESS_SHORTEST_PATH_H_
