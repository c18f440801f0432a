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

#ifndef INSTCOMP_COMPRESS_MATCHING_H_
#define INSTCOMP_COMPRESS_MATCHING_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "instcomp/graph/bipartite.h"
#include "instcomp/graph/digraph.h"
#include "instcomp/ids.h"

namespace instcomp {

inline constexpr std::size_t kDefaultExhaustiveThreshold = 12;

struct UncertainMatchingInstance {
  BipartiteGraph graph;
  VertexSet l0;  // left vertices that may disappear
  VertexSet r0;  // right vertices that may disappear
  EdgeSet e0;    // edges that may disappear

  friend bool operator==(const UncertainMatchingInstance&,
                         const UncertainMatchingInstance&) = default;
};

absl::Status ValidateMatchingInstance(const UncertainMatchingInstance& inst);

// Edge e = uv with u on the left is replaced by u - u' - v' - v, u' on the
// right and v' on the left. The middle edge keeps the id of e.
struct Gadget {
  EdgeId edge;
  VertexId u;
  VertexId v;
  VertexId u_prime;
  VertexId v_prime;
  EdgeId outer_u;  // u u'
  EdgeId outer_v;  // v' v

  friend bool operator==(const Gadget&, const Gadget&) = default;
};

struct SubdividedGraph {
  BipartiteGraph graph;
  std::vector<Gadget> gadgets;  // ascending by edge
  VertexSet added_left;         // the v' vertices
  VertexSet added_right;        // the u' vertices
};

// Fresh ids lie above every id in use and are handed out in ascending edge
// order.
absl::StatusOr<SubdividedGraph> SubdivideUncertain(
    const UncertainMatchingInstance& inst);

// Union over all (L', R') of one minimum
// (F_L + (l0 - L'), F_R + (r0 - R'))-vertex cut of h - (L' + R').
// ResourceExhausted when |l0| + |r0| exceeds `threshold`.
absl::StatusOr<VertexSet> CoveringSet(const DiGraph& h, const VertexSet& l0,
                                      const VertexSet& r0,
                                      const VertexSet& free_left,
                                      const VertexSet& free_right,
                                      std::size_t threshold =
                                          kDefaultExhaustiveThreshold);

struct ZConstruction {
  EdgeSet matched_at_x;  // M_X
  VertexSet x_prime;
  VertexSet z;
};

// Sides are read from `host`. For v in X' on the left, F_v is the set of
// free right vertices reachable from v; on the right, the free left vertices
// that reach v. Paths may not pass through X'.
ZConstruction BuildZ(const DiGraph& h, const BipartiteGraph& host,
                     const Matching& m, const VertexSet& x,
                     const VertexSet& l0, const VertexSet& r0,
                     const VertexSet& free_left, const VertexSet& free_right);

// Intermediates on the subdivided graph. l0 and r0 here include the gadget
// vertices.
struct MatchingTrace {
  Matching m;
  DiGraph h;
  VertexSet l0;
  VertexSet r0;
  VertexSet free_left;
  VertexSet free_right;
  VertexSet x;
  EdgeSet matched_at_x;
  VertexSet x_prime;
  VertexSet z;
};

struct MatchingBundle {
  // Gadgets are contracted back: each uncertain edge joins its original
  // endpoints under its original id.
  BipartiteGraph graph;
  std::size_t k = 0;
  VertexSet l0;
  VertexSet r0;
  EdgeSet e0;
  std::vector<Gadget> gadgets;
  std::optional<MatchingTrace> trace;
};

struct MatchingOptions {
  std::size_t threshold = kDefaultExhaustiveThreshold;
  bool with_trace = false;
};

// The threshold applies to |l0| + |r0| + 2|e0|, the number of uncertain
// vertices after subdivision.
absl::StatusOr<MatchingBundle> CompressMatching(
    const UncertainMatchingInstance& inst, const MatchingOptions& options = {});

struct RemovalAssignment {
  VertexSet removed_left;
  VertexSet removed_right;
  EdgeSet unavailable;

  friend bool operator==(const RemovalAssignment&,
                         const RemovalAssignment&) = default;
};

absl::Status ValidateAssignment(const VertexSet& l0, const VertexSet& r0,
                                const EdgeSet& e0, const RemovalAssignment& a);

// Maximum matching of the original graph under `a`.
absl::StatusOr<std::size_t> SolveMatching(const MatchingBundle& bundle,
                                          const RemovalAssignment& a);

// The bundle graph with every gadget subdivided again.
absl::StatusOr<BipartiteGraph> ExpandGadgets(const MatchingBundle& bundle);

// Same value as SolveMatching, computed on the expanded form: unavailable
// edges lose both gadget vertices and every intact gadget is charged one.
absl::StatusOr<std::size_t> SolveMatchingExpanded(const MatchingBundle& bundle,
                                                  const RemovalAssignment& a);

}  // namespace instcomp

#endif  // INSTCOMP_COMPRESS_MATCHING_H_
