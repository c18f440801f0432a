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

#ifndef INSTCOMP_COMPRESS_MST_H_
#define INSTCOMP_COMPRESS_MST_H_

#include <optional>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "instcomp/graph/multigraph.h"
#include "instcomp/ids.h"

namespace instcomp {

// Certain edges carry their weight on the edge record; edges in `uncertain`
// carry none.
struct UncertainMstInstance {
  WeightedMultigraph graph;
  EdgeSet uncertain;

  friend bool operator==(const UncertainMstInstance&,
                         const UncertainMstInstance&) = default;
};

absl::Status ValidateMstInstance(const UncertainMstInstance& inst);

struct MstTrace {
  EdgeSet forest;       // minimum spanning forest of the certain part
  EdgeSet kept;         // forest plus the uncertain edges
  EdgeSet zero_tree;    // MST of `kept` with uncertain edges at weight 0
  std::vector<EdgeId> contracted;

  friend bool operator==(const MstTrace&, const MstTrace&) = default;
};

struct MstBundle {
  WeightedMultigraph graph;
  EdgeSet uncertain;
  Weight k = 0;
  std::optional<MstTrace> trace;

  friend bool operator==(const MstBundle&, const MstBundle&) = default;
};

absl::StatusOr<MstBundle> CompressMst(const UncertainMstInstance& inst,
                                      bool with_trace = false);

// MST weight of the bundle under `uncertain_weights`, plus k.
absl::StatusOr<Weight> SolveMst(const MstBundle& bundle,
                                const EdgeWeights& uncertain_weights);

}  // namespace instcomp

#endif  // INSTCOMP_COMPRESS_MST_H_
