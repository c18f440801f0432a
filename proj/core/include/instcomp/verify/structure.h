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

#ifndef INSTCOMP_VERIFY_STRUCTURE_H_
#define INSTCOMP_VERIFY_STRUCTURE_H_

#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "instcomp/compress/matching.h"
#include "instcomp/graph/multigraph.h"
#include "instcomp/ids.h"
#include "instcomp/matroid/matroid.h"

namespace instcomp {

// Every minimum-weight spanning tree, by exhaustive enumeration.
absl::StatusOr<std::vector<EdgeSet>> AllMinimumSpanningTrees(
    const WeightedMultigraph& g, const EdgeWeights& weights);

// Every minimum-weight basis, by exhaustive enumeration.
absl::StatusOr<std::vector<ElementSet>> AllMinimumBases(const Matroid& m,
                                                        const WeightMap& w);

// Empty set, downward closure and augmentation over every pair of subsets.
absl::Status CheckMatroidAxioms(const Matroid& m);

// Independence queries of `a` and `b` agree on every subset of the ground
// set, which must be the same for both.
absl::Status CheckSameMatroid(const Matroid& a, const Matroid& b);

// For every removal of uncertain trace vertices, the minimum cut confined to
// trace.x is as small as the unconstrained minimum cut.
absl::Status CheckCoveringContract(const MatchingTrace& trace);

}  // namespace instcomp

#endif  // INSTCOMP_VERIFY_STRUCTURE_H_
