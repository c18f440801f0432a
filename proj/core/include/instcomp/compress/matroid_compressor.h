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

#ifndef INSTCOMP_COMPRESS_MATROID_COMPRESSOR_H_
#define INSTCOMP_COMPRESS_MATROID_COMPRESSOR_H_

#include <optional>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "instcomp/ids.h"
#include "instcomp/matroid/matroid.h"

namespace instcomp {

// `weights` is defined exactly on the ground set minus `uncertain`.
struct UncertainMatroidInstance {
  Matroid matroid;
  ElementSet uncertain;
  WeightMap weights;
};

absl::Status ValidateMatroidInstance(const UncertainMatroidInstance& inst);

struct MatroidTrace {
  ElementSet basis;       // minimum basis of the certain part
  ElementSet kept;        // basis plus uncertain elements
  ElementSet zero_basis;  // minimum basis of M[kept], uncertain weights 0
};

struct MatroidBundle {
  Matroid matroid;
  ElementSet uncertain;
  WeightMap weights;  // on the surviving certain elements
  Weight k = 0;
  std::optional<MatroidTrace> trace;
};

absl::StatusOr<MatroidBundle> CompressMatroid(
    const UncertainMatroidInstance& inst, bool with_trace = false);

absl::StatusOr<Weight> SolveMatroid(const MatroidBundle& bundle,
                                    const WeightMap& uncertain_weights);

}  // namespace instcomp

#endif  // INSTCOMP_COMPRESS_MATROID_COMPRESSOR_H_
