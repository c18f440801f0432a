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

#ifndef INSTCOMP_VERIFY_VERIFY_H_
#define INSTCOMP_VERIFY_VERIFY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "instcomp/compress/matching.h"
#include "instcomp/compress/matroid_compressor.h"
#include "instcomp/compress/mst.h"
#include "instcomp/compress/shortest_path.h"
#include "instcomp/ids.h"

namespace instcomp {

enum class VerifyTarget { kMst, kMatroid, kMatching, kShortestPath };
enum class VerifyMode { kExhaustive, kSampled };

std::string_view TargetName(VerifyTarget target);
std::string_view ModeName(VerifyMode mode);

struct VerificationPlan {
  VerifyMode mode = VerifyMode::kExhaustive;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  // Unknown weights range over 0..weight_max.
  Weight weight_max = 7;
  std::uint64_t budget = std::uint64_t{1} << 20;
  unsigned jobs = 1;
};

struct Mismatch {
  std::string assignment;
  std::optional<Weight> original;
  // Optimum of the compressed instance alone, before adding k.
  std::optional<Weight> compressed;
  Weight k = 0;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct VerificationReport {
  VerifyTarget target = VerifyTarget::kMst;
  VerifyMode mode = VerifyMode::kExhaustive;
  std::uint64_t total = 0;
  std::vector<Mismatch> mismatches;
  bool passed = false;
  double wall_seconds = 0;
  std::uint64_t seed = 0;
};

absl::StatusOr<VerificationReport> VerifyMst(const UncertainMstInstance& inst,
                                             const MstBundle& bundle,
                                             const VerificationPlan& plan);

absl::StatusOr<VerificationReport> VerifyMatroid(
    const UncertainMatroidInstance& inst, const MatroidBundle& bundle,
    const VerificationPlan& plan);

absl::StatusOr<VerificationReport> VerifyMatching(
    const UncertainMatchingInstance& inst, const MatchingBundle& bundle,
    const VerificationPlan& plan);

absl::StatusOr<VerificationReport> VerifyShortestPath(
    const ShortestPathInstance& inst, const ShortestPathBundle& bundle,
    const VerificationPlan& plan);

// Human-readable summary table.
std::string FormatReport(const VerificationReport& report);

}  // namespace instcomp

#endif  // INSTCOMP_VERIFY_VERIFY_H_
