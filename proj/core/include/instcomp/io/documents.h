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

// JSON documents for instances, bundles, matroids, assignments and reports.
// Every document carries a `format` tag. Emission is deterministic: object
// keys are sorted and id lists ascend.

#ifndef INSTCOMP_IO_DOCUMENTS_H_
#define INSTCOMP_IO_DOCUMENTS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>

#include "absl/status/statusor.h"
#include "instcomp/compress/matching.h"
#include "instcomp/compress/matroid_compressor.h"
#include "instcomp/compress/mst.h"
#include "instcomp/compress/shortest_path.h"
#include "instcomp/matroid/matroid.h"
#include "instcomp/verify/verify.h"
#include "nlohmann/json.hpp"

namespace instcomp {

using Json = nlohmann::json;

inline constexpr char kInstanceFormat[] = "instcomp/instance/v1";
inline constexpr char kBundleFormat[] = "instcomp/bundle/v1";
inline constexpr char kAssignmentFormat[] = "instcomp/assignment/v1";
inline constexpr char kReportFormat[] = "instcomp/report/v1";
inline constexpr char kToolVersion[] = "instcomp 0.1.0";

enum class ProblemKind { kMst, kMatroid, kMatching, kShortestPath };

std::string ProblemKindName(ProblemKind kind);
absl::StatusOr<ProblemKind> ParseProblemKind(std::string_view name);

using InstanceVariant =
    std::variant<UncertainMstInstance, UncertainMatroidInstance,
                 UncertainMatchingInstance, ShortestPathInstance>;

struct InstanceDocument {
  InstanceVariant instance;
  std::optional<std::uint64_t> seed;

  ProblemKind kind() const;
};

struct Provenance {
  std::string tool = kToolVersion;
  std::string input_sha256;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

using BundleVariant =
    std::variant<MstBundle, MatroidBundle, MatchingBundle, ShortestPathBundle>;

struct BundleDocument {
  BundleVariant bundle;
  Provenance provenance;

  ProblemKind kind() const;
};

// Values of an instantiation, keyed by raw id.
struct AssignmentDocument {
  std::map<std::uint32_t, Weight> weights;
  std::set<std::uint32_t> remove;
  std::set<std::uint32_t> unavailable;

  friend bool operator==(const AssignmentDocument&,
                         const AssignmentDocument&) = default;
};

// Text to JSON; InvalidArgument on malformed input.
absl::StatusOr<Json> ParseJsonText(std::string_view text);
// Two-space indentation plus a trailing newline.
std::string Serialize(const Json& doc);

Json EmitGraph(const WeightedMultigraph& g, const EdgeSet& uncertain = {});
absl::StatusOr<WeightedMultigraph> ParseGraph(const Json& doc,
                                              EdgeSet* uncertain = nullptr);

Json EmitBipartite(const BipartiteGraph& g, const VertexSet& l0 = {},
                   const VertexSet& r0 = {}, const EdgeSet& e0 = {});
struct ParsedBipartite {
  BipartiteGraph graph;
  VertexSet l0;
  VertexSet r0;
  EdgeSet e0;
};
absl::StatusOr<ParsedBipartite> ParseBipartite(const Json& doc);

Json EmitMatroid(const Matroid& m);
absl::StatusOr<Matroid> ParseMatroid(const Json& doc);

Json EmitInstance(const InstanceDocument& doc);
absl::StatusOr<InstanceDocument> ParseInstance(const Json& doc);

Json EmitBundle(const BundleDocument& doc);
absl::StatusOr<BundleDocument> ParseBundle(const Json& doc);

Json EmitAssignment(const AssignmentDocument& doc);
absl::StatusOr<AssignmentDocument> ParseAssignment(const Json& doc);

Json EmitReport(const VerificationReport& report);

std::string Sha256Hex(std::string_view bytes);
// Digest of the compact canonical emission of `doc`.
std::string InstanceHash(const InstanceDocument& doc);

}  // namespace instcomp

#endif  // INSTCOMP_IO_DOCUMENTS_H_
