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

// Seeded random instances. Every generator draws from a single SplitMix64
// stream, so the same parameters and seed always give the same instance.

#ifndef INSTCOMP_IO_GENERATE_H_
#define INSTCOMP_IO_GENERATE_H_

#include <cstdint>
#include <string_view>

#include "absl/status/statusor.h"
#include "instcomp/compress/matching.h"
#include "instcomp/compress/matroid_compressor.h"
#include "instcomp/compress/mst.h"
#include "instcomp/compress/shortest_path.h"

namespace instcomp {

struct GraphParams {
  std::size_t n = 8;
  std::size_t m = 14;
  std::size_t f = 4;
  Weight weight_max = 7;
};

// Connected multigraph on vertices 0..n-1 with edge ids 0..m-1 and f
// uncertain edges. InvalidArgument if m < n - 1, f > m, or m > 0 with n < 2.
absl::StatusOr<UncertainMstInstance> GenerateMst(const GraphParams& params,
                                                 std::uint64_t seed);

// As GenerateMst, plus two distinct terminals.
absl::StatusOr<ShortestPathInstance> GenerateShortestPath(
    const GraphParams& params, std::uint64_t seed);

enum class MatroidFamily { kGraphic, kUniform, kLinear, kTransversal };

std::string_view FamilyName(MatroidFamily family);
absl::StatusOr<MatroidFamily> ParseFamily(std::string_view name);

struct MatroidParams {
  MatroidFamily family = MatroidFamily::kGraphic;
  std::size_t ground = 8;
  std::size_t f = 2;
  Weight weight_max = 5;
  // Linear matroids only.
  std::uint64_t prime = kDefaultPrime;
};

// Ground set 0..ground-1. Graphic matroids come from a random multigraph,
// linear ones from a sparse matrix with some dependent columns, transversal
// ones from a random bipartite graph whose right side is the ground set.
absl::StatusOr<UncertainMatroidInstance> GenerateMatroid(
    const MatroidParams& params, std::uint64_t seed);

struct MatchingParams {
  std::size_t left = 6;
  std::size_t right = 6;
  std::size_t l0 = 2;
  std::size_t r0 = 2;
  std::size_t e0 = 1;
  // Edge count; zero picks roughly a third of all left-right pairs.
  std::size_t m = 0;
};

// Simple bipartite graph with left ids 0..left-1 and right ids following.
absl::StatusOr<UncertainMatchingInstance> GenerateMatching(
    const MatchingParams& params, std::uint64_t seed);

}  // namespace instcomp

#endif  // INSTCOMP_IO_GENERATE_H_
