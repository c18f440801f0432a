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

#ifndef INSTCOMP_VERIFY_ENUMERATE_H_
#define INSTCOMP_VERIFY_ENUMERATE_H_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "instcomp/graph/multigraph.h"
#include "instcomp/matroid/matroid.h"

namespace instcomp::internal {

inline constexpr std::size_t kEnumerationHardLimit = 22;

// Position of v in the ascending vertex list.
inline std::size_t IndexOf(const std::vector<VertexId>& vertices, VertexId v) {
  return static_cast<std::size_t>(
      std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
}

// visit(mask) for every spanning tree; bit i stands for the i-th edge by id.
// Nothing is visited when g is disconnected.
template <typename Visit>
absl::Status ForEachSpanningTree(const WeightedMultigraph& g, Visit visit) {
  const std::size_t m = g.num_edges();
  if (m > kEnumerationHardLimit) {
    return absl::ResourceExhaustedError(
        absl::StrCat(m, " edges exceed the enumeration limit of ",
                     kEnumerationHardLimit));
  }
  const std::vector<VertexId> vertices(g.vertices().begin(),
                                       g.vertices().end());
  const std::size_t n = vertices.size();
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (const auto& [id, rec] : g.edges()) {
    ends.emplace_back(IndexOf(vertices, rec.u), IndexOf(vertices, rec.v));
  }
  if (n <= 1) {
    visit(std::uint32_t{0});
    return absl::OkStatus();
  }
  const std::size_t size = n - 1;
  if (size > m) return absl::OkStatus();
  std::vector<std::size_t> label(n);
  // Gosper's hack walks the masks with exactly `size` bits.
  const std::uint64_t limit = std::uint64_t{1} << m;
  for (std::uint64_t mask = (std::uint64_t{1} << size) - 1; mask < limit;) {
    for (std::size_t i = 0; i < n; ++i) label[i] = i;
    // n - 1 edges form a tree iff every edge merges two labels.
    bool tree = true;
    for (std::size_t i = 0; i < m && tree; ++i) {
      if (!(mask >> i & 1)) continue;
      const std::size_t a = label[ends[i].first];
      const std::size_t b = label[ends[i].second];
      if (a == b) {
        tree = false;
        break;
      }
      for (std::size_t& l : label) {
        if (l == b) l = a;
      }
    }
    if (tree) visit(static_cast<std::uint32_t>(mask));
    const std::uint64_t low = mask & -mask;
    const std::uint64_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
  return absl::OkStatus();
}

// visit(mask) for every basis; bit i stands for the i-th ground element.
template <typename Visit>
absl::Status ForEachBasis(const Matroid& m, Visit visit) {
  const std::size_t n = m.size();
  if (n > kEnumerationHardLimit) {
    return absl::ResourceExhaustedError(
        absl::StrCat(n, " elements exceed the enumeration limit of ",
                     kEnumerationHardLimit));
  }
  const std::vector<ElementId> ground(m.ground().begin(), m.ground().end());
  std::vector<std::uint32_t> independent;
  int rank = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    ElementSet set;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) set.insert(ground[i]);
    }
    if (m.IsIndependentUnchecked(set)) {
      independent.push_back(mask);
      rank = std::max(rank, std::popcount(mask));
    }
  }
  for (std::uint32_t mask : independent) {
    if (std::popcount(mask) == rank) visit(mask);
  }
  return absl::OkStatus();
}

// visit(edges) for every simple s-t path, edges listed from s.
template <typename Visit>
void ForEachSimplePath(const WeightedMultigraph& g, VertexId s, VertexId t,
                       Visit visit) {
  std::map<VertexId, std::vector<std::pair<EdgeId, VertexId>>> adjacent;
  for (const auto& [id, rec] : g.edges()) {
    adjacent[rec.u].emplace_back(id, rec.v);
    adjacent[rec.v].emplace_back(id, rec.u);
  }
  std::vector<EdgeId> path;
  VertexSet on_path = {s};
  auto walk = [&](auto& self, VertexId at) -> void {
    if (at == t) {
      visit(path);
      return;
    }
    for (const auto& [id, next] : adjacent[at]) {
      if (!on_path.insert(next).second) continue;
      path.push_back(id);
      self(self, next);
      path.pop_back();
      on_path.erase(next);
    }
  };
  walk(walk, s);
}

}  // namespace instcomp::internal

#endif  // INSTCOMP_VERIFY_ENUMERATE_H_
