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

#include "instcomp/verify/structure.h"

#include <algorithm>
#include <bit>
#include <optional>

#include "absl/strings/str_cat.h"
#include "instcomp/graph/digraph.h"
#include "verify/enumerate.h"

namespace instcomp {
namespace {

constexpr std::size_t kAxiomLimit = 12;

template <typename Id>
std::set<Id> FromMask(const std::vector<Id>& items, std::uint32_t mask) {
  std::set<Id> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (mask >> i & 1) out.insert(items[i]);
  }
  return out;
}

template <typename Id, typename Map>
absl::StatusOr<Weight> MaskWeight(const std::vector<Id>& items,
                                  std::uint32_t mask, const Map& weights) {
  Weight total = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!(mask >> i & 1)) continue;
    auto it = weights.find(items[i]);
    if (it == weights.end()) {
      return absl::InvalidArgumentError(
          absl::StrCat("id ", items[i].value(), " has no weight"));
    }
    auto sum = CheckedAdd(total, it->second);
    if (!sum.ok()) return sum.status();
    total = *sum;
  }
  return total;
}

template <typename Id, typename Map, typename Enumerate>
absl::StatusOr<std::vector<std::set<Id>>> AllMinimum(
    const std::vector<Id>& items, const Map& weights, Enumerate enumerate) {
  std::vector<std::uint32_t> masks;
  std::optional<Weight> best;
  absl::Status error;
  auto status = enumerate([&](std::uint32_t mask) {
    auto w = MaskWeight(items, mask, weights);
    if (!w.ok()) {
      error = w.status();
      return;
    }
    if (!best.has_value() || *w < *best) {
      best = *w;
      masks.clear();
    }
    if (*w == *best) masks.push_back(mask);
  });
  if (!status.ok()) return status;
  if (!error.ok()) return error;
  std::vector<std::set<Id>> out;
  for (std::uint32_t mask : masks) out.push_back(FromMask(items, mask));
  return out;
}

std::vector<bool> IndependenceTable(const Matroid& m) {
  const std::vector<ElementId> ground(m.ground().begin(), m.ground().end());
  std::vector<bool> table(std::size_t{1} << ground.size());
  for (std::uint32_t mask = 0; mask < table.size(); ++mask) {
    table[mask] = m.IsIndependentUnchecked(FromMask(ground, mask));
  }
  return table;
}

}  // namespace

absl::StatusOr<std::vector<EdgeSet>> AllMinimumSpanningTrees(
    const WeightedMultigraph& g, const EdgeWeights& weights) {
  std::vector<EdgeId> edges;
  for (const auto& [id, rec] : g.edges()) edges.push_back(id);
  return AllMinimum(edges, weights, [&](auto visit) {
    return internal::ForEachSpanningTree(g, visit);
  });
}

absl::StatusOr<std::vector<ElementSet>> AllMinimumBases(const Matroid& m,
                                                        const WeightMap& w) {
  const std::vector<ElementId> ground(m.ground().begin(), m.ground().end());
  return AllMinimum(ground, w, [&](auto visit) {
    return internal::ForEachBasis(m, visit);
  });
}

absl::Status CheckMatroidAxioms(const Matroid& m) {
  if (m.size() > kAxiomLimit) {
    return absl::ResourceExhaustedError(
        absl::StrCat("ground set of ", m.size(), " elements is too large"));
  }
  const std::vector<bool> independent = IndependenceTable(m);
  if (!independent[0]) return absl::FailedPreconditionError("empty set dependent");
  const std::uint32_t full = static_cast<std::uint32_t>(independent.size());
  for (std::uint32_t a = 0; a < full; ++a) {
    if (!independent[a]) continue;
    for (std::uint32_t bit = 1; bit < full; bit <<= 1) {
      if ((a & bit) && !independent[a & ~bit]) {
        return absl::FailedPreconditionError(
            absl::StrCat("downward closure fails below mask ", a));
      }
    }
    for (std::uint32_t b = 0; b < full; ++b) {
      if (!independent[b] || std::popcount(b) >= std::popcount(a)) continue;
      bool extended = false;
      for (std::uint32_t bit = 1; bit < full && !extended; bit <<= 1) {
        if ((a & bit) && !(b & bit) && independent[b | bit]) extended = true;
      }
      if (!extended) {
        return absl::FailedPreconditionError(absl::StrCat(
            "augmentation fails for masks ", b, " and ", a));
      }
    }
  }
  return absl::OkStatus();
}

absl::Status CheckSameMatroid(const Matroid& a, const Matroid& b) {
  if (a.ground() != b.ground()) {
    return absl::FailedPreconditionError("ground sets differ");
  }
  if (a.size() > internal::kEnumerationHardLimit) {
    return absl::ResourceExhaustedError(
        absl::StrCat("ground set of ", a.size(), " elements is too large"));
  }
  const std::vector<ElementId> ground(a.ground().begin(), a.ground().end());
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << ground.size());
       ++mask) {
    const ElementSet set = FromMask(ground, mask);
    if (a.IsIndependentUnchecked(set) != b.IsIndependentUnchecked(set)) {
      return absl::FailedPreconditionError(
          absl::StrCat("independence differs on mask ", mask));
    }
  }
  return absl::OkStatus();
}

absl::Status CheckCoveringContract(const MatchingTrace& trace) {
  std::vector<VertexId> uncertain(trace.l0.begin(), trace.l0.end());
  uncertain.insert(uncertain.end(), trace.r0.begin(), trace.r0.end());
  if (uncertain.size() > internal::kEnumerationHardLimit) {
    return absl::ResourceExhaustedError("too many uncertain vertices");
  }
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << uncertain.size());
       ++mask) {
    const VertexSet removed = FromMask(uncertain, mask);
    VertexSet sources = trace.free_left;
    for (VertexId v : trace.l0) {
      if (!removed.contains(v)) sources.insert(v);
    }
    VertexSet sinks = trace.free_right;
    for (VertexId v : trace.r0) {
      if (!removed.contains(v)) sinks.insert(v);
    }
    const DiGraph d = trace.h.WithoutVertices(removed);
    const std::size_t global = MinVertexCut(d, sources, sinks).size();
    const std::optional<RestrictedCut> confined =
        MinVertexCutWithin(d, sources, sinks, trace.x);
    if (!confined.has_value() || confined->size != global) {
      return absl::FailedPreconditionError(absl::StrCat(
          "removal mask ", mask, ": minimum cut ", global,
          " but the best cut inside X has size ",
          confined.has_value() ? absl::StrCat(confined->size)
                               : std::string("infinity")));
    }
  }
  return absl::OkStatus();
}

}  // namespace instcomp
