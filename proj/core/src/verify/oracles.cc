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

#include "instcomp/verify/oracles.h"

#include <algorithm>
#include <limits>
#include <unordered_map>
#include <utility>

#include "absl/strings/str_cat.h"
#include "verify/enumerate.h"

namespace instcomp {
namespace {

using internal::IndexOf;

constexpr Weight kNone = std::numeric_limits<Weight>::max();

absl::Status RequireWeights(const WeightedMultigraph& g,
                            const EdgeWeights& weights) {
  for (const auto& [id, rec] : g.edges()) {
    if (!weights.contains(id)) {
      return absl::InvalidArgumentError(
          absl::StrCat("edge ", id.value(), " has no weight"));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<Weight> Prim(const WeightedMultigraph& g,
                            const EdgeWeights& weights) {
  const std::vector<VertexId> vertices(g.vertices().begin(),
                                       g.vertices().end());
  const std::size_t n = vertices.size();
  if (n == 0) return Weight{0};
  std::vector<std::vector<Weight>> cheapest(n, std::vector<Weight>(n, kNone));
  for (const auto& [id, rec] : g.edges()) {
    const std::size_t a = IndexOf(vertices, rec.u);
    const std::size_t b = IndexOf(vertices, rec.v);
    const Weight w = weights.at(id);
    cheapest[a][b] = std::min(cheapest[a][b], w);
    cheapest[b][a] = std::min(cheapest[b][a], w);
  }
  std::vector<bool> in_tree(n, false);
  std::vector<Weight> link = cheapest[0];
  in_tree[0] = true;
  Weight total = 0;
  for (std::size_t round = 1; round < n; ++round) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!in_tree[v] && link[v] != kNone &&
          (pick == n || link[v] < link[pick])) {
        pick = v;
      }
    }
    if (pick == n) return absl::InvalidArgumentError("graph is not connected");
    auto sum = CheckedAdd(total, link[pick]);
    if (!sum.ok()) return sum.status();
    total = *sum;
    in_tree[pick] = true;
    for (std::size_t v = 0; v < n; ++v) link[v] = std::min(link[v], cheapest[pick][v]);
  }
  return total;
}

std::vector<std::uint32_t> Ids(const EdgeSet& set) {
  std::vector<std::uint32_t> out;
  for (EdgeId e : set) out.push_back(e.value());
  return out;
}

std::vector<std::uint32_t> Ids(const ElementSet& set) {
  std::vector<std::uint32_t> out;
  for (ElementId e : set) out.push_back(e.value());
  return out;
}

}  // namespace

void CandidateTable::Add(std::uint32_t mask, Weight known) {
  auto [it, inserted] = best_.emplace(mask, known);
  if (!inserted) it->second = std::min(it->second, known);
}

absl::StatusOr<std::optional<Weight>> CandidateTable::Minimum(
    const std::vector<Weight>& values) const {
  if (values.size() != unknown_ids_.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        values.size(), " values for ", unknown_ids_.size(), " unknowns"));
  }
  std::optional<Weight> best;
  for (const auto& [mask, known] : best_) {
    Weight total = known;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      auto sum = CheckedAdd(total, values[i]);
      if (!sum.ok()) return sum.status();
      total = *sum;
    }
    if (!best.has_value() || total < *best) best = total;
  }
  return best;
}

absl::StatusOr<Weight> OracleMst(const WeightedMultigraph& g,
                                 const EdgeWeights& weights) {
  if (auto s = RequireWeights(g, weights); !s.ok()) return s;
  if (g.num_edges() > kTreeEnumerationLimit) return Prim(g, weights);
  std::vector<Weight> edge_weight;
  for (const auto& [id, rec] : g.edges()) edge_weight.push_back(weights.at(id));
  std::optional<Weight> best;
  absl::Status overflow;
  auto status = internal::ForEachSpanningTree(g, [&](std::uint32_t mask) {
    Weight total = 0;
    for (std::size_t i = 0; i < edge_weight.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      auto sum = CheckedAdd(total, edge_weight[i]);
      if (!sum.ok()) {
        overflow = sum.status();
        return;
      }
      total = *sum;
    }
    if (!best.has_value() || total < *best) best = total;
  });
  if (!status.ok()) return status;
  if (!overflow.ok()) return overflow;
  if (!best.has_value()) {
    return absl::InvalidArgumentError("graph is not connected");
  }
  return *best;
}

absl::StatusOr<Weight> OracleMinBasis(const Matroid& m, const WeightMap& w) {
  if (m.size() > kBasisEnumerationLimit) {
    return absl::ResourceExhaustedError(
        absl::StrCat("ground set of ", m.size(), " elements is too large"));
  }
  std::vector<Weight> element_weight;
  for (ElementId e : m.ground()) {
    auto it = w.find(e);
    if (it == w.end()) {
      return absl::InvalidArgumentError(
          absl::StrCat("element ", e.value(), " has no weight"));
    }
    element_weight.push_back(it->second);
  }
  std::optional<Weight> best;
  absl::Status overflow;
  auto status = internal::ForEachBasis(m, [&](std::uint32_t mask) {
    Weight total = 0;
    for (std::size_t i = 0; i < element_weight.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      auto sum = CheckedAdd(total, element_weight[i]);
      if (!sum.ok()) {
        overflow = sum.status();
        return;
      }
      total = *sum;
    }
    if (!best.has_value() || total < *best) best = total;
  });
  if (!status.ok()) return status;
  if (!overflow.ok()) return overflow;
  return best.value_or(0);
}

absl::StatusOr<std::size_t> OracleMaxMatching(const BipartiteGraph& g) {
  if (g.left().size() > kMatchingOracleLimit ||
      g.right().size() > kMatchingOracleLimit) {
    return absl::ResourceExhaustedError(
        absl::StrCat("bipartite graph with ", g.left().size(), "+",
                     g.right().size(), " vertices is too large"));
  }
  const std::vector<VertexId> left(g.left().begin(), g.left().end());
  const std::vector<VertexId> right(g.right().begin(), g.right().end());
  std::vector<std::uint32_t> neighbors(left.size(), 0);
  for (const auto& [id, edge] : g.edges()) {
    neighbors[IndexOf(left, edge.left)] |= std::uint32_t{1}
                                           << IndexOf(right, edge.right);
  }
  std::unordered_map<std::uint64_t, std::size_t> memo;
  auto best = [&](auto& self, std::size_t i, std::uint32_t used) -> std::size_t {
    if (i == left.size()) return 0;
    const std::uint64_t key = (std::uint64_t{used} << 8) | i;
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::size_t result = self(self, i + 1, used);
    const std::uint32_t open = neighbors[i] & ~used;
    for (std::size_t r = 0; r < right.size(); ++r) {
      if (open >> r & 1) {
        result = std::max(result,
                          1 + self(self, i + 1, used | std::uint32_t{1} << r));
      }
    }
    memo.emplace(key, result);
    return result;
  };
  return best(best, 0, 0);
}

absl::StatusOr<std::optional<Weight>> OracleShortestPath(
    const WeightedMultigraph& g, const EdgeWeights& weights, VertexId s,
    VertexId t) {
  if (auto st = RequireWeights(g, weights); !st.ok()) return st;
  if (!g.HasVertex(s) || !g.HasVertex(t)) {
    return absl::InvalidArgumentError("s or t is not a vertex of the graph");
  }
  std::optional<Weight> best;
  absl::Status overflow;
  internal::ForEachSimplePath(g, s, t, [&](const std::vector<EdgeId>& path) {
    Weight total = 0;
    for (EdgeId e : path) {
      auto sum = CheckedAdd(total, weights.at(e));
      if (!sum.ok()) {
        overflow = sum.status();
        return;
      }
      total = *sum;
    }
    if (!best.has_value() || total < *best) best = total;
  });
  if (!overflow.ok()) return overflow;
  return best;
}

absl::StatusOr<CandidateTable> SpanningTreeTable(const WeightedMultigraph& g,
                                                 const EdgeWeights& known,
                                                 const EdgeSet& unknown) {
  CandidateTable table(Ids(unknown));
  std::vector<std::pair<int, Weight>> role;  // (unknown index or -1, weight)
  for (const auto& [id, rec] : g.edges()) {
    if (unknown.contains(id)) {
      role.emplace_back(static_cast<int>(std::distance(
                            unknown.begin(), unknown.find(id))),
                        0);
    } else {
      auto it = known.find(id);
      if (it == known.end()) {
        return absl::InvalidArgumentError(
            absl::StrCat("edge ", id.value(), " has no weight"));
      }
      role.emplace_back(-1, it->second);
    }
  }
  absl::Status overflow;
  auto status = internal::ForEachSpanningTree(g, [&](std::uint32_t mask) {
    std::uint32_t used = 0;
    Weight total = 0;
    for (std::size_t i = 0; i < role.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      if (role[i].first >= 0) {
        used |= std::uint32_t{1} << role[i].first;
      } else {
        auto sum = CheckedAdd(total, role[i].second);
        if (!sum.ok()) {
          overflow = sum.status();
          return;
        }
        total = *sum;
      }
    }
    table.Add(used, total);
  });
  if (!status.ok()) return status;
  if (!overflow.ok()) return overflow;
  return table;
}

absl::StatusOr<CandidateTable> BasisTable(const Matroid& m,
                                          const WeightMap& known,
                                          const ElementSet& unknown) {
  if (m.size() > kBasisEnumerationLimit) {
    return absl::ResourceExhaustedError(
        absl::StrCat("ground set of ", m.size(), " elements is too large"));
  }
  CandidateTable table(Ids(unknown));
  std::vector<std::pair<int, Weight>> role;
  for (ElementId e : m.ground()) {
    if (unknown.contains(e)) {
      role.emplace_back(
          static_cast<int>(std::distance(unknown.begin(), unknown.find(e))),
          0);
    } else {
      auto it = known.find(e);
      if (it == known.end()) {
        return absl::InvalidArgumentError(
            absl::StrCat("element ", e.value(), " has no weight"));
      }
      role.emplace_back(-1, it->second);
    }
  }
  absl::Status overflow;
  auto status = internal::ForEachBasis(m, [&](std::uint32_t mask) {
    std::uint32_t used = 0;
    Weight total = 0;
    for (std::size_t i = 0; i < role.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      if (role[i].first >= 0) {
        used |= std::uint32_t{1} << role[i].first;
      } else {
        auto sum = CheckedAdd(total, role[i].second);
        if (!sum.ok()) {
          overflow = sum.status();
          return;
        }
        total = *sum;
      }
    }
    table.Add(used, total);
  });
  if (!status.ok()) return status;
  if (!overflow.ok()) return overflow;
  return table;
}

absl::StatusOr<CandidateTable> PathTable(const WeightedMultigraph& g,
                                         const EdgeWeights& known,
                                         const EdgeSet& unknown, VertexId s,
                                         VertexId t) {
  if (!g.HasVertex(s) || !g.HasVertex(t)) {
    return absl::InvalidArgumentError("s or t is not a vertex of the graph");
  }
  for (const auto& [id, rec] : g.edges()) {
    if (!unknown.contains(id) && !known.contains(id)) {
      return absl::InvalidArgumentError(
          absl::StrCat("edge ", id.value(), " has no weight"));
    }
  }
  CandidateTable table(Ids(unknown));
  absl::Status overflow;
  internal::ForEachSimplePath(g, s, t, [&](const std::vector<EdgeId>& path) {
    std::uint32_t used = 0;
    Weight total = 0;
    for (EdgeId e : path) {
      if (unknown.contains(e)) {
        used |= std::uint32_t{1} << std::distance(unknown.begin(),
                                                  unknown.find(e));
        continue;
      }
      auto sum = CheckedAdd(total, known.at(e));
      if (!sum.ok()) {
        overflow = sum.status();
        return;
      }
      total = *sum;
    }
    table.Add(used, total);
  });
  if (!overflow.ok()) return overflow;
  return table;
}

}  // namespace instcomp
