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

#include "instcomp/graph/multigraph.h"

#include <algorithm>
#include <tuple>
#include <vector>

#include "absl/strings/str_cat.h"
#include "graph/disjoint_sets.h"

namespace instcomp {

absl::StatusOr<Weight> CheckedAdd(Weight a, Weight b) {
  if (a > std::numeric_limits<Weight>::max() - b) {
    return absl::OutOfRangeError(
        absl::StrCat("weight overflow adding ", a, " and ", b));
  }
  return a + b;
}

absl::Status WeightedMultigraph::AddVertex(VertexId v) {
  if (!vertices_.insert(v).second) {
    return absl::InvalidArgumentError(
        absl::StrCat("duplicate vertex ", v.value()));
  }
  return absl::OkStatus();
}

absl::Status WeightedMultigraph::AddEdge(EdgeId id, VertexId u, VertexId v,
                                         std::optional<Weight> weight) {
  if (edges_.contains(id)) {
    return absl::InvalidArgumentError(
        absl::StrCat("duplicate edge id ", id.value()));
  }
  if (!HasVertex(u) || !HasVertex(v)) {
    return absl::InvalidArgumentError(
        absl::StrCat("edge ", id.value(), " references an unknown vertex"));
  }
  if (u == v) {
    return absl::InvalidArgumentError(
        absl::StrCat("edge ", id.value(), " is a self-loop"));
  }
  edges_.emplace(id, EdgeRecord{u, v, weight});
  return absl::OkStatus();
}

const EdgeRecord* WeightedMultigraph::FindEdge(EdgeId e) const {
  auto it = edges_.find(e);
  return it == edges_.end() ? nullptr : &it->second;
}

EdgeId WeightedMultigraph::NextEdgeId() const {
  return edges_.empty() ? EdgeId(0)
                        : EdgeId(edges_.rbegin()->first.value() + 1);
}

VertexId WeightedMultigraph::NextVertexId() const {
  return vertices_.empty() ? VertexId(0)
                           : VertexId(vertices_.rbegin()->value() + 1);
}

WeightedMultigraph WeightedMultigraph::WithEdges(const EdgeSet& keep) const {
  WeightedMultigraph out;
  out.vertices_ = vertices_;
  for (const auto& [id, rec] : edges_) {
    if (keep.contains(id)) out.edges_.emplace(id, rec);
  }
  return out;
}

WeightedMultigraph WeightedMultigraph::WithoutEdges(const EdgeSet& drop) const {
  WeightedMultigraph out;
  out.vertices_ = vertices_;
  for (const auto& [id, rec] : edges_) {
    if (!drop.contains(id)) out.edges_.emplace(id, rec);
  }
  return out;
}

EdgeWeights WeightedMultigraph::EmbeddedWeights() const {
  EdgeWeights out;
  for (const auto& [id, rec] : edges_) {
    if (rec.weight.has_value()) out.emplace(id, *rec.weight);
  }
  return out;
}

absl::StatusOr<WeightedMultigraph> ContractEdge(const WeightedMultigraph& g,
                                                EdgeId e) {
  const EdgeRecord* target = g.FindEdge(e);
  if (target == nullptr) {
    return absl::NotFoundError(absl::StrCat("unknown edge ", e.value()));
  }
  if (target->u == target->v) {
    return absl::InvalidArgumentError(
        absl::StrCat("edge ", e.value(), " is a self-loop"));
  }
  const VertexId keep = std::min(target->u, target->v);
  const VertexId gone = std::max(target->u, target->v);
  auto rehome = [&](VertexId x) { return x == gone ? keep : x; };

  WeightedMultigraph out;
  for (VertexId v : g.vertices()) {
    if (v != gone) {
      if (auto s = out.AddVertex(v); !s.ok()) return s;
    }
  }
  for (const auto& [id, rec] : g.edges()) {
    if (id == e) continue;
    const VertexId a = rehome(rec.u);
    const VertexId b = rehome(rec.v);
    if (a == b) continue;
    if (auto s = out.AddEdge(id, a, b, rec.weight); !s.ok()) return s;
  }
  return out;
}

absl::StatusOr<WeightedMultigraph> ContractEdges(const WeightedMultigraph& g,
                                                 const EdgeSet& forest,
                                                 EdgeSet* dropped) {
  const std::vector<VertexId> index(g.vertices().begin(), g.vertices().end());
  auto position = [&](VertexId v) {
    return static_cast<std::size_t>(
        std::lower_bound(index.begin(), index.end(), v) - index.begin());
  };
  internal::DisjointSets sets(index.size());
  for (EdgeId e : forest) {
    const EdgeRecord* rec = g.FindEdge(e);
    if (rec == nullptr) {
      return absl::NotFoundError(absl::StrCat("unknown edge ", e.value()));
    }
    if (!sets.Union(position(rec->u), position(rec->v))) {
      return absl::InvalidArgumentError(
          absl::StrCat("edge ", e.value(), " closes a cycle"));
    }
  }
  // Positions ascend with ids, so the first member seen names its component.
  std::vector<std::size_t> smallest(index.size(), index.size());
  for (std::size_t i = 0; i < index.size(); ++i) {
    std::size_t& root = smallest[sets.Find(i)];
    if (root == index.size()) root = i;
  }
  auto rehome = [&](VertexId v) { return index[smallest[sets.Find(position(v))]]; };

  WeightedMultigraph out;
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (smallest[sets.Find(i)] == i) {
      if (auto s = out.AddVertex(index[i]); !s.ok()) return s;
    }
  }
  for (const auto& [id, rec] : g.edges()) {
    if (forest.contains(id)) continue;
    const VertexId a = rehome(rec.u);
    const VertexId b = rehome(rec.v);
    if (a == b) {
      if (dropped != nullptr) dropped->insert(id);
      continue;
    }
    if (auto s = out.AddEdge(id, a, b, rec.weight); !s.ok()) return s;
  }
  return out;
}

absl::StatusOr<EdgeSet> KruskalMsf(const WeightedMultigraph& g,
                                   const EdgeWeights& weights,
                                   const EdgeSet& preferred) {
  // (weight, not preferred, id)
  std::vector<std::tuple<Weight, bool, EdgeId>> order;
  order.reserve(g.num_edges());
  for (const auto& [id, rec] : g.edges()) {
    auto it = weights.find(id);
    if (it == weights.end()) {
      return absl::InvalidArgumentError(
          absl::StrCat("edge ", id.value(), " has no weight"));
    }
    order.emplace_back(it->second, !preferred.contains(id), id);
  }
  std::sort(order.begin(), order.end());

  const std::vector<VertexId> index(g.vertices().begin(), g.vertices().end());
  auto position = [&](VertexId v) {
    return static_cast<std::size_t>(
        std::lower_bound(index.begin(), index.end(), v) - index.begin());
  };
  internal::DisjointSets sets(index.size());
  EdgeSet forest;
  for (const auto& [w, not_preferred, id] : order) {
    const EdgeRecord& rec = g.edges().at(id);
    if (sets.Union(position(rec.u), position(rec.v))) forest.insert(id);
  }
  return forest;
}

absl::StatusOr<Weight> TotalWeight(const EdgeSet& edges,
                                   const EdgeWeights& weights) {
  Weight total = 0;
  for (EdgeId e : edges) {
    auto it = weights.find(e);
    if (it == weights.end()) {
      return absl::InvalidArgumentError(
          absl::StrCat("edge ", e.value(), " has no weight"));
    }
    auto sum = CheckedAdd(total, it->second);
    if (!sum.ok()) return sum.status();
    total = *sum;
  }
  return total;
}

bool IsConnected(const WeightedMultigraph& g) {
  if (g.num_vertices() <= 1) return true;
  const std::vector<VertexId> index(g.vertices().begin(), g.vertices().end());
  auto position = [&](VertexId v) {
    return static_cast<std::size_t>(
        std::lower_bound(index.begin(), index.end(), v) - index.begin());
  };
  internal::DisjointSets sets(index.size());
  std::size_t components = index.size();
  for (const auto& [id, rec] : g.edges()) {
    if (sets.Union(position(rec.u), position(rec.v))) --components;
  }
  return components == 1;
}

absl::StatusOr<EdgeWeights> MergeWeights(const EdgeWeights& a,
                                         const EdgeWeights& b) {
  EdgeWeights out = a;
  for (const auto& [id, w] : b) {
    if (!out.emplace(id, w).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("edge ", id.value(), " weighted twice"));
    }
  }
  return out;
}

}  // namespace instcomp
