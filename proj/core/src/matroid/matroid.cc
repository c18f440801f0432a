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

#include "instcomp/matroid/matroid.h"

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>
#include <variant>

#include "absl/strings/str_cat.h"
#include "graph/disjoint_sets.h"

namespace instcomp {

struct Matroid::State {
  Kind kind;
  ElementSet ground;
  std::variant<GraphicData, UniformData, LinearRepresentation, TransversalData,
               MinorData>
      data;
  // Linear only: element -> matrix column.
  std::map<ElementId, std::size_t> column_of;
};

Matroid::Matroid(std::shared_ptr<const State> state)
    : state_(std::move(state)) {}

std::string_view KindName(Matroid::Kind kind) {
  switch (kind) {
    case Matroid::Kind::kGraphic:
      return "graphic";
    case Matroid::Kind::kUniform:
      return "uniform";
    case Matroid::Kind::kLinear:
      return "linear";
    case Matroid::Kind::kTransversal:
      return "transversal";
    case Matroid::Kind::kMinor:
      return "minor";
  }
  return "unknown";
}

absl::StatusOr<Matroid> Matroid::Graphic(WeightedMultigraph graph,
                                         ElementSet loops) {
  auto state = std::make_shared<State>();
  state->kind = Kind::kGraphic;
  for (const auto& [id, rec] : graph.edges()) state->ground.insert(ToElement(id));
  for (ElementId loop : loops) {
    if (!state->ground.insert(loop).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("loop ", loop.value(), " collides with an edge id"));
    }
  }
  state->data = GraphicData{std::move(graph), std::move(loops)};
  return Matroid(std::move(state));
}

absl::StatusOr<Matroid> Matroid::Uniform(std::size_t rank, ElementSet ground) {
  if (rank > ground.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "uniform rank ", rank, " exceeds ground size ", ground.size()));
  }
  auto state = std::make_shared<State>();
  state->kind = Kind::kUniform;
  state->ground = std::move(ground);
  state->data = UniformData{rank};
  return Matroid(std::move(state));
}

absl::StatusOr<Matroid> Matroid::Linear(LinearRepresentation representation) {
  if (representation.columns.size() != representation.matrix.cols()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "linear matroid has ", representation.columns.size(),
        " column ids for ", representation.matrix.cols(), " columns"));
  }
  auto state = std::make_shared<State>();
  state->kind = Kind::kLinear;
  for (std::size_t c = 0; c < representation.columns.size(); ++c) {
    const ElementId id = representation.columns[c];
    if (!state->ground.insert(id).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate column id ", id.value()));
    }
    state->column_of.emplace(id, c);
  }
  state->data = std::move(representation);
  return Matroid(std::move(state));
}

absl::StatusOr<Matroid> Matroid::Transversal(BipartiteGraph graph) {
  auto state = std::make_shared<State>();
  state->kind = Kind::kTransversal;
  for (VertexId v : graph.right()) state->ground.insert(ToElement(v));
  state->data = TransversalData{std::move(graph)};
  return Matroid(std::move(state));
}

Matroid Matroid::AsOracle() const {
  auto state = std::make_shared<State>();
  state->kind = Kind::kMinor;
  state->ground = ground();
  state->data = MinorData{std::make_shared<const Matroid>(*this), {}, {}};
  return Matroid(std::move(state));
}

Matroid::Kind Matroid::kind() const { return state_->kind; }
const ElementSet& Matroid::ground() const { return state_->ground; }

const GraphicData* Matroid::graphic() const {
  return std::get_if<GraphicData>(&state_->data);
}
const UniformData* Matroid::uniform() const {
  return std::get_if<UniformData>(&state_->data);
}
const LinearRepresentation* Matroid::linear() const {
  return std::get_if<LinearRepresentation>(&state_->data);
}
const TransversalData* Matroid::transversal() const {
  return std::get_if<TransversalData>(&state_->data);
}
const MinorData* Matroid::minor() const {
  return std::get_if<MinorData>(&state_->data);
}

absl::StatusOr<bool> Matroid::IsIndependent(const ElementSet& set) const {
  for (ElementId e : set) {
    if (!Contains(e)) {
      return absl::InvalidArgumentError(
          absl::StrCat("element ", e.value(), " is outside the ground set"));
    }
  }
  return IsIndependentUnchecked(set);
}

namespace {

bool GraphicIndependent(const GraphicData& data, const ElementSet& set) {
  const VertexSet& vertices = data.graph.vertices();
  const std::vector<VertexId> index(vertices.begin(), vertices.end());
  auto position = [&](VertexId v) {
    return static_cast<std::size_t>(
        std::lower_bound(index.begin(), index.end(), v) - index.begin());
  };
  internal::DisjointSets sets(index.size());
  for (ElementId e : set) {
    if (data.loops.contains(e)) return false;
    const EdgeRecord& rec = data.graph.edges().at(ToEdge(e));
    if (!sets.Union(position(rec.u), position(rec.v))) return false;
  }
  return true;
}

}  // namespace

bool Matroid::IsIndependentUnchecked(const ElementSet& set) const {
  switch (state_->kind) {
    case Kind::kGraphic:
      return GraphicIndependent(*graphic(), set);
    case Kind::kUniform:
      return set.size() <= uniform()->rank;
    case Kind::kLinear: {
      std::vector<std::size_t> columns;
      columns.reserve(set.size());
      for (ElementId e : set) columns.push_back(state_->column_of.at(e));
      return linear()->matrix.RankOfColumns(columns) == set.size();
    }
    case Kind::kTransversal: {
      VertexSet right;
      for (ElementId e : set) right.insert(ToVertex(e));
      const BipartiteGraph sub =
          transversal()->graph.WithRightRestrictedTo(right);
      return MaxMatching(sub).size() == set.size();
    }
    case Kind::kMinor: {
      const MinorData& data = *minor();
      ElementSet query = set;
      query.insert(data.contracted.begin(), data.contracted.end());
      return data.base->IsIndependentUnchecked(query);
    }
  }
  return false;
}

namespace {

absl::Status CheckSubset(const Matroid& m, const ElementSet& set) {
  for (ElementId e : set) {
    if (!m.Contains(e)) {
      return absl::InvalidArgumentError(
          absl::StrCat("element ", e.value(), " is outside the ground set"));
    }
  }
  return absl::OkStatus();
}

ElementSet Minus(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

}  // namespace

absl::StatusOr<Matroid> Delete(const Matroid& m, const ElementSet& removed) {
  if (auto s = CheckSubset(m, removed); !s.ok()) return s;
  if (removed.empty()) return m;
  const ElementSet ground = Minus(m.ground(), removed);
  switch (m.kind()) {
    case Matroid::Kind::kGraphic: {
      EdgeSet edges;
      for (ElementId e : removed) edges.insert(ToEdge(e));
      return Matroid::Graphic(m.graphic()->graph.WithoutEdges(edges),
                              Minus(m.graphic()->loops, removed));
    }
    case Matroid::Kind::kUniform:
      return Matroid::Uniform(std::min(m.uniform()->rank, ground.size()),
                              ground);
    case Matroid::Kind::kLinear: {
      const LinearRepresentation& rep = *m.linear();
      std::vector<std::size_t> keep;
      std::vector<ElementId> columns;
      for (std::size_t c = 0; c < rep.columns.size(); ++c) {
        if (!removed.contains(rep.columns[c])) {
          keep.push_back(c);
          columns.push_back(rep.columns[c]);
        }
      }
      return Matroid::Linear({rep.matrix.WithColumns(keep), std::move(columns)});
    }
    case Matroid::Kind::kTransversal: {
      VertexSet keep;
      for (ElementId e : ground) keep.insert(ToVertex(e));
      return Matroid::Transversal(
          m.transversal()->graph.WithRightRestrictedTo(keep));
    }
    case Matroid::Kind::kMinor: {
      auto state = std::make_shared<Matroid::State>();
      state->kind = Matroid::Kind::kMinor;
      state->ground = ground;
      MinorData data = *m.minor();
      data.deleted.insert(removed.begin(), removed.end());
      state->data = std::move(data);
      return Matroid(std::move(state));
    }
  }
  return absl::InternalError("unhandled matroid kind");
}

absl::StatusOr<Matroid> Contract(const Matroid& m,
                                 const ElementSet& contracted) {
  if (auto s = CheckSubset(m, contracted); !s.ok()) return s;
  if (!m.IsIndependentUnchecked(contracted)) {
    return absl::InvalidArgumentError("contracted set is dependent");
  }
  if (contracted.empty()) return m;
  const ElementSet ground = Minus(m.ground(), contracted);
  switch (m.kind()) {
    case Matroid::Kind::kGraphic: {
      EdgeSet edges;
      for (ElementId e : contracted) edges.insert(ToEdge(e));
      // Edges that became self-loops remain elements.
      EdgeSet looped;
      auto graph = ContractEdges(m.graphic()->graph, edges, &looped);
      if (!graph.ok()) return graph.status();
      ElementSet loops = m.graphic()->loops;
      for (EdgeId id : looped) loops.insert(ToElement(id));
      return Matroid::Graphic(*std::move(graph), std::move(loops));
    }
    case Matroid::Kind::kUniform:
      return Matroid::Uniform(m.uniform()->rank - contracted.size(), ground);
    case Matroid::Kind::kLinear: {
      const LinearRepresentation& rep = *m.linear();
      std::vector<std::size_t> pivots;
      for (ElementId e : contracted) {
        pivots.push_back(static_cast<std::size_t>(
            std::find(rep.columns.begin(), rep.columns.end(), e) -
            rep.columns.begin()));
      }
      auto matrix = rep.matrix.ContractColumns(pivots);
      if (!matrix.ok()) return matrix.status();
      std::vector<ElementId> columns;
      for (ElementId e : rep.columns) {
        if (!contracted.contains(e)) columns.push_back(e);
      }
      return Matroid::Linear({*std::move(matrix), std::move(columns)});
    }
    case Matroid::Kind::kTransversal: {
      auto state = std::make_shared<Matroid::State>();
      state->kind = Matroid::Kind::kMinor;
      state->ground = ground;
      state->data = MinorData{std::make_shared<const Matroid>(m), {}, contracted};
      return Matroid(std::move(state));
    }
    case Matroid::Kind::kMinor: {
      auto state = std::make_shared<Matroid::State>();
      state->kind = Matroid::Kind::kMinor;
      state->ground = ground;
      MinorData data = *m.minor();
      data.contracted.insert(contracted.begin(), contracted.end());
      state->data = std::move(data);
      return Matroid(std::move(state));
    }
  }
  return absl::InternalError("unhandled matroid kind");
}

absl::StatusOr<Matroid> Restrict(const Matroid& m, const ElementSet& keep) {
  if (auto s = CheckSubset(m, keep); !s.ok()) return s;
  return Delete(m, Minus(m.ground(), keep));
}

absl::StatusOr<WeightedBasis> GreedyMinBasis(const Matroid& m,
                                             const WeightMap& weights) {
  std::vector<std::pair<Weight, ElementId>> order;
  order.reserve(m.size());
  for (ElementId e : m.ground()) {
    auto it = weights.find(e);
    if (it == weights.end()) {
      return absl::InvalidArgumentError(
          absl::StrCat("element ", e.value(), " has no weight"));
    }
    order.emplace_back(it->second, e);
  }
  std::sort(order.begin(), order.end());
  WeightedBasis result;
  for (const auto& [w, e] : order) {
    result.basis.insert(e);
    if (m.IsIndependentUnchecked(result.basis)) {
      auto sum = CheckedAdd(result.weight, w);
      if (!sum.ok()) return sum.status();
      result.weight = *sum;
    } else {
      result.basis.erase(e);
    }
  }
  return result;
}

std::size_t Rank(const Matroid& m) {
  ElementSet independent;
  for (ElementId e : m.ground()) {
    independent.insert(e);
    if (!m.IsIndependentUnchecked(independent)) independent.erase(e);
  }
  return independent.size();
}

absl::StatusOr<bool> IsBasis(const Matroid& m, const ElementSet& set) {
  auto independent = m.IsIndependent(set);
  if (!independent.ok() || !*independent) return independent;
  for (ElementId e : m.ground()) {
    if (set.contains(e)) continue;
    ElementSet bigger = set;
    bigger.insert(e);
    if (m.IsIndependentUnchecked(bigger)) return false;
  }
  return true;
}

absl::StatusOr<ElementSet> FundamentalCircuit(const Matroid& m,
                                              const ElementSet& basis,
                                              ElementId e) {
  auto is_basis = IsBasis(m, basis);
  if (!is_basis.ok()) return is_basis.status();
  if (!*is_basis) return absl::InvalidArgumentError("set is not a basis");
  if (!m.Contains(e)) {
    return absl::InvalidArgumentError(
        absl::StrCat("element ", e.value(), " is outside the ground set"));
  }
  if (basis.contains(e)) {
    return absl::InvalidArgumentError(
        absl::StrCat("element ", e.value(), " already lies in the basis"));
  }
  // x is on the circuit iff dropping it from basis + e restores independence.
  ElementSet circuit = {e};
  ElementSet extended = basis;
  extended.insert(e);
  for (ElementId x : basis) {
    extended.erase(x);
    if (m.IsIndependentUnchecked(extended)) circuit.insert(x);
    extended.insert(x);
  }
  return circuit;
}

ComplementedWeights MaxToMinTransform(const WeightMap& weights) {
  ComplementedWeights out;
  for (const auto& [e, w] : weights) out.ceiling = std::max(out.ceiling, w);
  for (const auto& [e, w] : weights) out.weights.emplace(e, out.ceiling - w);
  return out;
}

absl::StatusOr<WeightMap> MergeWeights(const WeightMap& a, const WeightMap& b) {
  WeightMap out = a;
  for (const auto& [id, w] : b) {
    if (!out.emplace(id, w).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("element ", id.value(), " weighted twice"));
    }
  }
  return out;
}

}  // namespace instcomp
