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

#include "instcomp/compress/mst.h"

#include <utility>

#include "absl/strings/str_cat.h"

namespace instcomp {

absl::Status ValidateMstInstance(const UncertainMstInstance& inst) {
  for (EdgeId f : inst.uncertain) {
    const EdgeRecord* rec = inst.graph.FindEdge(f);
    if (rec == nullptr) {
      return absl::InvalidArgumentError(
          absl::StrCat("uncertain edge ", f.value(), " is not in the graph"));
    }
    if (rec->weight.has_value()) {
      return absl::InvalidArgumentError(
          absl::StrCat("uncertain edge ", f.value(), " carries a weight"));
    }
  }
  for (const auto& [id, rec] : inst.graph.edges()) {
    if (!inst.uncertain.contains(id) && !rec.weight.has_value()) {
      return absl::InvalidArgumentError(
          absl::StrCat("certain edge ", id.value(), " has no weight"));
    }
  }
  if (!IsConnected(inst.graph)) {
    return absl::InvalidArgumentError("graph is not connected");
  }
  return absl::OkStatus();
}

absl::StatusOr<MstBundle> CompressMst(const UncertainMstInstance& inst,
                                      bool with_trace) {
  if (auto s = ValidateMstInstance(inst); !s.ok()) return s;
  const EdgeWeights certain = inst.graph.EmbeddedWeights();

  auto forest = KruskalMsf(inst.graph.WithoutEdges(inst.uncertain), certain);
  if (!forest.ok()) return forest.status();

  EdgeSet kept = *forest;
  kept.insert(inst.uncertain.begin(), inst.uncertain.end());
  const WeightedMultigraph g1 = inst.graph.WithEdges(kept);

  EdgeWeights zero_extended = certain;
  for (EdgeId f : inst.uncertain) zero_extended[f] = 0;
  // Uncertain edges win weight ties so none of them is closed into a cycle
  // by a zero-weight certain edge and lost to contraction.
  auto zero_tree = KruskalMsf(g1, zero_extended, inst.uncertain);
  if (!zero_tree.ok()) return zero_tree.status();

  MstBundle bundle;
  bundle.uncertain = inst.uncertain;
  std::vector<EdgeId> contracted;
  EdgeSet to_contract;
  for (EdgeId e : *zero_tree) {
    if (inst.uncertain.contains(e)) continue;
    auto sum = CheckedAdd(bundle.k, certain.at(e));
    if (!sum.ok()) return sum.status();
    bundle.k = *sum;
    contracted.push_back(e);
    to_contract.insert(e);
  }
  auto contracted_graph = ContractEdges(g1, to_contract);
  if (!contracted_graph.ok()) return contracted_graph.status();
  WeightedMultigraph graph = *std::move(contracted_graph);

  std::size_t certain_left = 0;
  for (const auto& [id, rec] : graph.edges()) {
    if (!inst.uncertain.contains(id)) ++certain_left;
  }
  for (EdgeId f : inst.uncertain) {
    if (!graph.HasEdge(f)) {
      return absl::InternalError(
          absl::StrCat("uncertain edge ", f.value(), " lost to contraction"));
    }
  }
  if (certain_left > inst.uncertain.size()) {
    return absl::InternalError(absl::StrCat(
        certain_left, " certain edges survive for ", inst.uncertain.size(),
        " uncertain ones"));
  }

  bundle.graph = std::move(graph);
  if (with_trace) {
    bundle.trace = MstTrace{*std::move(forest), std::move(kept),
                            *std::move(zero_tree), std::move(contracted)};
  }
  return bundle;
}

absl::StatusOr<Weight> SolveMst(const MstBundle& bundle,
                                const EdgeWeights& uncertain_weights) {
  for (const auto& [id, w] : uncertain_weights) {
    if (!bundle.uncertain.contains(id)) {
      return absl::InvalidArgumentError(
          absl::StrCat("edge ", id.value(), " is not uncertain"));
    }
  }
  for (EdgeId f : bundle.uncertain) {
    if (!uncertain_weights.contains(f)) {
      return absl::InvalidArgumentError(
          absl::StrCat("missing weight for uncertain edge ", f.value()));
    }
  }
  auto weights = MergeWeights(bundle.graph.EmbeddedWeights(), uncertain_weights);
  if (!weights.ok()) return weights.status();
  auto tree = KruskalMsf(bundle.graph, *weights);
  if (!tree.ok()) return tree.status();
  auto total = TotalWeight(*tree, *weights);
  if (!total.ok()) return total.status();
  return CheckedAdd(*total, bundle.k);
}

}  // namespace instcomp
