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

#include "instcomp/compress/matroid_compressor.h"

#include <utility>

#include "absl/strings/str_cat.h"

namespace instcomp {

absl::Status ValidateMatroidInstance(const UncertainMatroidInstance& inst) {
  for (ElementId f : inst.uncertain) {
    if (!inst.matroid.Contains(f)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "uncertain element ", f.value(), " is outside the ground set"));
    }
    if (inst.weights.contains(f)) {
      return absl::InvalidArgumentError(
          absl::StrCat("uncertain element ", f.value(), " carries a weight"));
    }
  }
  for (const auto& [e, w] : inst.weights) {
    if (!inst.matroid.Contains(e)) {
      return absl::InvalidArgumentError(
          absl::StrCat("weighted element ", e.value(),
                       " is outside the ground set"));
    }
  }
  for (ElementId e : inst.matroid.ground()) {
    if (!inst.uncertain.contains(e) && !inst.weights.contains(e)) {
      return absl::InvalidArgumentError(
          absl::StrCat("certain element ", e.value(), " has no weight"));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<MatroidBundle> CompressMatroid(
    const UncertainMatroidInstance& inst, bool with_trace) {
  if (auto s = ValidateMatroidInstance(inst); !s.ok()) return s;

  auto certain = Delete(inst.matroid, inst.uncertain);
  if (!certain.ok()) return certain.status();
  auto basis = GreedyMinBasis(*certain, inst.weights);
  if (!basis.ok()) return basis.status();

  ElementSet kept = basis->basis;
  kept.insert(inst.uncertain.begin(), inst.uncertain.end());
  auto restricted = Restrict(inst.matroid, kept);
  if (!restricted.ok()) return restricted.status();

  WeightMap zero_extended;
  for (ElementId e : basis->basis) zero_extended.emplace(e, inst.weights.at(e));
  for (ElementId f : inst.uncertain) zero_extended.emplace(f, 0);
  auto zero_basis = GreedyMinBasis(*restricted, zero_extended);
  if (!zero_basis.ok()) return zero_basis.status();

  ElementSet contracted;
  for (ElementId e : zero_basis->basis) {
    if (!inst.uncertain.contains(e)) contracted.insert(e);
  }
  auto minor = Contract(*restricted, contracted);
  if (!minor.ok()) return minor.status();

  MatroidBundle bundle{*std::move(minor), inst.uncertain, {}, 0, std::nullopt};
  // Uncertain weights are zero, so the zero-extended weight is exactly the
  // certain weight of the contracted elements.
  bundle.k = zero_basis->weight;
  for (ElementId e : bundle.matroid.ground()) {
    if (!inst.uncertain.contains(e)) bundle.weights.emplace(e, inst.weights.at(e));
  }

  const std::size_t f = inst.uncertain.size();
  if (bundle.matroid.size() > 2 * f || bundle.weights.size() > f) {
    return absl::InternalError(absl::StrCat(
        "compressed ground set has ", bundle.matroid.size(), " elements, ",
        bundle.weights.size(), " certain, for ", f, " uncertain"));
  }
  for (ElementId e : inst.uncertain) {
    if (!bundle.matroid.Contains(e)) {
      return absl::InternalError(
          absl::StrCat("uncertain element ", e.value(), " was lost"));
    }
  }
  if (with_trace) {
    bundle.trace = MatroidTrace{std::move(basis->basis), std::move(kept),
                                std::move(zero_basis->basis)};
  }
  return bundle;
}

absl::StatusOr<Weight> SolveMatroid(const MatroidBundle& bundle,
                                    const WeightMap& uncertain_weights) {
  for (const auto& [id, w] : uncertain_weights) {
    if (!bundle.uncertain.contains(id)) {
      return absl::InvalidArgumentError(
          absl::StrCat("element ", id.value(), " is not uncertain"));
    }
  }
  for (ElementId f : bundle.uncertain) {
    if (!uncertain_weights.contains(f)) {
      return absl::InvalidArgumentError(
          absl::StrCat("missing weight for uncertain element ", f.value()));
    }
  }
  auto weights = MergeWeights(bundle.weights, uncertain_weights);
  if (!weights.ok()) return weights.status();
  auto basis = GreedyMinBasis(bundle.matroid, *weights);
  if (!basis.ok()) return basis.status();
  return CheckedAdd(basis->weight, bundle.k);
}

}  // namespace instcomp
