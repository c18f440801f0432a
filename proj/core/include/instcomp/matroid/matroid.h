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

#ifndef INSTCOMP_MATROID_MATROID_H_
#define INSTCOMP_MATROID_MATROID_H_

#include <memory>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "instcomp/graph/bipartite.h"
#include "instcomp/graph/multigraph.h"
#include "instcomp/ids.h"
#include "instcomp/matroid/gf_matrix.h"

namespace instcomp {

class Matroid;

// Cycle matroid of a multigraph; element ids are edge ids. `loops` are
// elements that arose as self-loops under contraction and are never
// independent.
struct GraphicData {
  WeightedMultigraph graph;
  ElementSet loops;
};

struct UniformData {
  std::size_t rank = 0;
};

// One matrix column per element; independence is linear independence of the
// selected columns over GF(p).
struct LinearRepresentation {
  GfMatrix matrix;
  std::vector<ElementId> columns;
};

// Elements are right vertices; a set is independent iff it can be matched
// into the left side.
struct TransversalData {
  BipartiteGraph graph;
};

// (base \ deleted) / contracted, answered by querying `base`.
struct MinorData {
  std::shared_ptr<const Matroid> base;
  ElementSet deleted;
  ElementSet contracted;
};

// Immutable matroid value. Copies share their representation.
class Matroid {
 public:
  enum class Kind { kGraphic, kUniform, kLinear, kTransversal, kMinor };

  static absl::StatusOr<Matroid> Graphic(WeightedMultigraph graph,
                                         ElementSet loops = {});
  // Rank must not exceed the ground set size.
  static absl::StatusOr<Matroid> Uniform(std::size_t rank, ElementSet ground);
  static absl::StatusOr<Matroid> Linear(LinearRepresentation representation);
  static absl::StatusOr<Matroid> Transversal(BipartiteGraph graph);

  // Wraps this matroid behind an opaque oracle: a minor with nothing deleted
  // or contracted. Minors of the wrapper stay wrappers.
  Matroid AsOracle() const;

  Kind kind() const;
  const ElementSet& ground() const;
  std::size_t size() const { return ground().size(); }
  bool Contains(ElementId e) const { return ground().contains(e); }

  // InvalidArgument if `set` leaves the ground set.
  absl::StatusOr<bool> IsIndependent(const ElementSet& set) const;
  // Precondition: set is a subset of the ground set.
  bool IsIndependentUnchecked(const ElementSet& set) const;

  const GraphicData* graphic() const;
  const UniformData* uniform() const;
  const LinearRepresentation* linear() const;
  const TransversalData* transversal() const;
  const MinorData* minor() const;

 private:
  struct State;
  explicit Matroid(std::shared_ptr<const State> state);

  friend absl::StatusOr<Matroid> Delete(const Matroid&, const ElementSet&);
  friend absl::StatusOr<Matroid> Contract(const Matroid&, const ElementSet&);

  std::shared_ptr<const State> state_;
};

std::string_view KindName(Matroid::Kind kind);

// Ground set minus `removed`; independence inherited.
absl::StatusOr<Matroid> Delete(const Matroid& m, const ElementSet& removed);

// Ground set minus `contracted` (which must be independent); J is independent
// iff J together with `contracted` is independent in `m`. Graphic, uniform and
// linear matroids stay in their family; transversal matroids and oracle
// wrappers become (flattened) minor wrappers.
absl::StatusOr<Matroid> Contract(const Matroid& m, const ElementSet& contracted);

// M[keep], i.e. deletion of the complement.
absl::StatusOr<Matroid> Restrict(const Matroid& m, const ElementSet& keep);

struct WeightedBasis {
  ElementSet basis;
  Weight weight = 0;
};

// Greedy scan by ascending (weight, id). `weights` must cover the ground set.
absl::StatusOr<WeightedBasis> GreedyMinBasis(const Matroid& m,
                                             const WeightMap& weights);

std::size_t Rank(const Matroid& m);

absl::StatusOr<bool> IsBasis(const Matroid& m, const ElementSet& set);

// The unique circuit inside basis + e; it contains e.
absl::StatusOr<ElementSet> FundamentalCircuit(const Matroid& m,
                                              const ElementSet& basis,
                                              ElementId e);

struct ComplementedWeights {
  WeightMap weights;
  Weight ceiling = 0;
};

// w'(e) = c - w(e) with c the largest weight, so that maximum-weight bases
// under w are exactly minimum-weight bases under w'.
ComplementedWeights MaxToMinTransform(const WeightMap& weights);

absl::StatusOr<WeightMap> MergeWeights(const WeightMap& a, const WeightMap& b);

}  // namespace instcomp

#endif  // INSTCOMP_MATROID_MATROID_H_
