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

#ifndef INSTCOMP_IDS_H_
#define INSTCOMP_IDS_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <ostream>
#include <set>

#include "absl/status/statusor.h"

namespace instcomp {

// Dense, non-negative identifier tagged by the kind of object it names, so a
// vertex id cannot be passed where an edge id is expected.
template <typename Tag>
class StrongId {
 public:
  using ValueType = std::uint32_t;

  constexpr StrongId() = default;
  constexpr explicit StrongId(ValueType value) : value_(value) {}

  constexpr ValueType value() const { return value_; }

  friend constexpr auto operator<=>(StrongId, StrongId) = default;

  template <typename H>
  friend H AbslHashValue(H h, StrongId id) {
    return H::combine(std::move(h), id.value_);
  }

  friend std::ostream& operator<<(std::ostream& os, StrongId id) {
    return os << id.value_;
  }

 private:
  ValueType value_ = 0;
};

using VertexId = StrongId<struct VertexTag>;
using EdgeId = StrongId<struct EdgeTag>;
using ElementId = StrongId<struct ElementTag>;

using Weight = std::uint64_t;

using VertexSet = std::set<VertexId>;
using EdgeSet = std::set<EdgeId>;
using ElementSet = std::set<ElementId>;

using EdgeWeights = std::map<EdgeId, Weight>;
using WeightMap = std::map<ElementId, Weight>;

// Sum of two weights; OutOfRange on unsigned 64-bit overflow.
absl::StatusOr<Weight> CheckedAdd(Weight a, Weight b);

inline ElementId ToElement(EdgeId e) { return ElementId(e.value()); }
inline ElementId ToElement(VertexId v) { return ElementId(v.value()); }
inline EdgeId ToEdge(ElementId e) { return EdgeId(e.value()); }
inline VertexId ToVertex(ElementId e) { return VertexId(e.value()); }

}  // namespace instcomp

template <typename Tag>
struct std::hash<instcomp::StrongId<Tag>> {
  std::size_t operator()(instcomp::StrongId<Tag> id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value());
  }
};

#endif  // INSTCOMP_IDS_H_
