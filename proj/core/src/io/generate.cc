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

#include "instcomp/io/generate.h"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "absl/strings/str_cat.h"
#include "instcomp/util/random.h"
#include "instcomp/util/status_macros.h"

namespace instcomp {
namespace {

template <typename T>
void Shuffle(std::vector<T>& items, SplitMix64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[rng.Below(i)]);
  }
}

// k distinct indices from [0, n), ascending.
std::vector<std::size_t> Sample(std::size_t n, std::size_t k, SplitMix64& rng) {
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(all[i], all[i + rng.Below(n - i)]);
  }
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

std::uint32_t Id(std::size_t i) { return static_cast<std::uint32_t>(i); }

struct RawGraph {
  WeightedMultigraph graph;
  EdgeSet uncertain;
};

absl::StatusOr<RawGraph> ConnectedGraph(const GraphParams& p, SplitMix64& rng) {
  if (p.n == 0) return absl::InvalidArgumentError("n must be positive");
  if (p.m + 1 < p.n) {
    return absl::InvalidArgumentError(absl::StrCat(
        "m = ", p.m, " edges cannot connect n = ", p.n, " vertices"));
  }
  if (p.m > 0 && p.n < 2) {
    return absl::InvalidArgumentError("edges need at least two vertices");
  }
  if (p.f > p.m) {
    return absl::InvalidArgumentError(
        absl::StrCat("f = ", p.f, " exceeds m = ", p.m));
  }
  std::vector<std::size_t> order(p.n);
  std::iota(order.begin(), order.end(), 0);
  Shuffle(order, rng);
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (std::size_t i = 1; i < p.n; ++i) {
    ends.emplace_back(order[i], order[rng.Below(i)]);
  }
  while (ends.size() < p.m) {
    const std::size_t u = rng.Below(p.n);
    std::size_t v = rng.Below(p.n - 1);
    if (v >= u) ++v;
    ends.emplace_back(u, v);
  }
  Shuffle(ends, rng);

  RawGraph out;
  for (std::size_t v = 0; v < p.n; ++v) {
    INSTCOMP_RETURN_IF_ERROR(out.graph.AddVertex(VertexId(Id(v))));
  }
  std::vector<std::size_t> uncertain = Sample(p.m, p.f, rng);
  for (std::size_t i : uncertain) out.uncertain.insert(EdgeId(Id(i)));
  for (std::size_t i = 0; i < ends.size(); ++i) {
    std::optional<Weight> w;
    if (!out.uncertain.contains(EdgeId(Id(i)))) w = rng.Between(0, p.weight_max);
    INSTCOMP_RETURN_IF_ERROR(out.graph.AddEdge(EdgeId(Id(i)),
                                               VertexId(Id(ends[i].first)),
                                               VertexId(Id(ends[i].second)), w));
  }
  return out;
}

absl::StatusOr<Matroid> GraphicFamily(std::size_t ground, SplitMix64& rng) {
  const std::size_t n = rng.Between(2, std::max<std::size_t>(2, ground / 2 + 2));
  WeightedMultigraph g;
  for (std::size_t v = 0; v < n; ++v) {
    INSTCOMP_RETURN_IF_ERROR(g.AddVertex(VertexId(Id(v))));
  }
  for (std::size_t e = 0; e < ground; ++e) {
    const std::size_t u = rng.Below(n);
    std::size_t v = rng.Below(n - 1);
    if (v >= u) ++v;
    INSTCOMP_RETURN_IF_ERROR(
        g.AddEdge(EdgeId(Id(e)), VertexId(Id(u)), VertexId(Id(v))));
  }
  return Matroid::Graphic(std::move(g));
}

absl::StatusOr<Matroid> LinearFamily(std::size_t ground, std::uint64_t p,
                                     SplitMix64& rng) {
  const std::size_t rows =
      ground == 0 ? 1 : rng.Between(1, std::min<std::size_t>(ground, 5));
  std::vector<std::vector<std::int64_t>> matrix(
      rows, std::vector<std::int64_t>(ground, 0));
  for (std::size_t c = 0; c < ground; ++c) {
    if (c >= 2 && rng.Chance(1, 3)) {
      // A combination of two earlier columns, to force dependencies.
      const std::size_t a = rng.Below(c);
      const std::size_t b = rng.Below(c);
      const std::uint64_t x = rng.Below(p);
      const std::uint64_t y = rng.Below(p);
      for (std::size_t r = 0; r < rows; ++r) {
        const std::uint64_t va = static_cast<std::uint64_t>(matrix[r][a]);
        const std::uint64_t vb = static_cast<std::uint64_t>(matrix[r][b]);
        matrix[r][c] = static_cast<std::int64_t>((x * va % p + y * vb % p) % p);
      }
      continue;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (rng.Chance(1, 2)) {
        matrix[r][c] = static_cast<std::int64_t>(rng.Between(1, p - 1));
      }
    }
  }
  INSTCOMP_ASSIGN_OR_RETURN(GfMatrix m, GfMatrix::FromRows(p, ground, matrix));
  std::vector<ElementId> columns;
  for (std::size_t c = 0; c < ground; ++c) columns.push_back(ElementId(Id(c)));
  return Matroid::Linear({std::move(m), std::move(columns)});
}

absl::StatusOr<Matroid> TransversalFamily(std::size_t ground, SplitMix64& rng) {
  const std::size_t left = rng.Between(1, ground / 2 + 1);
  BipartiteGraph g;
  for (std::size_t i = 0; i < left; ++i) {
    INSTCOMP_RETURN_IF_ERROR(g.AddLeft(VertexId(Id(ground + i))));
  }
  for (std::size_t e = 0; e < ground; ++e) {
    INSTCOMP_RETURN_IF_ERROR(g.AddRight(VertexId(Id(e))));
  }
  std::uint32_t next = 0;
  for (std::size_t i = 0; i < left; ++i) {
    for (std::size_t e = 0; e < ground; ++e) {
      if (!rng.Chance(2, 5)) continue;
      INSTCOMP_RETURN_IF_ERROR(
          g.AddEdge(EdgeId(next++), VertexId(Id(ground + i)), VertexId(Id(e))));
    }
  }
  return Matroid::Transversal(std::move(g));
}

}  // namespace

absl::StatusOr<UncertainMstInstance> GenerateMst(const GraphParams& params,
                                                 std::uint64_t seed) {
  SplitMix64 rng(seed);
  INSTCOMP_ASSIGN_OR_RETURN(RawGraph raw, ConnectedGraph(params, rng));
  return UncertainMstInstance{std::move(raw.graph), std::move(raw.uncertain)};
}

absl::StatusOr<ShortestPathInstance> GenerateShortestPath(
    const GraphParams& params, std::uint64_t seed) {
  if (params.n < 2) {
    return absl::InvalidArgumentError("shortest path needs two vertices");
  }
  SplitMix64 rng(seed);
  INSTCOMP_ASSIGN_OR_RETURN(RawGraph raw, ConnectedGraph(params, rng));
  const std::vector<std::size_t> ends = Sample(params.n, 2, rng);
  const bool swap = rng.Chance(1, 2);
  ShortestPathInstance inst;
  inst.graph = std::move(raw.graph);
  inst.uncertain = std::move(raw.uncertain);
  inst.s = VertexId(Id(ends[swap ? 1 : 0]));
  inst.t = VertexId(Id(ends[swap ? 0 : 1]));
  return inst;
}

std::string_view FamilyName(MatroidFamily family) {
  switch (family) {
    case MatroidFamily::kGraphic:
      return "graphic";
    case MatroidFamily::kUniform:
      return "uniform";
    case MatroidFamily::kLinear:
      return "linear";
    case MatroidFamily::kTransversal:
      return "transversal";
  }
  return "unknown";
}

absl::StatusOr<MatroidFamily> ParseFamily(std::string_view name) {
  for (MatroidFamily f : {MatroidFamily::kGraphic, MatroidFamily::kUniform,
                          MatroidFamily::kLinear, MatroidFamily::kTransversal}) {
    if (name == FamilyName(f)) return f;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown matroid family \"", std::string(name), "\""));
}

absl::StatusOr<UncertainMatroidInstance> GenerateMatroid(
    const MatroidParams& params, std::uint64_t seed) {
  if (params.f > params.ground) {
    return absl::InvalidArgumentError(absl::StrCat(
        "f = ", params.f, " exceeds the ground set size ", params.ground));
  }
  SplitMix64 rng(seed);
  absl::StatusOr<Matroid> m = absl::InternalError("unreachable");
  switch (params.family) {
    case MatroidFamily::kGraphic:
      if (params.ground > 0) {
        m = GraphicFamily(params.ground, rng);
      } else {
        m = Matroid::Graphic(WeightedMultigraph());
      }
      break;
    case MatroidFamily::kUniform: {
      ElementSet ground;
      for (std::size_t e = 0; e < params.ground; ++e) ground.insert(ElementId(Id(e)));
      m = Matroid::Uniform(rng.Between(0, params.ground), std::move(ground));
      break;
    }
    case MatroidFamily::kLinear:
      m = LinearFamily(params.ground, params.prime, rng);
      break;
    case MatroidFamily::kTransversal:
      m = TransversalFamily(params.ground, rng);
      break;
  }
  if (!m.ok()) return m.status();
  UncertainMatroidInstance inst{*std::move(m), {}, {}};
  for (std::size_t i : Sample(params.ground, params.f, rng)) {
    inst.uncertain.insert(ElementId(Id(i)));
  }
  for (ElementId e : inst.matroid.ground()) {
    if (!inst.uncertain.contains(e)) {
      inst.weights.emplace(e, rng.Between(0, params.weight_max));
    }
  }
  return inst;
}

absl::StatusOr<UncertainMatchingInstance> GenerateMatching(
    const MatchingParams& params, std::uint64_t seed) {
  const std::size_t pairs = params.left * params.right;
  const std::size_t m = params.m != 0 ? params.m
                                      : std::max(params.e0, (pairs + 2) / 3);
  if (params.l0 > params.left || params.r0 > params.right) {
    return absl::InvalidArgumentError("more uncertain vertices than vertices");
  }
  if (m > pairs) {
    return absl::InvalidArgumentError(
        absl::StrCat("m = ", m, " exceeds the ", pairs, " left-right pairs"));
  }
  if (params.e0 > m) {
    return absl::InvalidArgumentError(
        absl::StrCat("e0 = ", params.e0, " exceeds m = ", m));
  }
  SplitMix64 rng(seed);
  UncertainMatchingInstance inst;
  for (std::size_t i = 0; i < params.left; ++i) {
    INSTCOMP_RETURN_IF_ERROR(inst.graph.AddLeft(VertexId(Id(i))));
  }
  for (std::size_t j = 0; j < params.right; ++j) {
    INSTCOMP_RETURN_IF_ERROR(inst.graph.AddRight(VertexId(Id(params.left + j))));
  }
  std::vector<std::size_t> chosen = Sample(pairs, m, rng);
  Shuffle(chosen, rng);
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    const std::size_t l = chosen[i] / params.right;
    const std::size_t r = params.left + chosen[i] % params.right;
    INSTCOMP_RETURN_IF_ERROR(
        inst.graph.AddEdge(EdgeId(Id(i)), VertexId(Id(l)), VertexId(Id(r))));
  }
  for (std::size_t i : Sample(params.left, params.l0, rng)) {
    inst.l0.insert(VertexId(Id(i)));
  }
  for (std::size_t j : Sample(params.right, params.r0, rng)) {
    inst.r0.insert(VertexId(Id(params.left + j)));
  }
  for (std::size_t e : Sample(m, params.e0, rng)) inst.e0.insert(EdgeId(Id(e)));
  return inst;
}

}  // namespace instcomp
