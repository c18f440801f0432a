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

#include "instcomp/compress/matching.h"

#include <algorithm>
#include <deque>
#include <map>
#include <utility>

#include "absl/strings/str_cat.h"

namespace instcomp {
namespace {

VertexSet Union(VertexSet a, const VertexSet& b) {
  a.insert(b.begin(), b.end());
  return a;
}

VertexSet Minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

VertexSet Reachable(const DiGraph& d, const VertexSet& sources) {
  VertexSet seen;
  std::deque<VertexId> queue;
  for (VertexId s : sources) {
    if (d.HasVertex(s) && seen.insert(s).second) queue.push_back(s);
  }
  while (!queue.empty()) {
    const VertexId at = queue.front();
    queue.pop_front();
    for (VertexId next : d.OutNeighbors(at)) {
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen;
}

}  // namespace

absl::Status ValidateMatchingInstance(const UncertainMatchingInstance& inst) {
  for (VertexId v : inst.l0) {
    if (!inst.graph.left().contains(v)) {
      return absl::InvalidArgumentError(
          absl::StrCat("L0 vertex ", v.value(), " is not a left vertex"));
    }
  }
  for (VertexId v : inst.r0) {
    if (!inst.graph.right().contains(v)) {
      return absl::InvalidArgumentError(
          absl::StrCat("R0 vertex ", v.value(), " is not a right vertex"));
    }
  }
  for (EdgeId e : inst.e0) {
    if (inst.graph.FindEdge(e) == nullptr) {
      return absl::InvalidArgumentError(
          absl::StrCat("uncertain edge ", e.value(), " is not in the graph"));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<SubdividedGraph> SubdivideUncertain(
    const UncertainMatchingInstance& inst) {
  if (auto s = ValidateMatchingInstance(inst); !s.ok()) return s;
  SubdividedGraph out;
  out.graph = inst.graph.WithoutEdges(inst.e0);
  std::uint32_t next_vertex = inst.graph.NextVertexId().value();
  std::uint32_t next_edge = inst.graph.NextEdgeId().value();
  for (EdgeId e : inst.e0) {
    const BipartiteEdge& edge = *inst.graph.FindEdge(e);
    Gadget gadget{e,
                  edge.left,
                  edge.right,
                  VertexId(next_vertex),
                  VertexId(next_vertex + 1),
                  EdgeId(next_edge),
                  EdgeId(next_edge + 1)};
    next_vertex += 2;
    next_edge += 2;
    for (const absl::Status& s :
         {out.graph.AddRight(gadget.u_prime), out.graph.AddLeft(gadget.v_prime),
          out.graph.AddEdge(gadget.outer_u, gadget.u, gadget.u_prime),
          out.graph.AddEdge(e, gadget.u_prime, gadget.v_prime),
          out.graph.AddEdge(gadget.outer_v, gadget.v_prime, gadget.v)}) {
      if (!s.ok()) return s;
    }
    out.added_right.insert(gadget.u_prime);
    out.added_left.insert(gadget.v_prime);
    out.gadgets.push_back(gadget);
  }
  return out;
}

absl::StatusOr<VertexSet> CoveringSet(const DiGraph& h, const VertexSet& l0,
                                      const VertexSet& r0,
                                      const VertexSet& free_left,
                                      const VertexSet& free_right,
                                      std::size_t threshold) {
  std::vector<VertexId> uncertain(l0.begin(), l0.end());
  uncertain.insert(uncertain.end(), r0.begin(), r0.end());
  if (uncertain.size() > threshold) {
    return absl::ResourceExhaustedError(absl::StrCat(
        uncertain.size(), " uncertain vertices exceed the exhaustive limit of ",
        threshold, " on |L0|+|R0|"));
  }
  VertexSet x;
  const std::uint64_t pairs = std::uint64_t{1} << uncertain.size();
  for (std::uint64_t mask = 0; mask < pairs; ++mask) {
    VertexSet removed;
    for (std::size_t i = 0; i < uncertain.size(); ++i) {
      if (mask >> i & 1) removed.insert(uncertain[i]);
    }
    const VertexSet sources = Union(free_left, Minus(l0, removed));
    const VertexSet sinks = Union(free_right, Minus(r0, removed));
    const VertexSet cut =
        MinVertexCut(h.WithoutVertices(removed), sources, sinks);
    x.insert(cut.begin(), cut.end());
  }
  return x;
}

ZConstruction BuildZ(const DiGraph& h, const BipartiteGraph& host,
                     const Matching& m, const VertexSet& x,
                     const VertexSet& l0, const VertexSet& r0,
                     const VertexSet& free_left, const VertexSet& free_right) {
  ZConstruction out;
  out.x_prime = Union(Union(x, l0), r0);
  for (EdgeId e : m) {
    const BipartiteEdge& edge = *host.FindEdge(e);
    if (x.contains(edge.left) || x.contains(edge.right)) {
      out.matched_at_x.insert(e);
      out.x_prime.insert(edge.left);
      out.x_prime.insert(edge.right);
    }
  }
  const std::size_t budget = l0.size() + r0.size();
  out.z = out.x_prime;
  for (VertexId v : out.x_prime) {
    const bool left = host.SideOf(v) == Side::kLeft;
    const VertexSet reach = ReachAvoiding(
        h, v, out.x_prime, left ? Direction::kForward : Direction::kBackward);
    const VertexSet& targets = left ? free_right : free_left;
    std::size_t taken = 0;
    for (VertexId w : reach) {
      if (taken == budget) break;
      if (targets.contains(w)) {
        out.z.insert(w);
        ++taken;
      }
    }
  }
  return out;
}

absl::StatusOr<MatchingBundle> CompressMatching(
    const UncertainMatchingInstance& inst, const MatchingOptions& options) {
  if (auto s = ValidateMatchingInstance(inst); !s.ok()) return s;
  const std::size_t uncertain_count =
      inst.l0.size() + inst.r0.size() + 2 * inst.e0.size();
  if (uncertain_count > options.threshold) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "|L0|+|R0| after subdividing uncertain edges is ", uncertain_count,
        ", above the exhaustive limit of ", options.threshold));
  }
  auto sub = SubdivideUncertain(inst);
  if (!sub.ok()) return sub.status();
  const BipartiteGraph& g = sub->graph;
  const VertexSet l0 = Union(inst.l0, sub->added_left);
  const VertexSet r0 = Union(inst.r0, sub->added_right);

  const Matching m = MaxMatching(g.WithoutVertices(Union(l0, r0)));
  const DiGraph h = Orient(g, m);
  VertexSet covered;
  for (EdgeId e : m) {
    covered.insert(g.FindEdge(e)->left);
    covered.insert(g.FindEdge(e)->right);
  }
  const VertexSet free_left = Minus(Minus(g.left(), l0), covered);
  const VertexSet free_right = Minus(Minus(g.right(), r0), covered);
  for (VertexId v : Reachable(h, free_left)) {
    if (free_right.contains(v)) {
      return absl::InternalError(
          "baseline matching admits an augmenting path between certain "
          "vertices");
    }
  }

  auto x = CoveringSet(h, l0, r0, free_left, free_right, options.threshold);
  if (!x.ok()) return x.status();
  for (const Gadget& gadget : sub->gadgets) {
    x->insert({gadget.u, gadget.u_prime, gadget.v_prime, gadget.v});
  }
  ZConstruction zc = BuildZ(h, g, m, *x, l0, r0, free_left, free_right);

  for (EdgeId e : m) {
    const BipartiteEdge& edge = *g.FindEdge(e);
    if (zc.z.contains(edge.left) != zc.z.contains(edge.right)) {
      return absl::InternalError(absl::StrCat(
          "matching edge ", e.value(), " has exactly one endpoint in Z"));
    }
  }
  if (zc.z.size() > zc.x_prime.size() * (1 + l0.size() + r0.size())) {
    return absl::InternalError(absl::StrCat("|Z| = ", zc.z.size(),
                                            " exceeds the inflation bound"));
  }

  const DiGraph torso = Torso(h, zc.z);
  std::map<std::pair<VertexId, VertexId>, EdgeId> lowest;
  for (const auto& [id, edge] : g.edges()) {
    lowest.try_emplace({edge.left, edge.right}, id);
  }
  BipartiteGraph compressed;
  for (VertexId v : zc.z) {
    const absl::Status s = g.SideOf(v) == Side::kLeft ? compressed.AddLeft(v)
                                                      : compressed.AddRight(v);
    if (!s.ok()) return s;
  }
  std::set<std::pair<VertexId, VertexId>> pairs;
  for (const auto& [arc, kind] : torso.arcs()) {
    const bool from_left = g.SideOf(arc.first) == Side::kLeft;
    if (from_left == (g.SideOf(arc.second) == Side::kLeft)) {
      return absl::InternalError(absl::StrCat(
          "torso arc ", arc.first.value(), "->", arc.second.value(),
          " joins two vertices of one side"));
    }
    pairs.insert(from_left ? arc : Arc{arc.second, arc.first});
  }
  std::uint32_t fresh = g.NextEdgeId().value();
  for (const auto& pair : pairs) {
    auto it = lowest.find(pair);
    const EdgeId id = it != lowest.end() ? it->second : EdgeId(fresh++);
    if (auto s = compressed.AddEdge(id, pair.first, pair.second); !s.ok()) {
      return s;
    }
  }

  VertexSet gadget_vertices;
  for (const Gadget& gadget : sub->gadgets) {
    gadget_vertices.insert({gadget.u_prime, gadget.v_prime});
  }
  compressed = compressed.WithoutVertices(gadget_vertices);
  for (const Gadget& gadget : sub->gadgets) {
    if (auto s = compressed.AddEdge(gadget.edge, gadget.u, gadget.v);
        !s.ok()) {
      return s;
    }
  }

  MatchingBundle bundle;
  bundle.graph = std::move(compressed);
  bundle.k = m.size() - zc.matched_at_x.size();
  bundle.l0 = inst.l0;
  bundle.r0 = inst.r0;
  bundle.e0 = inst.e0;
  bundle.gadgets = sub->gadgets;
  if (options.with_trace) {
    bundle.trace = MatchingTrace{m,
                                 h,
                                 l0,
                                 r0,
                                 free_left,
                                 free_right,
                                 *std::move(x),
                                 std::move(zc.matched_at_x),
                                 std::move(zc.x_prime),
                                 std::move(zc.z)};
  }
  return bundle;
}

absl::Status ValidateAssignment(const VertexSet& l0, const VertexSet& r0,
                                const EdgeSet& e0,
                                const RemovalAssignment& a) {
  for (VertexId v : a.removed_left) {
    if (!l0.contains(v)) {
      return absl::InvalidArgumentError(
          absl::StrCat("vertex ", v.value(), " is not in L0"));
    }
  }
  for (VertexId v : a.removed_right) {
    if (!r0.contains(v)) {
      return absl::InvalidArgumentError(
          absl::StrCat("vertex ", v.value(), " is not in R0"));
    }
  }
  for (EdgeId e : a.unavailable) {
    if (!e0.contains(e)) {
      return absl::InvalidArgumentError(
          absl::StrCat("edge ", e.value(), " is not in E0"));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<std::size_t> SolveMatching(const MatchingBundle& bundle,
                                          const RemovalAssignment& a) {
  if (auto s = ValidateAssignment(bundle.l0, bundle.r0, bundle.e0, a);
      !s.ok()) {
    return s;
  }
  const BipartiteGraph g =
      bundle.graph.WithoutVertices(Union(a.removed_left, a.removed_right))
          .WithoutEdges(a.unavailable);
  return MaxMatching(g).size() + bundle.k;
}

absl::StatusOr<BipartiteGraph> ExpandGadgets(const MatchingBundle& bundle) {
  EdgeSet middle;
  for (const Gadget& gadget : bundle.gadgets) middle.insert(gadget.edge);
  BipartiteGraph out = bundle.graph.WithoutEdges(middle);
  for (const Gadget& gadget : bundle.gadgets) {
    for (const absl::Status& s :
         {out.AddRight(gadget.u_prime), out.AddLeft(gadget.v_prime),
          out.AddEdge(gadget.outer_u, gadget.u, gadget.u_prime),
          out.AddEdge(gadget.edge, gadget.u_prime, gadget.v_prime),
          out.AddEdge(gadget.outer_v, gadget.v_prime, gadget.v)}) {
      if (!s.ok()) return s;
    }
  }
  return out;
}

absl::StatusOr<std::size_t> SolveMatchingExpanded(const MatchingBundle& bundle,
                                                  const RemovalAssignment& a) {
  if (auto s = ValidateAssignment(bundle.l0, bundle.r0, bundle.e0, a);
      !s.ok()) {
    return s;
  }
  auto expanded = ExpandGadgets(bundle);
  if (!expanded.ok()) return expanded.status();
  VertexSet removed = Union(a.removed_left, a.removed_right);
  for (const Gadget& gadget : bundle.gadgets) {
    if (a.unavailable.contains(gadget.edge)) {
      removed.insert({gadget.u_prime, gadget.v_prime});
    }
  }
  const std::size_t available = bundle.gadgets.size() - a.unavailable.size();
  return MaxMatching(expanded->WithoutVertices(removed)).size() + bundle.k -
         available;
}

}  // namespace instcomp
