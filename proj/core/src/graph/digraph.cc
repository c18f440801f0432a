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

#include "instcomp/graph/digraph.h"

#include <algorithm>
#include <deque>
#include <limits>

#include "graph/flow_network.h"

namespace instcomp {

void DiGraph::AddVertex(VertexId v) { vertices_.insert(v); }

void DiGraph::AddArc(VertexId from, VertexId to, ArcKind kind) {
  vertices_.insert(from);
  vertices_.insert(to);
  if (arcs_.emplace(Arc{from, to}, kind).second) {
    reverse_.emplace(Arc{to, from}, kind);
  }
}

std::optional<ArcKind> DiGraph::KindOf(VertexId from, VertexId to) const {
  auto it = arcs_.find({from, to});
  if (it == arcs_.end()) return std::nullopt;
  return it->second;
}

namespace {

std::vector<VertexId> RowOf(const std::map<Arc, ArcKind>& arcs, VertexId v) {
  std::vector<VertexId> out;
  for (auto it = arcs.lower_bound({v, VertexId(0)});
       it != arcs.end() && it->first.first == v; ++it) {
    out.push_back(it->first.second);
  }
  return out;
}

}  // namespace

std::vector<VertexId> DiGraph::OutNeighbors(VertexId v) const {
  return RowOf(arcs_, v);
}

std::vector<VertexId> DiGraph::InNeighbors(VertexId v) const {
  return RowOf(reverse_, v);
}

DiGraph DiGraph::WithoutVertices(const VertexSet& drop) const {
  DiGraph out;
  for (VertexId v : vertices_) {
    if (!drop.contains(v)) out.AddVertex(v);
  }
  for (const auto& [arc, kind] : arcs_) {
    if (!drop.contains(arc.first) && !drop.contains(arc.second)) {
      out.AddArc(arc.first, arc.second, kind);
    }
  }
  return out;
}

DiGraph DiGraph::Induced(const VertexSet& keep) const {
  DiGraph out;
  for (VertexId v : vertices_) {
    if (keep.contains(v)) out.AddVertex(v);
  }
  for (const auto& [arc, kind] : arcs_) {
    if (keep.contains(arc.first) && keep.contains(arc.second)) {
      out.AddArc(arc.first, arc.second, kind);
    }
  }
  return out;
}

DiGraph Orient(const BipartiteGraph& g, const Matching& m) {
  DiGraph d;
  for (VertexId v : g.left()) d.AddVertex(v);
  for (VertexId v : g.right()) d.AddVertex(v);
  for (const auto& [id, e] : g.edges()) {
    if (m.contains(id)) {
      d.AddArc(e.right, e.left);
    } else {
      d.AddArc(e.left, e.right);
    }
  }
  return d;
}

namespace {

struct CutResult {
  std::int64_t value;
  VertexSet vertices;
};

// Vertex v at position i splits into in-node 2i and out-node 2i+1.
CutResult SplitVertexCut(const DiGraph& d, const VertexSet& sources,
                         const VertexSet& sinks,
                         const VertexSet* cuttable) {
  using internal::FlowNetwork;
  const std::vector<VertexId> index(d.vertices().begin(), d.vertices().end());
  auto position = [&](VertexId v) {
    return static_cast<std::size_t>(
        std::lower_bound(index.begin(), index.end(), v) - index.begin());
  };
  const std::size_t n = index.size();
  const std::size_t source = 2 * n;
  const std::size_t sink = 2 * n + 1;
  FlowNetwork net(2 * n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    const bool can_cut = cuttable == nullptr || cuttable->contains(index[i]);
    net.AddArc(2 * i, 2 * i + 1, can_cut ? 1 : FlowNetwork::kInfinite);
  }
  for (const auto& [arc, kind] : d.arcs()) {
    net.AddArc(2 * position(arc.first) + 1, 2 * position(arc.second),
               FlowNetwork::kInfinite);
  }
  for (VertexId s : sources) {
    if (d.HasVertex(s)) net.AddArc(source, 2 * position(s), FlowNetwork::kInfinite);
  }
  for (VertexId t : sinks) {
    if (d.HasVertex(t)) net.AddArc(2 * position(t) + 1, sink, FlowNetwork::kInfinite);
  }
  CutResult result{net.MaxFlow(source, sink), {}};
  if (result.value >= FlowNetwork::kInfinite) return result;
  const std::vector<bool> reach = net.ResidualReachable(source);
  for (std::size_t i = 0; i < n; ++i) {
    if (reach[2 * i] && !reach[2 * i + 1]) result.vertices.insert(index[i]);
  }
  return result;
}

}  // namespace

VertexSet MinVertexCut(const DiGraph& d, const VertexSet& sources,
                       const VertexSet& sinks) {
  return SplitVertexCut(d, sources, sinks, nullptr).vertices;
}

std::optional<RestrictedCut> MinVertexCutWithin(const DiGraph& d,
                                                const VertexSet& sources,
                                                const VertexSet& sinks,
                                                const VertexSet& cuttable) {
  CutResult cut = SplitVertexCut(d, sources, sinks, &cuttable);
  if (cut.value >= internal::FlowNetwork::kInfinite) return std::nullopt;
  return RestrictedCut{static_cast<std::size_t>(cut.value),
                       std::move(cut.vertices)};
}

VertexSet ReachAvoiding(const DiGraph& d, VertexId v, const VertexSet& blocked,
                        Direction direction) {
  VertexSet reached;
  VertexSet expanded = {v};
  std::deque<VertexId> queue = {v};
  while (!queue.empty()) {
    const VertexId at = queue.front();
    queue.pop_front();
    const std::vector<VertexId> next = direction == Direction::kForward
                                           ? d.OutNeighbors(at)
                                           : d.InNeighbors(at);
    for (VertexId w : next) {
      if (w == v) continue;
      reached.insert(w);
      if (!blocked.contains(w) && expanded.insert(w).second) {
        queue.push_back(w);
      }
    }
  }
  return reached;
}

DiGraph Torso(const DiGraph& d, const VertexSet& z) {
  DiGraph out = d.Induced(z);
  for (VertexId u : z) {
    if (!d.HasVertex(u)) continue;
    // Expanding only through non-z vertices finds exactly the z vertices
    // reachable with no internal vertex in z.
    for (VertexId w : ReachAvoiding(d, u, z, Direction::kForward)) {
      if (z.contains(w)) out.AddArc(u, w, ArcKind::kShortcut);
    }
  }
  return out;
}

}  // namespace instcomp
