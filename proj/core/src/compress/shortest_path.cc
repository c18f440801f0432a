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

#include "instcomp/compress/shortest_path.h"

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

#include "absl/strings/str_cat.h"

namespace instcomp {

absl::Status ValidateShortestPathInstance(const ShortestPathInstance& inst) {
  if (!inst.graph.HasVertex(inst.s) || !inst.graph.HasVertex(inst.t)) {
    return absl::InvalidArgumentError("s or t is not a vertex of the graph");
  }
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
  return absl::OkStatus();
}

absl::StatusOr<DistanceTree> Dijkstra(const WeightedMultigraph& g,
                                      const EdgeWeights& weights,
                                      VertexId source) {
  std::map<VertexId, std::vector<std::pair<VertexId, Weight>>> adjacent;
  for (const auto& [id, rec] : g.edges()) {
    auto it = weights.find(id);
    if (it == weights.end()) {
      return absl::InvalidArgumentError(
          absl::StrCat("edge ", id.value(), " has no weight"));
    }
    adjacent[rec.u].emplace_back(rec.v, it->second);
    adjacent[rec.v].emplace_back(rec.u, it->second);
  }
  DistanceTree tree;
  using Entry = std::pair<Weight, VertexId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  tree.distance[source] = 0;
  queue.emplace(0, source);
  while (!queue.empty()) {
    const auto [d, at] = queue.top();
    queue.pop();
    if (d != tree.distance.at(at)) continue;
    for (const auto& [next, w] : adjacent[at]) {
      auto sum = CheckedAdd(d, w);
      if (!sum.ok()) return sum.status();
      auto it = tree.distance.find(next);
      if (it == tree.distance.end() || *sum < it->second) {
        tree.distance[next] = *sum;
        tree.parent[next] = at;
        queue.emplace(*sum, next);
      }
    }
  }
  return tree;
}

absl::StatusOr<ShortestPathBundle> CompressShortestPath(
    const ShortestPathInstance& inst) {
  if (auto s = ValidateShortestPathInstance(inst); !s.ok()) return s;
  VertexSet terminals = {inst.s, inst.t};
  for (EdgeId f : inst.uncertain) {
    const EdgeRecord& rec = inst.graph.edges().at(f);
    terminals.insert(rec.u);
    terminals.insert(rec.v);
  }
  const WeightedMultigraph certain = inst.graph.WithoutEdges(inst.uncertain);
  const EdgeWeights weights = certain.EmbeddedWeights();

  ShortestPathBundle bundle;
  bundle.uncertain = inst.uncertain;
  bundle.s = inst.s;
  bundle.t = inst.t;
  for (VertexId v : terminals) {
    if (auto s = bundle.graph.AddVertex(v); !s.ok()) return s;
  }
  EdgeId next_id = inst.graph.NextEdgeId();
  for (VertexId u : terminals) {
    auto tree = Dijkstra(certain, weights, u);
    if (!tree.ok()) return tree.status();
    for (auto it = terminals.upper_bound(u); it != terminals.end(); ++it) {
      const VertexId v = *it;
      auto found = tree->distance.find(v);
      if (found == tree->distance.end()) continue;
      std::vector<VertexId> interior;
      for (VertexId at = tree->parent.at(v); at != u;
           at = tree->parent.at(at)) {
        interior.push_back(at);
      }
      std::reverse(interior.begin(), interior.end());
      if (auto s = bundle.graph.AddEdge(next_id, u, v, found->second);
          !s.ok()) {
        return s;
      }
      bundle.labels.emplace(next_id, std::move(interior));
      next_id = EdgeId(next_id.value() + 1);
    }
  }
  for (EdgeId f : inst.uncertain) {
    const EdgeRecord& rec = inst.graph.edges().at(f);
    if (auto s = bundle.graph.AddEdge(f, rec.u, rec.v); !s.ok()) return s;
  }
  return bundle;
}

absl::StatusOr<std::optional<Weight>> SolveShortestPath(
    const ShortestPathBundle& bundle, const EdgeWeights& uncertain_weights) {
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
  auto tree = Dijkstra(bundle.graph, *weights, bundle.s);
  if (!tree.ok()) return tree.status();
  auto it = tree->distance.find(bundle.t);
  if (it == tree->distance.end()) return std::optional<Weight>();
  return std::optional<Weight>(it->second + bundle.k);
}

}  // namespace instcomp
