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

#include "instcomp/graph/bipartite.h"

#include <algorithm>
#include <limits>
#include <queue>
#include <utility>
#include <vector>

#include "absl/strings/str_cat.h"

namespace instcomp {

absl::Status BipartiteGraph::AddLeft(VertexId v) {
  if (HasVertex(v)) {
    return absl::InvalidArgumentError(
        absl::StrCat("duplicate vertex ", v.value()));
  }
  left_.insert(v);
  return absl::OkStatus();
}

absl::Status BipartiteGraph::AddRight(VertexId v) {
  if (HasVertex(v)) {
    return absl::InvalidArgumentError(
        absl::StrCat("duplicate vertex ", v.value()));
  }
  right_.insert(v);
  return absl::OkStatus();
}

absl::Status BipartiteGraph::AddEdge(EdgeId id, VertexId a, VertexId b) {
  if (edges_.contains(id)) {
    return absl::InvalidArgumentError(
        absl::StrCat("duplicate edge id ", id.value()));
  }
  if (left_.contains(a) && right_.contains(b)) {
    edges_.emplace(id, BipartiteEdge{a, b});
  } else if (left_.contains(b) && right_.contains(a)) {
    edges_.emplace(id, BipartiteEdge{b, a});
  } else {
    return absl::InvalidArgumentError(absl::StrCat(
        "edge ", id.value(),
        " does not join a left vertex to a right vertex"));
  }
  return absl::OkStatus();
}

std::optional<Side> BipartiteGraph::SideOf(VertexId v) const {
  if (left_.contains(v)) return Side::kLeft;
  if (right_.contains(v)) return Side::kRight;
  return std::nullopt;
}

const BipartiteEdge* BipartiteGraph::FindEdge(EdgeId e) const {
  auto it = edges_.find(e);
  return it == edges_.end() ? nullptr : &it->second;
}

VertexId BipartiteGraph::NextVertexId() const {
  std::uint32_t next = 0;
  if (!left_.empty()) next = std::max(next, left_.rbegin()->value() + 1);
  if (!right_.empty()) next = std::max(next, right_.rbegin()->value() + 1);
  return VertexId(next);
}

EdgeId BipartiteGraph::NextEdgeId() const {
  return edges_.empty() ? EdgeId(0)
                        : EdgeId(edges_.rbegin()->first.value() + 1);
}

BipartiteGraph BipartiteGraph::WithoutVertices(
    const VertexSet& vertices) const {
  BipartiteGraph out;
  for (VertexId v : left_) {
    if (!vertices.contains(v)) out.left_.insert(v);
  }
  for (VertexId v : right_) {
    if (!vertices.contains(v)) out.right_.insert(v);
  }
  for (const auto& [id, e] : edges_) {
    if (!vertices.contains(e.left) && !vertices.contains(e.right)) {
      out.edges_.emplace(id, e);
    }
  }
  return out;
}

BipartiteGraph BipartiteGraph::WithoutEdges(const EdgeSet& edges) const {
  BipartiteGraph out;
  out.left_ = left_;
  out.right_ = right_;
  for (const auto& [id, e] : edges_) {
    if (!edges.contains(id)) out.edges_.emplace(id, e);
  }
  return out;
}

BipartiteGraph BipartiteGraph::WithRightRestrictedTo(
    const VertexSet& keep) const {
  BipartiteGraph out;
  out.left_ = left_;
  for (VertexId v : right_) {
    if (keep.contains(v)) out.right_.insert(v);
  }
  for (const auto& [id, e] : edges_) {
    if (keep.contains(e.right)) out.edges_.emplace(id, e);
  }
  return out;
}

absl::Status ValidateMatching(const BipartiteGraph& g, const Matching& m) {
  VertexSet covered;
  for (EdgeId id : m) {
    const BipartiteEdge* e = g.FindEdge(id);
    if (e == nullptr) {
      return absl::InvalidArgumentError(
          absl::StrCat("matching edge ", id.value(), " is not in the graph"));
    }
    if (!covered.insert(e->left).second || !covered.insert(e->right).second) {
      return absl::InvalidArgumentError(absl::StrCat(
          "matching edge ", id.value(), " shares a vertex with another"));
    }
  }
  return absl::OkStatus();
}

namespace {

constexpr int kFree = -1;

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteGraph& g)
      : left_(g.left().begin(), g.left().end()),
        right_(g.right().begin(), g.right().end()),
        adj_(left_.size()),
        mate_left_(left_.size(), kFree),
        mate_right_(right_.size(), kFree),
        mate_edge_(left_.size()),
        dist_(left_.size()) {
    for (const auto& [id, e] : g.edges()) {
      adj_[LeftIndex(e.left)].emplace_back(RightIndex(e.right), id);
    }
    for (auto& list : adj_) {
      // Sorted by neighbour then edge id; keep the lowest id per neighbour.
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end(),
                             [](const auto& a, const auto& b) {
                               return a.first == b.first;
                             }),
                 list.end());
    }
  }

  void Seed(const BipartiteGraph& g, const Matching& start) {
    for (EdgeId id : start) {
      const BipartiteEdge& e = *g.FindEdge(id);
      const int l = LeftIndex(e.left);
      const int r = RightIndex(e.right);
      mate_left_[l] = r;
      mate_right_[r] = l;
      mate_edge_[l] = id;
    }
  }

  Matching Run() {
    while (Layer()) {
      for (std::size_t l = 0; l < left_.size(); ++l) {
        if (mate_left_[l] == kFree) Augment(static_cast<int>(l));
      }
    }
    Matching out;
    for (std::size_t l = 0; l < left_.size(); ++l) {
      if (mate_left_[l] != kFree) out.insert(mate_edge_[l]);
    }
    return out;
  }

 private:
  static constexpr int kUnreached = std::numeric_limits<int>::max();

  int LeftIndex(VertexId v) const {
    return static_cast<int>(std::lower_bound(left_.begin(), left_.end(), v) -
                            left_.begin());
  }
  int RightIndex(VertexId v) const {
    return static_cast<int>(
        std::lower_bound(right_.begin(), right_.end(), v) - right_.begin());
  }

  // BFS layering from free left vertices; true if some free right vertex is
  // reachable along alternating paths.
  bool Layer() {
    std::queue<int> queue;
    for (std::size_t l = 0; l < left_.size(); ++l) {
      if (mate_left_[l] == kFree) {
        dist_[l] = 0;
        queue.push(static_cast<int>(l));
      } else {
        dist_[l] = kUnreached;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      const int l = queue.front();
      queue.pop();
      for (const auto& [r, id] : adj_[l]) {
        const int next = mate_right_[r];
        if (next == kFree) {
          found = true;
        } else if (dist_[next] == kUnreached) {
          dist_[next] = dist_[l] + 1;
          queue.push(next);
        }
      }
    }
    return found;
  }

  bool Augment(int l) {
    for (const auto& [r, id] : adj_[l]) {
      const int next = mate_right_[r];
      if (next == kFree || (dist_[next] == dist_[l] + 1 && Augment(next))) {
        mate_left_[l] = r;
        mate_right_[r] = l;
        mate_edge_[l] = id;
        return true;
      }
    }
    dist_[l] = kUnreached;
    return false;
  }

  std::vector<VertexId> left_;
  std::vector<VertexId> right_;
  std::vector<std::vector<std::pair<int, EdgeId>>> adj_;
  std::vector<int> mate_left_;
  std::vector<int> mate_right_;
  std::vector<EdgeId> mate_edge_;
  std::vector<int> dist_;
};

}  // namespace

Matching MaxMatching(const BipartiteGraph& g) { return HopcroftKarp(g).Run(); }

absl::StatusOr<Matching> MaxMatchingFrom(const BipartiteGraph& g,
                                         const Matching& start) {
  if (auto s = ValidateMatching(g, start); !s.ok()) return s;
  HopcroftKarp solver(g);
  solver.Seed(g, start);
  return solver.Run();
}

absl::StatusOr<std::vector<AugmentingPath>> AugmentingPathPacking(
    const BipartiteGraph& g, const Matching& m) {
  auto grown = MaxMatchingFrom(g, m);
  if (!grown.ok()) return grown.status();

  VertexSet covered_by_m;
  for (EdgeId id : m) {
    const BipartiteEdge& e = *g.FindEdge(id);
    covered_by_m.insert(e.left);
    covered_by_m.insert(e.right);
  }

  // Symmetric difference; every vertex has degree at most two in it.
  std::map<VertexId, std::vector<std::pair<EdgeId, VertexId>>> incident;
  auto add = [&](EdgeId id) {
    const BipartiteEdge& e = *g.FindEdge(id);
    incident[e.left].emplace_back(id, e.right);
    incident[e.right].emplace_back(id, e.left);
  };
  for (EdgeId id : m) {
    if (!grown->contains(id)) add(id);
  }
  for (EdgeId id : *grown) {
    if (!m.contains(id)) add(id);
  }

  std::vector<AugmentingPath> paths;
  for (const auto& [start, list] : incident) {
    if (list.size() != 1 || covered_by_m.contains(start) ||
        !g.left().contains(start)) {
      continue;
    }
    AugmentingPath path;
    path.vertices.push_back(start);
    VertexId at = start;
    EdgeId via = list.front().first;
    while (true) {
      const auto& here = incident.at(at);
      VertexId next = at;
      for (const auto& [id, other] : here) {
        if (id == via) next = other;
      }
      path.edges.push_back(via);
      path.vertices.push_back(next);
      at = next;
      const auto& there = incident.at(at);
      if (there.size() == 1) break;
      via = there[0].first == via ? there[1].first : there[0].first;
    }
    if (g.right().contains(at) && !covered_by_m.contains(at)) {
      paths.push_back(std::move(path));
    }
  }
  if (paths.size() != grown->size() - m.size()) {
    return absl::InternalError("augmenting path count disagrees with matching");
  }
  return paths;
}

}  // namespace instcomp
