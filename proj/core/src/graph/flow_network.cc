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

#include "graph/flow_network.h"

#include <algorithm>
#include <queue>

namespace instcomp::internal {

void FlowNetwork::AddArc(std::size_t from, std::size_t to,
                         std::int64_t capacity) {
  head_[from].push_back(edges_.size());
  edges_.push_back({to, capacity});
  head_[to].push_back(edges_.size());
  edges_.push_back({from, 0});
}

bool FlowNetwork::BuildLevels(std::size_t source, std::size_t sink) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<std::size_t> queue;
  level_[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const std::size_t node = queue.front();
    queue.pop();
    for (std::size_t idx : head_[node]) {
      const Edge& e = edges_[idx];
      if (e.residual > 0 && level_[e.to] < 0) {
        level_[e.to] = level_[node] + 1;
        queue.push(e.to);
      }
    }
  }
  return level_[sink] >= 0;
}

std::int64_t FlowNetwork::Push(std::size_t node, std::size_t sink,
                               std::int64_t limit) {
  if (node == sink) return limit;
  for (std::size_t& i = cursor_[node]; i < head_[node].size(); ++i) {
    const std::size_t idx = head_[node][i];
    Edge& e = edges_[idx];
    if (e.residual <= 0 || level_[e.to] != level_[node] + 1) continue;
    const std::int64_t pushed = Push(e.to, sink, std::min(limit, e.residual));
    if (pushed > 0) {
      e.residual -= pushed;
      edges_[idx ^ 1].residual += pushed;
      return pushed;
    }
  }
  return 0;
}

std::int64_t FlowNetwork::MaxFlow(std::size_t source, std::size_t sink) {
  std::int64_t total = 0;
  while (total < kInfinite && BuildLevels(source, sink)) {
    std::fill(cursor_.begin(), cursor_.end(), 0);
    while (std::int64_t pushed = Push(source, sink, kInfinite)) {
      total += pushed;
      if (total >= kInfinite) return kInfinite;
    }
  }
  return std::min(total, kInfinite);
}

std::vector<bool> FlowNetwork::ResidualReachable(std::size_t source) const {
  std::vector<bool> seen(head_.size(), false);
  std::queue<std::size_t> queue;
  seen[source] = true;
  queue.push(source);
  while (!queue.empty()) {
    const std::size_t node = queue.front();
    queue.pop();
    for (std::size_t idx : head_[node]) {
      const Edge& e = edges_[idx];
      if (e.residual > 0 && !seen[e.to]) {
        seen[e.to] = true;
        queue.push(e.to);
      }
    }
  }
  return seen;
}

}  // namespace instcomp::internal
