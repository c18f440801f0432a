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

#ifndef INSTCOMP_SRC_GRAPH_FLOW_NETWORK_H_
#define INSTCOMP_SRC_GRAPH_FLOW_NETWORK_H_

#include <cstdint>
#include <limits>
#include <vector>

namespace instcomp::internal {

// Dinic max-flow on a dense node range. Arcs are explored in insertion order.
class FlowNetwork {
 public:
  static constexpr std::int64_t kInfinite =
      std::numeric_limits<std::int64_t>::max() / 4;

  explicit FlowNetwork(std::size_t nodes) : head_(nodes), level_(nodes),
                                            cursor_(nodes) {}

  void AddArc(std::size_t from, std::size_t to, std::int64_t capacity);

  // Flow value, saturating at kInfinite.
  std::int64_t MaxFlow(std::size_t source, std::size_t sink);

  // Nodes reachable from `source` in the residual network of the last
  // MaxFlow call.
  std::vector<bool> ResidualReachable(std::size_t source) const;

 private:
  struct Edge {
    std::size_t to;
    std::int64_t residual;
  };

  bool BuildLevels(std::size_t source, std::size_t sink);
  std::int64_t Push(std::size_t node, std::size_t sink, std::int64_t limit);

  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> head_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace instcomp::internal

#endif  // INSTCOMP_SRC_GRAPH_FLOW_NETWORK_H_
