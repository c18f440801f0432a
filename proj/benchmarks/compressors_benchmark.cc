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

#include <cstdint>
#include <string>

#include "benchmark/benchmark.h"
#include "instcomp/compress/matching.h"
#include "instcomp/compress/matroid_compressor.h"
#include "instcomp/compress/mst.h"
#include "instcomp/compress/shortest_path.h"
#include "instcomp/graph/bipartite.h"
#include "instcomp/io/generate.h"

namespace instcomp {
namespace {

// Args: vertices, uncertain edges. Four edges per vertex.
void BM_CompressMst(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = static_cast<std::size_t>(state.range(1));
  auto inst = GenerateMst({n, 4 * n, f, 1000}, 1);
  if (!inst.ok()) {
    state.SkipWithError(inst.status().ToString().c_str());
    return;
  }
  for (auto _ : state) {
    auto bundle = CompressMst(*inst);
    benchmark::DoNotOptimize(bundle);
  }
  state.SetItemsProcessed(state.iterations() * 4 * n);
}
BENCHMARK(BM_CompressMst)
    ->Args({64, 4})
    ->Args({256, 8})
    ->Args({1024, 16})
    ->Args({4096, 16});

void BM_SolveMst(benchmark::State& state) {
  const auto f = static_cast<std::size_t>(state.range(0));
  auto inst = GenerateMst({1024, 4096, f, 1000}, 2);
  if (!inst.ok()) {
    state.SkipWithError(inst.status().ToString().c_str());
    return;
  }
  auto bundle = CompressMst(*inst);
  EdgeWeights weights;
  for (EdgeId e : inst->uncertain) weights[e] = e.value() % 17;
  for (auto _ : state) {
    auto value = SolveMst(*bundle, weights);
    benchmark::DoNotOptimize(value);
  }
}
BENCHMARK(BM_SolveMst)->Arg(4)->Arg(16)->Arg(64);

void BM_CompressShortestPath(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto inst = GenerateShortestPath({n, 4 * n, 4, 1000}, 3);
  if (!inst.ok()) {
    state.SkipWithError(inst.status().ToString().c_str());
    return;
  }
  for (auto _ : state) {
    auto bundle = CompressShortestPath(*inst);
    benchmark::DoNotOptimize(bundle);
  }
}
BENCHMARK(BM_CompressShortestPath)->Arg(64)->Arg(256)->Arg(1024);

// Args: family, ground size.
void BM_CompressMatroid(benchmark::State& state) {
  MatroidParams p;
  p.family = static_cast<MatroidFamily>(state.range(0));
  p.ground = static_cast<std::size_t>(state.range(1));
  p.f = 4;
  auto inst = GenerateMatroid(p, 4);
  if (!inst.ok()) {
    state.SkipWithError(inst.status().ToString().c_str());
    return;
  }
  for (auto _ : state) {
    auto bundle = CompressMatroid(*inst);
    benchmark::DoNotOptimize(bundle);
  }
  state.SetLabel(std::string(FamilyName(p.family)));
}
BENCHMARK(BM_CompressMatroid)
    ->ArgsProduct({{0, 1, 2, 3}, {16, 64, 128}});

// Args: vertices per side, uncertain vertices per side.
void BM_CompressMatching(benchmark::State& state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  const auto uncertain = static_cast<std::size_t>(state.range(1));
  auto inst = GenerateMatching({side, side, uncertain, uncertain, 1, 4 * side}, 5);
  if (!inst.ok()) {
    state.SkipWithError(inst.status().ToString().c_str());
    return;
  }
  for (auto _ : state) {
    auto bundle = CompressMatching(*inst);
    benchmark::DoNotOptimize(bundle);
  }
}
BENCHMARK(BM_CompressMatching)
    ->Args({32, 2})
    ->Args({128, 3})
    ->Args({512, 4});

void BM_MaxMatching(benchmark::State& state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  auto inst = GenerateMatching({side, side, 0, 0, 0, 6 * side}, 6);
  if (!inst.ok()) {
    state.SkipWithError(inst.status().ToString().c_str());
    return;
  }
  for (auto _ : state) {
    auto m = MaxMatching(inst->graph);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_MaxMatching)->Arg(128)->Arg(1024)->Arg(4096);

}  // namespace
}  // namespace instcomp

BENCHMARK_MAIN();
