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

#include "instcomp/verify/verify.h"

#include <algorithm>
#include <chrono>
#include <functional>
#include <thread>
#include <utility>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "instcomp/util/random.h"
#include "instcomp/verify/oracles.h"

namespace instcomp {

std::string_view TargetName(VerifyTarget target) {
  switch (target) {
    case VerifyTarget::kMst:
      return "mst";
    case VerifyTarget::kMatroid:
      return "matroid";
    case VerifyTarget::kMatching:
      return "matching";
    case VerifyTarget::kShortestPath:
      return "shortest-path";
  }
  return "unknown";
}

std::string_view ModeName(VerifyMode mode) {
  return mode == VerifyMode::kExhaustive ? "exhaustive" : "sampled";
}

namespace {

using Evaluate =
    std::function<absl::StatusOr<std::optional<Mismatch>>(std::uint64_t)>;

struct Outcome {
  std::uint64_t total = 0;
  std::vector<Mismatch> mismatches;
};

// Runs eval(0..total-1) on `jobs` threads. Results are merged by index, so
// the outcome does not depend on scheduling.
absl::StatusOr<Outcome> Run(std::uint64_t total, unsigned jobs,
                            const Evaluate& eval) {
  jobs = std::max(1u, jobs);
  struct Slot {
    std::vector<std::pair<std::uint64_t, Mismatch>> found;
    std::optional<std::pair<std::uint64_t, absl::Status>> error;
  };
  std::vector<Slot> slots(jobs);
  auto work = [&](unsigned job) {
    Slot& slot = slots[job];
    for (std::uint64_t i = job; i < total; i += jobs) {
      auto result = eval(i);
      if (!result.ok()) {
        slot.error = {i, result.status()};
        return;
      }
      if (result->has_value()) slot.found.emplace_back(i, **std::move(result));
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(work, j);
    for (std::thread& t : threads) t.join();
  }
  std::optional<std::pair<std::uint64_t, absl::Status>> first_error;
  std::vector<std::pair<std::uint64_t, Mismatch>> found;
  for (Slot& slot : slots) {
    if (slot.error.has_value() &&
        (!first_error.has_value() || slot.error->first < first_error->first)) {
      first_error = slot.error;
    }
    for (auto& entry : slot.found) found.push_back(std::move(entry));
  }
  if (first_error.has_value()) return first_error->second;
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Outcome outcome{total, {}};
  for (auto& [i, mismatch] : found) outcome.mismatches.push_back(std::move(mismatch));
  return outcome;
}

absl::StatusOr<std::uint64_t> ExhaustiveCount(std::uint64_t radix,
                                              std::size_t digits,
                                              std::uint64_t budget) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < digits; ++i) {
    if (count > budget / radix) {
      return absl::ResourceExhaustedError(absl::StrCat(
          radix, "^", digits, " instantiations exceed the budget of ", budget));
    }
    count *= radix;
  }
  if (count > budget) {
    return absl::ResourceExhaustedError(absl::StrCat(
        count, " instantiations exceed the budget of ", budget));
  }
  return count;
}

absl::StatusOr<std::uint64_t> PlanSize(const VerificationPlan& plan,
                                       std::uint64_t radix,
                                       std::size_t digits) {
  if (plan.mode == VerifyMode::kSampled) {
    if (plan.samples > plan.budget) {
      return absl::ResourceExhaustedError(absl::StrCat(
          plan.samples, " samples exceed the budget of ", plan.budget));
    }
    return plan.samples;
  }
  return ExhaustiveCount(radix, digits, plan.budget);
}

// Unknown weights for instantiation i.
std::vector<Weight> WeightsFor(const VerificationPlan& plan, std::size_t n,
                               std::uint64_t i) {
  std::vector<Weight> values(n);
  if (plan.mode == VerifyMode::kExhaustive) {
    for (std::size_t d = 0; d < n; ++d) {
      values[d] = i % (plan.weight_max + 1);
      i /= plan.weight_max + 1;
    }
  } else {
    SplitMix64 rng = SplitMix64(plan.seed).Split(i);
    for (Weight& v : values) v = rng.Between(0, plan.weight_max);
  }
  return values;
}

std::string DescribeWeights(std::string_view prefix,
                            const std::vector<std::uint32_t>& ids,
                            const std::vector<Weight>& values) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    parts.push_back(absl::StrCat(std::string(prefix), ids[i], "=", values[i]));
  }
  return parts.empty() ? "(none)" : absl::StrJoin(parts, ",");
}

VerificationReport MakeReport(VerifyTarget target, const VerificationPlan& plan,
                              Outcome outcome,
                              std::chrono::steady_clock::time_point start) {
  VerificationReport report;
  report.target = target;
  report.mode = plan.mode;
  report.total = outcome.total;
  report.mismatches = std::move(outcome.mismatches);
  report.passed = report.mismatches.empty();
  report.seed = plan.seed;
  report.wall_seconds = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return report;
}

std::optional<Mismatch> Compare(std::string assignment,
                                std::optional<Weight> original,
                                std::optional<Weight> solved, Weight k) {
  if (original == solved) return std::nullopt;
  std::optional<Weight> compressed;
  if (solved.has_value()) compressed = *solved - std::min(*solved, k);
  return Mismatch{std::move(assignment), original, compressed, k};
}

}  // namespace

absl::StatusOr<VerificationReport> VerifyMst(const UncertainMstInstance& inst,
                                             const MstBundle& bundle,
                                             const VerificationPlan& plan) {
  const auto start = std::chrono::steady_clock::now();
  if (inst.uncertain != bundle.uncertain) {
    return absl::FailedPreconditionError(
        "bundle and instance declare different uncertain edges");
  }
  if (auto s = ValidateMstInstance(inst); !s.ok()) return s;
  auto total = PlanSize(plan, plan.weight_max + 1, inst.uncertain.size());
  if (!total.ok()) return total.status();

  const EdgeWeights certain = inst.graph.EmbeddedWeights();
  std::optional<CandidateTable> table;
  if (inst.graph.num_edges() <= 20) {
    auto built = SpanningTreeTable(inst.graph, certain, inst.uncertain);
    if (!built.ok()) return built.status();
    table = *std::move(built);
  }
  const std::vector<EdgeId> ids(inst.uncertain.begin(), inst.uncertain.end());
  std::vector<std::uint32_t> raw;
  for (EdgeId e : ids) raw.push_back(e.value());

  auto outcome = Run(*total, plan.jobs,
                     [&](std::uint64_t i) -> absl::StatusOr<std::optional<Mismatch>> {
    const std::vector<Weight> values = WeightsFor(plan, ids.size(), i);
    EdgeWeights assigned;
    for (std::size_t d = 0; d < ids.size(); ++d) assigned[ids[d]] = values[d];
    std::optional<Weight> original;
    if (table.has_value()) {
      auto best = table->Minimum(values);
      if (!best.ok()) return best.status();
      original = *best;
    } else {
      auto merged = MergeWeights(certain, assigned);
      if (!merged.ok()) return merged.status();
      auto best = OracleMst(inst.graph, *merged);
      if (!best.ok()) return best.status();
      original = *best;
    }
    auto solved = SolveMst(bundle, assigned);
    if (!solved.ok()) return solved.status();
    return Compare(DescribeWeights("e", raw, values), original, *solved,
                   bundle.k);
  });
  if (!outcome.ok()) return outcome.status();
  return MakeReport(VerifyTarget::kMst, plan, *std::move(outcome), start);
}

absl::StatusOr<VerificationReport> VerifyMatroid(
    const UncertainMatroidInstance& inst, const MatroidBundle& bundle,
    const VerificationPlan& plan) {
  const auto start = std::chrono::steady_clock::now();
  if (inst.uncertain != bundle.uncertain) {
    return absl::FailedPreconditionError(
        "bundle and instance declare different uncertain elements");
  }
  if (auto s = ValidateMatroidInstance(inst); !s.ok()) return s;
  auto total = PlanSize(plan, plan.weight_max + 1, inst.uncertain.size());
  if (!total.ok()) return total.status();
  auto table = BasisTable(inst.matroid, inst.weights, inst.uncertain);
  if (!table.ok()) return table.status();
  const std::vector<ElementId> ids(inst.uncertain.begin(),
                                   inst.uncertain.end());

  auto outcome = Run(*total, plan.jobs,
                     [&](std::uint64_t i) -> absl::StatusOr<std::optional<Mismatch>> {
    const std::vector<Weight> values = WeightsFor(plan, ids.size(), i);
    WeightMap assigned;
    for (std::size_t d = 0; d < ids.size(); ++d) assigned[ids[d]] = values[d];
    auto original = table->Minimum(values);
    if (!original.ok()) return original.status();
    auto solved = SolveMatroid(bundle, assigned);
    if (!solved.ok()) return solved.status();
    return Compare(DescribeWeights("x", table->unknown_ids(), values),
                   *original, *solved, bundle.k);
  });
  if (!outcome.ok()) return outcome.status();
  return MakeReport(VerifyTarget::kMatroid, plan, *std::move(outcome), start);
}

absl::StatusOr<VerificationReport> VerifyMatching(
    const UncertainMatchingInstance& inst, const MatchingBundle& bundle,
    const VerificationPlan& plan) {
  const auto start = std::chrono::steady_clock::now();
  if (inst.l0 != bundle.l0 || inst.r0 != bundle.r0 || inst.e0 != bundle.e0) {
    return absl::FailedPreconditionError(
        "bundle and instance declare different uncertain sets");
  }
  if (auto s = ValidateMatchingInstance(inst); !s.ok()) return s;
  const std::vector<VertexId> left(inst.l0.begin(), inst.l0.end());
  const std::vector<VertexId> right(inst.r0.begin(), inst.r0.end());
  const std::vector<EdgeId> edges(inst.e0.begin(), inst.e0.end());
  const std::size_t bits = left.size() + right.size() + edges.size();
  auto total = PlanSize(plan, 2, bits);
  if (!total.ok()) return total.status();

  auto outcome = Run(*total, plan.jobs,
                     [&](std::uint64_t i) -> absl::StatusOr<std::optional<Mismatch>> {
    std::vector<bool> drop(bits);
    if (plan.mode == VerifyMode::kExhaustive) {
      for (std::size_t b = 0; b < bits; ++b) drop[b] = i >> b & 1;
    } else {
      SplitMix64 rng = SplitMix64(plan.seed).Split(i);
      for (std::size_t b = 0; b < bits; ++b) drop[b] = rng.Chance(1, 2);
    }
    RemovalAssignment a;
    std::size_t b = 0;
    for (VertexId v : left) {
      if (drop[b++]) a.removed_left.insert(v);
    }
    for (VertexId v : right) {
      if (drop[b++]) a.removed_right.insert(v);
    }
    for (EdgeId e : edges) {
      if (drop[b++]) a.unavailable.insert(e);
    }
    VertexSet removed = a.removed_left;
    removed.insert(a.removed_right.begin(), a.removed_right.end());
    auto original = OracleMaxMatching(
        inst.graph.WithoutVertices(removed).WithoutEdges(a.unavailable));
    if (!original.ok()) return original.status();
    auto solved = SolveMatching(bundle, a);
    if (!solved.ok()) return solved.status();
    auto ids = [](const auto& set) {
      std::vector<std::uint32_t> out;
      for (auto id : set) out.push_back(id.value());
      return absl::StrCat("{", absl::StrJoin(out, ","), "}");
    };
    return Compare(absl::StrCat("L'=", ids(a.removed_left),
                                " R'=", ids(a.removed_right),
                                " unavailable=", ids(a.unavailable)),
                   Weight{*original}, Weight{*solved}, bundle.k);
  });
  if (!outcome.ok()) return outcome.status();
  return MakeReport(VerifyTarget::kMatching, plan, *std::move(outcome), start);
}

absl::StatusOr<VerificationReport> VerifyShortestPath(
    const ShortestPathInstance& inst, const ShortestPathBundle& bundle,
    const VerificationPlan& plan) {
  const auto start = std::chrono::steady_clock::now();
  if (inst.uncertain != bundle.uncertain || inst.s != bundle.s ||
      inst.t != bundle.t) {
    return absl::FailedPreconditionError(
        "bundle and instance declare different uncertain edges or terminals");
  }
  if (auto s = ValidateShortestPathInstance(inst); !s.ok()) return s;
  auto total = PlanSize(plan, plan.weight_max + 1, inst.uncertain.size());
  if (!total.ok()) return total.status();
  auto table = PathTable(inst.graph, inst.graph.EmbeddedWeights(),
                         inst.uncertain, inst.s, inst.t);
  if (!table.ok()) return table.status();
  const std::vector<EdgeId> ids(inst.uncertain.begin(), inst.uncertain.end());

  auto outcome = Run(*total, plan.jobs,
                     [&](std::uint64_t i) -> absl::StatusOr<std::optional<Mismatch>> {
    const std::vector<Weight> values = WeightsFor(plan, ids.size(), i);
    EdgeWeights assigned;
    for (std::size_t d = 0; d < ids.size(); ++d) assigned[ids[d]] = values[d];
    auto original = table->Minimum(values);
    if (!original.ok()) return original.status();
    auto solved = SolveShortestPath(bundle, assigned);
    if (!solved.ok()) return solved.status();
    return Compare(DescribeWeights("e", table->unknown_ids(), values),
                   *original, *solved, bundle.k);
  });
  if (!outcome.ok()) return outcome.status();
  return MakeReport(VerifyTarget::kShortestPath, plan, *std::move(outcome),
                    start);
}

std::string FormatReport(const VerificationReport& report) {
  auto value = [](const std::optional<Weight>& w) {
    return w.has_value() ? absl::StrCat(*w) : std::string("unreachable");
  };
  std::string out = absl::StrCat(
      "target          ", std::string(TargetName(report.target)), "\n",
      "mode            ", std::string(ModeName(report.mode)), "\n",
      "seed            ", report.seed, "\n",
      "instantiations  ", report.total, "\n",
      "mismatches      ", report.mismatches.size(), "\n",
      "wall seconds    ", report.wall_seconds, "\n",
      "result          ", report.passed ? "PASS" : "FAIL", "\n");
  for (const Mismatch& m : report.mismatches) {
    absl::StrAppend(&out, "  ", m.assignment, ": original ", value(m.original),
                    ", compressed ", value(m.compressed), " + k ", m.k, "\n");
  }
  return out;
}

}  // namespace instcomp
