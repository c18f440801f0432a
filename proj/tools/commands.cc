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

#include "commands.h"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "absl/strings/str_cat.h"
#include "instcomp/io/documents.h"
#include "instcomp/io/generate.h"
#include "instcomp/util/status_macros.h"

namespace instcomp::cli {
namespace {

struct Globals {
  unsigned jobs = 1;
  bool trace = false;
  bool quiet = false;
};

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::InvalidArgumentError(absl::StrCat("cannot read ", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// "-" or an empty path writes to `out`.
absl::Status WriteOutput(const std::string& path, const std::string& text,
                         std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return absl::OkStatus();
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  file << text;
  file.close();
  if (!file) return absl::UnknownError(absl::StrCat("cannot write ", path));
  return absl::OkStatus();
}

absl::StatusOr<Json> ReadJson(const std::string& path) {
  INSTCOMP_ASSIGN_OR_RETURN(std::string text, ReadFile(path));
  auto doc = ParseJsonText(text);
  if (!doc.ok()) {
    return absl::InvalidArgumentError(
        absl::StrCat(path, ": ", std::string(doc.status().message())));
  }
  return doc;
}

// Accepts "3" as well as prefixed forms such as "e3", "l2" or "r5".
absl::StatusOr<std::uint32_t> ParseIdToken(std::string_view token) {
  std::size_t start = 0;
  while (start < token.size() &&
         std::isalpha(static_cast<unsigned char>(token[start]))) {
    ++start;
  }
  std::uint32_t id = 0;
  const char* first = token.data() + start;
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, id);
  if (start == token.size() || ec != std::errc() || ptr != last) {
    return absl::InvalidArgumentError(
        absl::StrCat("cannot read an id from \"", std::string(token), "\""));
  }
  return id;
}

absl::StatusOr<std::pair<std::uint32_t, Weight>> ParseWeightToken(
    std::string_view token) {
  const std::size_t eq = token.find('=');
  if (eq == std::string_view::npos) {
    return absl::InvalidArgumentError(
        absl::StrCat("expected id=value, got \"", std::string(token), "\""));
  }
  INSTCOMP_ASSIGN_OR_RETURN(std::uint32_t id, ParseIdToken(token.substr(0, eq)));
  Weight w = 0;
  const std::string_view value = token.substr(eq + 1);
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), w);
  if (value.empty() || ec != std::errc() || ptr != value.data() + value.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("bad weight in \"", std::string(token), "\""));
  }
  return std::make_pair(id, w);
}

int Fail(const absl::Status& status, std::ostream& err) {
  err << "error: " << status.message() << "\n";
  return ExitCodeFor(status);
}

// ---- compress ----

struct CompressArgs {
  std::string input;
  std::string output;
  std::size_t threshold = kDefaultExhaustiveThreshold;
};

absl::StatusOr<BundleVariant> CompressAny(const InstanceVariant& instance,
                                          bool trace, std::size_t threshold) {
  return std::visit(
      [&](const auto& inst) -> absl::StatusOr<BundleVariant> {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, UncertainMstInstance>) {
          INSTCOMP_ASSIGN_OR_RETURN(MstBundle b, CompressMst(inst, trace));
          return BundleVariant(std::move(b));
        } else if constexpr (std::is_same_v<T, UncertainMatroidInstance>) {
          INSTCOMP_ASSIGN_OR_RETURN(MatroidBundle b, CompressMatroid(inst, trace));
          return BundleVariant(std::move(b));
        } else if constexpr (std::is_same_v<T, UncertainMatchingInstance>) {
          INSTCOMP_ASSIGN_OR_RETURN(
              MatchingBundle b,
              CompressMatching(inst, MatchingOptions{threshold, trace}));
          return BundleVariant(std::move(b));
        } else {
          INSTCOMP_ASSIGN_OR_RETURN(ShortestPathBundle b,
                                    CompressShortestPath(inst));
          return BundleVariant(std::move(b));
        }
      },
      instance);
}

int RunCompress(const CompressArgs& args, const Globals& globals,
                std::ostream& out, std::ostream& err) {
  auto json = ReadJson(args.input);
  if (!json.ok()) return Fail(json.status(), err);
  auto doc = ParseInstance(*json);
  if (!doc.ok()) return Fail(doc.status(), err);
  auto bundle = CompressAny(doc->instance, globals.trace, args.threshold);
  if (!bundle.ok()) return Fail(bundle.status(), err);
  BundleDocument result{*std::move(bundle),
                        Provenance{kToolVersion, InstanceHash(*doc), doc->seed}};
  const std::string text = Serialize(EmitBundle(result));
  if (auto s = WriteOutput(args.output, text, out); !s.ok()) return Fail(s, err);
  if (!globals.quiet && !args.output.empty() && args.output != "-") {
    const std::uint64_t k =
        std::visit([](const auto& b) -> std::uint64_t { return b.k; },
                   result.bundle);
    err << "compressed " << ProblemKindName(result.kind()) << " instance, k = "
        << k << ", wrote " << args.output << "\n";
  }
  return kExitOk;
}

// ---- solve ----

struct SolveArgs {
  std::string bundle;
  std::string assignment;
  std::vector<std::string> weights;
  std::vector<std::string> remove;
  std::vector<std::string> unavailable;
};

absl::StatusOr<AssignmentDocument> CollectAssignment(const SolveArgs& args) {
  AssignmentDocument a;
  if (!args.assignment.empty()) {
    INSTCOMP_ASSIGN_OR_RETURN(Json json, ReadJson(args.assignment));
    INSTCOMP_ASSIGN_OR_RETURN(a, ParseAssignment(json));
  }
  for (const std::string& token : args.weights) {
    INSTCOMP_ASSIGN_OR_RETURN(auto entry, ParseWeightToken(token));
    if (!a.weights.insert(entry).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("weight for id ", entry.first, " given twice"));
    }
  }
  for (const std::string& token : args.remove) {
    INSTCOMP_ASSIGN_OR_RETURN(std::uint32_t id, ParseIdToken(token));
    a.remove.insert(id);
  }
  for (const std::string& token : args.unavailable) {
    INSTCOMP_ASSIGN_OR_RETURN(std::uint32_t id, ParseIdToken(token));
    a.unavailable.insert(id);
  }
  return a;
}

template <typename Id>
std::map<Id, Weight> Keyed(const std::map<std::uint32_t, Weight>& weights) {
  std::map<Id, Weight> out;
  for (const auto& [id, w] : weights) out.emplace(Id(id), w);
  return out;
}

absl::Status RejectRemovals(const AssignmentDocument& a) {
  if (!a.remove.empty() || !a.unavailable.empty()) {
    return absl::InvalidArgumentError(
        "removals apply only to matching bundles");
  }
  return absl::OkStatus();
}

// The optimum as printed: a number, or "unreachable".
absl::StatusOr<std::string> SolveAny(const BundleVariant& bundle,
                                     const AssignmentDocument& a) {
  return std::visit(
      [&](const auto& b) -> absl::StatusOr<std::string> {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, MstBundle>) {
          INSTCOMP_RETURN_IF_ERROR(RejectRemovals(a));
          INSTCOMP_ASSIGN_OR_RETURN(Weight w, SolveMst(b, Keyed<EdgeId>(a.weights)));
          return absl::StrCat(w);
        } else if constexpr (std::is_same_v<T, MatroidBundle>) {
          INSTCOMP_RETURN_IF_ERROR(RejectRemovals(a));
          INSTCOMP_ASSIGN_OR_RETURN(Weight w,
                                    SolveMatroid(b, Keyed<ElementId>(a.weights)));
          return absl::StrCat(w);
        } else if constexpr (std::is_same_v<T, ShortestPathBundle>) {
          INSTCOMP_RETURN_IF_ERROR(RejectRemovals(a));
          INSTCOMP_ASSIGN_OR_RETURN(std::optional<Weight> w,
                                    SolveShortestPath(b, Keyed<EdgeId>(a.weights)));
          return w.has_value() ? absl::StrCat(*w) : std::string("unreachable");
        } else {
          if (!a.weights.empty()) {
            return absl::InvalidArgumentError(
                "matching bundles take removals, not weights");
          }
          RemovalAssignment removal;
          for (std::uint32_t id : a.remove) {
            if (b.l0.contains(VertexId(id))) {
              removal.removed_left.insert(VertexId(id));
            } else if (b.r0.contains(VertexId(id))) {
              removal.removed_right.insert(VertexId(id));
            } else {
              return absl::InvalidArgumentError(
                  absl::StrCat("vertex ", id, " is not in L0 or R0"));
            }
          }
          for (std::uint32_t id : a.unavailable) {
            removal.unavailable.insert(EdgeId(id));
          }
          INSTCOMP_ASSIGN_OR_RETURN(std::size_t size, SolveMatching(b, removal));
          return absl::StrCat(size);
        }
      },
      bundle);
}

int RunSolve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  auto json = ReadJson(args.bundle);
  if (!json.ok()) return Fail(json.status(), err);
  auto bundle = ParseBundle(*json);
  if (!bundle.ok()) return Fail(bundle.status(), err);
  auto assignment = CollectAssignment(args);
  if (!assignment.ok()) return Fail(assignment.status(), err);
  auto value = SolveAny(bundle->bundle, *assignment);
  if (!value.ok()) return Fail(value.status(), err);
  out << *value << "\n";
  return kExitOk;
}

// ---- verify ----

struct VerifyArgs {
  std::string instance;
  std::string bundle;
  std::string report;
  bool exhaustive = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  Weight weight_max = 7;
};

absl::StatusOr<VerificationReport> VerifyAny(const InstanceVariant& instance,
                                             const BundleVariant& bundle,
                                             const VerificationPlan& plan) {
  if (instance.index() != bundle.index()) {
    return absl::FailedPreconditionError("instance and bundle kinds differ");
  }
  switch (instance.index()) {
    case 0:
      return VerifyMst(std::get<0>(instance), std::get<0>(bundle), plan);
    case 1:
      return VerifyMatroid(std::get<1>(instance), std::get<1>(bundle), plan);
    case 2:
      return VerifyMatching(std::get<2>(instance), std::get<2>(bundle), plan);
    default:
      return VerifyShortestPath(std::get<3>(instance), std::get<3>(bundle), plan);
  }
}

int RunVerify(const VerifyArgs& args, const Globals& globals,
              std::ostream& out, std::ostream& err) {
  auto instance_json = ReadJson(args.instance);
  if (!instance_json.ok()) return Fail(instance_json.status(), err);
  auto instance = ParseInstance(*instance_json);
  if (!instance.ok()) return Fail(instance.status(), err);
  auto bundle_json = ReadJson(args.bundle);
  if (!bundle_json.ok()) return Fail(bundle_json.status(), err);
  auto bundle = ParseBundle(*bundle_json);
  if (!bundle.ok()) return Fail(bundle.status(), err);

  const std::string hash = InstanceHash(*instance);
  if (hash != bundle->provenance.input_sha256 ||
      instance->kind() != bundle->kind()) {
    err << "error: bundle was not compressed from this instance (input hash "
        << bundle->provenance.input_sha256 << ", instance hash " << hash
        << ")\n";
    return kExitHashMismatch;
  }

  VerificationPlan plan;
  plan.weight_max = args.weight_max;
  plan.jobs = globals.jobs;
  if (args.samples > 0) {
    plan.mode = VerifyMode::kSampled;
    plan.samples = args.samples;
    plan.seed = args.seed;
  }
  auto report = VerifyAny(instance->instance, bundle->bundle, plan);
  if (!report.ok()) return Fail(report.status(), err);
  if (!args.report.empty()) {
    if (auto s = WriteOutput(args.report, Serialize(EmitReport(*report)), out);
        !s.ok()) {
      return Fail(s, err);
    }
  }
  if (!globals.quiet || !report->passed) out << FormatReport(*report);
  return report->passed ? kExitOk : kExitVerifyFailed;
}

// ---- gen ----

struct GenArgs {
  std::string kind;
  std::string output;
  std::uint64_t seed = 0;
  std::size_t n = 8;
  std::size_t m = 14;
  std::size_t f = 4;
  std::optional<Weight> weight_max;
  std::string family = "graphic";
  std::size_t ground = 8;
  std::size_t left = 6;
  std::size_t right = 6;
  std::size_t l0 = 2;
  std::size_t r0 = 2;
  std::size_t e0 = 1;
  std::size_t edges = 0;
};

absl::StatusOr<InstanceVariant> GenerateAny(const GenArgs& args) {
  INSTCOMP_ASSIGN_OR_RETURN(ProblemKind kind, ParseProblemKind(args.kind));
  switch (kind) {
    case ProblemKind::kMst:
    case ProblemKind::kShortestPath: {
      GraphParams params{args.n, args.m, args.f, args.weight_max.value_or(7)};
      if (kind == ProblemKind::kMst) {
        INSTCOMP_ASSIGN_OR_RETURN(UncertainMstInstance inst,
                                  GenerateMst(params, args.seed));
        return InstanceVariant(std::move(inst));
      }
      INSTCOMP_ASSIGN_OR_RETURN(ShortestPathInstance inst,
                                GenerateShortestPath(params, args.seed));
      return InstanceVariant(std::move(inst));
    }
    case ProblemKind::kMatroid: {
      INSTCOMP_ASSIGN_OR_RETURN(MatroidFamily family, ParseFamily(args.family));
      MatroidParams params;
      params.family = family;
      params.ground = args.ground;
      params.f = args.f;
      params.weight_max = args.weight_max.value_or(5);
      INSTCOMP_ASSIGN_OR_RETURN(UncertainMatroidInstance inst,
                                GenerateMatroid(params, args.seed));
      return InstanceVariant(std::move(inst));
    }
    case ProblemKind::kMatching: {
      MatchingParams params{args.left, args.right, args.l0,
                            args.r0,   args.e0,    args.edges};
      INSTCOMP_ASSIGN_OR_RETURN(UncertainMatchingInstance inst,
                                GenerateMatching(params, args.seed));
      return InstanceVariant(std::move(inst));
    }
  }
  return absl::InvalidArgumentError("unknown kind");
}

int RunGen(const GenArgs& args, std::ostream& out, std::ostream& err) {
  auto instance = GenerateAny(args);
  if (!instance.ok()) return Fail(instance.status(), err);
  InstanceDocument doc{*std::move(instance), args.seed};
  if (auto s = WriteOutput(args.output, Serialize(EmitInstance(doc)), out);
      !s.ok()) {
    return Fail(s, err);
  }
  return kExitOk;
}

}  // namespace

int ExitCodeFor(const absl::Status& status) {
  switch (status.code()) {
    case absl::StatusCode::kOk:
      return kExitOk;
    case absl::StatusCode::kInvalidArgument:
    case absl::StatusCode::kNotFound:
      return kExitUsage;
    case absl::StatusCode::kResourceExhausted:
      return kExitThreshold;
    case absl::StatusCode::kOutOfRange:
      return kExitOverflow;
    case absl::StatusCode::kFailedPrecondition:
      return kExitHashMismatch;
    default:
      return kExitVerifyFailed;
  }
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Compress instances with uncertain parts and check the result.",
               "instcomp"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--jobs", globals.jobs, "Worker threads for verify")
      ->check(CLI::PositiveNumber);
  app.add_flag("--trace", globals.trace, "Embed intermediates in bundles");
  app.add_flag("--quiet", globals.quiet, "Suppress progress output");

  CompressArgs compress;
  CLI::App* compress_cmd = app.add_subcommand("compress", "Instance to bundle");
  compress_cmd->add_option("-i,--input", compress.input, "Instance document")
      ->required();
  compress_cmd->add_option("-o,--output", compress.output,
                           "Bundle path, '-' for standard output")
      ->required();
  compress_cmd->add_option("--threshold", compress.threshold,
                           "Limit on |L0|+|R0| for matching instances");

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Optimum under an assignment");
  solve_cmd->add_option("-b,--bundle", solve.bundle, "Bundle document")
      ->required();
  solve_cmd->add_option("-a,--assignment", solve.assignment,
                        "Assignment document");
  solve_cmd->add_option("--w", solve.weights, "Uncertain weight, id=value")
      ->delimiter(',');
  solve_cmd->add_option("--remove", solve.remove, "Removed L0/R0 vertices")
      ->delimiter(',');
  solve_cmd->add_option("--unavailable", solve.unavailable,
                        "Unavailable E0 edges")
      ->delimiter(',');

  VerifyArgs verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check a bundle against its instance");
  verify_cmd->add_option("-i,--instance", verify.instance, "Instance document")
      ->required();
  verify_cmd->add_option("-b,--bundle", verify.bundle, "Bundle document")
      ->required();
  CLI::Option* exhaustive =
      verify_cmd->add_flag("--exhaustive", verify.exhaustive,
                           "Every assignment (the default)");
  verify_cmd->add_option("--samples", verify.samples, "Random assignments")
      ->excludes(exhaustive);
  verify_cmd->add_option("--seed", verify.seed, "Sampling seed");
  verify_cmd->add_option("--wmax", verify.weight_max,
                         "Largest uncertain weight tried");
  verify_cmd->add_option("--report", verify.report, "Write a JSON report");

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Seeded random instance");
  gen_cmd->add_option("--kind", gen.kind, "mst|matroid|matching|shortest-path")
      ->required();
  gen_cmd->add_option("-o,--output", gen.output, "Output path");
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--n", gen.n, "Vertices");
  gen_cmd->add_option("--m", gen.m, "Edges");
  gen_cmd->add_option("--f", gen.f, "Uncertain edges or elements");
  gen_cmd->add_option("--wmax", gen.weight_max, "Largest certain weight");
  gen_cmd->add_option("--family", gen.family,
                      "graphic|uniform|linear|transversal");
  gen_cmd->add_option("--ground", gen.ground, "Matroid ground set size");
  gen_cmd->add_option("--left", gen.left, "Left vertices");
  gen_cmd->add_option("--right", gen.right, "Right vertices");
  gen_cmd->add_option("--l0", gen.l0, "Uncertain left vertices");
  gen_cmd->add_option("--r0", gen.r0, "Uncertain right vertices");
  gen_cmd->add_option("--e0", gen.e0, "Uncertain edges");
  gen_cmd->add_option("--edges", gen.edges, "Bipartite edge count");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (compress_cmd->parsed()) return RunCompress(compress, globals, out, err);
  if (solve_cmd->parsed()) return RunSolve(solve, out, err);
  if (verify_cmd->parsed()) return RunVerify(verify, globals, out, err);
  return RunGen(gen, out, err);
}

}  // namespace instcomp::cli
