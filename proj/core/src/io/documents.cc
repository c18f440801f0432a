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

#include "instcomp/io/documents.h"

#include <openssl/evp.h>

#include <array>
#include <limits>
#include <utility>
#include <vector>

#include "absl/strings/str_cat.h"
#include "instcomp/util/status_macros.h"

namespace instcomp {
namespace {

absl::Status Invalid(std::string_view what) {
  return absl::InvalidArgumentError(std::string(what));
}

absl::Status RequireObject(const Json& doc, std::string_view what) {
  if (!doc.is_object()) {
    return Invalid(absl::StrCat(std::string(what), " must be a JSON object"));
  }
  return absl::OkStatus();
}

absl::StatusOr<std::uint64_t> AsUint(const Json& value, std::string_view what) {
  if (value.is_number_unsigned()) return value.get<std::uint64_t>();
  if (value.is_number_integer() && value.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(value.get<std::int64_t>());
  }
  return Invalid(absl::StrCat(std::string(what),
                              " must be a non-negative integer"));
}

absl::StatusOr<std::uint32_t> AsId(const Json& value, std::string_view what) {
  INSTCOMP_ASSIGN_OR_RETURN(std::uint64_t raw, AsUint(value, what));
  if (raw > std::numeric_limits<std::uint32_t>::max()) {
    return Invalid(absl::StrCat(std::string(what), " is out of range"));
  }
  return static_cast<std::uint32_t>(raw);
}

const Json* Find(const Json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

absl::StatusOr<const Json*> Require(const Json& obj, const char* key,
                                    std::string_view where) {
  const Json* value = Find(obj, key);
  if (value == nullptr) {
    return Invalid(absl::StrCat(std::string(where), " is missing \"", key,
                                "\""));
  }
  return value;
}

absl::StatusOr<std::uint64_t> RequireUint(const Json& obj, const char* key,
                                          std::string_view where) {
  INSTCOMP_ASSIGN_OR_RETURN(const Json* value, Require(obj, key, where));
  return AsUint(*value, absl::StrCat(std::string(where), ".", key));
}

absl::StatusOr<std::string> RequireString(const Json& obj, const char* key,
                                          std::string_view where) {
  INSTCOMP_ASSIGN_OR_RETURN(const Json* value, Require(obj, key, where));
  if (!value->is_string()) {
    return Invalid(absl::StrCat(std::string(where), ".", key,
                                " must be a string"));
  }
  return value->get<std::string>();
}

// Missing keys read as empty lists unless `required`.
absl::StatusOr<std::vector<std::uint32_t>> IdList(const Json& obj,
                                                  const char* key,
                                                  std::string_view where,
                                                  bool required = false) {
  const Json* value = Find(obj, key);
  if (value == nullptr) {
    if (required) {
      return Invalid(absl::StrCat(std::string(where), " is missing \"", key,
                                  "\""));
    }
    return std::vector<std::uint32_t>();
  }
  if (!value->is_array()) {
    return Invalid(absl::StrCat(std::string(where), ".", key,
                                " must be an array"));
  }
  std::vector<std::uint32_t> out;
  for (const Json& item : *value) {
    INSTCOMP_ASSIGN_OR_RETURN(
        std::uint32_t id, AsId(item, absl::StrCat(std::string(where), ".", key)));
    out.push_back(id);
  }
  return out;
}

template <typename Id>
absl::StatusOr<std::set<Id>> IdSet(const Json& obj, const char* key,
                                   std::string_view where,
                                   bool required = false) {
  INSTCOMP_ASSIGN_OR_RETURN(std::vector<std::uint32_t> raw,
                            IdList(obj, key, where, required));
  std::set<Id> out;
  for (std::uint32_t id : raw) {
    if (!out.insert(Id(id)).second) {
      return Invalid(absl::StrCat(std::string(where), ".", key,
                                  " repeats id ", id));
    }
  }
  return out;
}

template <typename Set>
Json Ids(const Set& set) {
  Json out = Json::array();
  for (auto id : set) out.push_back(id.value());
  return out;
}

template <typename Map>
Json EmitWeights(const Map& weights) {
  Json out = Json::array();
  for (const auto& [id, w] : weights) out.push_back({{"id", id.value()}, {"w", w}});
  return out;
}

template <typename Id>
absl::StatusOr<std::map<Id, Weight>> ParseWeights(const Json& obj,
                                                  const char* key,
                                                  std::string_view where) {
  std::map<Id, Weight> out;
  const Json* list = Find(obj, key);
  if (list == nullptr) return out;
  if (!list->is_array()) {
    return Invalid(absl::StrCat(std::string(where), ".", key,
                                " must be an array"));
  }
  for (const Json& item : *list) {
    INSTCOMP_RETURN_IF_ERROR(RequireObject(item, "weight entry"));
    INSTCOMP_ASSIGN_OR_RETURN(std::uint64_t id, RequireUint(item, "id", "weight entry"));
    INSTCOMP_ASSIGN_OR_RETURN(Weight w, RequireUint(item, "w", "weight entry"));
    if (id > std::numeric_limits<std::uint32_t>::max()) {
      return Invalid("weight entry id is out of range");
    }
    if (!out.emplace(Id(static_cast<std::uint32_t>(id)), w).second) {
      return Invalid(absl::StrCat(std::string(where), ".", key,
                                  " repeats id ", id));
    }
  }
  return out;
}

absl::Status CheckFormat(const Json& doc, const char* expected) {
  INSTCOMP_ASSIGN_OR_RETURN(std::string format,
                            RequireString(doc, "format", "document"));
  if (format != expected) {
    return Invalid(absl::StrCat("unsupported format \"", format,
                                "\", expected \"", expected, "\""));
  }
  return absl::OkStatus();
}

Json EmitDiGraph(const DiGraph& d) {
  Json arcs = Json::array();
  for (const auto& [arc, kind] : d.arcs()) {
    Json entry = {{"from", arc.first.value()}, {"to", arc.second.value()}};
    if (kind == ArcKind::kShortcut) entry["shortcut"] = true;
    arcs.push_back(std::move(entry));
  }
  return {{"vertices", Ids(d.vertices())}, {"arcs", std::move(arcs)}};
}

absl::StatusOr<DiGraph> ParseDiGraph(const Json& doc) {
  INSTCOMP_RETURN_IF_ERROR(RequireObject(doc, "digraph"));
  DiGraph d;
  INSTCOMP_ASSIGN_OR_RETURN(VertexSet vertices,
                            IdSet<VertexId>(doc, "vertices", "digraph", true));
  for (VertexId v : vertices) d.AddVertex(v);
  INSTCOMP_ASSIGN_OR_RETURN(const Json* arcs, Require(doc, "arcs", "digraph"));
  if (!arcs->is_array()) return Invalid("digraph.arcs must be an array");
  for (const Json& arc : *arcs) {
    INSTCOMP_RETURN_IF_ERROR(RequireObject(arc, "arc"));
    INSTCOMP_ASSIGN_OR_RETURN(std::uint64_t from, RequireUint(arc, "from", "arc"));
    INSTCOMP_ASSIGN_OR_RETURN(std::uint64_t to, RequireUint(arc, "to", "arc"));
    if (!vertices.contains(VertexId(from)) || !vertices.contains(VertexId(to))) {
      return Invalid("arc references an unknown vertex");
    }
    const Json* shortcut = Find(arc, "shortcut");
    const bool is_shortcut = shortcut != nullptr && shortcut->is_boolean() &&
                             shortcut->get<bool>();
    d.AddArc(VertexId(from), VertexId(to),
             is_shortcut ? ArcKind::kShortcut : ArcKind::kPlain);
  }
  return d;
}

Json EmitGadget(const Gadget& g) {
  return {{"edge", g.edge.value()},       {"u", g.u.value()},
          {"v", g.v.value()},             {"u_prime", g.u_prime.value()},
          {"v_prime", g.v_prime.value()}, {"outer_u", g.outer_u.value()},
          {"outer_v", g.outer_v.value()}};
}

absl::StatusOr<Gadget> ParseGadget(const Json& doc) {
  INSTCOMP_RETURN_IF_ERROR(RequireObject(doc, "gadget"));
  std::array<std::uint32_t, 7> raw;
  const char* keys[] = {"edge", "u", "v", "u_prime", "v_prime", "outer_u",
                        "outer_v"};
  for (std::size_t i = 0; i < raw.size(); ++i) {
    INSTCOMP_ASSIGN_OR_RETURN(const Json* value, Require(doc, keys[i], "gadget"));
    INSTCOMP_ASSIGN_OR_RETURN(raw[i], AsId(*value, keys[i]));
  }
  return Gadget{EdgeId(raw[0]),   VertexId(raw[1]), VertexId(raw[2]),
                VertexId(raw[3]), VertexId(raw[4]), EdgeId(raw[5]),
                EdgeId(raw[6])};
}

}  // namespace

std::string ProblemKindName(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kMst:
      return "mst";
    case ProblemKind::kMatroid:
      return "matroid";
    case ProblemKind::kMatching:
      return "matching";
    case ProblemKind::kShortestPath:
      return "shortest-path";
  }
  return "unknown";
}

absl::StatusOr<ProblemKind> ParseProblemKind(std::string_view name) {
  for (ProblemKind kind : {ProblemKind::kMst, ProblemKind::kMatroid,
                           ProblemKind::kMatching, ProblemKind::kShortestPath}) {
    if (name == ProblemKindName(kind)) return kind;
  }
  return Invalid(absl::StrCat("unknown problem kind \"", std::string(name),
                              "\""));
}

ProblemKind InstanceDocument::kind() const {
  return static_cast<ProblemKind>(instance.index());
}

ProblemKind BundleDocument::kind() const {
  return static_cast<ProblemKind>(bundle.index());
}

absl::StatusOr<Json> ParseJsonText(std::string_view text) {
  Json doc = Json::parse(text.begin(), text.end(), nullptr, false);
  if (doc.is_discarded()) return Invalid("malformed JSON");
  return doc;
}

std::string Serialize(const Json& doc) { return doc.dump(2) + "\n"; }

Json EmitGraph(const WeightedMultigraph& g, const EdgeSet& uncertain) {
  Json edges = Json::array();
  for (const auto& [id, rec] : g.edges()) {
    Json entry = {{"id", id.value()}, {"u", rec.u.value()}, {"v", rec.v.value()}};
    if (rec.weight.has_value()) entry["w"] = *rec.weight;
    if (uncertain.contains(id)) entry["uncertain"] = true;
    edges.push_back(std::move(entry));
  }
  return {{"vertices", Ids(g.vertices())}, {"edges", std::move(edges)}};
}

absl::StatusOr<WeightedMultigraph> ParseGraph(const Json& doc,
                                              EdgeSet* uncertain) {
  INSTCOMP_RETURN_IF_ERROR(RequireObject(doc, "graph"));
  WeightedMultigraph g;
  INSTCOMP_ASSIGN_OR_RETURN(VertexSet vertices,
                            IdSet<VertexId>(doc, "vertices", "graph", true));
  for (VertexId v : vertices) INSTCOMP_RETURN_IF_ERROR(g.AddVertex(v));
  const Json* edges = Find(doc, "edges");
  if (edges == nullptr) return g;
  if (!edges->is_array()) return Invalid("graph.edges must be an array");
  for (const Json& edge : *edges) {
    INSTCOMP_RETURN_IF_ERROR(RequireObject(edge, "edge"));
    INSTCOMP_ASSIGN_OR_RETURN(const Json* id_value, Require(edge, "id", "edge"));
    INSTCOMP_ASSIGN_OR_RETURN(std::uint32_t id, AsId(*id_value, "edge.id"));
    INSTCOMP_ASSIGN_OR_RETURN(const Json* u_value, Require(edge, "u", "edge"));
    INSTCOMP_ASSIGN_OR_RETURN(std::uint32_t u, AsId(*u_value, "edge.u"));
    INSTCOMP_ASSIGN_OR_RETURN(const Json* v_value, Require(edge, "v", "edge"));
    INSTCOMP_ASSIGN_OR_RETURN(std::uint32_t v, AsId(*v_value, "edge.v"));
    std::optional<Weight> weight;
    if (const Json* w = Find(edge, "w"); w != nullptr) {
      INSTCOMP_ASSIGN_OR_RETURN(weight, AsUint(*w, "edge.w"));
    }
    INSTCOMP_RETURN_IF_ERROR(g.AddEdge(EdgeId(id), VertexId(u), VertexId(v), weight));
    if (const Json* flag = Find(edge, "uncertain"); flag != nullptr) {
      if (!flag->is_boolean()) return Invalid("edge.uncertain must be a boolean");
      if (flag->get<bool>()) {
        if (uncertain == nullptr) {
          return Invalid(absl::StrCat("edge ", id,
                                      " may not be uncertain in this context"));
        }
        uncertain->insert(EdgeId(id));
      }
    }
  }
  return g;
}

Json EmitBipartite(const BipartiteGraph& g, const VertexSet& l0,
                   const VertexSet& r0, const EdgeSet& e0) {
  VertexSet all = g.left();
  all.insert(g.right().begin(), g.right().end());
  Json edges = Json::array();
  for (const auto& [id, edge] : g.edges()) {
    Json entry = {{"id", id.value()},
                  {"u", edge.left.value()},
                  {"v", edge.right.value()}};
    if (e0.contains(id)) entry["uncertain"] = true;
    edges.push_back(std::move(entry));
  }
  Json out = {{"vertices", Ids(all)},
              {"left", Ids(g.left())},
              {"right", Ids(g.right())},
              {"edges", std::move(edges)}};
  if (!l0.empty()) out["L0"] = Ids(l0);
  if (!r0.empty()) out["R0"] = Ids(r0);
  return out;
}

absl::StatusOr<ParsedBipartite> ParseBipartite(const Json& doc) {
  INSTCOMP_RETURN_IF_ERROR(RequireObject(doc, "bipartite graph"));
  ParsedBipartite out;
  INSTCOMP_ASSIGN_OR_RETURN(VertexSet left,
                            IdSet<VertexId>(doc, "left", "graph", true));
  INSTCOMP_ASSIGN_OR_RETURN(VertexSet right,
                            IdSet<VertexId>(doc, "right", "graph", true));
  for (VertexId v : left) INSTCOMP_RETURN_IF_ERROR(out.graph.AddLeft(v));
  for (VertexId v : right) INSTCOMP_RETURN_IF_ERROR(out.graph.AddRight(v));
  if (Find(doc, "vertices") != nullptr) {
    INSTCOMP_ASSIGN_OR_RETURN(VertexSet all,
                              IdSet<VertexId>(doc, "vertices", "graph"));
    VertexSet sides = left;
    sides.insert(right.begin(), right.end());
    if (all != sides) {
      return Invalid("graph.vertices must be exactly left plus right");
    }
  }
  if (const Json* edges = Find(doc, "edges"); edges != nullptr) {
    if (!edges->is_array()) return Invalid("graph.edges must be an array");
    for (const Json& edge : *edges) {
      INSTCOMP_RETURN_IF_ERROR(RequireObject(edge, "edge"));
      INSTCOMP_ASSIGN_OR_RETURN(const Json* id_value, Require(edge, "id", "edge"));
      INSTCOMP_ASSIGN_OR_RETURN(std::uint32_t id, AsId(*id_value, "edge.id"));
      INSTCOMP_ASSIGN_OR_RETURN(const Json* u_value, Require(edge, "u", "edge"));
      INSTCOMP_ASSIGN_OR_RETURN(std::uint32_t u, AsId(*u_value, "edge.u"));
      INSTCOMP_ASSIGN_OR_RETURN(const Json* v_value, Require(edge, "v", "edge"));
      INSTCOMP_ASSIGN_OR_RETURN(std::uint32_t v, AsId(*v_value, "edge.v"));
      if (Find(edge, "w") != nullptr) {
        return Invalid(absl::StrCat("bipartite edge ", id, " carries a weight"));
      }
      INSTCOMP_RETURN_IF_ERROR(
          out.graph.AddEdge(EdgeId(id), VertexId(u), VertexId(v)));
      if (const Json* flag = Find(edge, "uncertain"); flag != nullptr) {
        if (!flag->is_boolean()) return Invalid("edge.uncertain must be a boolean");
        if (flag->get<bool>()) out.e0.insert(EdgeId(id));
      }
    }
  }
  INSTCOMP_ASSIGN_OR_RETURN(out.l0, IdSet<VertexId>(doc, "L0", "graph"));
  INSTCOMP_ASSIGN_OR_RETURN(out.r0, IdSet<VertexId>(doc, "R0", "graph"));
  return out;
}

Json EmitMatroid(const Matroid& m) {
  switch (m.kind()) {
    case Matroid::Kind::kGraphic: {
      Json out = {{"kind", "graphic"}, {"graph", EmitGraph(m.graphic()->graph)}};
      if (!m.graphic()->loops.empty()) out["loops"] = Ids(m.graphic()->loops);
      return out;
    }
    case Matroid::Kind::kUniform:
      return {{"kind", "uniform"},
              {"rank", m.uniform()->rank},
              {"n", m.size()},
              {"elements", Ids(m.ground())}};
    case Matroid::Kind::kLinear: {
      const LinearRepresentation& rep = *m.linear();
      Json rows = Json::array();
      for (std::size_t r = 0; r < rep.matrix.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < rep.matrix.cols(); ++c) {
          row.push_back(rep.matrix.at(r, c));
        }
        rows.push_back(std::move(row));
      }
      Json columns = Json::array();
      for (ElementId e : rep.columns) columns.push_back(e.value());
      return {{"kind", "linear"},
              {"p", rep.matrix.prime()},
              {"matrix", std::move(rows)},
              {"columns", std::move(columns)}};
    }
    case Matroid::Kind::kTransversal:
      return {{"kind", "transversal"},
              {"graph", EmitBipartite(m.transversal()->graph)}};
    case Matroid::Kind::kMinor: {
      const MinorData& data = *m.minor();
      return {{"kind", "minor"},
              {"base", EmitMatroid(*data.base)},
              {"deleted", Ids(data.deleted)},
              {"contracted", Ids(data.contracted)}};
    }
  }
  return {};
}

absl::StatusOr<Matroid> ParseMatroid(const Json& doc) {
  INSTCOMP_RETURN_IF_ERROR(RequireObject(doc, "matroid"));
  INSTCOMP_ASSIGN_OR_RETURN(std::string kind, RequireString(doc, "kind", "matroid"));
  if (kind == "graphic") {
    INSTCOMP_ASSIGN_OR_RETURN(const Json* graph, Require(doc, "graph", "matroid"));
    INSTCOMP_ASSIGN_OR_RETURN(WeightedMultigraph g, ParseGraph(*graph));
    INSTCOMP_ASSIGN_OR_RETURN(ElementSet loops,
                              IdSet<ElementId>(doc, "loops", "matroid"));
    return Matroid::Graphic(std::move(g), std::move(loops));
  }
  if (kind == "uniform") {
    INSTCOMP_ASSIGN_OR_RETURN(std::uint64_t rank, RequireUint(doc, "rank", "matroid"));
    INSTCOMP_ASSIGN_OR_RETURN(std::uint64_t n, RequireUint(doc, "n", "matroid"));
    ElementSet ground;
    if (Find(doc, "elements") != nullptr) {
      INSTCOMP_ASSIGN_OR_RETURN(ground,
                                IdSet<ElementId>(doc, "elements", "matroid"));
      if (ground.size() != n) {
        return Invalid("uniform matroid lists a different number of elements "
                       "than n");
      }
    } else {
      if (n > std::numeric_limits<std::uint32_t>::max()) {
        return Invalid("uniform matroid n is out of range");
      }
      for (std::uint32_t i = 0; i < n; ++i) ground.insert(ElementId(i));
    }
    return Matroid::Uniform(rank, std::move(ground));
  }
  if (kind == "linear") {
    INSTCOMP_ASSIGN_OR_RETURN(std::uint64_t p, RequireUint(doc, "p", "matroid"));
    INSTCOMP_ASSIGN_OR_RETURN(std::vector<std::uint32_t> columns,
                              IdList(doc, "columns", "matroid", true));
    INSTCOMP_ASSIGN_OR_RETURN(const Json* matrix, Require(doc, "matrix", "matroid"));
    if (!matrix->is_array()) return Invalid("matroid.matrix must be an array");
    std::vector<std::vector<std::int64_t>> rows;
    for (const Json& row : *matrix) {
      if (!row.is_array()) return Invalid("matrix rows must be arrays");
      std::vector<std::int64_t> values;
      for (const Json& x : row) {
        if (!x.is_number_integer()) return Invalid("matrix entries must be integers");
        values.push_back(x.is_number_unsigned()
                             ? static_cast<std::int64_t>(
                                   x.get<std::uint64_t>() % p)
                             : x.get<std::int64_t>());
      }
      rows.push_back(std::move(values));
    }
    INSTCOMP_ASSIGN_OR_RETURN(GfMatrix gf,
                              GfMatrix::FromRows(p, columns.size(), rows));
    std::vector<ElementId> ids;
    for (std::uint32_t c : columns) ids.push_back(ElementId(c));
    return Matroid::Linear({std::move(gf), std::move(ids)});
  }
  if (kind == "transversal") {
    INSTCOMP_ASSIGN_OR_RETURN(const Json* graph, Require(doc, "graph", "matroid"));
    INSTCOMP_ASSIGN_OR_RETURN(ParsedBipartite parsed, ParseBipartite(*graph));
    if (!parsed.l0.empty() || !parsed.r0.empty() || !parsed.e0.empty()) {
      return Invalid("transversal matroid graph may not declare uncertainty");
    }
    return Matroid::Transversal(std::move(parsed.graph));
  }
  if (kind == "minor") {
    INSTCOMP_ASSIGN_OR_RETURN(const Json* base_doc, Require(doc, "base", "matroid"));
    INSTCOMP_ASSIGN_OR_RETURN(Matroid base, ParseMatroid(*base_doc));
    INSTCOMP_ASSIGN_OR_RETURN(ElementSet deleted,
                              IdSet<ElementId>(doc, "deleted", "matroid"));
    INSTCOMP_ASSIGN_OR_RETURN(ElementSet contracted,
                              IdSet<ElementId>(doc, "contracted", "matroid"));
    for (ElementId e : deleted) {
      if (contracted.contains(e)) {
        return Invalid("an element is both deleted and contracted");
      }
    }
    INSTCOMP_ASSIGN_OR_RETURN(Matroid minor, Contract(base.AsOracle(), contracted));
    return Delete(minor, deleted);
  }
  return Invalid(absl::StrCat("unknown matroid kind \"", kind, "\""));
}

Json EmitInstance(const InstanceDocument& doc) {
  Json out = {{"format", kInstanceFormat}, {"kind", ProblemKindName(doc.kind())}};
  if (doc.seed.has_value()) out["seed"] = *doc.seed;
  std::visit(
      [&](const auto& inst) {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, UncertainMstInstance>) {
          out["graph"] = EmitGraph(inst.graph, inst.uncertain);
        } else if constexpr (std::is_same_v<T, ShortestPathInstance>) {
          out["graph"] = EmitGraph(inst.graph, inst.uncertain);
          out["s"] = inst.s.value();
          out["t"] = inst.t.value();
        } else if constexpr (std::is_same_v<T, UncertainMatchingInstance>) {
          out["graph"] = EmitBipartite(inst.graph, inst.l0, inst.r0, inst.e0);
        } else {
          out["matroid"] = EmitMatroid(inst.matroid);
          out["uncertain"] = Ids(inst.uncertain);
          out["weights"] = EmitWeights(inst.weights);
        }
      },
      doc.instance);
  return out;
}

absl::StatusOr<InstanceDocument> ParseInstance(const Json& doc) {
  INSTCOMP_RETURN_IF_ERROR(RequireObject(doc, "instance"));
  INSTCOMP_RETURN_IF_ERROR(CheckFormat(doc, kInstanceFormat));
  INSTCOMP_ASSIGN_OR_RETURN(std::string kind_name,
                            RequireString(doc, "kind", "instance"));
  INSTCOMP_ASSIGN_OR_RETURN(ProblemKind kind, ParseProblemKind(kind_name));
  std::optional<std::uint64_t> seed;
  if (const Json* s = Find(doc, "seed"); s != nullptr) {
    INSTCOMP_ASSIGN_OR_RETURN(seed, AsUint(*s, "instance.seed"));
  }
  switch (kind) {
    case ProblemKind::kMst: {
      INSTCOMP_ASSIGN_OR_RETURN(const Json* graph, Require(doc, "graph", "instance"));
      UncertainMstInstance inst;
      INSTCOMP_ASSIGN_OR_RETURN(inst.graph, ParseGraph(*graph, &inst.uncertain));
      INSTCOMP_RETURN_IF_ERROR(ValidateMstInstance(inst));
      return InstanceDocument{std::move(inst), seed};
    }
    case ProblemKind::kShortestPath: {
      INSTCOMP_ASSIGN_OR_RETURN(const Json* graph, Require(doc, "graph", "instance"));
      ShortestPathInstance inst;
      INSTCOMP_ASSIGN_OR_RETURN(inst.graph, ParseGraph(*graph, &inst.uncertain));
      INSTCOMP_ASSIGN_OR_RETURN(const Json* s, Require(doc, "s", "instance"));
      INSTCOMP_ASSIGN_OR_RETURN(const Json* t, Require(doc, "t", "instance"));
      INSTCOMP_ASSIGN_OR_RETURN(std::uint32_t s_id, AsId(*s, "instance.s"));
      INSTCOMP_ASSIGN_OR_RETURN(std::uint32_t t_id, AsId(*t, "instance.t"));
      inst.s = VertexId(s_id);
      inst.t = VertexId(t_id);
      INSTCOMP_RETURN_IF_ERROR(ValidateShortestPathInstance(inst));
      return InstanceDocument{std::move(inst), seed};
    }
    case ProblemKind::kMatching: {
      INSTCOMP_ASSIGN_OR_RETURN(const Json* graph, Require(doc, "graph", "instance"));
      INSTCOMP_ASSIGN_OR_RETURN(ParsedBipartite parsed, ParseBipartite(*graph));
      UncertainMatchingInstance inst{std::move(parsed.graph), std::move(parsed.l0),
                                     std::move(parsed.r0), std::move(parsed.e0)};
      INSTCOMP_RETURN_IF_ERROR(ValidateMatchingInstance(inst));
      return InstanceDocument{std::move(inst), seed};
    }
    case ProblemKind::kMatroid: {
      INSTCOMP_ASSIGN_OR_RETURN(const Json* matroid,
                                Require(doc, "matroid", "instance"));
      INSTCOMP_ASSIGN_OR_RETURN(Matroid m, ParseMatroid(*matroid));
      INSTCOMP_ASSIGN_OR_RETURN(ElementSet uncertain,
                                IdSet<ElementId>(doc, "uncertain", "instance"));
      INSTCOMP_ASSIGN_OR_RETURN(WeightMap weights,
                                ParseWeights<ElementId>(doc, "weights", "instance"));
      UncertainMatroidInstance inst{std::move(m), std::move(uncertain),
                                    std::move(weights)};
      INSTCOMP_RETURN_IF_ERROR(ValidateMatroidInstance(inst));
      return InstanceDocument{std::move(inst), seed};
    }
  }
  return Invalid("unknown problem kind");
}

Json EmitBundle(const BundleDocument& doc) {
  Json provenance = {{"tool", doc.provenance.tool},
                     {"input_sha256", doc.provenance.input_sha256}};
  if (doc.provenance.seed.has_value()) provenance["seed"] = *doc.provenance.seed;
  Json out = {{"format", kBundleFormat},
              {"kind", ProblemKindName(doc.kind())},
              {"provenance", std::move(provenance)}};
  std::visit(
      [&](const auto& bundle) {
        using T = std::decay_t<decltype(bundle)>;
        out["k"] = bundle.k;
        if constexpr (std::is_same_v<T, MstBundle>) {
          out["graph"] = EmitGraph(bundle.graph, bundle.uncertain);
          out["F"] = Ids(bundle.uncertain);
          if (bundle.trace.has_value()) {
            Json contracted = Json::array();
            for (EdgeId e : bundle.trace->contracted) contracted.push_back(e.value());
            out["trace"] = {{"forest", Ids(bundle.trace->forest)},
                            {"kept", Ids(bundle.trace->kept)},
                            {"zero_tree", Ids(bundle.trace->zero_tree)},
                            {"contracted", std::move(contracted)}};
          }
        } else if constexpr (std::is_same_v<T, ShortestPathBundle>) {
          out["graph"] = EmitGraph(bundle.graph, bundle.uncertain);
          out["F"] = Ids(bundle.uncertain);
          out["s"] = bundle.s.value();
          out["t"] = bundle.t.value();
          Json labels = Json::array();
          for (const auto& [id, interior] : bundle.labels) {
            Json path = Json::array();
            for (VertexId v : interior) path.push_back(v.value());
            labels.push_back({{"id", id.value()}, {"interior", std::move(path)}});
          }
          out["labels"] = std::move(labels);
        } else if constexpr (std::is_same_v<T, MatroidBundle>) {
          out["matroid"] = EmitMatroid(bundle.matroid);
          out["representation"] =
              bundle.matroid.kind() == Matroid::Kind::kMinor ? "oracle" : "matrix";
          out["F"] = Ids(bundle.uncertain);
          out["weights"] = EmitWeights(bundle.weights);
          if (bundle.trace.has_value()) {
            out["trace"] = {{"basis", Ids(bundle.trace->basis)},
                            {"kept", Ids(bundle.trace->kept)},
                            {"zero_basis", Ids(bundle.trace->zero_basis)}};
          }
        } else {
          out["graph"] = EmitBipartite(bundle.graph);
          out["L0"] = Ids(bundle.l0);
          out["R0"] = Ids(bundle.r0);
          out["E0"] = Ids(bundle.e0);
          Json gadgets = Json::array();
          for (const Gadget& g : bundle.gadgets) gadgets.push_back(EmitGadget(g));
          out["gadgets"] = std::move(gadgets);
          if (bundle.trace.has_value()) {
            const MatchingTrace& t = *bundle.trace;
            out["trace"] = {{"M", Ids(t.m)},
                            {"H", EmitDiGraph(t.h)},
                            {"L0", Ids(t.l0)},
                            {"R0", Ids(t.r0)},
                            {"FL", Ids(t.free_left)},
                            {"FR", Ids(t.free_right)},
                            {"X", Ids(t.x)},
                            {"MX", Ids(t.matched_at_x)},
                            {"Xprime", Ids(t.x_prime)},
                            {"Z", Ids(t.z)}};
          }
        }
      },
      doc.bundle);
  return out;
}

absl::StatusOr<BundleDocument> ParseBundle(const Json& doc) {
  INSTCOMP_RETURN_IF_ERROR(RequireObject(doc, "bundle"));
  INSTCOMP_RETURN_IF_ERROR(CheckFormat(doc, kBundleFormat));
  INSTCOMP_ASSIGN_OR_RETURN(std::string kind_name,
                            RequireString(doc, "kind", "bundle"));
  INSTCOMP_ASSIGN_OR_RETURN(ProblemKind kind, ParseProblemKind(kind_name));
  INSTCOMP_ASSIGN_OR_RETURN(const Json* prov, Require(doc, "provenance", "bundle"));
  INSTCOMP_RETURN_IF_ERROR(RequireObject(*prov, "provenance"));
  Provenance provenance;
  INSTCOMP_ASSIGN_OR_RETURN(provenance.tool, RequireString(*prov, "tool", "provenance"));
  INSTCOMP_ASSIGN_OR_RETURN(provenance.input_sha256,
                            RequireString(*prov, "input_sha256", "provenance"));
  if (const Json* s = Find(*prov, "seed"); s != nullptr) {
    INSTCOMP_ASSIGN_OR_RETURN(provenance.seed, AsUint(*s, "provenance.seed"));
  }
  INSTCOMP_ASSIGN_OR_RETURN(std::uint64_t k, RequireUint(doc, "k", "bundle"));
  const Json* trace = Find(doc, "trace");
  if (trace != nullptr) INSTCOMP_RETURN_IF_ERROR(RequireObject(*trace, "trace"));

  switch (kind) {
    case ProblemKind::kMst: {
      MstBundle bundle;
      bundle.k = k;
      INSTCOMP_ASSIGN_OR_RETURN(const Json* graph, Require(doc, "graph", "bundle"));
      INSTCOMP_ASSIGN_OR_RETURN(bundle.graph, ParseGraph(*graph, &bundle.uncertain));
      INSTCOMP_ASSIGN_OR_RETURN(EdgeSet f, IdSet<EdgeId>(doc, "F", "bundle", true));
      if (f != bundle.uncertain) {
        return Invalid("bundle F list disagrees with the uncertain edge flags");
      }
      if (trace != nullptr) {
        MstTrace t;
        INSTCOMP_ASSIGN_OR_RETURN(t.forest, IdSet<EdgeId>(*trace, "forest", "trace"));
        INSTCOMP_ASSIGN_OR_RETURN(t.kept, IdSet<EdgeId>(*trace, "kept", "trace"));
        INSTCOMP_ASSIGN_OR_RETURN(t.zero_tree,
                                  IdSet<EdgeId>(*trace, "zero_tree", "trace"));
        INSTCOMP_ASSIGN_OR_RETURN(std::vector<std::uint32_t> contracted,
                                  IdList(*trace, "contracted", "trace"));
        for (std::uint32_t e : contracted) t.contracted.push_back(EdgeId(e));
        bundle.trace = std::move(t);
      }
      return BundleDocument{std::move(bundle), std::move(provenance)};
    }
    case ProblemKind::kShortestPath: {
      ShortestPathBundle bundle;
      bundle.k = k;
      INSTCOMP_ASSIGN_OR_RETURN(const Json* graph, Require(doc, "graph", "bundle"));
      INSTCOMP_ASSIGN_OR_RETURN(bundle.graph, ParseGraph(*graph, &bundle.uncertain));
      INSTCOMP_ASSIGN_OR_RETURN(EdgeSet f, IdSet<EdgeId>(doc, "F", "bundle", true));
      if (f != bundle.uncertain) {
        return Invalid("bundle F list disagrees with the uncertain edge flags");
      }
      INSTCOMP_ASSIGN_OR_RETURN(std::uint64_t s, RequireUint(doc, "s", "bundle"));
      INSTCOMP_ASSIGN_OR_RETURN(std::uint64_t t, RequireUint(doc, "t", "bundle"));
      bundle.s = VertexId(static_cast<std::uint32_t>(s));
      bundle.t = VertexId(static_cast<std::uint32_t>(t));
      if (!bundle.graph.HasVertex(bundle.s) || !bundle.graph.HasVertex(bundle.t)) {
        return Invalid("bundle s or t is not a vertex");
      }
      INSTCOMP_ASSIGN_OR_RETURN(const Json* labels, Require(doc, "labels", "bundle"));
      if (!labels->is_array()) return Invalid("bundle.labels must be an array");
      for (const Json& label : *labels) {
        INSTCOMP_RETURN_IF_ERROR(RequireObject(label, "label"));
        INSTCOMP_ASSIGN_OR_RETURN(std::uint64_t id, RequireUint(label, "id", "label"));
        INSTCOMP_ASSIGN_OR_RETURN(std::vector<std::uint32_t> interior,
                                  IdList(label, "interior", "label", true));
        std::vector<VertexId> path;
        for (std::uint32_t v : interior) path.push_back(VertexId(v));
        bundle.labels.emplace(EdgeId(static_cast<std::uint32_t>(id)),
                              std::move(path));
      }
      return BundleDocument{std::move(bundle), std::move(provenance)};
    }
    case ProblemKind::kMatroid: {
      INSTCOMP_ASSIGN_OR_RETURN(const Json* matroid, Require(doc, "matroid", "bundle"));
      INSTCOMP_ASSIGN_OR_RETURN(Matroid m, ParseMatroid(*matroid));
      INSTCOMP_ASSIGN_OR_RETURN(ElementSet f, IdSet<ElementId>(doc, "F", "bundle", true));
      INSTCOMP_ASSIGN_OR_RETURN(WeightMap weights,
                                ParseWeights<ElementId>(doc, "weights", "bundle"));
      MatroidBundle bundle{std::move(m), std::move(f), std::move(weights), k,
                           std::nullopt};
      INSTCOMP_RETURN_IF_ERROR(ValidateMatroidInstance(
          {bundle.matroid, bundle.uncertain, bundle.weights}));
      if (trace != nullptr) {
        MatroidTrace t;
        INSTCOMP_ASSIGN_OR_RETURN(t.basis, IdSet<ElementId>(*trace, "basis", "trace"));
        INSTCOMP_ASSIGN_OR_RETURN(t.kept, IdSet<ElementId>(*trace, "kept", "trace"));
        INSTCOMP_ASSIGN_OR_RETURN(t.zero_basis,
                                  IdSet<ElementId>(*trace, "zero_basis", "trace"));
        bundle.trace = std::move(t);
      }
      return BundleDocument{std::move(bundle), std::move(provenance)};
    }
    case ProblemKind::kMatching: {
      MatchingBundle bundle;
      bundle.k = k;
      INSTCOMP_ASSIGN_OR_RETURN(const Json* graph, Require(doc, "graph", "bundle"));
      INSTCOMP_ASSIGN_OR_RETURN(ParsedBipartite parsed, ParseBipartite(*graph));
      bundle.graph = std::move(parsed.graph);
      INSTCOMP_ASSIGN_OR_RETURN(bundle.l0, IdSet<VertexId>(doc, "L0", "bundle", true));
      INSTCOMP_ASSIGN_OR_RETURN(bundle.r0, IdSet<VertexId>(doc, "R0", "bundle", true));
      INSTCOMP_ASSIGN_OR_RETURN(bundle.e0, IdSet<EdgeId>(doc, "E0", "bundle", true));
      INSTCOMP_RETURN_IF_ERROR(ValidateMatchingInstance(
          {bundle.graph, bundle.l0, bundle.r0, bundle.e0}));
      INSTCOMP_ASSIGN_OR_RETURN(const Json* gadgets, Require(doc, "gadgets", "bundle"));
      if (!gadgets->is_array()) return Invalid("bundle.gadgets must be an array");
      for (const Json& g : *gadgets) {
        INSTCOMP_ASSIGN_OR_RETURN(Gadget gadget, ParseGadget(g));
        bundle.gadgets.push_back(gadget);
      }
      if (trace != nullptr) {
        MatchingTrace t;
        INSTCOMP_ASSIGN_OR_RETURN(t.m, IdSet<EdgeId>(*trace, "M", "trace"));
        INSTCOMP_ASSIGN_OR_RETURN(const Json* h, Require(*trace, "H", "trace"));
        INSTCOMP_ASSIGN_OR_RETURN(t.h, ParseDiGraph(*h));
        INSTCOMP_ASSIGN_OR_RETURN(t.l0, IdSet<VertexId>(*trace, "L0", "trace"));
        INSTCOMP_ASSIGN_OR_RETURN(t.r0, IdSet<VertexId>(*trace, "R0", "trace"));
        INSTCOMP_ASSIGN_OR_RETURN(t.free_left, IdSet<VertexId>(*trace, "FL", "trace"));
        INSTCOMP_ASSIGN_OR_RETURN(t.free_right, IdSet<VertexId>(*trace, "FR", "trace"));
        INSTCOMP_ASSIGN_OR_RETURN(t.x, IdSet<VertexId>(*trace, "X", "trace"));
        INSTCOMP_ASSIGN_OR_RETURN(t.matched_at_x, IdSet<EdgeId>(*trace, "MX", "trace"));
        INSTCOMP_ASSIGN_OR_RETURN(t.x_prime, IdSet<VertexId>(*trace, "Xprime", "trace"));
        INSTCOMP_ASSIGN_OR_RETURN(t.z, IdSet<VertexId>(*trace, "Z", "trace"));
        bundle.trace = std::move(t);
      }
      return BundleDocument{std::move(bundle), std::move(provenance)};
    }
  }
  return Invalid("unknown problem kind");
}

Json EmitAssignment(const AssignmentDocument& doc) {
  Json weights = Json::array();
  for (const auto& [id, w] : doc.weights) weights.push_back({{"id", id}, {"w", w}});
  return {{"format", kAssignmentFormat},
          {"weights", std::move(weights)},
          {"remove", doc.remove},
          {"unavailable", doc.unavailable}};
}

absl::StatusOr<AssignmentDocument> ParseAssignment(const Json& doc) {
  INSTCOMP_RETURN_IF_ERROR(RequireObject(doc, "assignment"));
  if (Find(doc, "format") != nullptr) {
    INSTCOMP_RETURN_IF_ERROR(CheckFormat(doc, kAssignmentFormat));
  }
  AssignmentDocument out;
  INSTCOMP_ASSIGN_OR_RETURN(auto weights,
                            ParseWeights<EdgeId>(doc, "weights", "assignment"));
  for (const auto& [id, w] : weights) out.weights.emplace(id.value(), w);
  INSTCOMP_ASSIGN_OR_RETURN(std::vector<std::uint32_t> remove,
                            IdList(doc, "remove", "assignment"));
  out.remove.insert(remove.begin(), remove.end());
  INSTCOMP_ASSIGN_OR_RETURN(std::vector<std::uint32_t> unavailable,
                            IdList(doc, "unavailable", "assignment"));
  out.unavailable.insert(unavailable.begin(), unavailable.end());
  return out;
}

Json EmitReport(const VerificationReport& report) {
  auto value = [](const std::optional<Weight>& w) {
    return w.has_value() ? Json(*w) : Json(nullptr);
  };
  Json mismatches = Json::array();
  for (const Mismatch& m : report.mismatches) {
    mismatches.push_back({{"assignment", m.assignment},
                          {"original", value(m.original)},
                          {"compressed", value(m.compressed)},
                          {"k", m.k}});
  }
  return {{"format", kReportFormat},
          {"target", std::string(TargetName(report.target))},
          {"mode", std::string(ModeName(report.mode))},
          {"seed", report.seed},
          {"total", report.total},
          {"passed", report.passed},
          {"wall_seconds", report.wall_seconds},
          {"mismatches", std::move(mismatches)}};
}

std::string Sha256Hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest;
  unsigned int length = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(),
             nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 15]);
  }
  return out;
}

std::string InstanceHash(const InstanceDocument& doc) {
  return Sha256Hex(EmitInstance(doc).dump());
}

}  // namespace instcomp
