#include "gadgetry/trace.hpp"

#include <set>

#include "gadgetry/error.hpp"

namespace gadgetry {

namespace {

[[noreturn]] void schema(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::SchemaViolation, "field '" + field + "': " + what);
}

void only_fields(const Json& rec, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!rec.is_object()) schema(where, "expected an object");
  for (auto it = rec.begin(); it != rec.end(); ++it) {
    bool known = false;
    for (const char* a : allowed) known = known || it.key() == a;
    if (!known) schema(where + "." + it.key(), "unknown field");
  }
}

const Json& require_field(const Json& rec, const std::string& where, const char* name) {
  if (!rec.contains(name)) schema(where + "." + name, "missing");
  return rec[name];
}

std::vector<std::string> id_list(const Json& j, const std::string& where) {
  if (!j.is_array()) schema(where, "expected a list of ids");
  std::vector<std::string> out;
  for (const auto& el : j) {
    if (!el.is_string()) schema(where, "ids must be strings");
    out.push_back(el.get<std::string>());
  }
  return out;
}

std::string describe(std::size_t index, const TraceStep& step) {
  return "step " + std::to_string(index) + " (" + std::string(step_kind(step)) + ")";
}

Graph apply_step(const Graph& acc, const TraceStep& step) {
  return std::visit(
      [&](const auto& s) -> Graph {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, BasePlanePiece>) {
          return glue(acc, s.graph);
        } else if constexpr (std::is_same_v<T, AddUniversalVertices>) {
          return add_universal_vertices(acc, s.vertices, s.targets);
        } else if constexpr (std::is_same_v<T, AddCliqueEdges>) {
          return clique_on(acc, s.ids);
        } else {
          return remove_edges(glue(acc, s.summand), s.dropped);
        }
      },
      step);
}

}  // namespace

std::string_view step_kind(const TraceStep& step) {
  switch (step.index()) {
    case 0: return "base_plane_piece";
    case 1: return "add_universal_vertices";
    case 2: return "clique_sum_join";
    default: return "add_clique_edges";
  }
}

Graph replay(const ConstructionTrace& trace, const ReplayObserver& observe) {
  Graph acc;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    if (std::holds_alternative<BasePlanePiece>(step) && i != 0) {
      throw Error(ErrorCode::ReplayMismatch, describe(i, step) + ": a base piece may only open the trace");
    }
    Graph next;
    try {
      next = apply_step(acc, step);
    } catch (const Error& e) {
      throw Error(ErrorCode::ReplayMismatch, describe(i, step) + ": " + e.what());
    }
    if (observe) observe(i, step, acc, next);
    acc = std::move(next);
  }
  return acc;
}

Json trace_to_json(const ConstructionTrace& trace) {
  Json steps = Json::array();
  for (const auto& step : trace.steps) {
    Json rec = {{"kind", std::string(step_kind(step))}};
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, BasePlanePiece>) {
            rec["graph"] = graph_to_json(s.graph);
            rec["boundary"] = s.boundary.order;
          } else if constexpr (std::is_same_v<T, AddUniversalVertices>) {
            Json vs = Json::array();
            for (const auto& v : s.vertices) vs.push_back({{"id", v.id}, {"role", std::string(to_string(v.role))}});
            rec["vertices"] = std::move(vs);
            rec["targets"] = s.targets;
          } else if constexpr (std::is_same_v<T, AddCliqueEdges>) {
            rec["ids"] = s.ids;
          } else {
            rec["summand"] = graph_to_json(s.summand);
            rec["shared"] = s.shared;
            Json dropped = Json::array();
            for (const auto& [a, b] : s.dropped) dropped.push_back(Json::array({a, b}));
            rec["dropped"] = std::move(dropped);
            if (s.decomposition) rec["decomposition"] = trace_to_json(*s.decomposition);
          }
        },
        step);
    steps.push_back(std::move(rec));
  }
  return Json{{"steps", std::move(steps)}};
}

ConstructionTrace trace_from_json(const Json& doc, const std::string& where) {
  const std::string root = where.empty() ? "<root>" : where;
  only_fields(doc, root, {"steps"});
  const auto& steps = require_field(doc, root, "steps");
  if (!steps.is_array()) schema(root + ".steps", "expected a list");
  ConstructionTrace out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string at = root + ".steps[" + std::to_string(i) + "]";
    const auto& rec = steps[i];
    if (!rec.is_object()) schema(at, "expected an object");
    const auto& kind_j = require_field(rec, at, "kind");
    if (!kind_j.is_string()) schema(at + ".kind", "not a string");
    const std::string kind = kind_j.get<std::string>();
    if (kind == "base_plane_piece") {
      only_fields(rec, at, {"kind", "graph", "boundary"});
      out.steps.emplace_back(BasePlanePiece{graph_from_json(require_field(rec, at, "graph"), at + ".graph"),
                                            {id_list(require_field(rec, at, "boundary"), at + ".boundary")}});
    } else if (kind == "add_universal_vertices") {
      only_fields(rec, at, {"kind", "vertices", "targets"});
      AddUniversalVertices s;
      const auto& vs = require_field(rec, at, "vertices");
      if (!vs.is_array()) schema(at + ".vertices", "expected a list");
      for (std::size_t j = 0; j < vs.size(); ++j) {
        const std::string vat = at + ".vertices[" + std::to_string(j) + "]";
        only_fields(vs[j], vat, {"id", "role"});
        const auto& id = require_field(vs[j], vat, "id");
        const auto& role = require_field(vs[j], vat, "role");
        if (!id.is_string()) schema(vat + ".id", "not a string");
        auto r = role.is_string() ? parse_role(role.get<std::string>()) : std::nullopt;
        if (!r) schema(vat + ".role", "not one of X, Y, Z, internal");
        s.vertices.emplace_back(id.get<std::string>(), *r);
      }
      s.targets = id_list(require_field(rec, at, "targets"), at + ".targets");
      out.steps.emplace_back(std::move(s));
    } else if (kind == "add_clique_edges") {
      only_fields(rec, at, {"kind", "ids"});
      out.steps.emplace_back(AddCliqueEdges{id_list(require_field(rec, at, "ids"), at + ".ids")});
    } else if (kind == "clique_sum_join") {
      only_fields(rec, at, {"kind", "summand", "shared", "dropped", "decomposition"});
      CliqueSumJoin s;
      s.summand = graph_from_json(require_field(rec, at, "summand"), at + ".summand");
      s.shared = id_list(require_field(rec, at, "shared"), at + ".shared");
      const auto& dropped = require_field(rec, at, "dropped");
      if (!dropped.is_array()) schema(at + ".dropped", "expected a list of id pairs");
      for (const auto& e : dropped) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
          schema(at + ".dropped", "expected a list of id pairs");
        }
        s.dropped.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
      }
      if (rec.contains("decomposition")) {
        s.decomposition =
            std::make_shared<ConstructionTrace>(trace_from_json(rec["decomposition"], at + ".decomposition"));
      }
      out.steps.emplace_back(std::move(s));
    } else {
      schema(at + ".kind", "unknown step kind '" + kind + "'");
    }
  }
  return out;
}

}  // namespace gadgetry
