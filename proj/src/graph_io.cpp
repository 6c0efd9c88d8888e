#include "gadgetry/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "gadgetry/error.hpp"

namespace gadgetry {

namespace {

bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

bool is_leafy(const Json& j) {
  if (is_scalar(j)) return true;
  for (const auto& el : j) {
    if (is_scalar(el)) continue;
    if (j.is_object() && el.is_array()) {
      for (const auto& inner : el) {
        if (!is_scalar(inner)) return false;
      }
      continue;
    }
    return false;
  }
  return true;
}

void dump_into(const Json& j, int indent, std::string& out) {
  const std::string pad(indent + 2, ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += pad + Json(it.key()).dump() + ": ";
      dump_into(it.value(), indent + 2, out);
    }
    out += "\n" + std::string(indent, ' ') + "}";
    return;
  }
  if (j.is_array() && !j.empty() && !(j.size() <= 16 && is_leafy(j) && j.dump().size() <= 100)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += pad;
      if (is_leafy(j[i])) {
        out += j[i].dump();
      } else {
        dump_into(j[i], indent + 2, out);
      }
    }
    out += "\n" + std::string(indent, ' ') + "]";
    return;
  }
  out += j.dump();
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void schema(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::SchemaViolation, "field '" + field + "': " + what);
}

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string canonical_dump(const Json& doc) {
  std::string out;
  dump_into(doc, 0, out);
  return out + "\n";
}

Json parse_json_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
  }
}

Json graph_to_json(const Graph& g) {
  Json vertices = Json::array();
  for (const auto& v : g.vertices()) {
    Json rec = {{"id", v.id}, {"role", std::string(to_string(v.role))}};
    if (!v.tags.empty()) rec["tags"] = v.tags;
    vertices.push_back(std::move(rec));
  }
  Json edges = Json::array();
  for (const auto& [a, b] : g.edge_ids()) edges.push_back(Json::array({a, b}));
  return Json{{"name", g.name()}, {"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& doc, const std::string& where) {
  const std::string root = where.empty() ? "" : where + ".";
  if (!doc.is_object()) schema(where.empty() ? "<root>" : where, "expected an object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (it.key() != "name" && it.key() != "vertices" && it.key() != "edges") {
      schema(root + it.key(), "unknown field");
    }
  }
  if (!doc.contains("name") || !doc["name"].is_string()) schema(root + "name", "missing or not a string");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) schema(root + "vertices", "missing or not a list");
  if (!doc.contains("edges") || !doc["edges"].is_array()) schema(root + "edges", "missing or not a list");

  std::vector<Vertex> vertices;
  const auto& vs = doc["vertices"];
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string field = root + "vertices[" + std::to_string(i) + "]";
    const auto& rec = vs[i];
    if (!rec.is_object()) schema(field, "expected an object");
    for (auto it = rec.begin(); it != rec.end(); ++it) {
      if (it.key() != "id" && it.key() != "role" && it.key() != "tags") schema(field + "." + it.key(), "unknown field");
    }
    if (!rec.contains("id") || !rec["id"].is_string()) schema(field + ".id", "missing or not a string");
    if (!rec.contains("role") || !rec["role"].is_string()) schema(field + ".role", "missing or not a string");
    auto role = parse_role(rec["role"].get<std::string>());
    if (!role) schema(field + ".role", "unknown role '" + rec["role"].get<std::string>() + "'");
    std::vector<std::string> tags;
    if (rec.contains("tags")) {
      if (!rec["tags"].is_array()) schema(field + ".tags", "not a list");
      for (const auto& t : rec["tags"]) {
        if (!t.is_string()) schema(field + ".tags", "tags must be strings");
        tags.push_back(t.get<std::string>());
      }
    }
    vertices.emplace_back(rec["id"].get<std::string>(), *role, std::move(tags));
  }

  std::vector<IdPair> edges;
  const auto& es = doc["edges"];
  for (std::size_t i = 0; i < es.size(); ++i) {
    const auto& e = es[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      schema(root + "edges[" + std::to_string(i) + "]", "expected a two-element list of ids");
    }
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }

  try {
    return Graph(doc["name"].get<std::string>(), std::move(vertices), edges);
  } catch (const Error& e) {
    schema(root + "<graph>", e.what());
  }
}

std::string serialize(const Graph& g) { return canonical_dump(graph_to_json(g)); }

Graph deserialize(std::string_view text) { return graph_from_json(parse_json_document(text)); }

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph " << dot_quote(g.name()) << " {\n";
  for (const auto& v : g.vertices()) {
    out << "  " << dot_quote(v.id) << " [role=" << dot_quote(to_string(v.role));
    if (!v.tags.empty()) {
      std::string joined;
      for (const auto& t : v.tags) joined += (joined.empty() ? "" : ",") + t;
      out << ", tags=" << dot_quote(joined);
    }
    out << "];\n";
  }
  for (const auto& [a, b] : g.edge_ids()) out << "  " << dot_quote(a) << " -- " << dot_quote(b) << ";\n";
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::BadParameter, "cannot write '" + path + "'");
  out << text;
}

}  // namespace gadgetry
