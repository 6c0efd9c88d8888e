#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "gadgetry/graph.hpp"

namespace gadgetry {

using Json = nlohmann::json;

// Graph document:
//   { "name": str,
//     "vertices": [ {"id": str, "role": "X"|"Y"|"Z"|"internal", "tags": [str...]?}, ... ],
//     "edges": [ [id, id], ... ] }
// Canonical form: vertices sorted by id, each edge written with its smaller
// id first, edges sorted lexicographically, one record per line.

Json graph_to_json(const Graph& g);
/// `where` prefixes field paths in SchemaViolation messages.
Graph graph_from_json(const Json& doc, const std::string& where = "");

std::string serialize(const Graph& g);
/// Throws ParseError (with line:column) or SchemaViolation (with field path).
Graph deserialize(std::string_view text);

std::string to_dot(const Graph& g);

/// Parses JSON text, mapping syntax errors to ParseError with line:column.
Json parse_json_document(std::string_view text);

/// Writes a list-of-records document with one element per line; shared by
/// every canonical document writer.
std::string canonical_dump(const Json& doc);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace gadgetry
