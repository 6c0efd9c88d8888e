#include "gadgetry/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gadgetry/error.hpp"

namespace gadgetry {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::RoleConflict: return "RoleConflict";
    case ErrorCode::IdCollision: return "IdCollision";
    case ErrorCode::UnknownTarget: return "UnknownTarget";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::ColorOutOfRange: return "ColorOutOfRange";
    case ErrorCode::DuplicateBoundaryId: return "DuplicateBoundaryId";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::NotRainbow: return "NotRainbow";
    case ErrorCode::MissingTerminal: return "MissingTerminal";
    case ErrorCode::Timeout: return "Timeout";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::UnverifiedCertificate: return "UnverifiedCertificate";
    case ErrorCode::RealizerUnavailable: return "RealizerUnavailable";
    case ErrorCode::ReplayMismatch: return "ReplayMismatch";
  }
  return "Unknown";
}

std::string_view to_string(Role role) {
  switch (role) {
    case Role::X: return "X";
    case Role::Y: return "Y";
    case Role::Z: return "Z";
    case Role::Internal: return "internal";
  }
  return "internal";
}

std::optional<Role> parse_role(std::string_view text) {
  if (text == "X") return Role::X;
  if (text == "Y") return Role::Y;
  if (text == "Z") return Role::Z;
  if (text == "internal") return Role::Internal;
  return std::nullopt;
}

namespace {

std::vector<std::string> normalized_tags(std::vector<std::string> tags) {
  std::sort(tags.begin(), tags.end());
  tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
  return tags;
}

}  // namespace

Graph::Graph(std::string name, std::vector<Vertex> vertices, const std::vector<IdPair>& edges)
    : name_(std::move(name)), vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end(),
            [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i > 0 && vertices_[i].id == vertices_[i - 1].id) {
      throw Error(ErrorCode::DuplicateId, "vertex id '" + vertices_[i].id + "' declared twice");
    }
    vertices_[i].tags = normalized_tags(std::move(vertices_[i].tags));
  }
  edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = find(a);
    auto ib = find(b);
    if (!ia) throw Error(ErrorCode::UnknownEndpoint, "edge (" + a + ", " + b + "): '" + a + "' not declared");
    if (!ib) throw Error(ErrorCode::UnknownEndpoint, "edge (" + a + ", " + b + "): '" + b + "' not declared");
    if (*ia == *ib) throw Error(ErrorCode::LoopEdge, "loop at '" + a + "'");
    edges_.emplace_back(std::min(*ia, *ib), std::max(*ia, *ib));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  adjacency_.assign(vertices_.size(), {});
  for (const auto& [i, j] : edges_) {
    adjacency_[i].push_back(j);
    adjacency_[j].push_back(i);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::vector<IdPair> Graph::edge_ids() const {
  std::vector<IdPair> out;
  out.reserve(edges_.size());
  for (const auto& [i, j] : edges_) out.emplace_back(vertices_[i].id, vertices_[j].id);
  return out;
}

std::vector<std::string> Graph::ids() const {
  std::vector<std::string> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(v.id);
  return out;
}

std::vector<std::string> Graph::ids_with_role(Role role) const {
  std::vector<std::string> out;
  for (const auto& v : vertices_) {
    if (v.role == role) out.push_back(v.id);
  }
  return out;
}

std::optional<std::size_t> Graph::find(std::string_view id) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id,
                             [](const Vertex& v, std::string_view key) { return v.id < key; });
  if (it == vertices_.end() || it->id != id) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Graph::index_of(std::string_view id) const {
  auto i = find(id);
  if (!i) throw Error(ErrorCode::UnknownVertex, "no vertex '" + std::string(id) + "' in graph '" + name_ + "'");
  return *i;
}

bool Graph::adjacent(std::size_t i, std::size_t j) const {
  const auto& list = adjacency_[i];
  return std::binary_search(list.begin(), list.end(), j);
}

bool Graph::adjacent(std::string_view a, std::string_view b) const {
  return adjacent(index_of(a), index_of(b));
}

Graph Graph::with_name(std::string name) const {
  Graph copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edges_ != b.edges_) return false;
  for (std::size_t i = 0; i < a.order(); ++i) {
    if (a.vertices_[i].id != b.vertices_[i].id || a.vertices_[i].role != b.vertices_[i].role) return false;
  }
  return true;
}

Graph build_graph(std::string name, std::vector<Vertex> vertices, const std::vector<IdPair>& edges) {
  return Graph(std::move(name), std::move(vertices), edges);
}

Graph glue(const Graph& a, const Graph& b) {
  std::map<std::string, Vertex> merged;
  for (const auto& v : a.vertices()) merged.emplace(v.id, v);
  for (const auto& v : b.vertices()) {
    auto [it, inserted] = merged.emplace(v.id, v);
    if (inserted) continue;
    if (it->second.role != v.role) {
      throw Error(ErrorCode::RoleConflict, "vertex '" + v.id + "' is " + std::string(to_string(it->second.role)) +
                                               " in '" + a.name() + "' but " + std::string(to_string(v.role)) +
                                               " in '" + b.name() + "'");
    }
    auto& tags = it->second.tags;
    tags.insert(tags.end(), v.tags.begin(), v.tags.end());
  }
  std::vector<Vertex> vertices;
  vertices.reserve(merged.size());
  for (auto& [id, v] : merged) vertices.push_back(std::move(v));
  auto edges = a.edge_ids();
  auto more = b.edge_ids();
  edges.insert(edges.end(), more.begin(), more.end());
  return Graph(a.name().empty() ? b.name() : a.name(), std::move(vertices), edges);
}

Graph add_universal_vertices(const Graph& g, const std::vector<Vertex>& new_vertices,
                             const std::vector<std::string>& targets) {
  for (const auto& t : targets) {
    if (!g.contains(t)) throw Error(ErrorCode::UnknownTarget, "universal-vertex target '" + t + "' not in graph");
  }
  std::set<std::string> fresh;
  for (const auto& v : new_vertices) {
    if (g.contains(v.id) || !fresh.insert(v.id).second) {
      throw Error(ErrorCode::IdCollision, "universal vertex id '" + v.id + "' is not fresh");
    }
  }
  auto vertices = g.vertices();
  vertices.insert(vertices.end(), new_vertices.begin(), new_vertices.end());
  auto edges = g.edge_ids();
  for (const auto& v : new_vertices) {
    for (const auto& t : targets) edges.emplace_back(v.id, t);
  }
  return Graph(g.name(), std::move(vertices), edges);
}

Graph add_universal_vertices(const Graph& g, const std::vector<std::string>& new_ids,
                             const std::vector<std::string>& targets) {
  std::vector<Vertex> vs;
  vs.reserve(new_ids.size());
  for (const auto& id : new_ids) vs.emplace_back(id);
  return add_universal_vertices(g, vs, targets);
}

Graph clique_on(const Graph& g, const std::vector<std::string>& ids) {
  for (const auto& id : ids) {
    if (!g.contains(id)) throw Error(ErrorCode::UnknownId, "clique vertex '" + id + "' not in graph");
  }
  auto edges = g.edge_ids();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (ids[i] != ids[j]) edges.emplace_back(ids[i], ids[j]);
    }
  }
  return Graph(g.name(), g.vertices(), edges);
}

Graph remove_edges(const Graph& g, const std::vector<IdPair>& edges) {
  std::set<IndexPair> drop;
  for (const auto& [a, b] : edges) {
    auto ia = g.find(a);
    auto ib = g.find(b);
    if (!ia || !ib || !g.adjacent(*ia, *ib)) {
      throw Error(ErrorCode::UnknownId, "edge (" + a + ", " + b + ") not in graph");
    }
    drop.emplace(std::min(*ia, *ib), std::max(*ia, *ib));
  }
  std::vector<IdPair> kept;
  for (const auto& e : g.edges()) {
    if (!drop.count(e)) kept.emplace_back(g.id(e.first), g.id(e.second));
  }
  return Graph(g.name(), g.vertices(), kept);
}

Graph induced_subgraph(const Graph& g, const std::vector<std::string>& ids) {
  std::vector<Vertex> vertices;
  std::vector<bool> keep(g.order(), false);
  for (const auto& id : ids) {
    auto i = g.index_of(id);
    if (!keep[i]) vertices.push_back(g.vertex(i));
    keep[i] = true;
  }
  std::vector<IdPair> edges;
  for (const auto& [i, j] : g.edges()) {
    if (keep[i] && keep[j]) edges.emplace_back(g.id(i), g.id(j));
  }
  return Graph(g.name(), std::move(vertices), edges);
}

Graph without_tags(const Graph& g) {
  auto vertices = g.vertices();
  for (auto& v : vertices) v.tags.clear();
  return Graph(g.name(), std::move(vertices), g.edge_ids());
}

Graph complete_graph(std::size_t t, std::string_view prefix) {
  std::vector<Vertex> vertices;
  std::vector<IdPair> edges;
  for (std::size_t i = 1; i <= t; ++i) vertices.emplace_back(std::string(prefix) + std::to_string(i));
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) edges.emplace_back(vertices[i].id, vertices[j].id);
  }
  return Graph("K" + std::to_string(t), std::move(vertices), edges);
}

std::vector<std::vector<std::size_t>> connected_components(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (auto n : g.neighbors(members[head])) {
        if (comp[n] < 0) {
          comp[n] = comp[s];
          members.push_back(n);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace gadgetry
