#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gadgetry {

enum class Role { X, Y, Z, Internal };

std::string_view to_string(Role role);
std::optional<Role> parse_role(std::string_view text);

struct Vertex {
  std::string id;
  Role role = Role::Internal;
  std::vector<std::string> tags;

  Vertex() = default;
  Vertex(std::string id_, Role role_ = Role::Internal, std::vector<std::string> tags_ = {})
      : id(std::move(id_)), role(role_), tags(std::move(tags_)) {}
};

using IdPair = std::pair<std::string, std::string>;
using IndexPair = std::pair<std::size_t, std::size_t>;

/// Finite simple undirected graph with string-identified, role-tagged vertices.
///
/// Values are immutable once built. Vertices are kept sorted by id, so vertex
/// indices follow the lexicographic id order and `edges()` is the canonical
/// (sorted, i < j) edge list. Equality compares ids, roles and edges; the name
/// and the vertex tags are carried along but do not take part in it.
class Graph {
 public:
  Graph() = default;

  /// Validating constructor. Duplicate edges collapse; throws DuplicateId,
  /// UnknownEndpoint or LoopEdge.
  Graph(std::string name, std::vector<Vertex> vertices, const std::vector<IdPair>& edges);

  const std::string& name() const { return name_; }
  std::size_t order() const { return vertices_.size(); }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return vertices_.empty(); }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(std::size_t i) const { return vertices_[i]; }
  const std::string& id(std::size_t i) const { return vertices_[i].id; }
  const std::vector<IndexPair>& edges() const { return edges_; }
  std::vector<IdPair> edge_ids() const;
  std::vector<std::string> ids() const;
  std::vector<std::string> ids_with_role(Role role) const;

  std::optional<std::size_t> find(std::string_view id) const;
  /// Throws UnknownVertex.
  std::size_t index_of(std::string_view id) const;
  bool contains(std::string_view id) const { return find(id).has_value(); }

  const std::vector<std::size_t>& neighbors(std::size_t i) const { return adjacency_[i]; }
  std::size_t degree(std::size_t i) const { return adjacency_[i].size(); }
  bool adjacent(std::size_t i, std::size_t j) const;
  bool adjacent(std::string_view a, std::string_view b) const;

  Graph with_name(std::string name) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::string name_;
  std::vector<Vertex> vertices_;
  std::vector<IndexPair> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// Same as the validating constructor; kept as a free function for symmetry
/// with the other composition operations.
Graph build_graph(std::string name, std::vector<Vertex> vertices, const std::vector<IdPair>& edges);

/// Union by id. Shared ids must agree on role (RoleConflict); tags are merged.
Graph glue(const Graph& a, const Graph& b);

/// Adds `new_vertices`, each adjacent to every id in `targets`. The new
/// vertices are not made adjacent to one another.
Graph add_universal_vertices(const Graph& g, const std::vector<Vertex>& new_vertices,
                             const std::vector<std::string>& targets);
Graph add_universal_vertices(const Graph& g, const std::vector<std::string>& new_ids,
                             const std::vector<std::string>& targets);

/// Adds every missing edge among `ids`.
Graph clique_on(const Graph& g, const std::vector<std::string>& ids);

/// Removes the listed edges; each must be present (UnknownId otherwise).
Graph remove_edges(const Graph& g, const std::vector<IdPair>& edges);

/// Subgraph induced by `ids`.
Graph induced_subgraph(const Graph& g, const std::vector<std::string>& ids);

/// Drops all vertex tags.
Graph without_tags(const Graph& g);

/// K_t on ids "p1".."pt".
Graph complete_graph(std::size_t t, std::string_view prefix = "p");

/// Connected components as sorted index lists, ordered by smallest member.
std::vector<std::vector<std::size_t>> connected_components(const Graph& g);

}  // namespace gadgetry
