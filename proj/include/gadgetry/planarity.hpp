#pragma once

#include <string>
#include <vector>

#include "gadgetry/graph.hpp"

namespace gadgetry {

/// Vertex ids read cyclically; a boundary and its reversal describe the same
/// outer-face condition.
struct CyclicBoundary {
  std::vector<std::string> order;

  friend bool operator==(const CyclicBoundary&, const CyclicBoundary&) = default;
};

bool is_planar(const Graph& g);

/// True iff g has a plane embedding with every boundary vertex on the outer
/// face, met in the boundary's cyclic order (either orientation). Throws
/// UnknownId for boundary ids missing from g, BadParameter for repeats.
bool planar_with_boundary(const Graph& g, const CyclicBoundary& boundary);

/// g plus a cycle through the boundary (in order) plus one apex adjacent to
/// every boundary vertex. `apex_id` must be fresh.
Graph boundary_augmentation(const Graph& g, const CyclicBoundary& boundary,
                            const std::string& apex_id = "__apex__");

/// Independent planarity test (path-embedding over bridges, per biconnected
/// block). Quadratic; meant for cross-checking the primary test.
bool is_planar_path_embedding(const Graph& g);

}  // namespace gadgetry
