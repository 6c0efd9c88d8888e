#pragma once

#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "gadgetry/graph.hpp"
#include "gadgetry/graph_io.hpp"
#include "gadgetry/planarity.hpp"

namespace gadgetry {

struct ConstructionTrace;

/// A plane graph to start from; `boundary` lists the vertices that must lie
/// on its outer face (possibly none).
struct BasePlanePiece {
  Graph graph;
  CyclicBoundary boundary;
};

/// New vertices, each adjacent to every target (an earlier vertex).
struct AddUniversalVertices {
  std::vector<Vertex> vertices;
  std::vector<std::string> targets;
};

/// Glue `summand` onto the accumulated graph along `shared`, which must be a
/// clique on both sides, then delete `dropped` (edges inside the shared
/// clique that the target graph does not have; deleting edges cannot create
/// a minor). `decomposition`, when present, rebuilds the summand and lets the
/// audit certify it without searching it directly.
struct CliqueSumJoin {
  Graph summand;
  std::vector<std::string> shared;
  std::vector<IdPair> dropped;
  std::shared_ptr<const ConstructionTrace> decomposition;
};

struct AddCliqueEdges {
  std::vector<std::string> ids;
};

using TraceStep = std::variant<BasePlanePiece, AddUniversalVertices, CliqueSumJoin, AddCliqueEdges>;

struct ConstructionTrace {
  std::vector<TraceStep> steps;
};

std::string_view step_kind(const TraceStep& step);

/// Rebuilds the graph step by step. `observe` (optional) sees each step with
/// the graph before and after it. Any step that cannot be applied raises
/// ReplayMismatch naming the step.
using ReplayObserver = std::function<void(std::size_t index, const TraceStep& step, const Graph& before,
                                          const Graph& after)>;
Graph replay(const ConstructionTrace& trace, const ReplayObserver& observe = {});

Json trace_to_json(const ConstructionTrace& trace);
ConstructionTrace trace_from_json(const Json& doc, const std::string& where = "");

}  // namespace gadgetry
