#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gadgetry/graph.hpp"
#include "gadgetry/graph_io.hpp"

namespace gadgetry {

inline constexpr double kDefaultMinorBudgetSecs = 120.0;

struct RootConstraint {
  std::vector<std::string> roots;
  bool rooted = false;

  static RootConstraint unrooted() { return {}; }
  static RootConstraint rooted_at(std::vector<std::string> roots) { return {std::move(roots), true}; }
};

/// Branch sets of a pattern graph inside a host graph.
struct MinorModel {
  Graph pattern;
  Graph host;
  std::map<std::string, std::vector<std::string>> branch_sets;  // pattern id -> host ids
};

struct MinorSearchStats {
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

/// Exact search: returns a model when one exists, nullopt when none does.
/// Throws Timeout when the budget runs out (never reported as "no model"),
/// BadParameter for an empty pattern, UnknownId for roots not in the host.
std::optional<MinorModel> find_model(const Graph& host, const Graph& pattern, const RootConstraint& rc,
                                     double budget_secs = kDefaultMinorBudgetSecs,
                                     MinorSearchStats* stats = nullptr);

/// Checks the model's invariants directly: disjoint non-empty connected
/// branch sets, every pattern edge realized, roots hit in rooted mode.
/// Throws UnknownId if an id does not resolve.
bool verify_model(const MinorModel& model, const RootConstraint& rc);

bool is_minor_free(const Graph& host, const Graph& pattern, const RootConstraint& rc,
                   double budget_secs = kDefaultMinorBudgetSecs, MinorSearchStats* stats = nullptr);

/// Witness document: {"pattern": graph name, "branch_sets": {pattern id: [host ids]}}.
Json model_to_json(const MinorModel& model);

}  // namespace gadgetry
