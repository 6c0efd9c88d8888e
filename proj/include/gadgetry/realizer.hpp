#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gadgetry/coloring.hpp"
#include "gadgetry/graph.hpp"
#include "gadgetry/graph_io.hpp"
#include "gadgetry/planarity.hpp"

namespace gadgetry {

inline constexpr int kDefaultMaxInternal = 3;
inline constexpr double kDefaultRealizerBudgetSecs = 300.0;

/// A set of 3-colorings of a cyclically ordered boundary to be realized by a
/// plane graph. The family's domain must be the boundary order.
struct RealizationProblem {
  CyclicBoundary boundary;
  ColoringFamily family{{}, 3};

  /// Throws BadParameter unless k = 3 and the domain matches the boundary;
  /// NotClosed unless the family is closed under color permutations.
  void validate() const;
};

struct RealizerVerdict;

class RealizerCertificate {
 public:
  const Graph& graph() const { return graph_; }
  const CyclicBoundary& boundary() const { return boundary_; }
  const ColoringFamily& family() const { return family_; }
  /// Only verify_realizer produces certificates with this set.
  bool verified() const { return verified_; }

  /// An unverified certificate; consumers that need a verified one reject it.
  static RealizerCertificate unverified(Graph g, CyclicBoundary b, ColoringFamily f) {
    return RealizerCertificate(std::move(g), std::move(b), std::move(f), false);
  }

 private:
  RealizerCertificate(Graph g, CyclicBoundary b, ColoringFamily f, bool verified)
      : graph_(std::move(g)), boundary_(std::move(b)), family_(std::move(f)), verified_(verified) {}

  Graph graph_;
  CyclicBoundary boundary_;
  ColoringFamily family_{{}, 3};
  bool verified_ = false;

  friend RealizerVerdict verify_realizer(const Graph& g, const RealizationProblem& p);
};

struct RealizerFailure {
  bool planar_ok = false;  // condition (a)
  bool trace_ok = false;   // condition (b)
  /// A boundary coloring on which the trace and the family disagree.
  std::optional<ColorTuple> witness;
  /// True when the witness extends but is not in the family.
  bool witness_extends = false;
  std::string summary() const;
};

struct RealizerVerdict {
  std::optional<RealizerCertificate> certificate;
  RealizerFailure failure;  // meaningful when certificate is empty

  bool ok() const { return certificate.has_value(); }
};

/// Checks (a) g is planar with the boundary on the outer face in cyclic order
/// and (b) the boundary trace of g over 3 colors equals the family. Throws
/// UnknownId when a boundary id is missing from g.
RealizerVerdict verify_realizer(const Graph& g, const RealizationProblem& p);

struct RealizerLimits {
  int max_internal = kDefaultMaxInternal;
  int max_edges = -1;  // negative: no cap
  double budget_secs = kDefaultRealizerBudgetSecs;
};

struct RealizerSearchResult {
  enum class Status { Found, Exhausted, Timeout };
  Status status = Status::Exhausted;
  std::optional<RealizerCertificate> certificate;
  std::uint64_t candidates = 0;
  double seconds = 0.0;
};

std::string_view to_string(RealizerSearchResult::Status status);

/// Exhaustive search over graphs made of the boundary plus up to
/// `max_internal` internal vertices ("r1", "r2", ...): fewer internal vertices
/// first, then fewer edges, then lexicographic edge sets. Returned
/// certificates come from verify_realizer. Throws NotClosed for a family that
/// is not permutation-closed.
RealizerSearchResult search_realizer(const RealizationProblem& p, const RealizerLimits& limits = {});

/// Parses a graph document and verifies it; never trusts the input.
RealizerVerdict load_realizer(std::string_view graph_document, const RealizationProblem& p);

Json problem_to_json(const RealizationProblem& p);
RealizationProblem problem_from_json(const Json& doc, const std::string& where = "");

}  // namespace gadgetry
