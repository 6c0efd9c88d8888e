#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gadgetry/coloring.hpp"
#include "gadgetry/graph.hpp"
#include "gadgetry/minor.hpp"
#include "gadgetry/realizer.hpp"
#include "gadgetry/trace.hpp"

namespace gadgetry {

// Vertex naming for assembled instances.
std::string x_id(int i);
std::string x_id(int i, int j);
std::string y_id(int j);
std::string z_id(int i, int j);
/// z{1}_3 .. z{1}_k, z{2}_3 .. z{m}_k: the order along the outer face of G'_2.
std::vector<std::string> z_order(int m, int k);
std::vector<std::string> x_order(int m);

/// m terminals x1..xm, palette k, and the family C of colorings to realize.
struct InstanceSpec {
  int m = 1;
  int k = 4;
  ColoringFamily family{{}, 4};

  /// BadParameter for out-of-range m/k or a domain other than x1..xm;
  /// NotClosed when the family is not closed under color permutations.
  void validate() const;
  /// The family of all k-colorings of x1..xm.
  static InstanceSpec all(int m, int k);
  static InstanceSpec empty(int m, int k);
};

/// The colorings g of Z compatible with f (one chain of z's per x_i).
ColoringFamily compute_cf(const PartialColoring& f, int m, int k);
/// Union of compute_cf over the members of the family.
ColoringFamily compute_cprime(const InstanceSpec& spec);

struct PartialBuild {
  Graph graph;
  ConstructionTrace trace;  // only the steps this part contributes
};

/// Gadget half: X, Y, Z, the x_{i,j}, one copy gadget per (i, j) and one
/// encoder per (i, s). The trace holds the clique-sum joins for the gadgets.
PartialBuild build_g1(int m, int k);
/// Realizer half: G'_2 with internal vertices renamed "G2/<id>", Y universal
/// over it, and the clique on Y. Throws UnverifiedCertificate.
PartialBuild build_g2(const RealizerCertificate& cert, int k);
/// G'_2 as it appears inside G (internal ids prefixed, roles normalized).
Graph realizer_part(const RealizerCertificate& cert);

/// The encoder summand F_enc+ for (i, s) with instance ids, and the recorded
/// rebuild of it from planar pieces plus apex vertices.
Graph encoder_summand(int k, int i, int s);
ConstructionTrace encoder_decomposition(int k, int i, int s);

/// The bundled directory of verified realizer fixtures.
std::string default_fixture_dir();

struct RealizerSource {
  RealizerLimits limits;
  std::optional<std::string> file;                                // used instead of searching
  std::optional<std::string> fixture_dir = default_fixture_dir();  // consulted when the search fails
};

struct AssembledInstance {
  InstanceSpec spec;
  Graph graph;
  ConstructionTrace trace;
  std::optional<RealizerCertificate> realizer;
  std::string realizer_origin;  // "search", "file:<path>", "fixture:<path>"
};

/// Builds G = G_1 + G_2 (or, for k = 3, the realizer of C itself). Throws
/// RealizerUnavailable when no verified realizer for C' could be obtained.
AssembledInstance assemble(const InstanceSpec& spec, const RealizerSource& source = {});

/// Looks for a verified realizer for `p` among the graph documents in `dir`.
std::optional<RealizerCertificate> realizer_from_fixtures(const std::string& dir, const RealizationProblem& p,
                                                          std::string* origin = nullptr);

struct RealizesRow {
  ColorTuple coloring;
  bool in_family = false;
  bool extends = false;
};

struct RealizesReport {
  std::vector<RealizesRow> rows;
  bool pass() const;
  std::vector<RealizesRow> counterexamples() const;
};

/// Checks every f: X -> [k]: f extends to G iff f is in the family. Rows
/// come out in lexicographic order whatever the number of jobs.
RealizesReport verify_realizes(const AssembledInstance& inst, int jobs = 1);
RealizesReport verify_realizes(const Graph& g, const InstanceSpec& spec, int jobs = 1);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SummandCheck {
  std::string label;
  std::size_t order = 0;
  std::string method;  // "direct" or "decomposition"
  int bound = 0;       // certified: no K_{bound+1} minor
  bool pass = false;
  std::string detail;
};

struct AuditReport {
  std::vector<CheckResult> checks;  // (1) .. (5)
  std::vector<SummandCheck> summands;
  /// Certified for the replayed graph: no K_{bound+1} minor, no X-rooted
  /// K_{rooted_bound+1} minor. Negative when nothing could be certified.
  int bound = -1;
  int rooted_bound = -1;
  bool pass() const;
};

/// Structural audit of the trace: replay, base planarity with X on the outer
/// face, apex steps, clique-sum joins, summand minor-freeness.
AuditReport audit_minor_freeness(const AssembledInstance& inst,
                                 double summand_budget_secs = kDefaultMinorBudgetSecs);
AuditReport audit_trace(const ConstructionTrace& trace, const Graph& expected, int k,
                        const std::vector<std::string>& roots,
                        double summand_budget_secs = kDefaultMinorBudgetSecs);

struct MinorCheckReport {
  enum class Status { Pass, Fail, Timeout };
  Status status = Status::Timeout;
  bool trivial = false;  // rooted check with fewer roots than pattern vertices
  std::string detail;
  std::optional<MinorModel> witness;
  MinorSearchStats stats;
};

std::string_view to_string(MinorCheckReport::Status status);

/// No X-rooted K_{k+1} model.
MinorCheckReport verify_rooted_freeness(const AssembledInstance& inst,
                                        double budget_secs = kDefaultMinorBudgetSecs);
/// No K_{k+2} model in the whole graph.
MinorCheckReport verify_direct_minor_freeness(const AssembledInstance& inst,
                                              double budget_secs = kDefaultMinorBudgetSecs);

Json spec_to_json(const InstanceSpec& spec);
InstanceSpec spec_from_json(const Json& doc, const std::string& where = "");
Json report_to_json(const RealizesReport& report);
Json report_to_json(const AuditReport& report);
Json report_to_json(const MinorCheckReport& report);

}  // namespace gadgetry
