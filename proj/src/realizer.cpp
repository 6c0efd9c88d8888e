#include "gadgetry/realizer.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <set>

#include "gadgetry/error.hpp"

namespace gadgetry {

namespace {

using Clock = std::chrono::steady_clock;

std::string tuple_text(const ColorTuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + std::to_string(t[i]);
  return out + ")";
}

// Restricted-growth tuples of the given length over at most 3 labels: one per
// orbit of 3-colorings under color permutations.
std::vector<ColorTuple> orbit_representatives(std::size_t length) {
  std::vector<ColorTuple> out;
  ColorTuple t(length, 1);
  std::function<void(std::size_t, int)> walk = [&](std::size_t pos, int used) {
    if (pos == length) {
      out.push_back(t);
      return;
    }
    for (Color c = 1; c <= std::min(used + 1, 3); ++c) {
      t[pos] = c;
      walk(pos + 1, std::max(used, c));
    }
  };
  walk(0, 0);
  return out;
}

// Drops masks that contain another mask: avoiding the smaller one is implied.
std::vector<std::uint64_t> minimal_masks(std::vector<std::uint64_t> masks) {
  std::sort(masks.begin(), masks.end(), [](auto a, auto b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<std::uint64_t> out;
  for (auto m : masks) {
    if (std::none_of(out.begin(), out.end(), [&](auto o) { return (o & m) == o; })) out.push_back(m);
  }
  return out;
}

// The trace test for one vertex count. For every boundary orbit
// representative, the "monochromatic pair" masks of its total extensions: an
// edge set admits the extension iff it misses that mask.
struct TraceTable {
  std::vector<std::vector<std::uint64_t>> wanted;    // members: some mask must be missed
  std::vector<std::vector<std::uint64_t>> unwanted;  // non-members: every mask must be hit

  // Members first: one member that fails to extend ends the candidate.
  bool accepts(std::uint64_t edges) const {
    for (const auto& masks : wanted) {
      if (std::none_of(masks.begin(), masks.end(), [&](auto m) { return (m & edges) == 0; })) return false;
    }
    for (const auto& masks : unwanted) {
      if (std::any_of(masks.begin(), masks.end(), [&](auto m) { return (m & edges) == 0; })) return false;
    }
    return true;
  }
};

TraceTable build_table(const RealizationProblem& p, int n, const std::vector<std::pair<int, int>>& pairs) {
  const int nb = static_cast<int>(p.boundary.order.size());
  const int ni = n - nb;
  TraceTable table;
  for (const auto& rep : orbit_representatives(nb)) {
    std::vector<std::uint64_t> masks;
    std::vector<int> color(n);
    for (int i = 0; i < nb; ++i) color[i] = rep[i];
    int total = 1;
    for (int i = 0; i < ni; ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
      int x = code;
      for (int i = 0; i < ni; ++i, x /= 3) color[nb + i] = x % 3 + 1;
      std::uint64_t mono = 0;
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if (color[pairs[e].first] == color[pairs[e].second]) mono |= 1ULL << e;
      }
      masks.push_back(mono);
    }
    (p.family.contains(rep) ? table.wanted : table.unwanted).push_back(minimal_masks(std::move(masks)));
  }
  return table;
}

Graph candidate_graph(const RealizationProblem& p, int n, const std::vector<std::pair<int, int>>& pairs,
                      std::uint64_t edges) {
  const int nb = static_cast<int>(p.boundary.order.size());
  std::vector<std::string> names = p.boundary.order;
  for (int i = nb; i < n; ++i) names.push_back("r" + std::to_string(i - nb + 1));
  std::vector<Vertex> vertices;
  for (int i = 0; i < n; ++i) vertices.emplace_back(names[i], i < nb ? Role::Z : Role::Internal);
  std::vector<IdPair> es;
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    if (edges >> e & 1ULL) es.emplace_back(names[pairs[e].first], names[pairs[e].second]);
  }
  return Graph("realizer", std::move(vertices), es);
}

}  // namespace

void RealizationProblem::validate() const {
  if (family.k() != 3) throw Error(ErrorCode::BadParameter, "realization problems use 3 colors");
  if (family.domain() != boundary.order) {
    throw Error(ErrorCode::BadParameter, "family domain must equal the boundary order");
  }
  std::set<std::string> seen(boundary.order.begin(), boundary.order.end());
  if (seen.size() != boundary.order.size()) throw Error(ErrorCode::BadParameter, "boundary ids repeat");
  if (!is_closed(family)) {
    throw Error(ErrorCode::NotClosed, "family is not closed under color permutations; apply close_under_permutations");
  }
}

std::string RealizerFailure::summary() const {
  std::string out;
  if (!planar_ok) out += "condition (a) failed: not planar with the boundary on the outer face in order";
  if (!trace_ok) {
    if (!out.empty()) out += "; ";
    out += "condition (b) failed: boundary trace differs from the family";
    if (witness) {
      out += ", witness " + tuple_text(*witness) +
             (witness_extends ? " extends but is not in the family" : " is in the family but does not extend");
    }
  }
  return out;
}

RealizerVerdict verify_realizer(const Graph& g, const RealizationProblem& p) {
  for (const auto& id : p.boundary.order) {
    if (!g.contains(id)) throw Error(ErrorCode::UnknownId, "boundary id '" + id + "' not in the realizer graph");
  }
  if (p.family.k() != 3 || p.family.domain() != p.boundary.order) {
    throw Error(ErrorCode::BadParameter, "family must be over the boundary order with k = 3");
  }
  RealizerVerdict verdict;
  verdict.failure.planar_ok = planar_with_boundary(g, p.boundary);
  const ColoringFamily trace = boundary_trace(g, p.boundary.order, 3);
  verdict.failure.trace_ok = trace == p.family;
  if (!verdict.failure.trace_ok) {
    // Smallest tuple in the symmetric difference.
    std::optional<ColorTuple> extra, missing;
    for (const auto& t : trace.members()) {
      if (!p.family.contains(t)) {
        extra = t;
        break;
      }
    }
    for (const auto& t : p.family.members()) {
      if (!trace.contains(t)) {
        missing = t;
        break;
      }
    }
    if (extra && (!missing || *extra < *missing)) {
      verdict.failure.witness = extra;
      verdict.failure.witness_extends = true;
    } else {
      verdict.failure.witness = missing;
    }
  }
  if (verdict.failure.planar_ok && verdict.failure.trace_ok) {
    verdict.certificate = RealizerCertificate(g, p.boundary, p.family, true);
  }
  return verdict;
}

std::string_view to_string(RealizerSearchResult::Status status) {
  switch (status) {
    case RealizerSearchResult::Status::Found: return "found";
    case RealizerSearchResult::Status::Exhausted: return "exhausted";
    case RealizerSearchResult::Status::Timeout: return "timeout";
  }
  return "?";
}

RealizerSearchResult search_realizer(const RealizationProblem& p, const RealizerLimits& limits) {
  p.validate();
  const auto start = Clock::now();
  RealizerSearchResult result;
  const int nb = static_cast<int>(p.boundary.order.size());
  auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - start).count(); };

  for (int ni = 0; ni <= limits.max_internal; ++ni) {
    const int n = nb + ni;
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    }
    if (pairs.size() > 64) {
      result.status = RealizerSearchResult::Status::Timeout;  // beyond what this search can enumerate
      result.seconds = elapsed();
      return result;
    }
    const TraceTable table = build_table(p, n, pairs);
    std::vector<std::uint64_t> incident(n, 0);
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      incident[pairs[e].first] |= 1ULL << e;
      incident[pairs[e].second] |= 1ULL << e;
    }
    const int total_pairs = static_cast<int>(pairs.size());
    const int cap = limits.max_edges < 0 ? total_pairs : std::min(limits.max_edges, total_pairs);
    // Each internal vertex needs 3 neighbors (a vertex of degree <= 2 always
    // takes a color, so deleting it gives a smaller realizer found earlier).
    const int min_edges = ni == 0 ? 0 : (3 * ni + 1) / 2;
    for (int m = min_edges; m <= cap; ++m) {
      std::vector<int> idx(m);
      for (int i = 0; i < m; ++i) idx[i] = i;
      while (true) {
        std::uint64_t edges = 0;
        for (int i : idx) edges |= 1ULL << i;
        ++result.candidates;
        if ((result.candidates & 0xFFFF) == 0 && limits.budget_secs > 0 && elapsed() > limits.budget_secs) {
          result.status = RealizerSearchResult::Status::Timeout;
          result.seconds = elapsed();
          return result;
        }
        bool degrees_ok = true;
        for (int v = nb; v < n && degrees_ok; ++v) degrees_ok = std::popcount(edges & incident[v]) >= 3;
        if (degrees_ok && table.accepts(edges)) {
          auto verdict = verify_realizer(candidate_graph(p, n, pairs, edges), p);
          if (verdict.ok()) {
            result.status = RealizerSearchResult::Status::Found;
            result.certificate = std::move(verdict.certificate);
            result.seconds = elapsed();
            return result;
          }
        }
        // Next m-combination of 0..total_pairs-1 in lexicographic order.
        int i = m - 1;
        while (i >= 0 && idx[i] == total_pairs - m + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  }
  result.status = RealizerSearchResult::Status::Exhausted;
  result.seconds = elapsed();
  return result;
}

RealizerVerdict load_realizer(std::string_view graph_document, const RealizationProblem& p) {
  return verify_realizer(deserialize(graph_document), p);
}

Json problem_to_json(const RealizationProblem& p) {
  return Json{{"boundary", p.boundary.order}, {"family", family_to_json(p.family)}};
}

RealizationProblem problem_from_json(const Json& doc, const std::string& where) {
  const std::string root = where.empty() ? "" : where + ".";
  auto bad = [&](const std::string& field, const std::string& what) {
    throw Error(ErrorCode::SchemaViolation, "field '" + root + field + "': " + what);
  };
  if (!doc.is_object()) bad("<root>", "expected an object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (it.key() != "boundary" && it.key() != "family") bad(it.key(), "unknown field");
  }
  if (!doc.contains("boundary") || !doc["boundary"].is_array()) bad("boundary", "missing or not a list");
  if (!doc.contains("family")) bad("family", "missing");
  RealizationProblem p;
  for (const auto& id : doc["boundary"]) {
    if (!id.is_string()) bad("boundary", "ids must be strings");
    p.boundary.order.push_back(id.get<std::string>());
  }
  p.family = family_from_json(doc["family"], root + "family");
  if (p.family.domain() != p.boundary.order) bad("family.domain", "must equal the boundary order");
  if (p.family.k() != 3) bad("family.k", "must be 3");
  return p;
}

}  // namespace gadgetry
