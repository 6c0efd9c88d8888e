#include "gadgetry/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <set>
#include <thread>

#include "gadgetry/error.hpp"
#include "gadgetry/gadgets.hpp"
#include "gadgetry/graph_io.hpp"

namespace gadgetry {

namespace {

constexpr std::size_t kDirectSummandLimit = 15;

std::vector<Vertex> y_vertices(int k) {
  std::vector<Vertex> out;
  for (int j = 4; j <= k; ++j) out.emplace_back(y_id(j), Role::Y);
  return out;
}

std::vector<std::string> y_ids(int k) {
  std::vector<std::string> out;
  for (int j = 4; j <= k; ++j) out.push_back(y_id(j));
  return out;
}

EncoderTerminals encoder_terminals(int k, int i, int s) {
  EncoderTerminals t;
  t.u = Vertex(x_id(i, s));
  t.v = Vertex(z_id(i, s - 1), Role::Z);
  t.w = Vertex(z_id(i, s), Role::Z);
  t.y = y_vertices(k);
  return t;
}

std::string encoder_ns(int i, int s) { return "enc_" + std::to_string(i) + "_" + std::to_string(s); }
std::string copy_ns(int i, int j) { return "copy_" + std::to_string(i) + "_" + std::to_string(j); }

// The planar core of an encoder piece with the triangle uvw added.
Graph planar_core(const GadgetInstance& piece, const EncoderTerminals& t) {
  std::set<std::string> ys;
  for (const auto& y : t.y) ys.insert(y.id);
  std::vector<std::string> keep;
  for (const auto& id : piece.graph.ids()) {
    if (!ys.count(id)) keep.push_back(id);
  }
  return without_tags(clique_on(induced_subgraph(piece.graph, keep), {t.u.id, t.v.id, t.w.id}));
}

int hadwiger_small(const Graph& g, int cap, double budget) {
  // Largest t with a K_t minor, searching no further than t = cap + 1.
  int t = 0;
  while (t <= cap) {
    if (!find_model(g, complete_graph(t + 1), RootConstraint::unrooted(), budget)) break;
    ++t;
  }
  return t;
}

RealizerCertificate obtain_realizer(const RealizationProblem& p, const RealizerSource& source, std::string& origin) {
  if (source.file) {
    auto verdict = load_realizer(read_text_file(*source.file), p);
    if (!verdict.ok()) {
      throw Error(ErrorCode::UnverifiedCertificate, "realizer file " + *source.file + ": " + verdict.failure.summary());
    }
    origin = "file:" + *source.file;
    return *verdict.certificate;
  }
  auto result = search_realizer(p, source.limits);
  if (result.certificate) {
    origin = "search";
    return *result.certificate;
  }
  if (source.fixture_dir) {
    if (auto cert = realizer_from_fixtures(*source.fixture_dir, p, &origin)) return *cert;
  }
  throw Error(ErrorCode::RealizerUnavailable,
              "no realizer for a family of " + std::to_string(p.family.size()) + " colorings of " +
                  std::to_string(p.boundary.order.size()) + " boundary vertices: search " +
                  std::string(to_string(result.status)) + " at max_internal " +
                  std::to_string(source.limits.max_internal) + " and no fixture matched");
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string tuple_text(const ColorTuple& t) {
  std::vector<std::string> parts;
  for (auto c : t) parts.push_back(std::to_string(c));
  return "(" + join(parts, ",") + ")";
}

}  // namespace

std::string x_id(int i) { return "x" + std::to_string(i); }
std::string x_id(int i, int j) { return "x" + std::to_string(i) + "_" + std::to_string(j); }
std::string y_id(int j) { return "y" + std::to_string(j); }
std::string z_id(int i, int j) { return "z" + std::to_string(i) + "_" + std::to_string(j); }

std::vector<std::string> z_order(int m, int k) {
  std::vector<std::string> out;
  for (int i = 1; i <= m; ++i) {
    for (int j = 3; j <= k; ++j) out.push_back(z_id(i, j));
  }
  return out;
}

std::vector<std::string> x_order(int m) {
  std::vector<std::string> out;
  for (int i = 1; i <= m; ++i) out.push_back(x_id(i));
  return out;
}

void InstanceSpec::validate() const {
  if (m < 1) throw Error(ErrorCode::BadParameter, "m = " + std::to_string(m) + " must be at least 1");
  if (k < 3) throw Error(ErrorCode::BadParameter, "k = " + std::to_string(k) + " must be at least 3");
  if (family.k() != k) throw Error(ErrorCode::BadParameter, "family palette differs from k");
  if (family.domain() != x_order(m)) throw Error(ErrorCode::BadParameter, "family domain must be x1..x" + std::to_string(m));
  if (!is_closed(family)) {
    throw Error(ErrorCode::NotClosed,
                "family is not closed under color permutations; close it first (close_under_permutations)");
  }
}

InstanceSpec InstanceSpec::all(int m, int k) { return {m, k, ColoringFamily::all(x_order(m), k)}; }
InstanceSpec InstanceSpec::empty(int m, int k) { return {m, k, ColoringFamily(x_order(m), k)}; }

ColoringFamily compute_cf(const PartialColoring& f, int m, int k) {
  if (k < 4 || m < 1) throw Error(ErrorCode::BadParameter, "compute_cf needs m >= 1 and k >= 4");
  if (f.k() != k) throw Error(ErrorCode::BadParameter, "coloring palette differs from k");
  std::vector<std::vector<ColorTuple>> chains(m);
  for (int i = 1; i <= m; ++i) {
    auto it = f.assignment().find(x_id(i));
    if (it == f.assignment().end()) throw Error(ErrorCode::BadParameter, x_id(i) + " has no color");
    const Color c = it->second;
    if (c < 1 || c > k) throw Error(ErrorCode::ColorOutOfRange, x_id(i) + " has color " + std::to_string(c));
    const std::size_t len = static_cast<std::size_t>(k - 2);
    if (c <= 3) {
      chains[i - 1].push_back(ColorTuple(len, c));
      continue;
    }
    // z_{i,3..c-1} take one color, z_{i,c..k} another.
    for (Color left = 1; left <= 3; ++left) {
      for (Color right = 1; right <= 3; ++right) {
        if (left == right) continue;
        ColorTuple t(len, right);
        std::fill(t.begin(), t.begin() + (c - 3), left);
        chains[i - 1].push_back(t);
      }
    }
  }
  ColoringFamily out(z_order(m, k), 3);
  ColorTuple acc;
  std::function<void(int)> product = [&](int i) {
    if (i == m) {
      out.insert(acc);
      return;
    }
    for (const auto& part : chains[i]) {
      acc.insert(acc.end(), part.begin(), part.end());
      product(i + 1);
      acc.resize(acc.size() - part.size());
    }
  };
  product(0);
  return out;
}

ColoringFamily compute_cprime(const InstanceSpec& spec) {
  spec.validate();
  ColoringFamily out(z_order(spec.m, spec.k), 3);
  for (const auto& f : spec.family.members()) {
    const auto cf = compute_cf(spec.family.as_partial(f), spec.m, spec.k);
    for (const auto& g : cf.members()) out.insert(g);
  }
  return out;
}

Graph encoder_summand(int k, int i, int s) {
  return without_tags(f_enc_plus(f_enc(k, s, encoder_terminals(k, i, s), encoder_ns(i, s))));
}

ConstructionTrace encoder_decomposition(int k, int i, int s) {
  const auto t = encoder_terminals(k, i, s);
  const auto ns = encoder_ns(i, s);
  const std::vector<std::string> uvw{t.u.id, t.v.id, t.w.id};
  ConstructionTrace trace;
  std::set<std::string> core;
  auto note = [&](const Graph& g) {
    for (const auto& id : g.ids()) core.insert(id);
    return g;
  };
  trace.steps.emplace_back(BasePlanePiece{note(planar_core(piece_f1(k, t, ns), t)), {}});
  trace.steps.emplace_back(CliqueSumJoin{note(planar_core(piece_fs(k, s, t, ns), t)), uvw, {}, nullptr});
  for (int r = 4; r <= k; ++r) {
    if (r == s) continue;
    trace.steps.emplace_back(CliqueSumJoin{note(planar_core(piece_fr(k, s, r, t, ns), t)), uvw, {}, nullptr});
  }
  // y_j sees every core vertex except the u' of piece F_j.
  for (int j = 4; j <= k; ++j) {
    const std::string cut = ns + "/F" + std::to_string(j) + "/u'";
    std::vector<std::string> targets;
    for (const auto& id : core) {
      if (id != cut) targets.push_back(id);
    }
    trace.steps.emplace_back(AddUniversalVertices{{Vertex(y_id(j), Role::Y)}, targets});
  }
  trace.steps.emplace_back(AddCliqueEdges{y_ids(k)});
  return trace;
}

PartialBuild build_g1(int m, int k) {
  if (m < 1 || k < 4) throw Error(ErrorCode::BadParameter, "build_g1 needs m >= 1 and k >= 4");
  std::vector<Vertex> base;
  for (int i = 1; i <= m; ++i) base.emplace_back(x_id(i), Role::X);
  for (auto& y : y_vertices(k)) base.push_back(y);
  for (const auto& z : z_order(m, k)) base.emplace_back(z, Role::Z);
  for (int i = 1; i <= m; ++i) {
    for (int j = 4; j <= k; ++j) base.emplace_back(x_id(i, j));
  }
  PartialBuild out;
  Graph g("G1", base, {});
  for (int i = 1; i <= m; ++i) {
    for (int j = 4; j <= k; ++j) {
      auto copy = f_copy(k, {Vertex(x_id(i), Role::X), Vertex(x_id(i, j))}, copy_ns(i, j));
      g = glue(g, without_tags(copy.graph));
      out.trace.steps.emplace_back(CliqueSumJoin{without_tags(clique_on(copy.graph, {x_id(i), x_id(i, j)})),
                                                 {x_id(i), x_id(i, j)},
                                                 {{x_id(i), x_id(i, j)}},
                                                 nullptr});
    }
  }
  for (int i = 1; i <= m; ++i) {
    for (int s = 4; s <= k; ++s) {
      const auto t = encoder_terminals(k, i, s);
      g = glue(g, without_tags(f_enc(k, s, t, encoder_ns(i, s)).graph));
      std::vector<IdPair> dropped{{t.u.id, t.v.id}, {t.u.id, t.w.id}};
      for (const auto& y : t.y) dropped.emplace_back(t.u.id, y.id);
      dropped.emplace_back(t.v.id, t.w.id);
      out.trace.steps.emplace_back(CliqueSumJoin{encoder_summand(k, i, s), t.ids(), std::move(dropped),
                                                 std::make_shared<ConstructionTrace>(encoder_decomposition(k, i, s))});
    }
  }
  out.graph = g.with_name("G1");
  return out;
}

Graph realizer_part(const RealizerCertificate& cert) {
  const auto& src = cert.graph();
  const std::set<std::string> boundary(cert.boundary().order.begin(), cert.boundary().order.end());
  auto rename = [&](const std::string& id) { return boundary.count(id) ? id : "G2/" + id; };
  std::vector<Vertex> vertices;
  for (const auto& v : src.vertices()) vertices.emplace_back(rename(v.id), boundary.count(v.id) ? Role::Z : Role::Internal);
  std::vector<IdPair> edges;
  for (const auto& [a, b] : src.edge_ids()) edges.emplace_back(rename(a), rename(b));
  return Graph("G2'", std::move(vertices), edges);
}

PartialBuild build_g2(const RealizerCertificate& cert, int k) {
  if (!cert.verified()) throw Error(ErrorCode::UnverifiedCertificate, "G'_2 needs a verified realizer certificate");
  if (k < 4) throw Error(ErrorCode::BadParameter, "build_g2 needs k >= 4");
  const Graph g2p = realizer_part(cert);
  PartialBuild out;
  out.graph = clique_on(add_universal_vertices(g2p, y_vertices(k), g2p.ids()), y_ids(k)).with_name("G2");
  out.trace.steps.emplace_back(AddUniversalVertices{y_vertices(k), g2p.ids()});
  out.trace.steps.emplace_back(AddCliqueEdges{y_ids(k)});
  return out;
}

std::string default_fixture_dir() { return std::string(GADGETRY_FIXTURE_DIR) + "/realizers"; }

std::optional<RealizerCertificate> realizer_from_fixtures(const std::string& dir, const RealizationProblem& p,
                                                          std::string* origin) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) return std::nullopt;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    try {
      auto verdict = load_realizer(read_text_file(path.string()), p);
      if (verdict.ok()) {
        if (origin) *origin = "fixture:" + path.filename().string();
        return verdict.certificate;
      }
    } catch (const Error&) {
      // A fixture for a different boundary; keep looking.
    }
  }
  return std::nullopt;
}

AssembledInstance assemble(const InstanceSpec& spec, const RealizerSource& source) {
  spec.validate();
  AssembledInstance inst;
  inst.spec = spec;
  const int m = spec.m, k = spec.k;

  if (k == 3) {
    RealizationProblem p{{x_order(m)}, spec.family};
    auto cert = obtain_realizer(p, source, inst.realizer_origin);
    Graph g = realizer_part(cert);
    std::vector<Vertex> vertices;
    for (auto v : g.vertices()) {
      if (v.role == Role::Z) v.role = Role::X;
      vertices.push_back(v);
    }
    inst.graph = Graph("G", vertices, g.edge_ids());
    inst.trace.steps.emplace_back(BasePlanePiece{inst.graph, {x_order(m)}});
    inst.realizer = std::move(cert);
    return inst;
  }

  RealizationProblem p{{z_order(m, k)}, compute_cprime(spec)};
  auto cert = obtain_realizer(p, source, inst.realizer_origin);
  const auto g1 = build_g1(m, k);
  const auto g2 = build_g2(cert, k);
  inst.graph = glue(g1.graph, g2.graph).with_name("G");

  // G_0: G'_2 plus the triangles x_{i,j} z_{i,j-1} z_{i,j} and the edges x_i x_{i,j}.
  const Graph g2p = realizer_part(cert);
  std::vector<Vertex> vertices = g2p.vertices();
  std::vector<IdPair> edges = g2p.edge_ids();
  for (int i = 1; i <= m; ++i) {
    vertices.emplace_back(x_id(i), Role::X);
    for (int j = 4; j <= k; ++j) {
      vertices.emplace_back(x_id(i, j));
      edges.emplace_back(x_id(i), x_id(i, j));
      edges.emplace_back(x_id(i, j), z_id(i, j - 1));
      edges.emplace_back(x_id(i, j), z_id(i, j));
      edges.emplace_back(z_id(i, j - 1), z_id(i, j));
    }
  }
  const Graph g0("G0", vertices, edges);
  std::vector<std::string> scope;
  for (const auto& v : g0.vertices()) {
    if (v.role != Role::X) scope.push_back(v.id);
  }
  inst.trace.steps.emplace_back(BasePlanePiece{g0, {x_order(m)}});
  inst.trace.steps.emplace_back(AddUniversalVertices{y_vertices(k), scope});
  inst.trace.steps.emplace_back(AddCliqueEdges{y_ids(k)});
  for (auto step : g1.trace.steps) {
    auto& join = std::get<CliqueSumJoin>(step);
    // v-w stays when G'_2 has it.
    const auto& vw = join.dropped.back();
    if (join.decomposition && g2p.adjacent(vw.first, vw.second)) join.dropped.pop_back();
    inst.trace.steps.push_back(std::move(step));
  }
  if (!(replay(inst.trace) == inst.graph)) {
    throw Error(ErrorCode::ReplayMismatch, "assembled trace does not rebuild G");
  }
  inst.realizer = std::move(cert);
  return inst;
}

bool RealizesReport::pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.in_family == r.extends; });
}

std::vector<RealizesRow> RealizesReport::counterexamples() const {
  std::vector<RealizesRow> out;
  for (const auto& r : rows) {
    if (r.in_family != r.extends) out.push_back(r);
  }
  return out;
}

RealizesReport verify_realizes(const Graph& g, const InstanceSpec& spec, int jobs) {
  RealizesReport report;
  const auto xs = x_order(spec.m);
  ColorTuple t(spec.m, 1);
  while (true) {
    RealizesRow row;
    row.coloring = t;
    row.in_family = spec.family.contains(t);
    report.rows.push_back(row);
    int i = spec.m - 1;
    while (i >= 0 && t[i] == spec.k) t[i--] = 1;
    if (i < 0) break;
    ++t[i];
  }
  // Rows are independent; workers take interleaved indices and write only
  // their own rows, so the report does not depend on the job count.
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t r = first; r < report.rows.size(); r += stride) {
      report.rows[r].extends = extends(g, PartialColoring(spec.k, xs, report.rows[r].coloring));
    }
  };
  const std::size_t n = static_cast<std::size_t>(std::max(1, jobs));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < n; ++w) pool.emplace_back(work, w, n);
  work(0, n);
  for (auto& th : pool) th.join();
  return report;
}

RealizesReport verify_realizes(const AssembledInstance& inst, int jobs) {
  return verify_realizes(inst.graph, inst.spec, jobs);
}

bool AuditReport::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

AuditReport audit_trace(const ConstructionTrace& trace, const Graph& expected, int k,
                        const std::vector<std::string>& roots, double summand_budget_secs) {
  AuditReport report;
  CheckResult replay_check{"(1) trace replay reproduces the graph", false, ""};
  CheckResult base_check{"(2) base piece planar with X on the outer face", false, "no base piece"};
  CheckResult apex_check{"(3) universal-vertex steps", true, ""};
  CheckResult join_check{"(4) clique-sum joins share cliques", true, ""};
  CheckResult summand_check{"(5) joined summands are K_" + std::to_string(k + 2) + "-minor-free", true, ""};
  auto fail = [](CheckResult& c, const std::string& why) {
    c.pass = false;
    c.detail += (c.detail.empty() ? "" : "; ") + why;
  };

  const std::set<std::string> root_set(roots.begin(), roots.end());
  int bound = 0, rooted = 0;
  bool certified = true;
  std::set<std::string> apexes;
  int apex_total = 0;

  const Graph replayed = replay(trace, [&](std::size_t index, const TraceStep& step, const Graph& before,
                                           const Graph& after) {
    const std::string where = "step " + std::to_string(index);
    if (const auto* s = std::get_if<BasePlanePiece>(&step)) {
      base_check.detail.clear();
      base_check.pass = true;
      if (!is_planar(s->graph)) {
        fail(base_check, "base piece is not planar");
        certified = false;
        return;
      }
      bound = 4;
      rooted = 4;
      const std::set<std::string> on_face(s->boundary.order.begin(), s->boundary.order.end());
      const bool roots_on_face =
          std::all_of(root_set.begin(), root_set.end(), [&](const auto& r) { return on_face.count(r) > 0; });
      if (!planar_with_boundary(s->graph, s->boundary)) {
        fail(base_check, "boundary " + join(s->boundary.order, ",") + " cannot lie on the outer face in order");
      } else if (!roots_on_face) {
        fail(base_check, "some roots are not on the prescribed boundary");
      } else {
        rooted = 3;
      }
      return;
    }
    if (const auto* s = std::get_if<AddUniversalVertices>(&step)) {
      for (const auto& v : s->vertices) {
        const auto idx = after.index_of(v.id);
        for (const auto& t : s->targets) {
          if (!before.contains(t)) fail(apex_check, where + ": target " + t + " is not an earlier vertex");
          if (!after.adjacent(idx, after.index_of(t))) fail(apex_check, where + ": " + v.id + " misses " + t);
        }
        apexes.insert(v.id);
      }
      apex_total += static_cast<int>(s->vertices.size());
      bound += static_cast<int>(s->vertices.size());
      rooted += static_cast<int>(s->vertices.size());
      return;
    }
    if (const auto* s = std::get_if<AddCliqueEdges>(&step)) {
      for (std::size_t a = 0; a < s->ids.size(); ++a) {
        for (std::size_t b = a + 1; b < s->ids.size(); ++b) {
          if (before.adjacent(s->ids[a], s->ids[b])) continue;
          if (!apexes.count(s->ids[a]) && !apexes.count(s->ids[b])) {
            fail(apex_check, where + ": clique edge " + s->ids[a] + "-" + s->ids[b] + " joins non-apex vertices");
            certified = false;
          }
        }
      }
      return;
    }
    const auto& s = std::get<CliqueSumJoin>(step);
    const std::set<std::string> shared(s.shared.begin(), s.shared.end());
    const std::string label = where + " " + s.summand.name();
    for (const auto& id : s.summand.ids()) {
      if (before.contains(id) && !shared.count(id)) fail(join_check, label + ": " + id + " is shared but not listed");
    }
    for (const auto& id : s.shared) {
      if (!before.contains(id) || !s.summand.contains(id)) {
        fail(join_check, label + ": shared id " + id + " missing on one side");
        continue;
      }
      for (const auto& other : s.shared) {
        if (id >= other || !before.contains(other) || !s.summand.contains(other)) continue;
        if (!before.adjacent(id, other)) fail(join_check, label + ": " + id + "-" + other + " not an edge before the join");
        if (!s.summand.adjacent(id, other)) fail(join_check, label + ": " + id + "-" + other + " not an edge of the summand");
      }
    }
    for (const auto& [a, b] : s.dropped) {
      if (!shared.count(a) || !shared.count(b)) fail(join_check, label + ": dropped edge " + a + "-" + b + " leaves the clique");
    }

    SummandCheck sc;
    sc.label = label;
    sc.order = s.summand.order();
    try {
      if (s.summand.order() <= kDirectSummandLimit) {
        sc.method = "direct";
        sc.bound = hadwiger_small(s.summand, k + 1, summand_budget_secs);
        sc.pass = sc.bound <= k + 1;
        sc.detail = sc.pass ? "largest clique minor K_" + std::to_string(sc.bound) : "contains K_" + std::to_string(k + 2);
      } else if (s.decomposition) {
        sc.method = "decomposition";
        auto nested = audit_trace(*s.decomposition, without_tags(s.summand), k, {}, summand_budget_secs);
        sc.bound = nested.bound;
        sc.pass = nested.pass() && nested.bound >= 0 && nested.bound <= k + 1;
        for (const auto& c : nested.checks) {
          if (!c.pass) sc.detail += (sc.detail.empty() ? "" : "; ") + c.name + ": " + c.detail;
        }
        if (sc.pass) sc.detail = "rebuilt from " + std::to_string(s.decomposition->steps.size()) + " steps, no K_" +
                                 std::to_string(nested.bound + 1);
      } else {
        sc.method = "none";
        sc.detail = "too large for direct search and no recorded decomposition";
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Timeout) throw;
      sc.pass = false;
      sc.detail = std::string("timeout: ") + e.what();
    }
    if (!sc.pass) {
      fail(summand_check, label + ": " + sc.detail);
      certified = false;
    }
    bool private_roots = false;
    for (const auto& id : s.summand.ids()) private_roots = private_roots || (!shared.count(id) && root_set.count(id));
    bound = std::max(bound, sc.bound);
    // A summand whose private part has no roots cannot host a root of any
    // rooted model, so the rooted bound survives the join.
    if (private_roots) rooted = std::max(rooted, bound);
    apexes.clear();
    report.summands.push_back(std::move(sc));
  });

  replay_check.pass = replayed == expected;
  replay_check.detail = replay_check.pass ? std::to_string(trace.steps.size()) + " steps, " +
                                                std::to_string(replayed.order()) + " vertices, " +
                                                std::to_string(replayed.size()) + " edges"
                                          : "replayed graph differs (" + std::to_string(replayed.order()) + "/" +
                                                std::to_string(replayed.size()) + " vs " +
                                                std::to_string(expected.order()) + "/" +
                                                std::to_string(expected.size()) + " vertices/edges)";
  if (apex_total != k - 3) fail(apex_check, std::to_string(apex_total) + " apex vertices, expected " + std::to_string(k - 3));
  if (apex_check.pass) apex_check.detail = std::to_string(apex_total) + " apex vertices";
  if (join_check.pass) join_check.detail = std::to_string(report.summands.size()) + " joins";
  if (summand_check.pass) summand_check.detail = std::to_string(report.summands.size()) + " summands certified";
  if (base_check.pass) base_check.detail = "planar, boundary on the outer face";
  report.checks = {replay_check, base_check, apex_check, join_check, summand_check};
  if (certified && base_check.pass) {
    report.bound = bound;
    report.rooted_bound = rooted;
  }
  return report;
}

AuditReport audit_minor_freeness(const AssembledInstance& inst, double summand_budget_secs) {
  return audit_trace(inst.trace, inst.graph, inst.spec.k, x_order(inst.spec.m), summand_budget_secs);
}

std::string_view to_string(MinorCheckReport::Status status) {
  switch (status) {
    case MinorCheckReport::Status::Pass: return "PASS";
    case MinorCheckReport::Status::Fail: return "FAIL";
    case MinorCheckReport::Status::Timeout: return "TIMEOUT";
  }
  return "?";
}

namespace {

MinorCheckReport run_minor_check(const Graph& g, std::size_t t, const RootConstraint& rc, double budget) {
  MinorCheckReport report;
  try {
    report.witness = find_model(g, complete_graph(t), rc, budget, &report.stats);
    report.status = report.witness ? MinorCheckReport::Status::Fail : MinorCheckReport::Status::Pass;
    report.detail = report.witness ? "found a K_" + std::to_string(t) + " model"
                                   : "no K_" + std::to_string(t) + " model (" + std::to_string(report.stats.nodes) +
                                         " search nodes)";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Timeout) throw;
    report.status = MinorCheckReport::Status::Timeout;
    report.detail = e.what();
  }
  return report;
}

}  // namespace

MinorCheckReport verify_rooted_freeness(const AssembledInstance& inst, double budget_secs) {
  const std::size_t t = static_cast<std::size_t>(inst.spec.k + 1);
  if (static_cast<std::size_t>(inst.spec.m) < t) {
    MinorCheckReport report;
    report.status = MinorCheckReport::Status::Pass;
    report.trivial = true;
    report.detail = "trivial: " + std::to_string(inst.spec.m) + " roots cannot meet " + std::to_string(t) +
                    " branch sets";
    return report;
  }
  return run_minor_check(inst.graph, t, RootConstraint::rooted_at(x_order(inst.spec.m)), budget_secs);
}

MinorCheckReport verify_direct_minor_freeness(const AssembledInstance& inst, double budget_secs) {
  return run_minor_check(inst.graph, static_cast<std::size_t>(inst.spec.k + 2), RootConstraint::unrooted(),
                         budget_secs);
}

Json spec_to_json(const InstanceSpec& spec) {
  return Json{{"m", spec.m}, {"k", spec.k}, {"family", family_to_json(spec.family)}};
}

InstanceSpec spec_from_json(const Json& doc, const std::string& where) {
  const std::string root = where.empty() ? "" : where + ".";
  auto bad = [&](const std::string& field, const std::string& what) {
    throw Error(ErrorCode::SchemaViolation, "field '" + root + field + "': " + what);
  };
  if (!doc.is_object()) bad("<root>", "expected an object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (it.key() != "m" && it.key() != "k" && it.key() != "family") bad(it.key(), "unknown field");
  }
  if (!doc.contains("m") || !doc["m"].is_number_integer()) bad("m", "missing or not an integer");
  if (!doc.contains("k") || !doc["k"].is_number_integer()) bad("k", "missing or not an integer");
  if (!doc.contains("family")) bad("family", "missing");
  InstanceSpec spec;
  spec.m = doc["m"].get<int>();
  spec.k = doc["k"].get<int>();
  spec.family = family_from_json(doc["family"], root + "family");
  if (spec.m < 1) bad("m", "must be at least 1");
  if (spec.family.k() != spec.k) bad("family.k", "must equal k");
  if (spec.family.domain() != x_order(spec.m)) bad("family.domain", "must be x1..x" + std::to_string(spec.m));
  return spec;
}

Json report_to_json(const RealizesReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"coloring", r.coloring}, {"in_family", r.in_family}, {"extends", r.extends}});
  }
  Json counter = Json::array();
  for (const auto& r : report.counterexamples()) counter.push_back(tuple_text(r.coloring));
  return Json{{"check", "realizes"}, {"verdict", report.pass() ? "PASS" : "FAIL"}, {"rows", std::move(rows)},
              {"counterexamples", std::move(counter)}};
}

Json report_to_json(const AuditReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  Json summands = Json::array();
  for (const auto& s : report.summands) {
    summands.push_back({{"label", s.label}, {"order", s.order}, {"method", s.method}, {"bound", s.bound},
                        {"pass", s.pass}, {"detail", s.detail}});
  }
  return Json{{"check", "audit"}, {"verdict", report.pass() ? "PASS" : "FAIL"}, {"checks", std::move(checks)},
              {"summands", std::move(summands)}, {"bound", report.bound}, {"rooted_bound", report.rooted_bound}};
}

Json report_to_json(const MinorCheckReport& report) {
  Json out{{"verdict", std::string(to_string(report.status))}, {"trivial", report.trivial},
           {"detail", report.detail}, {"nodes", report.stats.nodes}};
  if (report.witness) out["witness"] = model_to_json(*report.witness);
  return out;
}

}  // namespace gadgetry
