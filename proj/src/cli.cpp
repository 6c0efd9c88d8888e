#include "gadgetry/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gadgetry/coloring.hpp"
#include "gadgetry/error.hpp"
#include "gadgetry/gadgets.hpp"
#include "gadgetry/graph_io.hpp"
#include "gadgetry/minor.hpp"
#include "gadgetry/pipeline.hpp"
#include "gadgetry/planarity.hpp"
#include "gadgetry/realizer.hpp"
#include "gadgetry/trace.hpp"

namespace gadgetry {

namespace {

namespace fs = std::filesystem;

struct GadgetArgs {
  std::string kind = "copy";
  int k = 4;
  int s = 4;
  int r = 5;
  bool plus = false;
  std::string output;
};

struct RealizeArgs {
  std::string spec_file;
  std::string out_dir;
  int max_internal = kDefaultMaxInternal;
  double budget_secs = kDefaultRealizerBudgetSecs;
  std::string from_file;
  std::string fixtures = default_fixture_dir();
  bool no_fixtures = false;
};

struct VerifyArgs {
  std::string dir;
  std::vector<std::string> checks{"realizes", "audit"};
  double budget_secs = kDefaultMinorBudgetSecs;
  std::string report;
};

struct MinorArgs {
  std::string host;
  std::string pattern;
  int clique = 0;
  std::vector<std::string> roots;
  double budget_secs = kDefaultMinorBudgetSecs;
  std::string witness;
  std::string expect;
};

struct GraphArgs {
  std::string graph;
  std::vector<std::string> boundary;
  int k = 3;
  std::string format = "dot";
  std::string output;
};

Graph load_graph(const std::string& path) { return deserialize(read_text_file(path)); }

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
  } else {
    write_text_file(path, text);
  }
}

std::string tuple_text(const ColorTuple& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? " " : "") + std::to_string(t[i]);
  return s;
}

// ---- gadget ---------------------------------------------------------------

GadgetInstance make_gadget(const GadgetArgs& a) {
  const auto terms = EncoderTerminals::defaults(a.k);
  if (a.kind == "copy") return f_copy(a.k);
  if (a.kind == "enc") return f_enc(a.k, a.s);
  if (a.kind == "f1") return piece_f1(a.k, terms);
  if (a.kind == "fs") return piece_fs(a.k, a.s, terms);
  if (a.kind == "fr") return piece_fr(a.k, a.s, a.r, terms);
  throw Error(ErrorCode::BadParameter, "unknown gadget kind '" + a.kind + "'");
}

int cmd_gadget_build(const GadgetArgs& a, std::ostream& out, std::ostream& err) {
  Graph g;
  if (a.plus) {
    if (a.kind == "copy") g = f_copy_plus(a.k);
    else if (a.kind == "enc") g = f_enc_plus(a.k, a.s);
    else throw Error(ErrorCode::BadParameter, "--plus applies to copy and enc only");
  } else {
    g = make_gadget(a).graph;
  }
  emit(out, a.output, serialize(g));
  if (!a.output.empty()) {
    err << "wrote " << a.output << ": " << g.order() << " vertices, " << g.size() << " edges\n";
  }
  return kExitOk;
}

int cmd_gadget_verify(const GadgetArgs& a, std::ostream& out) {
  const GadgetInstance gadget = make_gadget(a);
  struct Mismatch {
    ColorTuple colors;
    bool expected;
  };
  std::vector<Mismatch> bad;
  std::size_t checked = 0;

  if (a.kind == "copy") {
    const CopyTerminals terms;
    for (Color cu = 1; cu <= a.k; ++cu) {
      for (Color cv = 1; cv <= a.k; ++cv) {
        PartialColoring f(a.k, {{gadget.terminal("u"), cu}, {gadget.terminal("v"), cv}});
        const bool want = copy_spec(a.k, f, terms);
        ++checked;
        if (extends(gadget.graph, f) != want) bad.push_back({{cu, cv}, want});
      }
    }
  } else {
    const auto terms = EncoderTerminals::defaults(a.k);
    for (Color cu = 1; cu <= a.k; ++cu) {
      for (Color cv = 1; cv <= a.k; ++cv) {
        for (Color cw = 1; cw <= a.k; ++cw) {
          bool want = false;
          if (a.kind == "enc") want = enc_spec(a.k, a.s, cu, cv, cw);
          else if (a.kind == "f1") want = piece_f1_spec(a.k, cu, cv, cw);
          else if (a.kind == "fs") want = piece_fs_spec(a.k, a.s, cu, cv, cw);
          else want = piece_fr_spec(a.k, a.r, cu, cv, cw);
          ++checked;
          if (extends(gadget.graph, rainbow_assignment(a.k, terms, cu, cv, cw)) != want) {
            bad.push_back({{cu, cv, cw}, want});
          }
        }
      }
    }
  }

  const bool copy = a.kind == "copy";
  if (!bad.empty()) {
    out << (copy ? "f(u) f(v)" : "f(u) f(v) f(w)") << "  expected  got\n";
    for (const auto& m : bad) {
      out << std::setw(copy ? 9 : 14) << tuple_text(m.colors) << "  " << std::setw(8)
          << (m.expected ? "extends" : "blocked") << "  " << (m.expected ? "blocked" : "extends") << '\n';
    }
  }
  out << (bad.empty() ? "PASS" : "FAIL") << ", " << checked << (copy ? " boundary" : " rainbow")
      << " assignments checked, " << bad.size() << " mismatches\n";
  return bad.empty() ? kExitOk : kExitFail;
}

// ---- realize / verify -------------------------------------------------------

RealizationProblem problem_for(const InstanceSpec& spec) {
  if (spec.k == 3) return {{x_order(spec.m)}, spec.family};
  return {{z_order(spec.m, spec.k)}, compute_cprime(spec)};
}

int cmd_realize(const RealizeArgs& a, std::ostream& out) {
  const InstanceSpec spec = spec_from_json(parse_json_document(read_text_file(a.spec_file)), a.spec_file);
  RealizerSource source;
  source.limits.max_internal = a.max_internal;
  source.limits.budget_secs = a.budget_secs;
  if (!a.from_file.empty()) source.file = a.from_file;
  if (a.no_fixtures) source.fixture_dir.reset();
  else source.fixture_dir = a.fixtures;

  const AssembledInstance inst = assemble(spec, source);

  fs::create_directories(a.out_dir);
  const fs::path dir(a.out_dir);
  Json meta = {{"spec", spec_to_json(spec)}, {"realizer_origin", inst.realizer_origin}};
  write_text_file((dir / "instance.json").string(), canonical_dump(meta));
  write_text_file((dir / "graph.json").string(), serialize(inst.graph));
  write_text_file((dir / "trace.json").string(), canonical_dump(trace_to_json(inst.trace)));
  write_text_file((dir / "realizer.json").string(), serialize(inst.realizer->graph()));

  const Graph& r = inst.realizer->graph();
  out << "instance m=" << spec.m << " k=" << spec.k << ", |C|=" << spec.family.size() << '\n';
  out << "  realizer (" << inst.realizer_origin << "): " << r.order() << " vertices, " << r.size()
      << " edges\n";
  if (spec.k >= 4) {
    const auto g1 = build_g1(spec.m, spec.k);
    const auto g2 = build_g2(*inst.realizer, spec.k);
    out << "  G_1: " << g1.graph.order() << " vertices, " << g1.graph.size() << " edges\n";
    out << "  G_2: " << g2.graph.order() << " vertices, " << g2.graph.size() << " edges\n";
  }
  out << "  G:   " << inst.graph.order() << " vertices, " << inst.graph.size() << " edges\n";
  out << "  trace: " << inst.trace.steps.size() << " steps\n";
  out << "wrote " << dir.string() << "/{instance,graph,trace,realizer}.json\n";
  return kExitOk;
}

AssembledInstance load_instance(const fs::path& dir) {
  const Json meta = parse_json_document(read_text_file((dir / "instance.json").string()));
  if (!meta.is_object() || !meta.contains("spec")) {
    throw Error(ErrorCode::SchemaViolation, "field 'instance.json.spec': missing");
  }
  AssembledInstance inst;
  inst.spec = spec_from_json(meta["spec"], "instance.json.spec");
  inst.spec.validate();
  if (meta.contains("realizer_origin") && meta["realizer_origin"].is_string()) {
    inst.realizer_origin = meta["realizer_origin"].get<std::string>();
  }
  inst.graph = load_graph((dir / "graph.json").string());
  inst.trace = trace_from_json(parse_json_document(read_text_file((dir / "trace.json").string())), "trace.json");
  return inst;
}

int cmd_verify(const VerifyArgs& a, int jobs, std::ostream& out) {
  const fs::path dir(a.dir);
  AssembledInstance inst = load_instance(dir);
  // The artifacts must at least replay; a replay that throws is an input error.
  replay(inst.trace);

  Json report = Json::object();
  bool failed = false, timed_out = false;

  // The realizer is re-verified from scratch whenever it is present.
  const fs::path realizer_path = dir / "realizer.json";
  if (fs::exists(realizer_path)) {
    const auto verdict = load_realizer(read_text_file(realizer_path.string()), problem_for(inst.spec));
    out << "realizer: " << (verdict.ok() ? "PASS" : "FAIL");
    if (!verdict.ok()) out << " (" << verdict.failure.summary() << ")";
    out << '\n';
    report["realizer"] = {{"verdict", verdict.ok() ? "PASS" : "FAIL"},
                          {"detail", verdict.ok() ? "" : verdict.failure.summary()}};
    failed = failed || !verdict.ok();
    if (verdict.ok()) inst.realizer = verdict.certificate;
  }

  for (const auto& check : a.checks) {
    if (check == "realizes") {
      const auto r = verify_realizes(inst.graph, inst.spec, jobs);
      const auto bad = r.counterexamples();
      out << "realizes: " << (r.pass() ? "PASS" : "FAIL") << ", " << r.rows.size() << " functions checked\n";
      for (const auto& row : bad) {
        out << "  counterexample f = (" << tuple_text(row.coloring) << "): "
            << (row.in_family ? "in C but does not extend" : "not in C but extends") << '\n';
      }
      report["realizes"] = report_to_json(r);
      failed = failed || !r.pass();
    } else if (check == "audit") {
      const auto r = audit_minor_freeness(inst, a.budget_secs);
      out << "audit: " << (r.pass() ? "PASS" : "FAIL") << '\n';
      for (const auto& c : r.checks) {
        out << "  " << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) out << ": " << c.detail;
        out << '\n';
      }
      report["audit"] = report_to_json(r);
      failed = failed || !r.pass();
    } else if (check == "rooted" || check == "direct-minor") {
      const auto r = check == "rooted" ? verify_rooted_freeness(inst, a.budget_secs)
                                       : verify_direct_minor_freeness(inst, a.budget_secs);
      out << check << ": " << to_string(r.status) << (r.trivial ? " (trivial)" : "");
      if (!r.detail.empty()) out << ", " << r.detail;
      out << '\n';
      report[check] = report_to_json(r);
      failed = failed || r.status == MinorCheckReport::Status::Fail;
      timed_out = timed_out || r.status == MinorCheckReport::Status::Timeout;
    } else {
      throw Error(ErrorCode::BadParameter, "unknown check '" + check + "'");
    }
  }

  const char* verdict = failed ? "FAIL" : timed_out ? "TIMEOUT" : "PASS";
  report["verdict"] = verdict;
  if (!a.report.empty()) write_text_file(a.report, canonical_dump(report));
  out << "verdict: " << verdict << '\n';
  return failed ? kExitFail : timed_out ? kExitTimeout : kExitOk;
}

// ---- minor / planar / trace3 / export ------------------------------------

int cmd_minor(const MinorArgs& a, std::ostream& out) {
  const Graph host = load_graph(a.host);
  if (a.pattern.empty() == (a.clique == 0)) {
    throw Error(ErrorCode::BadParameter, "give exactly one of --pattern and --clique");
  }
  const Graph pattern = a.clique > 0 ? complete_graph(static_cast<std::size_t>(a.clique)) : load_graph(a.pattern);
  const RootConstraint rc = a.roots.empty() ? RootConstraint::unrooted() : RootConstraint::rooted_at(a.roots);
  MinorSearchStats stats;
  const auto model = find_model(host, pattern, rc, a.budget_secs, &stats);
  const std::string label = a.clique > 0 ? "K_" + std::to_string(a.clique) : "'" + pattern.name() + "'";
  if (model) {
    if (!verify_model(*model, rc)) throw Error(ErrorCode::BadParameter, "search returned an invalid model");
    out << "contains " << label << (rc.rooted ? " (rooted)" : "") << " minor\n";
    for (const auto& [p, set] : model->branch_sets) {
      out << "  " << p << ":";
      for (const auto& v : set) out << ' ' << v;
      out << '\n';
    }
    if (!a.witness.empty()) write_text_file(a.witness, canonical_dump(model_to_json(*model)));
  } else {
    out << label << (rc.rooted ? "-rooted" : "") << "-minor-free\n";
  }
  out << "search: " << stats.nodes << " nodes, " << std::fixed << std::setprecision(3) << stats.seconds << " s\n";
  if (a.expect.empty()) return kExitOk;
  const bool free = !model.has_value();
  return (a.expect == "free") == free ? kExitOk : kExitFail;
}

int cmd_planar(const GraphArgs& a, std::ostream& out) {
  const Graph g = load_graph(a.graph);
  if (a.boundary.empty()) {
    out << (is_planar(g) ? "planar" : "not planar") << '\n';
  } else {
    out << (planar_with_boundary(g, {a.boundary}) ? "planar with the boundary on the outer face"
                                                  : "no embedding with the boundary on the outer face")
        << '\n';
  }
  return kExitOk;
}

int cmd_trace3(const GraphArgs& a, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(a.graph);
  if (a.boundary.empty()) throw Error(ErrorCode::BadParameter, "--boundary is required");
  const auto family = boundary_trace(g, a.boundary, a.k);
  emit(out, a.output, canonical_dump(family_to_json(family)));
  err << family.size() << " boundary colorings extend\n";
  return kExitOk;
}

int cmd_export(const GraphArgs& a, std::ostream& out) {
  if (a.format != "dot") throw Error(ErrorCode::BadParameter, "unsupported format '" + a.format + "'");
  emit(out, a.output, to_dot(load_graph(a.graph)));
  return kExitOk;
}

int exit_code_for(ErrorCode code) {
  return code == ErrorCode::Timeout || code == ErrorCode::RealizerUnavailable ? kExitTimeout : kExitUsage;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gadget constructions realizing sets of colorings by minor-free graphs"};
  app.require_subcommand(1);
  int jobs = 1;
  app.add_option("--jobs", jobs, "Worker threads for exhaustive checks")->check(CLI::PositiveNumber);

  GadgetArgs gadget;
  auto* gadget_cmd = app.add_subcommand("gadget", "Build or verify a gadget");
  gadget_cmd->require_subcommand(1);
  auto* gadget_build = gadget_cmd->add_subcommand("build", "Write the gadget graph document");
  auto* gadget_verify = gadget_cmd->add_subcommand("verify", "Exhaustive conformance against the gadget's specification");
  for (auto* sub : {gadget_build, gadget_verify}) {
    sub->add_option("--kind", gadget.kind, "copy, enc, f1, fs or fr")
        ->check(CLI::IsMember({"copy", "enc", "f1", "fs", "fr"}));
    sub->add_option("--k", gadget.k, "Number of colors")->required();
    sub->add_option("--s", gadget.s, "Encoder color s in 4..k");
    sub->add_option("--r", gadget.r, "Piece F_r color r in 4..k, r != s");
  }
  gadget_build->add_flag("--plus", gadget.plus, "Complete the terminals to a clique");
  gadget_build->add_option("-o,--output", gadget.output, "Output file (stdout when omitted)");

  RealizeArgs realize;
  auto* realize_cmd = app.add_subcommand("realize", "Assemble a graph realizing the family in a spec file");
  realize_cmd->add_option("spec", realize.spec_file, "Instance spec {m, k, family}")->required();
  realize_cmd->add_option("--out", realize.out_dir, "Output directory")->required();
  realize_cmd->add_option("--max-internal", realize.max_internal, "Realizer search: internal vertex limit");
  realize_cmd->add_option("--budget-secs", realize.budget_secs, "Realizer search budget");
  realize_cmd->add_option("--from-file", realize.from_file, "Use this realizer graph instead of searching");
  realize_cmd->add_option("--fixtures", realize.fixtures, "Directory of realizer fixtures");
  realize_cmd->add_flag("--no-fixtures", realize.no_fixtures, "Do not consult fixtures");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check an assembled instance directory");
  verify_cmd->add_option("dir", verify.dir, "Directory written by realize")->required();
  verify_cmd->add_option("--checks", verify.checks, "realizes, audit, rooted, direct-minor")
      ->delimiter(',')
      ->check(CLI::IsMember({"realizes", "audit", "rooted", "direct-minor"}));
  verify_cmd->add_option("--budget-secs", verify.budget_secs, "Budget per minor search");
  verify_cmd->add_option("--report", verify.report, "Write a JSON report here");

  MinorArgs minor;
  auto* minor_cmd = app.add_subcommand("minor", "Search for a minor model");
  minor_cmd->add_option("host", minor.host, "Host graph file")->required();
  minor_cmd->add_option("--pattern", minor.pattern, "Pattern graph file");
  minor_cmd->add_option("--clique", minor.clique, "Use K_t as the pattern");
  minor_cmd->add_option("--roots", minor.roots, "Root ids (rooted search)")->delimiter(',');
  minor_cmd->add_option("--budget-secs", minor.budget_secs, "Search budget");
  minor_cmd->add_option("--witness", minor.witness, "Write the model here when one is found");
  minor_cmd->add_option("--expect", minor.expect, "free or contains; exit 1 on disagreement")
      ->check(CLI::IsMember({"free", "contains"}));

  GraphArgs graph_args;
  auto* planar_cmd = app.add_subcommand("planar", "Planarity test, optionally with a prescribed outer boundary");
  planar_cmd->add_option("graph", graph_args.graph, "Graph file")->required();
  planar_cmd->add_option("--boundary", graph_args.boundary, "Cyclic boundary order")->delimiter(',');

  auto* trace_cmd = app.add_subcommand("trace3", "Boundary colorings that extend to the graph");
  trace_cmd->add_option("graph", graph_args.graph, "Graph file")->required();
  trace_cmd->add_option("--boundary", graph_args.boundary, "Boundary ids")->delimiter(',')->required();
  trace_cmd->add_option("--k", graph_args.k, "Number of colors");
  trace_cmd->add_option("-o,--output", graph_args.output, "Output file (stdout when omitted)");

  auto* export_cmd = app.add_subcommand("export", "Convert a graph document");
  export_cmd->add_option("graph", graph_args.graph, "Graph file")->required();
  export_cmd->add_option("--format", graph_args.format, "Output format")->check(CLI::IsMember({"dot"}));
  export_cmd->add_option("-o,--output", graph_args.output, "Output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gadget_build->parsed()) return cmd_gadget_build(gadget, out, err);
    if (gadget_verify->parsed()) return cmd_gadget_verify(gadget, out);
    if (realize_cmd->parsed()) return cmd_realize(realize, out);
    if (verify_cmd->parsed()) return cmd_verify(verify, jobs, out);
    if (minor_cmd->parsed()) return cmd_minor(minor, out);
    if (planar_cmd->parsed()) return cmd_planar(graph_args, out);
    if (trace_cmd->parsed()) return cmd_trace3(graph_args, out, err);
    if (export_cmd->parsed()) return cmd_export(graph_args, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.code() == ErrorCode::NotClosed) {
      err << "hint: list every permutation of the palette applied to each member, or close the family first\n";
    }
    return exit_code_for(e.code());
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gadgetry
