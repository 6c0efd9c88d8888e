#include "gadgetry/gadgets.hpp"

#include <set>

#include "gadgetry/error.hpp"

namespace gadgetry {

namespace {

std::string yname(int i) { return "y" + std::to_string(i); }

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadParameter, what);
}

void check_encoder_terminals(int k, const EncoderTerminals& t) {
  require(static_cast<int>(t.y.size()) == k - 3,
          "encoder needs " + std::to_string(k - 3) + " apex terminals, got " + std::to_string(t.y.size()));
  auto ids = t.ids();
  require(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size(), "encoder terminal ids must be distinct");
}

Vertex tagged(Vertex v, const std::string& name) {
  v.tags.push_back("terminal:" + name);
  return v;
}

// One encoder piece: the planar core on {u, v, w} plus locals, then every apex
// terminal joined to the core minus u, except for `cut_y` (if any) and the
// vertex named "u'".
struct PieceBuilder {
  const EncoderTerminals& t;
  std::string prefix;
  std::vector<Vertex> vertices;
  std::vector<IdPair> edges;
  std::vector<std::string> core;  // V(F') \ {u}

  PieceBuilder(const EncoderTerminals& terms, const std::string& ns, const std::string& piece)
      : t(terms), prefix(ns + "/" + piece + "/") {
    vertices.push_back(tagged(t.u, "u"));
    vertices.push_back(tagged(t.v, "v"));
    vertices.push_back(tagged(t.w, "w"));
    for (std::size_t i = 0; i < t.y.size(); ++i) vertices.push_back(tagged(t.y[i], yname(static_cast<int>(i) + 4)));
    core = {t.v.id, t.w.id};
  }

  std::string local(const std::string& name) {
    std::string id = prefix + name;
    vertices.emplace_back(id);
    core.push_back(id);
    return id;
  }

  void edge(const std::string& a, const std::string& b) { edges.emplace_back(a, b); }

  Graph finish(const std::string& name, int cut_index, const std::string& cut_vertex) {
    for (std::size_t i = 0; i < t.y.size(); ++i) {
      for (const auto& c : core) {
        if (static_cast<int>(i) + 4 == cut_index && c == cut_vertex) continue;
        edges.emplace_back(t.y[i].id, c);
      }
    }
    return Graph(name, vertices, edges);
  }
};

std::map<std::string, std::string> encoder_terminal_map(const EncoderTerminals& t) {
  std::map<std::string, std::string> m{{"u", t.u.id}, {"v", t.v.id}, {"w", t.w.id}};
  for (std::size_t i = 0; i < t.y.size(); ++i) m[yname(static_cast<int>(i) + 4)] = t.y[i].id;
  return m;
}

Color lookup(const PartialColoring& f, const std::string& id, const std::string& name) {
  auto it = f.assignment().find(id);
  if (it == f.assignment().end()) {
    throw Error(ErrorCode::MissingTerminal, "terminal " + name + " ('" + id + "') has no color");
  }
  return it->second;
}

bool low(Color c) { return c >= 1 && c <= 3; }

}  // namespace

EncoderTerminals EncoderTerminals::defaults(int k) {
  EncoderTerminals t;
  for (int i = 4; i <= k; ++i) t.y.emplace_back(yname(i), Role::Y);
  return t;
}

std::vector<std::string> EncoderTerminals::ids() const {
  std::vector<std::string> out{u.id, v.id, w.id};
  for (const auto& yv : y) out.push_back(yv.id);
  return out;
}

const std::string& GadgetInstance::terminal(const std::string& name) const {
  auto it = terminals.find(name);
  if (it == terminals.end()) throw Error(ErrorCode::MissingTerminal, "gadget has no terminal " + name);
  return it->second;
}

GadgetInstance f_copy(int k, const CopyTerminals& terminals, const std::string& ns) {
  require(k >= 3, "copy gadget needs k >= 3, got " + std::to_string(k));
  require(terminals.u.id != terminals.v.id, "copy gadget terminals must differ");
  std::vector<Vertex> vertices{tagged(terminals.u, "u"), tagged(terminals.v, "v")};
  for (int i = 1; i <= k - 1; ++i) vertices.emplace_back(ns + "/Fcopy/q" + std::to_string(i));
  std::vector<IdPair> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (i == 0 && j == 1) continue;
      edges.emplace_back(vertices[i].id, vertices[j].id);
    }
  }
  GadgetInstance g;
  g.graph = Graph("Fcopy_" + std::to_string(k), std::move(vertices), edges);
  g.k = k;
  g.terminals = {{"u", terminals.u.id}, {"v", terminals.v.id}};
  return g;
}

Graph f_copy_plus(int k) {
  require(k >= 3, "copy gadget needs k >= 3, got " + std::to_string(k));
  auto g = f_copy(k);
  return without_tags(clique_on(g.graph, {"u", "v"})).with_name("Fcopy+_" + std::to_string(k));
}

GadgetInstance piece_f1(int k, const EncoderTerminals& t, const std::string& ns) {
  require(k >= 4, "encoder pieces need k >= 4, got " + std::to_string(k));
  check_encoder_terminals(k, t);
  PieceBuilder b(t, ns, "F1");
  const auto v1 = b.local("v1"), v2 = b.local("v2"), w1 = b.local("w1"), w2 = b.local("w2");
  for (const auto& vi : {v1, v2}) {
    b.edge(t.u.id, vi);
    b.edge(vi, t.v.id);
  }
  for (const auto& wi : {w1, w2}) {
    b.edge(t.u.id, wi);
    b.edge(wi, t.w.id);
  }
  b.edge(v1, v2);
  b.edge(w1, w2);
  GadgetInstance g;
  g.graph = b.finish("F1_" + std::to_string(k), -1, "");
  g.k = k;
  g.terminals = encoder_terminal_map(t);
  return g;
}

GadgetInstance piece_fs(int k, int s, const EncoderTerminals& t, const std::string& ns) {
  require(k >= 4, "encoder pieces need k >= 4, got " + std::to_string(k));
  require(s >= 4 && s <= k, "s = " + std::to_string(s) + " outside 4.." + std::to_string(k));
  check_encoder_terminals(k, t);
  PieceBuilder b(t, ns, "F" + std::to_string(s));
  const auto up = b.local("u'"), w1 = b.local("w1"), w2 = b.local("w2");
  for (const auto& wi : {w1, w2}) {
    b.edge(up, wi);
    b.edge(wi, t.w.id);
  }
  b.edge(t.u.id, up);
  b.edge(w1, w2);
  b.edge(up, t.v.id);
  GadgetInstance g;
  g.graph = b.finish("Fs_" + std::to_string(k) + "_" + std::to_string(s), s, up);
  g.k = k;
  g.s = s;
  g.terminals = encoder_terminal_map(t);
  return g;
}

GadgetInstance piece_fr(int k, int s, int r, const EncoderTerminals& t, const std::string& ns) {
  require(k >= 5, "an Fr piece needs k >= 5, got " + std::to_string(k));
  require(s >= 4 && s <= k, "s = " + std::to_string(s) + " outside 4.." + std::to_string(k));
  require(r >= 4 && r <= k && r != s, "r = " + std::to_string(r) + " must lie in 4.." + std::to_string(k) +
                                           " and differ from s = " + std::to_string(s));
  check_encoder_terminals(k, t);
  PieceBuilder b(t, ns, "F" + std::to_string(r));
  const auto up = b.local("u'"), v1 = b.local("v1"), v2 = b.local("v2"), w1 = b.local("w1"), w2 = b.local("w2");
  for (const auto& vi : {v1, v2}) {
    b.edge(up, vi);
    b.edge(vi, t.v.id);
  }
  for (const auto& wi : {w1, w2}) {
    b.edge(up, wi);
    b.edge(wi, t.w.id);
  }
  b.edge(t.u.id, up);
  b.edge(v1, v2);
  b.edge(w1, w2);
  GadgetInstance g;
  g.graph = b.finish("Fr_" + std::to_string(k) + "_" + std::to_string(r), r, up);
  g.k = k;
  g.s = s;
  g.terminals = encoder_terminal_map(t);
  return g;
}

GadgetInstance f_enc(int k, int s, const EncoderTerminals& t, const std::string& ns) {
  require(k >= 4, "encoder needs k >= 4, got " + std::to_string(k));
  require(s >= 4 && s <= k, "s = " + std::to_string(s) + " outside 4.." + std::to_string(k));
  Graph g = piece_f1(k, t, ns).graph;
  g = glue(g, piece_fs(k, s, t, ns).graph);
  for (int r = 4; r <= k; ++r) {
    if (r != s) g = glue(g, piece_fr(k, s, r, t, ns).graph);
  }
  GadgetInstance out;
  out.graph = g.with_name("Fenc_" + std::to_string(k) + "_" + std::to_string(s));
  out.k = k;
  out.s = s;
  out.terminals = encoder_terminal_map(t);
  return out;
}

GadgetInstance f_enc(int k, int s) { return f_enc(k, s, EncoderTerminals::defaults(k)); }

Graph f_enc_plus(const GadgetInstance& encoder) {
  std::vector<std::string> a;
  for (const auto& [name, id] : encoder.terminals) a.push_back(id);
  return clique_on(encoder.graph, a).with_name(encoder.graph.name() + "+");
}

Graph f_enc_plus(int k, int s) { return without_tags(f_enc_plus(f_enc(k, s))); }

bool copy_spec(int k, const PartialColoring& f, const CopyTerminals& terminals) {
  require(k >= 3, "copy gadget needs k >= 3");
  return lookup(f, terminals.u.id, "u") == lookup(f, terminals.v.id, "v");
}

bool piece_f1_spec(int k, Color fu, Color fv, Color fw) {
  return (fu >= 4 && fu <= k && low(fv) && low(fw)) || (low(fu) && fu == fv && fv == fw);
}

bool piece_fs_spec(int /*k*/, int s, Color fu, Color fv, Color fw) {
  if (!low(fv) || !low(fw)) return false;
  return fu != s || fv != fw;
}

bool piece_fr_spec(int /*k*/, int r, Color fu, Color fv, Color fw) {
  if (!low(fv) || !low(fw)) return false;
  return fu != r || fv == fw;
}

bool enc_spec(int k, int s, Color fu, Color fv, Color fw) {
  if (low(fu) && fu == fv && fv == fw) return true;
  if (fu == s && low(fv) && low(fw) && fv != fw) return true;
  if (fu >= 4 && fu <= k && fu != s && low(fv) && fv == fw) return true;
  return false;
}

bool enc_spec(int k, int s, const PartialColoring& f, const EncoderTerminals& t) {
  require(k >= 4 && s >= 4 && s <= k, "enc_spec parameters out of range");
  check_encoder_terminals(k, t);
  const Color fu = lookup(f, t.u.id, "u"), fv = lookup(f, t.v.id, "v"), fw = lookup(f, t.w.id, "w");
  for (std::size_t i = 0; i < t.y.size(); ++i) {
    const int index = static_cast<int>(i) + 4;
    if (lookup(f, t.y[i].id, yname(index)) != index) {
      throw Error(ErrorCode::NotRainbow, "apex terminal " + yname(index) + " must have color " + std::to_string(index));
    }
  }
  return enc_spec(k, s, fu, fv, fw);
}

PartialColoring rainbow_assignment(int k, const EncoderTerminals& t, Color fu, Color fv, Color fw) {
  PartialColoring f(k);
  f.set(t.u.id, fu).set(t.v.id, fv).set(t.w.id, fw);
  for (std::size_t i = 0; i < t.y.size(); ++i) f.set(t.y[i].id, static_cast<int>(i) + 4);
  return f;
}

}  // namespace gadgetry
