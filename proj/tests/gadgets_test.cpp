#include <gtest/gtest.h>

#include <set>

#include "gadgetry/coloring.hpp"
#include "gadgetry/error.hpp"
#include "gadgetry/gadgets.hpp"

using namespace gadgetry;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::BadParameter;
}

bool low(Color c) { return c >= 1 && c <= 3; }

// The conditions exactly as the gadget catalog states them, written out here
// independently of the library's predicates.
bool encoder_rule(int k, int s, Color u, Color v, Color w) {
  return (low(u) && u == v && v == w) || (u == s && low(v) && low(w) && v != w) ||
         (u >= 4 && u <= k && u != s && v == w && low(v));
}
bool f1_rule(int k, Color u, Color v, Color w) {
  return (u >= 4 && u <= k && low(v) && low(w)) || (low(u) && u == v && v == w);
}
bool fs_rule(int s, Color u, Color v, Color w) {
  return (u != s && low(v) && low(w)) || (u == s && low(v) && low(w) && v != w);
}
bool fr_rule(int r, Color u, Color v, Color w) {
  return (u != r && low(v) && low(w)) || (u == r && v == w && low(v));
}

bool rainbow_extends(const Graph& g, int k, Color u, Color v, Color w) {
  return extends(g, rainbow_assignment(k, EncoderTerminals::defaults(k), u, v, w));
}

}  // namespace

TEST(CopyGadget, Shape) {
  const auto k4 = f_copy(4);
  EXPECT_EQ(k4.graph.order(), 5u);
  EXPECT_EQ(k4.graph.size(), 9u);
  EXPECT_FALSE(k4.graph.adjacent("u", "v"));
  const auto k3 = f_copy(3);
  EXPECT_EQ(k3.graph.order(), 4u);
  EXPECT_EQ(k3.graph.size(), 5u);
  EXPECT_EQ(boundary_trace(k4.graph, {"u", "v"}, 4), ColoringFamily({"u", "v"}, 4, {{1, 1}, {2, 2}, {3, 3}, {4, 4}}));
  EXPECT_EQ(code_of([] { f_copy(2); }), ErrorCode::BadParameter);
  EXPECT_EQ(code_of([] { f_copy(4, {Vertex("a"), Vertex("a")}); }), ErrorCode::BadParameter);
}

TEST(CopyGadget, Plus) {
  EXPECT_EQ(f_copy_plus(4), clique_on(f_copy(4).graph, f_copy(4).graph.ids()));
  EXPECT_EQ(f_copy_plus(4).size(), 10u);
  EXPECT_EQ(f_copy_plus(3).size(), 6u);
  EXPECT_EQ(f_copy_plus(5).size(), 15u);
}

TEST(CopyGadget, Conformance) {
  for (int k = 3; k <= 6; ++k) {
    const auto g = f_copy(k);
    for (Color a = 1; a <= k; ++a) {
      for (Color b = 1; b <= k; ++b) {
        const PartialColoring f(k, {{"u", a}, {"v", b}});
        EXPECT_EQ(copy_spec(k, f), a == b);
        EXPECT_EQ(extends(g.graph, f), copy_spec(k, f)) << "k=" << k << " " << a << "," << b;
      }
    }
  }
}

TEST(CopyGadget, SpecNeedsBothTerminals) {
  EXPECT_TRUE(copy_spec(4, PartialColoring(4, {{"u", 3}, {"v", 3}})));
  EXPECT_EQ(code_of([] { copy_spec(4, PartialColoring(4, {{"u", 3}})); }), ErrorCode::MissingTerminal);
}

TEST(Pieces, F1) {
  const auto p = piece_f1(4, EncoderTerminals::defaults(4));
  EXPECT_EQ(p.graph.order(), 8u);
  EXPECT_EQ(p.graph.size(), 16u);
  EXPECT_TRUE(rainbow_extends(p.graph, 4, 4, 1, 2));
  EXPECT_FALSE(rainbow_extends(p.graph, 4, 1, 1, 2));
}

TEST(Pieces, Fs) {
  const auto p = piece_fs(4, 4, EncoderTerminals::defaults(4));
  EXPECT_EQ(p.graph.order(), 7u);
  EXPECT_FALSE(p.graph.adjacent(p.graph.index_of("enc/F4/u'"), p.graph.index_of("y4")));
  EXPECT_TRUE(rainbow_extends(p.graph, 4, 4, 1, 2));
  EXPECT_FALSE(rainbow_extends(p.graph, 4, 4, 1, 1));
}

TEST(Pieces, Fr) {
  const auto p = piece_fr(5, 4, 5, EncoderTerminals::defaults(5));
  EXPECT_EQ(p.graph.order(), 10u);
  EXPECT_TRUE(rainbow_extends(p.graph, 5, 5, 2, 2));
  EXPECT_FALSE(rainbow_extends(p.graph, 5, 5, 1, 2));
  EXPECT_EQ(code_of([] { piece_fr(5, 4, 4, EncoderTerminals::defaults(5)); }), ErrorCode::BadParameter);
  EXPECT_EQ(code_of([] { piece_fr(4, 4, 5, EncoderTerminals::defaults(4)); }), ErrorCode::BadParameter);
}

TEST(Pieces, Conformance) {
  for (int k = 4; k <= 5; ++k) {
    const auto terms = EncoderTerminals::defaults(k);
    const auto f1 = piece_f1(k, terms);
    for (Color u = 1; u <= k; ++u) {
      for (Color v = 1; v <= k; ++v) {
        for (Color w = 1; w <= k; ++w) {
          EXPECT_EQ(piece_f1_spec(k, u, v, w), f1_rule(k, u, v, w));
          EXPECT_EQ(rainbow_extends(f1.graph, k, u, v, w), f1_rule(k, u, v, w)) << "F1 k=" << k;
        }
      }
    }
    for (int s = 4; s <= k; ++s) {
      const auto fs = piece_fs(k, s, terms);
      for (Color u = 1; u <= k; ++u) {
        for (Color v = 1; v <= k; ++v) {
          for (Color w = 1; w <= k; ++w) {
            EXPECT_EQ(piece_fs_spec(k, s, u, v, w), fs_rule(s, u, v, w));
            EXPECT_EQ(rainbow_extends(fs.graph, k, u, v, w), fs_rule(s, u, v, w)) << "Fs k=" << k << " s=" << s;
          }
        }
      }
      for (int r = 4; r <= k; ++r) {
        if (r == s) continue;
        const auto fr = piece_fr(k, s, r, terms);
        for (Color u = 1; u <= k; ++u) {
          for (Color v = 1; v <= k; ++v) {
            for (Color w = 1; w <= k; ++w) {
              EXPECT_EQ(piece_fr_spec(k, r, u, v, w), fr_rule(r, u, v, w));
              EXPECT_EQ(rainbow_extends(fr.graph, k, u, v, w), fr_rule(r, u, v, w)) << "Fr k=" << k << " r=" << r;
            }
          }
        }
      }
    }
  }
}

TEST(Encoder, Shape) {
  EXPECT_EQ(f_enc(4, 4).graph.order(), 11u);
  const Graph plus = f_enc_plus(4, 4);
  const Graph plain = f_enc(4, 4).graph;
  EXPECT_EQ(plus.order(), 11u);
  std::size_t missing = 0;
  const std::vector<std::string> a{"u", "v", "w", "y4"};
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) missing += !plain.adjacent(a[i], a[j]);
  }
  EXPECT_EQ(plus.size(), plain.size() + missing);
  for (const auto& [x, y] : plain.edge_ids()) EXPECT_TRUE(plus.adjacent(x, y));
  EXPECT_EQ(EncoderTerminals::defaults(5).ids().size(), 5u);
  EXPECT_EQ(code_of([] { f_enc(4, 7); }), ErrorCode::BadParameter);
  EXPECT_EQ(code_of([] { f_enc(3, 4); }), ErrorCode::BadParameter);
}

TEST(Encoder, Examples) {
  const Graph g = f_enc(5, 4).graph;
  EXPECT_TRUE(rainbow_extends(g, 5, 2, 2, 2));
  EXPECT_TRUE(rainbow_extends(g, 5, 4, 1, 3));
  EXPECT_FALSE(rainbow_extends(g, 5, 4, 1, 1));
  EXPECT_TRUE(enc_spec(5, 4, 5, 1, 1));
  EXPECT_FALSE(enc_spec(5, 4, 5, 4, 4));
}

TEST(Encoder, Conformance) {
  for (int k = 4; k <= 5; ++k) {
    for (int s = 4; s <= k; ++s) {
      const Graph g = f_enc(k, s).graph;
      std::size_t checked = 0;
      for (Color u = 1; u <= k; ++u) {
        for (Color v = 1; v <= k; ++v) {
          for (Color w = 1; w <= k; ++w) {
            ++checked;
            EXPECT_EQ(enc_spec(k, s, u, v, w), encoder_rule(k, s, u, v, w));
            EXPECT_EQ(rainbow_extends(g, k, u, v, w), encoder_rule(k, s, u, v, w))
                << "k=" << k << " s=" << s << " f=(" << u << "," << v << "," << w << ")";
          }
        }
      }
      EXPECT_EQ(checked, static_cast<std::size_t>(k * k * k));
    }
  }
}

TEST(Encoder, SpecRejectsNonRainbow) {
  const auto terms = EncoderTerminals::defaults(4);
  PartialColoring f(4, {{"u", 1}, {"v", 1}, {"w", 1}, {"y4", 2}});
  EXPECT_EQ(code_of([&] { enc_spec(4, 4, f, terms); }), ErrorCode::NotRainbow);
  PartialColoring partial(4, {{"u", 1}, {"v", 1}, {"y4", 4}});
  EXPECT_EQ(code_of([&] { enc_spec(4, 4, partial, terms); }), ErrorCode::MissingTerminal);
  EXPECT_TRUE(enc_spec(4, 4, rainbow_assignment(4, terms, 1, 1, 1), terms));
}

TEST(Namespacing, InstancesShareOnlyTerminals) {
  const auto terms = EncoderTerminals::defaults(5);
  const auto a = f_enc(5, 4, terms, "enc_1_4");
  const auto b = f_enc(5, 4, terms, "enc_2_4");
  std::set<std::string> ids_a;
  for (const auto& id : a.graph.ids()) ids_a.insert(id);
  const auto term_list = terms.ids();
  const std::set<std::string> terminal_ids(term_list.begin(), term_list.end());
  for (const auto& id : b.graph.ids()) {
    if (ids_a.count(id)) EXPECT_TRUE(terminal_ids.count(id)) << id;
  }
  for (const auto& id : a.graph.ids()) {
    if (!terminal_ids.count(id)) EXPECT_EQ(id.rfind("enc_1_4/", 0), 0u) << id;
  }
  const auto c1 = f_copy(4, {}, "copy_1_4");
  EXPECT_EQ(c1.terminal("u"), "u");
  EXPECT_EQ(code_of([&] { c1.terminal("w"); }), ErrorCode::MissingTerminal);
}
