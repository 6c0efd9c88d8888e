#include <gtest/gtest.h>

#include <numeric>

#include "gadgetry/coloring.hpp"
#include "gadgetry/error.hpp"
#include "gadgetry/gadgets.hpp"
#include "test_support.hpp"

using namespace gadgetry;
using testing_support::brute_force_extends;
using testing_support::brute_force_trace;
using testing_support::random_graph;

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

std::map<std::string, Color> random_partial(std::mt19937& rng, const Graph& g, int k) {
  std::map<std::string, Color> out;
  for (const auto& id : g.ids()) {
    if (rng() % 3 == 0) out[id] = static_cast<Color>(1 + rng() % k);
  }
  return out;
}

}  // namespace

TEST(Extends, K4IsNotThreeColorable) {
  EXPECT_FALSE(extends(complete_graph(4), PartialColoring(3)));
  EXPECT_TRUE(extends(complete_graph(4), PartialColoring(4)));
}

TEST(Extends, CopyGadget) {
  const Graph g = f_copy(4).graph;
  EXPECT_TRUE(extends(g, PartialColoring(4, {{"u", 1}, {"v", 1}})));
  EXPECT_FALSE(extends(g, PartialColoring(4, {{"u", 1}, {"v", 2}})));
}

TEST(Extends, FiveCycleWithOnePrecoloredVertex) {
  const Graph c5 = testing_support::cycle(5);
  EXPECT_TRUE(brute_force_extends(c5, {{"v0", 1}}, 3));
  EXPECT_TRUE(extends(c5, PartialColoring(3, {{"v0", 1}})));
}

TEST(Extends, Errors) {
  const Graph c5 = testing_support::cycle(5);
  EXPECT_EQ(code_of([&] { extends(c5, PartialColoring(3, {{"nope", 1}})); }), ErrorCode::UnknownVertex);
  EXPECT_EQ(code_of([&] { PartialColoring(3, {{"v0", 4}}); }), ErrorCode::ColorOutOfRange);
}

TEST(Extends, MatchesBruteForceOnRandomGraphs) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const int k = 1 + static_cast<int>(rng() % 4);
    const Graph g = random_graph(rng, n, 0.2 + 0.1 * (trial % 6));
    for (int q = 0; q < 6; ++q) {
      const auto partial = random_partial(rng, g, k);
      ASSERT_EQ(extends(g, PartialColoring(k, partial)), brute_force_extends(g, partial, k))
          << "trial " << trial << " n=" << n << " k=" << k;
    }
  }
}

TEST(Extends, PermutationInvariance) {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 3 + static_cast<int>(rng() % 2);
    const Graph g = random_graph(rng, 7, 0.45);
    const auto partial = random_partial(rng, g, k);
    std::vector<Color> pi(k);
    std::iota(pi.begin(), pi.end(), 1);
    std::shuffle(pi.begin(), pi.end(), rng);
    std::map<std::string, Color> permuted;
    for (const auto& [id, c] : partial) permuted[id] = pi[c - 1];
    EXPECT_EQ(extends(g, PartialColoring(k, partial)), extends(g, PartialColoring(k, permuted)));
  }
}

TEST(BoundaryTrace, SingleEdge) {
  const Graph e("e", {Vertex("u"), Vertex("v")}, {{"u", "v"}});
  const auto t = boundary_trace(e, {"u", "v"}, 3);
  EXPECT_EQ(t.size(), 6u);
  for (const auto& m : t.members()) EXPECT_NE(m[0], m[1]);
}

TEST(BoundaryTrace, CopyGadgetIsEquality) {
  const auto t = boundary_trace(f_copy(4).graph, {"u", "v"}, 4);
  EXPECT_EQ(t, ColoringFamily({"u", "v"}, 4, {{1, 1}, {2, 2}, {3, 3}, {4, 4}}));
}

TEST(BoundaryTrace, EdgelessIsEverything) {
  const Graph g("g", {Vertex("a"), Vertex("b")}, {});
  EXPECT_EQ(boundary_trace(g, {"a", "b"}, 3).size(), 9u);
}

TEST(BoundaryTrace, Errors) {
  const Graph g("g", {Vertex("a"), Vertex("b")}, {});
  EXPECT_EQ(code_of([&] { boundary_trace(g, {"a", "a"}, 3); }), ErrorCode::DuplicateBoundaryId);
  EXPECT_EQ(code_of([&] { boundary_trace(g, {"a", "c"}, 3); }), ErrorCode::UnknownVertex);
}

TEST(BoundaryTrace, Properties) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = 3 + static_cast<int>(rng() % 2);
    Graph g = random_graph(rng, 7, 0.35);
    const std::vector<std::string> boundary{"v0", "v1", "v2"};
    const auto trace = boundary_trace(g, boundary, k);
    EXPECT_EQ(trace.members(), brute_force_trace(g, boundary, k));
    EXPECT_TRUE(is_closed(trace));
    for (const auto& t : trace.members()) EXPECT_TRUE(extends(g, trace.as_partial(t)));

    // One more edge can only shrink the trace.
    std::vector<std::pair<std::size_t, std::size_t>> missing;
    for (std::size_t a = 0; a < g.order(); ++a) {
      for (std::size_t b = a + 1; b < g.order(); ++b) {
        if (!g.adjacent(a, b)) missing.emplace_back(a, b);
      }
    }
    if (missing.empty()) continue;
    const auto [a, b] = missing[rng() % missing.size()];
    auto es = g.edge_ids();
    es.emplace_back(g.id(a), g.id(b));
    const Graph bigger("g+", g.vertices(), es);
    const auto smaller = boundary_trace(bigger, boundary, k);
    for (const auto& t : smaller.members()) EXPECT_TRUE(trace.contains(t));
  }
}

TEST(Closure, Examples) {
  const auto c = close_under_permutations(ColoringFamily({"a", "b"}, 3, {{1, 1}}));
  EXPECT_EQ(c, ColoringFamily({"a", "b"}, 3, {{1, 1}, {2, 2}, {3, 3}}));
  EXPECT_TRUE(close_under_permutations(ColoringFamily({"a", "b"}, 4)).empty());
  const auto u = close_under_permutations(ColoringFamily({"a", "b"}, 3, {{1, 2}}));
  EXPECT_EQ(u.size(), 6u);
  for (const auto& m : u.members()) EXPECT_NE(m[0], m[1]);
  EXPECT_EQ(close_under_permutations(u), u);
}

TEST(Closure, IsClosed) {
  EXPECT_TRUE(is_closed(ColoringFamily::all({"a", "b", "c"}, 3)));
  EXPECT_FALSE(is_closed(ColoringFamily({"a", "b"}, 3, {{1, 1}})));
  EXPECT_TRUE(is_closed(close_under_permutations(ColoringFamily({"a", "b"}, 3, {{1, 2}}))));
}

TEST(Closure, RandomFamiliesAreIdempotent) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    ColoringFamily f({"a", "b", "c"}, 4);
    for (int i = 0; i < 5; ++i) {
      f.insert({static_cast<Color>(1 + rng() % 4), static_cast<Color>(1 + rng() % 4), static_cast<Color>(1 + rng() % 4)});
    }
    const auto c = close_under_permutations(f);
    EXPECT_TRUE(is_closed(c));
    EXPECT_EQ(close_under_permutations(c), c);
    for (const auto& m : f.members()) EXPECT_TRUE(c.contains(m));
    EXPECT_EQ(is_closed(f), f == c);
  }
}

TEST(CanonicalRelabeling, FirstAppearanceOrder) {
  EXPECT_EQ(canonical_relabeling({3, 3, 1, 2}), (ColorTuple{1, 1, 2, 3}));
  EXPECT_EQ(canonical_relabeling({4, 2, 4}), (ColorTuple{1, 2, 1}));
}

TEST(FamilyJson, RoundTrip) {
  const auto f = close_under_permutations(ColoringFamily({"z1", "z2"}, 3, {{1, 2}}));
  EXPECT_EQ(family_from_json(family_to_json(f)), f);
  EXPECT_EQ(code_of([] { family_from_json(Json::parse(R"({"domain":["a"],"k":3,"members":[[4]]})")); }),
            ErrorCode::SchemaViolation);
  EXPECT_EQ(code_of([] { family_from_json(Json::parse(R"({"domain":["a"],"k":3})")); }), ErrorCode::SchemaViolation);
}
