#include <gtest/gtest.h>

#include <filesystem>

#include "gadgetry/error.hpp"
#include "gadgetry/pipeline.hpp"
#include "gadgetry/realizer.hpp"
#include "test_support.hpp"

using namespace gadgetry;
using testing_support::brute_force_trace;

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

RealizationProblem problem(const std::vector<std::string>& boundary, std::vector<ColorTuple> members) {
  RealizationProblem p;
  p.boundary = {boundary};
  p.family = ColoringFamily(boundary, 3, members);
  return p;
}

RealizationProblem equality2() { return problem({"c", "d"}, {{1, 1}, {2, 2}, {3, 3}}); }

// K_4 minus the edge c-d: c and d are forced to share a color.
Graph diamond() {
  return Graph("diamond", {Vertex("a"), Vertex("b"), Vertex("c", Role::Z), Vertex("d", Role::Z)},
               {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
}

// Both conditions checked without the library's verifier: the boundary
// augmentation decided by the path-embedding test, and the trace by brute force.
bool oracle_realizes(const Graph& g, const RealizationProblem& p) {
  if (!is_planar_path_embedding(boundary_augmentation(g, p.boundary))) return false;
  return brute_force_trace(g, p.boundary.order, 3) == p.family.members();
}

std::vector<ColorTuple> all_tuples(std::size_t len) {
  std::vector<ColorTuple> out;
  ColorTuple t(len, 1);
  while (true) {
    out.push_back(t);
    std::size_t i = 0;
    while (i < len && t[i] == 3) t[i++] = 1;
    if (i == len) return out;
    ++t[i];
  }
}

}  // namespace

TEST(VerifyRealizer, EdgelessRealizesEverything) {
  const Graph g("g", {Vertex("a"), Vertex("b"), Vertex("c")}, {});
  RealizationProblem p;
  p.boundary = {{"a", "b", "c"}};
  p.family = ColoringFamily::all({"a", "b", "c"}, 3);
  const auto v = verify_realizer(g, p);
  ASSERT_TRUE(v.ok());
  EXPECT_TRUE(v.certificate->verified());
  EXPECT_EQ(v.certificate->family().size(), 27u);
}

TEST(VerifyRealizer, DiamondGivesEquality) {
  const auto v = verify_realizer(diamond(), equality2());
  ASSERT_TRUE(v.ok());
  EXPECT_TRUE(oracle_realizes(diamond(), equality2()));
}

TEST(VerifyRealizer, SingleEdgeIsNotEquality) {
  const Graph e("e", {Vertex("c"), Vertex("d")}, {{"c", "d"}});
  const auto v = verify_realizer(e, equality2());
  ASSERT_FALSE(v.ok());
  EXPECT_TRUE(v.failure.planar_ok);
  EXPECT_FALSE(v.failure.trace_ok);
  // The smallest disagreement: (1,1) is wanted but cannot extend.
  ASSERT_TRUE(v.failure.witness);
  EXPECT_EQ(*v.failure.witness, (ColorTuple{1, 1}));
  EXPECT_FALSE(v.failure.witness_extends);
  EXPECT_NE(v.failure.summary().find("condition (b)"), std::string::npos);

  const auto neq = problem({"c", "d"}, {});
  const auto w = verify_realizer(e, neq);
  ASSERT_TRUE(w.failure.witness);
  EXPECT_EQ(*w.failure.witness, (ColorTuple{1, 2}));
  EXPECT_TRUE(w.failure.witness_extends);
}

TEST(VerifyRealizer, NonplanarFailsConditionA) {
  const Graph k5 = complete_graph(5);
  const auto p = problem({"p1", "p2"}, {});
  const auto v = verify_realizer(k5, p);
  EXPECT_FALSE(v.ok());
  EXPECT_FALSE(v.failure.planar_ok);
  EXPECT_TRUE(v.failure.trace_ok);
  EXPECT_NE(v.failure.summary().find("condition (a)"), std::string::npos);
}

TEST(VerifyRealizer, BoundaryOrderMatters) {
  // A 4-cycle realizes its own trace only when read around the cycle.
  const Graph c4("c4", {Vertex("a"), Vertex("b"), Vertex("c"), Vertex("d")},
                 {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
  const std::vector<std::string> around{"a", "b", "c", "d"};
  const std::vector<std::string> across{"a", "c", "b", "d"};
  RealizationProblem good{{around}, boundary_trace(c4, around, 3)};
  RealizationProblem bad{{across}, boundary_trace(c4, across, 3)};
  EXPECT_TRUE(verify_realizer(c4, good).ok());
  const auto v = verify_realizer(c4, bad);
  EXPECT_FALSE(v.ok());
  EXPECT_FALSE(v.failure.planar_ok);
  EXPECT_TRUE(v.failure.trace_ok);
}

TEST(VerifyRealizer, Errors) {
  EXPECT_EQ(code_of([] { verify_realizer(diamond(), problem({"c", "zz"}, {})); }), ErrorCode::UnknownId);
  RealizationProblem four{{{"c", "d"}}, ColoringFamily({"c", "d"}, 4)};
  EXPECT_EQ(code_of([&] { verify_realizer(diamond(), four); }), ErrorCode::BadParameter);
}

TEST(SearchRealizer, Examples) {
  RealizationProblem all{{{"a", "b", "c"}}, ColoringFamily::all({"a", "b", "c"}, 3)};
  const auto r = search_realizer(all);
  ASSERT_EQ(r.status, RealizerSearchResult::Status::Found);
  EXPECT_EQ(r.certificate->graph().order(), 3u);
  EXPECT_EQ(r.certificate->graph().size(), 0u);

  RealizerLimits two;
  two.max_internal = 2;
  const auto eq = search_realizer(equality2(), two);
  ASSERT_EQ(eq.status, RealizerSearchResult::Status::Found);
  EXPECT_LE(eq.certificate->graph().order(), 4u);
  EXPECT_TRUE(oracle_realizes(eq.certificate->graph(), equality2()));

  const auto none = search_realizer(problem({"a", "b"}, {}), two);
  ASSERT_EQ(none.status, RealizerSearchResult::Status::Found);
  EXPECT_TRUE(oracle_realizes(none.certificate->graph(), problem({"a", "b"}, {})));
}

TEST(SearchRealizer, ExhaustedAndTimeout) {
  RealizerLimits zero;
  zero.max_internal = 0;
  EXPECT_EQ(search_realizer(equality2(), zero).status, RealizerSearchResult::Status::Exhausted);

  std::vector<std::string> wide;
  for (int i = 0; i < 12; ++i) wide.push_back("b" + std::to_string(i));
  const auto r = search_realizer(problem(wide, {}), zero);
  EXPECT_EQ(r.status, RealizerSearchResult::Status::Timeout);
  EXPECT_FALSE(r.certificate);
}

TEST(SearchRealizer, NotClosed) {
  EXPECT_EQ(code_of([] { search_realizer(problem({"a", "b"}, {{1, 1}})); }), ErrorCode::NotClosed);
}

TEST(SearchRealizer, Deterministic) {
  RealizerLimits two;
  two.max_internal = 2;
  const auto p = problem({"a", "b", "c"}, {});
  const auto a = search_realizer(p, two);
  const auto b = search_realizer(p, two);
  ASSERT_TRUE(a.certificate && b.certificate);
  EXPECT_EQ(serialize(a.certificate->graph()), serialize(b.certificate->graph()));
  EXPECT_EQ(a.candidates, b.candidates);
}

TEST(SearchRealizer, EveryClosedTwoTerminalFamily) {
  // Orbits of 3-colorings of two terminals: equal and different.
  const std::vector<std::vector<ColorTuple>> families{
      {}, {{1, 1}, {2, 2}, {3, 3}}, {{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}}, all_tuples(2)};
  for (const auto& members : families) {
    const auto p = problem({"a", "b"}, members);
    const auto r = search_realizer(p);
    ASSERT_EQ(r.status, RealizerSearchResult::Status::Found) << members.size();
    EXPECT_TRUE(oracle_realizes(r.certificate->graph(), p)) << members.size();
  }
}

TEST(SearchRealizer, RandomThreeTerminalFamilies) {
  // Five orbits on three terminals; pick random unions and re-verify whatever
  // the search returns with the oracles.
  std::mt19937 rng(5);
  RealizerLimits limits;
  limits.max_internal = 2;
  int found = 0;
  for (int trial = 0; trial < 12; ++trial) {
    const std::vector<ColorTuple> reps{{1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 2, 2}, {1, 2, 3}};
    ColoringFamily f({"a", "b", "c"}, 3);
    for (const auto& rep : reps) {
      if (rng() % 2) f.insert(rep);
    }
    const RealizationProblem p{{{"a", "b", "c"}}, close_under_permutations(f)};
    const auto r = search_realizer(p, limits);
    if (r.status != RealizerSearchResult::Status::Found) continue;
    ++found;
    EXPECT_TRUE(r.certificate->verified());
    EXPECT_TRUE(is_closed(r.certificate->family()));
    EXPECT_TRUE(oracle_realizes(r.certificate->graph(), p));
  }
  EXPECT_GT(found, 0);
}

TEST(LoadRealizer, NeverTrustsInput) {
  EXPECT_TRUE(load_realizer(serialize(diamond()), equality2()).ok());
  auto es = diamond().edge_ids();
  es.emplace_back("c", "d");
  const Graph k4("k4", diamond().vertices(), es);
  const auto v = load_realizer(serialize(k4), equality2());
  EXPECT_FALSE(v.ok());
  EXPECT_FALSE(v.failure.trace_ok);
  EXPECT_EQ(code_of([] { load_realizer("{not json", equality2()); }), ErrorCode::ParseError);
}

TEST(Fixtures, BundledRealizersVerify) {
  std::size_t checked = 0;
  for (const auto& entry : std::filesystem::directory_iterator(default_fixture_dir())) {
    if (entry.path().extension() != ".json") continue;
    const Graph g = deserialize(read_text_file(entry.path().string()));
    // Each fixture realizes C' for the equality or the distinctness family
    // on two terminals with k = 4; see which one, independently of the loader.
    bool matched = false;
    for (const bool equal : {true, false}) {
      InstanceSpec spec;
      spec.m = 2;
      spec.k = 4;
      spec.family = ColoringFamily({"x1", "x2"}, 4);
      for (Color a = 1; a <= 4; ++a) {
        for (Color b = 1; b <= 4; ++b) {
          if ((a == b) == equal) spec.family.insert({a, b});
        }
      }
      const RealizationProblem p{{z_order(2, 4)}, compute_cprime(spec)};
      matched = matched || verify_realizer(g, p).ok();
    }
    EXPECT_TRUE(matched) << entry.path();
    ++checked;
  }
  EXPECT_EQ(checked, 2u);
}

TEST(ProblemJson, RoundTripAndErrors) {
  const auto p = equality2();
  const auto back = problem_from_json(problem_to_json(p));
  EXPECT_EQ(back.boundary, p.boundary);
  EXPECT_EQ(back.family, p.family);
  Json extra = problem_to_json(p);
  extra["note"] = 1;
  EXPECT_EQ(code_of([&] { problem_from_json(extra); }), ErrorCode::SchemaViolation);
  Json mismatched = problem_to_json(p);
  mismatched["boundary"] = Json::array({"d", "c"});
  EXPECT_EQ(code_of([&] { problem_from_json(mismatched); }), ErrorCode::SchemaViolation);
}

TEST(Problem, Validate) {
  EXPECT_NO_THROW(equality2().validate());
  EXPECT_EQ(code_of([] { problem({"a", "b"}, {{1, 2}}).validate(); }), ErrorCode::NotClosed);
  EXPECT_EQ(code_of([] { problem({"a", "b"}, {}).validate(); RealizationProblem q{{{"b", "a"}}, ColoringFamily({"a", "b"}, 3)}; q.validate(); }),
            ErrorCode::BadParameter);
}

TEST(Certificate, UnverifiedStaysUnverified) {
  const auto c = RealizerCertificate::unverified(diamond(), {{"c", "d"}}, equality2().family);
  EXPECT_FALSE(c.verified());
}
