#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tnncells/error.hpp"
#include "tnncells/survey.hpp"

using namespace tnn;

TEST_CASE("zero-dimensional cell reaches only itself, coverage 1") {
  WeylGroup g(CartanType::parse("A2"));
  FlagVariety fv(g);
  ParabolicDecomposition empty(g, {});
  SurveyOptions opt;
  opt.trials = 2;

  WeylElt s1 = g.simple(0);
  SurveyReport rep = degeneration_survey(fv, empty, CellIndex{s1, s1}, opt);
  CHECK(rep.violations.empty());
  CHECK(rep.reached.size() == 1);
  CHECK(rep.closure_size == 1);
  CHECK(rep.coverage == 1);
}

TEST_CASE("top cell of A2: no violations, reach is the y-product fan") {
  WeylGroup g(CartanType::parse("A2"));
  FlagVariety fv(g);
  ParabolicDecomposition empty(g, {});
  SurveyOptions opt;
  opt.trials = 3;
  opt.all_words = true;

  SurveyReport rep =
      degeneration_survey(fv, empty, CellIndex{g.identity(), g.longest()}, opt);
  CHECK(rep.violations.empty());
  CHECK(rep.closure_size == 19);
  CHECK(rep.words_used == 2);
  // Every zero-substitution of a pure y-product is again a y-product, so
  // exactly the strata with x = e are reachable: 6 of the 19.
  CHECK(rep.reached.size() == 6);
  auto strata = enumerate_strata(empty);
  for (std::size_t id : rep.reached) CHECK(strata[id].x == g.identity());
  CHECK(rep.coverage == Rational(6, 19));
}

TEST_CASE("every A2 cell surveys clean; reached strata all share the x part") {
  WeylGroup g(CartanType::parse("A2"));
  FlagVariety fv(g);
  ParabolicDecomposition empty(g, {});
  auto strata = enumerate_strata(empty);
  SurveyOptions opt;
  opt.trials = 2;

  for (WeylElt w : g.elements())
    for (WeylElt v : g.elements()) {
      if (!g.bruhat_leq(v, w)) continue;
      SurveyReport rep = degeneration_survey(fv, empty, CellIndex{v, w}, opt);
      CHECK(rep.violations.empty());
      CHECK(rep.samples > 0);
      CHECK(!rep.reached.empty());
      for (std::size_t id : rep.reached) CHECK(strata[id].x == v);
    }
}

TEST_CASE("parabolic survey of the top stratum of A2, J={1}") {
  WeylGroup g(CartanType::parse("A2"));
  FlagVariety fv(g);
  ParabolicDecomposition j1(g, {0});
  WeylElt s1 = g.simple(0);

  SurveyOptions opt;
  opt.trials = 3;
  // source cell R_{x, wu} for the open stratum (s1, s1, s1 s2)
  SurveyReport rep = degeneration_survey(fv, j1, CellIndex{s1, g.longest()}, opt);
  CHECK(rep.violations.empty());
  CHECK(rep.source_stratum ==
        StratumIndex{s1, s1, g.multiply(g.simple(0), g.simple(1))});
  CHECK(rep.closure_size == 7);  // the whole triangle poset lies below the top
  for (std::size_t id : rep.reached) CHECK(id < 7);
}

TEST_CASE("survey rejects bad sources and zero trials") {
  WeylGroup g(CartanType::parse("A2"));
  FlagVariety fv(g);
  ParabolicDecomposition j1(g, {0});
  SurveyOptions opt;
  opt.trials = 0;
  CHECK_THROWS_AS(
      degeneration_survey(fv, j1, CellIndex{g.simple(0), g.longest()}, opt),
      InvalidInputError);
  opt.trials = 1;
  // v = e is not in W^J max for J = {1}
  CHECK_THROWS_AS(
      degeneration_survey(fv, j1, CellIndex{g.identity(), g.longest()}, opt),
      InvalidInputError);
}

TEST_CASE("work cap trips") {
  WeylGroup g(CartanType::parse("A2"));
  FlagVariety fv(g);
  ParabolicDecomposition empty(g, {});
  SurveyOptions opt;
  opt.trials = 3;
  opt.work_cap = 10;
  CHECK_THROWS_AS(
      degeneration_survey(fv, empty, CellIndex{g.identity(), g.longest()}, opt),
      CapExceededError);
}

TEST_CASE("report JSON is deterministic and carries the key fields") {
  WeylGroup g(CartanType::parse("A2"));
  FlagVariety fv(g);
  ParabolicDecomposition empty(g, {});
  SurveyOptions opt;
  opt.trials = 2;
  SurveyReport rep =
      degeneration_survey(fv, empty, CellIndex{g.identity(), g.longest()}, opt);
  nlohmann::json j = rep.to_json();
  CHECK(j["violations"].empty());
  CHECK(j["coverage"] == "6/19");
  CHECK(j["closure_size"] == 19);
  SurveyReport rep2 =
      degeneration_survey(fv, empty, CellIndex{g.identity(), g.longest()}, opt);
  CHECK(rep2.to_json() == j);
}
