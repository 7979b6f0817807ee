#include <stdexcept>

#include "doctest.h"
#include "support.hpp"
#include "tdsolve/problem.hpp"

using namespace tdsolve;
using namespace tdtest;

TEST_CASE("parsing and printing round-trip") {
  for (const std::string text : {
           "any",
           "edgeless",
           "forest",
           "tree",
           "atmost(0)",
           "atmost(12)",
           "and(forest,atmost(2))",
           "or(tree,edgeless,any)",
           "vertpart(edgeless,edgeless)",
           "vertpart(tree,tree,tree)",
           "edgepart(forest,forest)",
           "graphpart(3;edgeless,edgeless)",
           "graphpart(0;any,tree)",
           "vertpart(and(forest,atmost(3)),or(tree,edgeless))",
           "edgepart(vertpart(edgeless,edgeless),forest)",
       }) {
    ProblemExpr e = parse_problem(text);
    CHECK(to_string(e) == text);
    CHECK(parse_problem(to_string(e)) == e);
  }
}

TEST_CASE("whitespace is ignored") {
  CHECK(parse_problem("  vertpart( tree ,tree )  ") ==
        parse_problem("vertpart(tree,tree)"));
  CHECK(parse_problem("graphpart( 2 ; edgeless , edgeless )") ==
        parse_problem("graphpart(2;edgeless,edgeless)"));
}

TEST_CASE("parse errors name the offending column") {
  CHECK_THROWS_WITH_AS(parse_problem(""), doctest::Contains("column 1"),
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_problem("frst"), doctest::Contains("column 1"),
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_problem("and(forest,)"),
                       doctest::Contains("column 12"), std::runtime_error);
  CHECK_THROWS_AS(parse_problem("atmost"), std::runtime_error);
  CHECK_THROWS_AS(parse_problem("atmost(-1)"), std::runtime_error);
  CHECK_THROWS_AS(parse_problem("atmost(x)"), std::runtime_error);
  CHECK_THROWS_AS(parse_problem("vertpart(tree)"), std::runtime_error);
  CHECK_THROWS_AS(parse_problem("edgepart(forest)"), std::runtime_error);
  CHECK_THROWS_AS(parse_problem("graphpart(2;edgeless)"), std::runtime_error);
  CHECK_THROWS_AS(parse_problem("graphpart(edgeless,edgeless)"),
                  std::runtime_error);
  CHECK_THROWS_AS(parse_problem("graphpart(2,edgeless,edgeless)"),
                  std::runtime_error);
  CHECK_THROWS_AS(parse_problem("tree tree"), std::runtime_error);
  CHECK_THROWS_AS(parse_problem("and(tree"), std::runtime_error);
  CHECK_THROWS_AS(parse_problem("and()"), std::runtime_error);
}

TEST_CASE("presets expand to expressions") {
  CHECK(*preset_problem("3col") ==
        parse_problem("vertpart(edgeless,edgeless,edgeless)"));
  CHECK(*preset_problem("two-trees") == parse_problem("vertpart(tree,tree)"));
  CHECK(*preset_problem("vc=0") == parse_problem("vertpart(atmost(0),edgeless)"));
  CHECK(*preset_problem("vc=7") == parse_problem("vertpart(atmost(7),edgeless)"));
  CHECK(*preset_problem("arb=1") == parse_problem("forest"));
  CHECK(*preset_problem("arb=3") ==
        parse_problem("edgepart(forest,forest,forest)"));
  CHECK_FALSE(preset_problem("nope").has_value());
  CHECK_FALSE(preset_problem("").has_value());
  CHECK_THROWS_AS(preset_problem("vc=x"), std::runtime_error);
  CHECK_THROWS_AS(preset_problem("vc=-1"), std::runtime_error);
  CHECK_THROWS_AS(preset_problem("arb=0"), std::runtime_error);
}

TEST_CASE("built cores report the canonical problem name") {
  for (const std::string text : {
           "any",
           "atmost(2)",
           "and(forest,atmost(2))",
           "or(tree,edgeless)",
           "vertpart(edgeless,edgeless)",
           "edgepart(forest,forest)",
           "graphpart(4;tree,edgeless)",
       }) {
    CHECK(build_core(parse_problem(text))->name() == text);
  }
}
