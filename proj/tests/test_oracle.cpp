#include <stdexcept>

#include "doctest.h"
#include "support.hpp"
#include "tdsolve/oracle.hpp"

using namespace tdsolve;
using namespace tdtest;

TEST_CASE("recognizers on known graphs") {
  CHECK(is_edgeless(Graph()));
  CHECK(is_edgeless(Graph({1, 2, 3}, {})));
  CHECK_FALSE(is_edgeless(path_graph(2)));

  CHECK(is_forest(Graph()));
  CHECK(is_forest(path_graph(6)));
  CHECK(is_forest(two_triangles().edge_subgraph(
      {make_edge(1, 2), make_edge(4, 5)})));
  CHECK_FALSE(is_forest(cycle_graph(3)));
  CHECK_FALSE(is_forest(grid2(2)));

  CHECK_FALSE(is_tree(Graph()));
  CHECK(is_tree(Graph({5}, {})));
  CHECK(is_tree(path_graph(4)));
  CHECK_FALSE(is_tree(Graph({1, 2}, {})));
  CHECK_FALSE(is_tree(cycle_graph(4)));

  CHECK(has_at_most(Graph(), 0));
  CHECK_FALSE(has_at_most(path_graph(3), 2));
  CHECK(has_at_most(path_graph(3), 3));
}

TEST_CASE("oracle on composed expressions") {
  CHECK(oracle_satisfies(parse_problem("and(forest,atmost(3))"),
                         path_graph(3)));
  CHECK_FALSE(oracle_satisfies(parse_problem("and(forest,atmost(2))"),
                               path_graph(3)));
  CHECK(oracle_satisfies(parse_problem("or(edgeless,tree)"), path_graph(3)));
  CHECK(oracle_satisfies(parse_problem("vertpart(edgeless,edgeless)"),
                         cycle_graph(4)));
  CHECK_FALSE(oracle_satisfies(parse_problem("vertpart(edgeless,edgeless)"),
                               cycle_graph(5)));
  CHECK(oracle_satisfies(parse_problem("vertpart(edgeless,edgeless,edgeless)"),
                         cycle_graph(5)));
  CHECK_FALSE(oracle_satisfies(parse_problem("edgepart(forest,forest)"),
                               complete_graph(5)));
  CHECK(oracle_satisfies(parse_problem("graphpart(2;edgeless,edgeless)"),
                         path_graph(3)));
  CHECK_FALSE(oracle_satisfies(parse_problem("graphpart(1;edgeless,edgeless)"),
                               path_graph(3)));
}

TEST_CASE("oracle refuses oversized partition enumerations") {
  Graph big = path_graph(11);
  CHECK_THROWS_WITH_AS(
      oracle_satisfies(parse_problem("vertpart(edgeless,edgeless)"), big),
      doctest::Contains("oracle refuses"), std::runtime_error);
  OracleBounds wide;
  wide.max_partition_vertices = 11;
  CHECK(oracle_satisfies(parse_problem("vertpart(edgeless,edgeless)"), big,
                         wide));

  Graph dense = complete_graph(6);  // 15 edges, default edge bound is 14
  CHECK_THROWS_WITH_AS(
      oracle_satisfies(parse_problem("edgepart(forest,forest)"), dense),
      doctest::Contains("oracle refuses"), std::runtime_error);
  OracleBounds wider;
  wider.max_partition_edges = 15;
  CHECK_FALSE(oracle_satisfies(parse_problem("edgepart(forest,forest)"),
                               dense, wider));

  // Non-partition operators never enumerate, so no bound applies.
  CHECK(oracle_satisfies(parse_problem("forest"), path_graph(50)));
}

TEST_CASE("oracle bounds apply to nested partitions") {
  // The outer vertex partition fits the bound; parts stay small, so inner
  // partition checks stay within bounds too.
  Graph g = path_graph(8);
  CHECK(oracle_satisfies(
      parse_problem("vertpart(vertpart(edgeless,edgeless),edgeless)"), g));
}
