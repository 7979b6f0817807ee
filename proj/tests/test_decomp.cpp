#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "support.hpp"
#include "tdsolve/decomp.hpp"

using namespace tdsolve;
using namespace tdtest;

namespace {

RootedTreeDecomposition path_decomp(int n) {
  // Bags {i,i+1} in a path of nodes, rooted at node 0.
  std::vector<std::vector<int>> children(n - 1), bags(n - 1);
  for (int t = 0; t + 1 < n - 1; ++t) children[t] = {t + 1};
  for (int t = 0; t < n - 1; ++t) bags[t] = {t + 1, t + 2};
  return RootedTreeDecomposition(0, std::move(children), std::move(bags));
}

bool any_violation_contains(const std::vector<std::string>& violations,
                            const std::string& needle) {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const std::string& v) {
                       return v.find(needle) != std::string::npos;
                     });
}

}  // namespace

TEST_CASE("constructor enforces tree shape") {
  CHECK_THROWS_AS(RootedTreeDecomposition(0, {{0}}, {{1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(RootedTreeDecomposition(0, {{1}, {0}}, {{1}, {2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(RootedTreeDecomposition(2, {{}}, {{1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(RootedTreeDecomposition(0, {{1}, {}, {}}, {{}, {}, {}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(RootedTreeDecomposition(0, {{1}, {1}}, {{}, {}}),
                  std::invalid_argument);
}

TEST_CASE("basic accessors") {
  RootedTreeDecomposition d(0, {{1, 2}, {}, {}}, {{1}, {1, 2}, {1, 3}});
  CHECK(d.node_count() == 3);
  CHECK(d.root() == 0);
  CHECK(d.parent(0) == -1);
  CHECK(d.parent(1) == 0);
  CHECK(d.children(0) == std::vector<int>{1, 2});
  CHECK(d.bag(1) == std::vector<int>{1, 2});
  CHECK(d.joint_bag(0) == std::vector<int>{1, 2, 3});
  CHECK(d.joint_bag(1) == std::vector<int>{1, 2});
  CHECK(d.subtree_bag(0) == std::vector<int>{1, 2, 3});
  CHECK(d.width() == 1);
  CHECK_FALSE(d.is_normalized());
  auto post = d.postorder();
  CHECK(post.size() == 3);
  CHECK(post.back() == 0);
}

TEST_CASE("bags are deduplicated and sorted") {
  RootedTreeDecomposition d(0, {{}}, {{3, 1, 3, 2}});
  CHECK(d.bag(0) == std::vector<int>{1, 2, 3});
}

TEST_CASE("validate accepts a correct decomposition") {
  Graph g = path_graph(5);
  CHECK(validate(g, path_decomp(5)).empty());
}

TEST_CASE("validate names each axiom violation") {
  Graph g = path_graph(3);

  RootedTreeDecomposition missing_vertex(0, {{}}, {{1, 2}});
  CHECK(any_violation_contains(validate(g, missing_vertex), "vertex 3"));

  RootedTreeDecomposition missing_edge(0, {{1}, {}}, {{1, 2}, {3}});
  CHECK(any_violation_contains(validate(g, missing_edge), "edge {2,3}"));

  RootedTreeDecomposition broken_subtree(0, {{1}, {2}, {}},
                                         {{1, 2}, {2, 3}, {1}});
  CHECK(any_violation_contains(validate(g, broken_subtree),
                               "connected subtree"));

  RootedTreeDecomposition alien(0, {{}}, {{1, 2, 3, 9}});
  CHECK(any_violation_contains(validate(g, alien), "vertex 9"));
}

TEST_CASE("parse_td reads the PACE format and roots at bag 1") {
  Graph g = path_graph(3);
  auto d = parse_td(
      "c comment\n"
      "s td 3 2 3\n"
      "b 1 2\n"
      "b 2 1 2\n"
      "b 3 2 3\n"
      "1 2\n"
      "1 3\n",
      g);
  CHECK(d.node_count() == 3);
  CHECK(d.root() == 0);
  CHECK(d.bag(0) == std::vector<int>{2});
  CHECK(d.children(0) == std::vector<int>{1, 2});
}

TEST_CASE("parse_td rejects malformed and invalid input") {
  Graph g = path_graph(3);
  CHECK_THROWS_WITH_AS(parse_td("b 1 1\n", g),
                       doctest::Contains("line 1"), std::runtime_error);
  CHECK_THROWS_AS(parse_td("s td 2 2 3\nb 1 1 2\nb 2 2 3\n", g),
                  std::runtime_error);  // bag tree disconnected
  CHECK_THROWS_AS(
      parse_td("s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n2 1\n", g),
      std::runtime_error);  // duplicate tree edge
  CHECK_THROWS_AS(parse_td("s td 1 4 3\nb 1 1 2 3 4\n", g),
                  std::runtime_error);  // bag vertex outside graph
  CHECK_THROWS_AS(parse_td("s td 1 2 3\nb 1 1 2\n", g),
                  std::runtime_error);  // vertex 3 uncovered
  CHECK_THROWS_AS(parse_td("s td 1 3 3\nb 5 1 2 3\n", g),
                  std::runtime_error);  // bag id out of range
}

TEST_CASE("serialize_td round-trips including the root") {
  Graph g = path_graph(6);
  auto d = normalize(g, path_decomp(6));
  auto back = parse_td(serialize_td(d, g), g);
  CHECK(back.node_count() == d.node_count());
  CHECK(back.bag(back.root()) == d.bag(d.root()));
  CHECK(back.is_normalized());
  CHECK(validate(g, back).empty());
  CHECK(back.width() == d.width());
}

TEST_CASE("heuristic decompositions are valid") {
  std::mt19937 gen(991);
  for (int n = 1; n <= 9; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      Graph g = random_graph(gen, n, 0.2 + 0.3 * (rep % 3));
      for (auto strat :
           {EliminationStrategy::MinFill, EliminationStrategy::MinDegree}) {
        auto d = heuristic_decomposition(g, strat);
        CHECK(validate(g, d).empty());
        CHECK(d.width() < n);
      }
    }
  }
}

TEST_CASE("heuristic decomposition of the empty graph") {
  auto d = heuristic_decomposition(Graph(), EliminationStrategy::MinFill);
  CHECK(d.node_count() == 1);
  CHECK(d.bag(0).empty());
  CHECK(validate(Graph(), d).empty());
}

TEST_CASE("min-fill is exact on trees and small grids") {
  auto tree = heuristic_decomposition(path_graph(8),
                                      EliminationStrategy::MinFill);
  CHECK(tree.width() == 1);
  auto grid = heuristic_decomposition(grid2(6), EliminationStrategy::MinFill);
  CHECK(grid.width() == 2);
}

TEST_CASE("normalize produces the normal form without widening") {
  std::mt19937 gen(4242);
  for (int rep = 0; rep < 40; ++rep) {
    int n = 1 + pick(gen, 9);
    Graph g = random_graph(gen, n, 0.2 + 0.3 * (rep % 3));
    auto d = heuristic_decomposition(g, EliminationStrategy::MinDegree);
    auto nd = normalize(g, d);
    CHECK(validate(g, nd).empty());
    CHECK(nd.is_normalized());
    CHECK(nd.bag(nd.root()).empty());
    CHECK(nd.width() <= d.width());
    for (int t = 0; t < nd.node_count(); ++t) {
      CHECK(nd.children(t).size() <= 2);
      CHECK(nd.joint_bag(t).size() <= nd.bag(t).size() + 1);
    }
    CHECK(nd.node_count() <= 2 * (d.width() + 2) * (n + d.node_count() + 1));
  }
}

TEST_CASE("normalize rejects an invalid decomposition") {
  Graph g = path_graph(3);
  RootedTreeDecomposition bad(0, {{}}, {{1, 2}});
  CHECK_THROWS_AS(normalize(g, bad), std::invalid_argument);
}

TEST_CASE("normalize keeps already normalized input usable") {
  Graph g = grid2(4);
  auto nd = normalize(g, heuristic_decomposition(g,
                                                 EliminationStrategy::MinFill));
  auto nd2 = normalize(g, nd);
  CHECK(nd2.is_normalized());
  CHECK(validate(g, nd2).empty());
  CHECK(nd2.width() == nd.width());
}

TEST_CASE("restrict_to intersects every bag") {
  Graph g = path_graph(5);
  auto d = path_decomp(5);
  auto r = restrict_to(d, {2, 3, 4});
  CHECK(r.node_count() == d.node_count());
  CHECK(r.bag(0) == std::vector<int>{2});
  CHECK(r.bag(1) == std::vector<int>{2, 3});
  CHECK(validate(g.induced_subgraph({2, 3, 4}), r).empty());
}

TEST_CASE("heuristic decompositions are deterministic") {
  std::mt19937 gen(71001);
  for (int rep = 0; rep < 15; ++rep) {
    Graph g = random_graph(gen, 1 + pick(gen, 8), 0.35);
    for (auto strat :
         {EliminationStrategy::MinFill, EliminationStrategy::MinDegree}) {
      auto a = heuristic_decomposition(g, strat);
      auto b = heuristic_decomposition(g, strat);
      CHECK(serialize_td(a, g) == serialize_td(b, g));
    }
  }
}

TEST_CASE("heuristic widths on known graphs") {
  CHECK(heuristic_decomposition(cycle_graph(4), EliminationStrategy::MinFill)
            .width() == 2);
  CHECK(heuristic_decomposition(complete_graph(4),
                                EliminationStrategy::MinFill)
            .width() == 3);
  Graph isolated({1, 2, 3, 4}, {});
  auto d = heuristic_decomposition(isolated, EliminationStrategy::MinFill);
  CHECK(d.width() == 0);
  CHECK(validate(isolated, d).empty());
}

TEST_CASE("restrict_to stays valid on every vertex subset") {
  for (const Graph& g : all_graphs(4)) {
    auto d = heuristic_decomposition(g, EliminationStrategy::MinFill);
    const auto& verts = g.vertices();
    for (int mask = 0; mask < 16; ++mask) {
      std::vector<int> s;
      for (int i = 0; i < 4; ++i)
        if (mask & (1 << i)) s.push_back(verts[i]);
      auto r = restrict_to(d, s);
      CAPTURE(serialize_gr(g));
      CAPTURE(mask);
      CHECK(validate(g.induced_subgraph(s), r).empty());
      for (int t = 0; t < d.node_count(); ++t) {
        for (int v : r.bag(t)) {
          CHECK(std::count(s.begin(), s.end(), v));
          CHECK(std::binary_search(d.bag(t).begin(), d.bag(t).end(), v));
        }
      }
    }
  }
}

TEST_CASE("restrict_to identity and empty set") {
  Graph g = grid2(3);
  auto d = heuristic_decomposition(g, EliminationStrategy::MinFill);
  auto full = restrict_to(d, g.vertices());
  REQUIRE(full.node_count() == d.node_count());
  for (int t = 0; t < d.node_count(); ++t) CHECK(full.bag(t) == d.bag(t));
  auto none = restrict_to(d, {});
  for (int t = 0; t < none.node_count(); ++t) CHECK(none.bag(t).empty());
}
