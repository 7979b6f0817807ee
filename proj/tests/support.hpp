#ifndef TDSOLVE_TESTS_SUPPORT_HPP
#define TDSOLVE_TESTS_SUPPORT_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tdsolve/combinators.hpp"
#include "tdsolve/core.hpp"
#include "tdsolve/decomp.hpp"
#include "tdsolve/graph.hpp"
#include "tdsolve/oracle.hpp"
#include "tdsolve/problem.hpp"

namespace tdtest {

using namespace tdsolve;

// All randomness in the tests goes through raw mt19937 draws so that every
// platform and standard library sees the same graphs.
inline bool chance(std::mt19937& gen, double p) {
  return static_cast<double>(gen()) < p * 4294967296.0;
}

inline int pick(std::mt19937& gen, int n) {
  return static_cast<int>(gen() % static_cast<std::uint32_t>(n));
}

inline Graph random_graph(std::mt19937& gen, int n, double p) {
  std::vector<int> vs(n);
  std::iota(vs.begin(), vs.end(), 1);
  std::vector<Edge> es;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (chance(gen, p)) es.push_back(make_edge(u, v));
  return Graph(vs, es);
}

// Every labeled graph on vertex set {1..n}.
inline std::vector<Graph> all_graphs(int n) {
  std::vector<int> vs(n);
  std::iota(vs.begin(), vs.end(), 1);
  std::vector<Edge> pairs;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) pairs.push_back(make_edge(u, v));
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask) {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) es.push_back(pairs[i]);
    out.emplace_back(vs, es);
  }
  return out;
}

inline std::vector<Graph> all_graphs_up_to(int n) {
  std::vector<Graph> out;
  for (int k = 0; k <= n; ++k) {
    auto gs = all_graphs(k);
    out.insert(out.end(), gs.begin(), gs.end());
  }
  return out;
}

inline Graph path_graph(int n) {
  std::vector<int> vs(n);
  std::iota(vs.begin(), vs.end(), 1);
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v) es.push_back(make_edge(v, v + 1));
  return Graph(vs, es);
}

inline Graph cycle_graph(int n) {
  std::vector<int> vs(n);
  std::iota(vs.begin(), vs.end(), 1);
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v) es.push_back(make_edge(v, v + 1));
  if (n >= 3) es.push_back(make_edge(1, n));
  return Graph(vs, es);
}

inline Graph complete_graph(int n) {
  std::vector<int> vs(n);
  std::iota(vs.begin(), vs.end(), 1);
  std::vector<Edge> es;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) es.push_back(make_edge(u, v));
  return Graph(vs, es);
}

// 2 x k grid; vertex r*k + c + 1 for row r in {0,1}, column c in {0..k-1}.
inline Graph grid2(int k) {
  std::vector<int> vs(2 * k);
  std::iota(vs.begin(), vs.end(), 1);
  std::vector<Edge> es;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c + 1 < k; ++c)
      es.push_back(make_edge(r * k + c + 1, r * k + c + 2));
  for (int c = 0; c < k; ++c) es.push_back(make_edge(c + 1, k + c + 1));
  return Graph(vs, es);
}

inline Graph two_triangles() {
  return Graph({1, 2, 3, 4, 5, 6},
               {make_edge(1, 2), make_edge(1, 3), make_edge(2, 3),
                make_edge(4, 5), make_edge(4, 6), make_edge(5, 6)});
}

// The fixed problem battery used for the oracle-equivalence sweeps.
inline std::vector<ProblemExpr> battery() {
  std::vector<ProblemExpr> b;
  b.push_back(parse_problem("vertpart(edgeless,edgeless)"));
  b.push_back(parse_problem("vertpart(edgeless,edgeless,edgeless)"));
  b.push_back(parse_problem("vertpart(tree,tree)"));
  for (int k = 0; k <= 4; ++k) {
    b.push_back(parse_problem("vertpart(atmost(" + std::to_string(k) +
                              "),edgeless)"));
  }
  b.push_back(parse_problem("edgepart(forest,forest)"));
  for (int p = 0; p <= 4; ++p) {
    b.push_back(parse_problem("graphpart(" + std::to_string(p) +
                              ";edgeless,edgeless)"));
  }
  return b;
}

inline Verdict solve(const ProblemExpr& e, const Graph& g,
                     bool want_witness = false, int parallel = 1) {
  auto core = build_core(e);
  RunOptions opts;
  opts.want_witness = want_witness;
  opts.parallel = parallel;
  return run(*core, g, opts);
}

inline int brute_force_min_vertex_cover(const Graph& g) {
  const auto& vs = g.vertices();
  const int n = g.vertex_count();
  int best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool covers = true;
    for (const auto& [u, v] : g.edges()) {
      int iu = static_cast<int>(std::lower_bound(vs.begin(), vs.end(), u) -
                                vs.begin());
      int iv = static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) -
                                vs.begin());
      if (!(mask >> iu & 1) && !(mask >> iv & 1)) {
        covers = false;
        break;
      }
    }
    if (covers) best = std::min(best, std::popcount(mask));
  }
  return best;
}

// Full audit of a YES verdict: the witness must replay through the core's
// transition relation, and for partition problems the extracted partition
// must cover the graph consistently, put every part in its prescribed
// family (checked with the brute-force recognizers, not the solver), and
// for budgeted partitions have a crossing-edge count that matches the
// count carried in the root state. Returns an empty string when sound.
inline std::string audit_yes_verdict(const ProblemExpr& e, const Graph& g,
                                     const Verdict& v) {
  if (!v.yes) return "verdict is not yes";
  if (!v.witness) return "yes verdict without witness";
  if (!v.decomposition) return "yes verdict without decomposition";
  const auto& d = *v.decomposition;
  auto core = build_core(e);
  if (!check_witness(*core, g, d, *v.witness)) return "witness replay failed";

  const bool vert_kind =
      e.op == ProblemExpr::Op::VertPart || e.op == ProblemExpr::Op::GraphPart;
  const bool edge_kind = e.op == ProblemExpr::Op::EdgePart;
  if (!vert_kind && !edge_kind) return "";

  const int k = static_cast<int>(e.args.size());

  // Collect the per-node assignments directly so that a node contradicting
  // another node's choice is caught (extract_partition keeps the first).
  std::map<int, int> vpart;
  std::map<Edge, int> epart;
  for (int t = 0; t < d.node_count(); ++t) {
    const State& s = v.witness->states[t];
    if (!s.is(State::Kind::Tuple)) return "witness state is not a tuple";
    if (static_cast<int>(s.items().size()) < k) return "tuple arity too small";
    for (int i = 0; i < k; ++i) {
      const State& a = s.items()[i];
      if (!a.is(State::Kind::Assigned)) return "tuple item is not assigned";
      if (a.holds_edges()) {
        for (const Edge& ed : a.part_edges()) {
          auto [it, fresh] = epart.emplace(ed, i + 1);
          if (!fresh && it->second != i + 1) return "edge part contradiction";
        }
      } else {
        for (int u : a.part_vertices()) {
          auto [it, fresh] = vpart.emplace(u, i + 1);
          if (!fresh && it->second != i + 1) return "vertex part contradiction";
        }
      }
    }
  }

  auto ext = extract_partition(*v.witness, d);
  if (vert_kind) {
    if (ext.kind != PartitionKind::Vertices) return "extracted kind mismatch";
    if (ext.vertex_part != vpart) return "extract_partition disagrees";
    for (int u : g.vertices())
      if (!vpart.count(u)) return "vertex missing from partition";
    for (auto [u, part] : vpart) {
      if (!g.has_vertex(u)) return "partition maps unknown vertex";
      if (part < 1 || part > k) return "part index out of range";
    }
    for (int i = 0; i < k; ++i) {
      std::vector<int> side;
      for (auto [u, part] : vpart)
        if (part == i + 1) side.push_back(u);
      if (!oracle_satisfies(e.args[i], g.induced_subgraph(side)))
        return "part " + std::to_string(i + 1) + " fails its family";
    }
    if (e.op == ProblemExpr::Op::GraphPart) {
      int crossing = 0;
      for (const auto& [u, v2] : g.edges())
        if (vpart.at(u) != vpart.at(v2)) ++crossing;
      if (crossing > e.number) return "crossing count over budget";
      const State& root = v.witness->states[d.root()];
      const State& q = root.items().back();
      if (!q.is(State::Kind::Count)) return "root state carries no count";
      if (q.count_value() != crossing) return "root count != crossing count";
    }
  } else {
    if (ext.kind != PartitionKind::Edges) return "extracted kind mismatch";
    if (ext.edge_part != epart) return "extract_partition disagrees";
    for (const Edge& ed : g.edges())
      if (!epart.count(ed)) return "edge missing from partition";
    for (const auto& [ed, part] : epart) {
      if (!g.has_edge(ed.first, ed.second)) return "partition maps unknown edge";
      if (part < 1 || part > k) return "part index out of range";
    }
    for (int i = 0; i < k; ++i) {
      std::vector<Edge> side;
      for (const auto& [ed, part] : epart)
        if (part == i + 1) side.push_back(ed);
      if (!oracle_satisfies(e.args[i], g.edge_subgraph(side)))
        return "part " + std::to_string(i + 1) + " fails its family";
    }
  }
  return "";
}

}  // namespace tdtest

#endif
