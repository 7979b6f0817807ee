#include "tdsolve/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tdsolve {

namespace {

// Components and cycle detection in one pass.
struct Scan {
  int components = 0;
  bool acyclic = true;
};

Scan scan_graph(const Graph& g) {
  std::map<int, int> comp;
  for (int v : g.vertices()) comp[v] = v;
  auto find = [&](int v) {
    while (comp[v] != v) {
      comp[v] = comp[comp[v]];
      v = comp[v];
    }
    return v;
  };
  Scan s;
  for (const auto& e : g.edges()) {
    int a = find(e.first), b = find(e.second);
    if (a == b) {
      s.acyclic = false;
    } else {
      comp[a] = b;
    }
  }
  std::map<int, bool> roots;
  for (int v : g.vertices()) roots[find(v)] = true;
  s.components = static_cast<int>(roots.size());
  return s;
}

}  // namespace

bool is_edgeless(const Graph& g) { return g.edge_count() == 0; }

bool is_forest(const Graph& g) { return scan_graph(g).acyclic; }

bool is_tree(const Graph& g) {
  if (g.vertex_count() < 1) return false;
  Scan s = scan_graph(g);
  return s.acyclic && s.components == 1;
}

bool has_at_most(const Graph& g, int p) { return g.vertex_count() <= p; }

namespace {

// Runs fn for every way of assigning `count` slots to `ways` values.
// Returns true as soon as fn does.
template <class Fn>
bool any_assignment(std::size_t count, std::size_t ways, Fn&& fn) {
  std::vector<int> choice(count, 0);
  while (true) {
    if (fn(choice)) return true;
    std::size_t pos = 0;
    while (pos < count && ++choice[pos] == static_cast<int>(ways)) {
      choice[pos] = 0;
      ++pos;
    }
    if (pos == count) return false;
  }
}

bool vertex_partition_ok(const ProblemExpr& e, const Graph& g,
                         const OracleBounds& bounds, bool budgeted) {
  const auto& verts = g.vertices();
  if (static_cast<int>(verts.size()) > bounds.max_partition_vertices) {
    throw std::runtime_error(
        "oracle refuses: vertex partition search over " +
        std::to_string(verts.size()) + " vertices exceeds the bound of " +
        std::to_string(bounds.max_partition_vertices));
  }
  const std::size_t k = e.args.size();
  return any_assignment(verts.size(), k, [&](const std::vector<int>& choice) {
    if (budgeted) {
      std::map<int, int> part;
      for (std::size_t i = 0; i < verts.size(); ++i) part[verts[i]] = choice[i];
      int crossing = 0;
      for (const auto& edge : g.edges()) {
        if (part[edge.first] != part[edge.second]) ++crossing;
      }
      if (crossing > e.number) return false;
    }
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<int> side;
      for (std::size_t v = 0; v < verts.size(); ++v) {
        if (choice[v] == static_cast<int>(i)) side.push_back(verts[v]);
      }
      if (!oracle_satisfies(e.args[i], g.induced_subgraph(side), bounds)) {
        return false;
      }
    }
    return true;
  });
}

bool edge_partition_ok(const ProblemExpr& e, const Graph& g,
                       const OracleBounds& bounds) {
  const auto& edges = g.edges();
  if (static_cast<int>(edges.size()) > bounds.max_partition_edges) {
    throw std::runtime_error(
        "oracle refuses: edge partition search over " +
        std::to_string(edges.size()) + " edges exceeds the bound of " +
        std::to_string(bounds.max_partition_edges));
  }
  const std::size_t k = e.args.size();
  return any_assignment(edges.size(), k, [&](const std::vector<int>& choice) {
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Edge> side;
      for (std::size_t m = 0; m < edges.size(); ++m) {
        if (choice[m] == static_cast<int>(i)) side.push_back(edges[m]);
      }
      if (!oracle_satisfies(e.args[i], g.edge_subgraph(side), bounds)) {
        return false;
      }
    }
    return true;
  });
}

}  // namespace

bool oracle_satisfies(const ProblemExpr& e, const Graph& g,
                      const OracleBounds& bounds) {
  switch (e.op) {
    case ProblemExpr::Op::Any:
      return true;
    case ProblemExpr::Op::Edgeless:
      return is_edgeless(g);
    case ProblemExpr::Op::AtMost:
      return has_at_most(g, e.number);
    case ProblemExpr::Op::Forest:
      return is_forest(g);
    case ProblemExpr::Op::Tree:
      return is_tree(g);
    case ProblemExpr::Op::And:
      for (const auto& a : e.args) {
        if (!oracle_satisfies(a, g, bounds)) return false;
      }
      return true;
    case ProblemExpr::Op::Or:
      for (const auto& a : e.args) {
        if (oracle_satisfies(a, g, bounds)) return true;
      }
      return false;
    case ProblemExpr::Op::VertPart:
      return vertex_partition_ok(e, g, bounds, false);
    case ProblemExpr::Op::GraphPart:
      return vertex_partition_ok(e, g, bounds, true);
    case ProblemExpr::Op::EdgePart:
      return edge_partition_ok(e, g, bounds);
  }
  throw std::logic_error("oracle_satisfies: bad op");
}

}  // namespace tdsolve
