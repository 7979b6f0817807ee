#ifndef TDSOLVE_ORACLE_HPP
#define TDSOLVE_ORACLE_HPP

#include "tdsolve/graph.hpp"
#include "tdsolve/problem.hpp"

namespace tdsolve {

// Direct recognizers written from the definitions. They share nothing with
// the solver beyond the Graph type, so they can serve as a reference.
bool is_edgeless(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);  // connected, acyclic, at least one vertex
bool has_at_most(const Graph& g, int p);

// Enumeration ceilings for the brute-force partition search below. A
// partition operator over n vertices (or m edges) tries every assignment,
// so the caller must keep instances small or raise these consciously.
struct OracleBounds {
  int max_partition_vertices = 10;
  int max_partition_edges = 14;
};

// Decides membership by exhaustive search. Throws std::runtime_error if a
// partition enumeration would exceed the bounds.
bool oracle_satisfies(const ProblemExpr& e, const Graph& g,
                      const OracleBounds& bounds = {});

}  // namespace tdsolve

#endif
