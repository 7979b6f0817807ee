#ifndef TDSOLVE_CORE_HPP
#define TDSOLVE_CORE_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tdsolve/decomp.hpp"
#include "tdsolve/graph.hpp"
#include "tdsolve/state.hpp"

namespace tdsolve {

struct StepTransition {
  State state;
  State child;
};

struct JoinTransition {
  State state;
  State left;
  State right;
};

// Vertices leaving at this tree edge: V(child_bag) \ V(bag).
std::vector<int> forgotten_vertices(const Graph& bag, const Graph& child_bag);

// Edges whose processing is due at this tree edge: E(child_bag) \ E(bag).
// With an empty root bag, every graph edge is owned by exactly one tree edge
// (it disappears exactly once, when its lower endpoint is forgotten).
std::vector<Edge> owned_edges(const Graph& bag, const Graph& child_bag);

// A problem family expressed as local transition rules over bag graphs.
// The solver runs these bottom-up over a normalized tree decomposition;
// the input graph is in the family iff some accepted state survives at the
// (empty-bag) root.
class DynamicCore {
 public:
  virtual ~DynamicCore() = default;

  virtual std::string name() const = 0;

  virtual StateSet process_leaf(const Graph& bag) const = 0;

  // Emits exactly the transition pairs whose child component lies in
  // `child_states`. Implementations must not invent pairs that would be
  // absent with a larger child set; the default check_* functions and the
  // witness machinery rely on that.
  virtual std::vector<StepTransition> process_one(
      const Graph& bag, const Graph& child_bag,
      const StateSet& child_states) const = 0;

  virtual std::vector<JoinTransition> process_two(
      const Graph& bag, const Graph& left_bag, const StateSet& left_states,
      const Graph& right_bag, const StateSet& right_states) const = 0;

  virtual bool accepts(const Graph& bag, const State& s) const = 0;

  // Membership tests for single transitions, used to audit witnesses.
  // Defaults re-run the process functions with singleton child sets.
  virtual bool check_leaf(const Graph& bag, const State& s) const;
  virtual bool check_one(const Graph& bag, const Graph& child_bag,
                         const State& s, const State& child) const;
  virtual bool check_two(const Graph& bag, const Graph& left_bag,
                         const Graph& right_bag, const State& s,
                         const State& left, const State& right) const;
};

// One feasible state per node of the decomposition the solver ran on,
// consistent along every tree edge and accepted at the root.
struct Witness {
  std::vector<State> states;
};

struct NodeStats {
  std::size_t states = 0;
  std::size_t transitions = 0;
  double elapsed_ms = 0.0;
};

struct RunStats {
  int nodes = 0;
  int width = -1;
  std::size_t max_states = 0;
  std::size_t total_states = 0;
  std::size_t total_transitions = 0;
  double elapsed_ms = 0.0;
  std::vector<NodeStats> per_node;
};

struct RunOptions {
  bool want_witness = false;
  int parallel = 1;
};

struct Verdict {
  bool yes = false;
  std::optional<Witness> witness;
  RunStats stats;
  // The normalized decomposition the tables were computed on; witness
  // states are indexed by its node ids.
  std::shared_ptr<const RootedTreeDecomposition> decomposition;
};

// Runs the core over the given decomposition (normalizing it first if
// needed) or over a min-fill heuristic decomposition.
Verdict run(const DynamicCore& core, const Graph& g,
            const RootedTreeDecomposition& d, const RunOptions& opts = {});
Verdict run(const DynamicCore& core, const Graph& g,
            const RunOptions& opts = {});

// The state table the solver computes at `node`. Requires a normalized
// decomposition that is valid for g.
StateSet feasible_states(const DynamicCore& core, const Graph& g,
                         const RootedTreeDecomposition& d, int node);

// Replays a witness through the core's transition relation.
bool check_witness(const DynamicCore& core, const Graph& g,
                   const RootedTreeDecomposition& d, const Witness& w);

}  // namespace tdsolve

#endif
