#ifndef TDSOLVE_BASE_CORES_HPP
#define TDSOLVE_BASE_CORES_HPP

#include <memory>

#include "tdsolve/core.hpp"

namespace tdsolve {

// Every graph.
std::unique_ptr<DynamicCore> any_core();

// Graphs with no edges.
std::unique_ptr<DynamicCore> edgeless_core();

// Graphs with at most p vertices. States are running counts of forgotten
// vertices; counts beyond p are dropped since they can only grow.
std::unique_ptr<DynamicCore> bounded_size_core(int p);

// Acyclic graphs. States track the partition of the bag into connected
// pieces of the already-processed subgraph, plus how many pieces were
// completed and forgotten entirely.
std::unique_ptr<DynamicCore> forest_core();

// Connected acyclic graphs with at least one vertex. The empty graph does
// not qualify. Same states as the forest core, with hopeless states (two
// finished pieces, or a finished piece next to live ones) dropped.
std::unique_ptr<DynamicCore> tree_core();

}  // namespace tdsolve

#endif
