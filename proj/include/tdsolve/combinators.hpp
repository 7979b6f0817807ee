#ifndef TDSOLVE_COMBINATORS_HPP
#define TDSOLVE_COMBINATORS_HPP

#include <map>
#include <memory>
#include <vector>

#include "tdsolve/core.hpp"

namespace tdsolve {

// Graphs belonging to every one of the given families. Needs at least one
// inner core.
std::unique_ptr<DynamicCore> intersection_core(
    std::vector<std::unique_ptr<DynamicCore>> parts);

// Graphs belonging to at least one of the given families. Needs at least
// one inner core.
std::unique_ptr<DynamicCore> union_core(
    std::vector<std::unique_ptr<DynamicCore>> parts);

// Graphs whose vertex set splits into parts (V1..Vk), possibly empty, with
// the subgraph induced by Vi in the i-th family. Needs at least two inner
// cores.
std::unique_ptr<DynamicCore> vertpart_core(
    std::vector<std::unique_ptr<DynamicCore>> parts);

// Graphs whose edge set splits into parts (E1..Ek) with the spanning
// subgraph (V, Ei) in the i-th family. Needs at least two inner cores.
std::unique_ptr<DynamicCore> edgepart_core(
    std::vector<std::unique_ptr<DynamicCore>> parts);

// Vertex partition as above, with additionally at most `budget` edges
// running between different parts. Each crossing edge is charged once, at
// the tree edge that owns it. Needs budget >= 0 and at least two inner
// cores.
std::unique_ptr<DynamicCore> graphpart_core(
    int budget, std::vector<std::unique_ptr<DynamicCore>> parts);

enum class PartitionKind { None, Vertices, Edges };

struct ExtractedPartition {
  PartitionKind kind = PartitionKind::None;
  std::map<int, int> vertex_part;  // vertex -> part index, 1-based
  std::map<Edge, int> edge_part;
};

// Reads the top-level partition out of a witness by collecting each node's
// assigned bag elements. Throws std::invalid_argument if the witness states
// carry no partition at the top level.
ExtractedPartition extract_partition(const Witness& w,
                                     const RootedTreeDecomposition& d);

}  // namespace tdsolve

#endif
