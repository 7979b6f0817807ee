#ifndef TDSOLVE_GRAPH_HPP
#define TDSOLVE_GRAPH_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace tdsolve {

// Undirected edge stored as (min,max).
using Edge = std::pair<int, int>;

// Canonicalizes endpoint order. Throws std::invalid_argument on a self-loop.
Edge make_edge(int u, int v);

// Immutable simple graph over arbitrary non-negative vertex ids.
// Vertices and edges are kept sorted ascending, so iteration order is
// deterministic and two graphs compare equal iff they are the same graph.
class Graph {
 public:
  Graph() = default;

  // Sorts and deduplicates both sets. Throws std::invalid_argument if an
  // edge endpoint is missing from `vertices` or an edge is a self-loop.
  Graph(std::vector<int> vertices, std::vector<Edge> edges);

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return vertices_.empty(); }

  bool has_vertex(int v) const;
  bool has_edge(int u, int v) const;
  bool has_edge(const Edge& e) const { return has_edge(e.first, e.second); }

  // Neighbors of v in ascending order. v must be a vertex.
  std::vector<int> neighbors(int v) const;

  // G[S] for S a vertex set: vertices S, edges with both endpoints in S.
  // Throws std::invalid_argument if S is not a subset of V(G).
  Graph induced_subgraph(const std::vector<int>& s) const;

  // G[F] for F an edge set: all vertices of G kept, edges restricted to F.
  // Throws std::invalid_argument if F is not a subset of E(G).
  Graph edge_subgraph(const std::vector<Edge>& f) const;

  // Every edge with one endpoint in s1 and the other in s2, each edge once.
  std::vector<Edge> edges_between(const std::vector<int>& s1,
                                  const std::vector<int>& s2) const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<int> vertices_;
  std::vector<Edge> edges_;
};

// Result of reading a PACE-style .gr file. Repeated edge lines are legal in
// the wild; they are deduplicated and counted here so callers can warn.
struct GrParseResult {
  Graph graph;
  int declared_vertices = 0;
  int declared_edges = 0;
  int duplicate_edges = 0;
};

// Parses the PACE .gr format: optional `c` comment lines, one `p tw <n> <m>`
// header, then one `<u> <v>` line per edge with 1 <= u,v <= n.
// Throws std::runtime_error naming the offending line on malformed input.
GrParseResult parse_gr(std::istream& in);
GrParseResult parse_gr(const std::string& text);

// Writes the graph back in .gr form. The vertex set must be exactly {1..n}
// (the only graphs the format can represent); otherwise throws.
std::string serialize_gr(const Graph& g);

}  // namespace tdsolve

#endif
