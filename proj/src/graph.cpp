#include "tdsolve/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tdsolve {

Edge make_edge(int u, int v) {
  if (u == v) {
    throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  }
  return u < v ? Edge{u, v} : Edge{v, u};
}

Graph::Graph(std::vector<int> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()),
                  vertices_.end());
  for (auto& e : edges_) {
    e = make_edge(e.first, e.second);
    if (!has_vertex(e.first) || !has_vertex(e.second)) {
      throw std::invalid_argument("edge {" + std::to_string(e.first) + "," +
                                  std::to_string(e.second) +
                                  "} has an endpoint outside the vertex set");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Graph::has_vertex(int v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  Edge e = u < v ? Edge{u, v} : Edge{v, u};
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (const auto& e : edges_) {
    if (e.first == v) out.push_back(e.second);
    if (e.second == v) out.push_back(e.first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph Graph::induced_subgraph(const std::vector<int>& s) const {
  std::vector<int> verts(s);
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (int v : verts) {
    if (!has_vertex(v)) {
      throw std::invalid_argument("induced_subgraph: vertex " +
                                  std::to_string(v) + " not in graph");
    }
  }
  std::vector<Edge> kept;
  for (const auto& e : edges_) {
    if (std::binary_search(verts.begin(), verts.end(), e.first) &&
        std::binary_search(verts.begin(), verts.end(), e.second)) {
      kept.push_back(e);
    }
  }
  return Graph(std::move(verts), std::move(kept));
}

Graph Graph::edge_subgraph(const std::vector<Edge>& f) const {
  std::vector<Edge> kept;
  kept.reserve(f.size());
  for (const auto& raw : f) {
    Edge e = make_edge(raw.first, raw.second);
    if (!std::binary_search(edges_.begin(), edges_.end(), e)) {
      throw std::invalid_argument("edge_subgraph: edge {" +
                                  std::to_string(e.first) + "," +
                                  std::to_string(e.second) + "} not in graph");
    }
    kept.push_back(e);
  }
  return Graph(vertices_, std::move(kept));
}

std::vector<Edge> Graph::edges_between(const std::vector<int>& s1,
                                       const std::vector<int>& s2) const {
  std::vector<int> a(s1), b(s2);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (int v : a) {
    if (!has_vertex(v)) {
      throw std::invalid_argument("edges_between: vertex " +
                                  std::to_string(v) + " not in graph");
    }
  }
  for (int v : b) {
    if (!has_vertex(v)) {
      throw std::invalid_argument("edges_between: vertex " +
                                  std::to_string(v) + " not in graph");
    }
  }
  auto in = [](const std::vector<int>& set, int v) {
    return std::binary_search(set.begin(), set.end(), v);
  };
  std::vector<Edge> out;
  for (const auto& e : edges_) {
    if ((in(a, e.first) && in(b, e.second)) ||
        (in(b, e.first) && in(a, e.second))) {
      out.push_back(e);
    }
  }
  return out;
}

namespace {

[[noreturn]] void gr_error(int line_no, const std::string& what) {
  throw std::runtime_error(".gr parse error at line " +
                           std::to_string(line_no) + ": " + what);
}

}  // namespace

GrParseResult parse_gr(std::istream& in) {
  GrParseResult result;
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int n = 0, m = 0;
  std::vector<Edge> edges;
  int duplicates = 0;
  std::vector<Edge> seen;  // sorted for dedup

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank line
    if (first == "c") continue;
    if (first == "p") {
      if (have_header) gr_error(line_no, "duplicate header");
      std::string kind;
      if (!(ls >> kind >> n >> m) || kind != "tw" || n < 0 || m < 0) {
        gr_error(line_no, "expected `p tw <n> <m>`");
      }
      have_header = true;
      continue;
    }
    if (!have_header) gr_error(line_no, "edge line before `p tw` header");
    int u = 0, v = 0;
    std::istringstream es(line);
    std::string trailing;
    if (!(es >> u >> v)) gr_error(line_no, "expected `<u> <v>`");
    if (es >> trailing) gr_error(line_no, "trailing tokens after edge");
    if (u < 1 || u > n || v < 1 || v > n) {
      gr_error(line_no, "endpoint out of range [1," + std::to_string(n) + "]");
    }
    if (u == v) gr_error(line_no, "self-loop at vertex " + std::to_string(u));
    Edge e = make_edge(u, v);
    auto pos = std::lower_bound(seen.begin(), seen.end(), e);
    if (pos != seen.end() && *pos == e) {
      ++duplicates;
    } else {
      seen.insert(pos, e);
      edges.push_back(e);
    }
  }
  if (!have_header) throw std::runtime_error(".gr parse error: missing `p tw` header");
  if (static_cast<int>(edges.size()) + duplicates != m) {
    throw std::runtime_error(".gr parse error: header declares " +
                             std::to_string(m) + " edges, file lists " +
                             std::to_string(edges.size() + duplicates));
  }

  std::vector<int> verts(n);
  for (int i = 0; i < n; ++i) verts[i] = i + 1;
  result.graph = Graph(std::move(verts), std::move(edges));
  result.declared_vertices = n;
  result.declared_edges = m;
  result.duplicate_edges = duplicates;
  return result;
}

GrParseResult parse_gr(const std::string& text) {
  std::istringstream in(text);
  return parse_gr(in);
}

std::string serialize_gr(const Graph& g) {
  int n = g.vertex_count();
  for (int i = 0; i < n; ++i) {
    if (g.vertices()[i] != i + 1) {
      throw std::invalid_argument(
          "serialize_gr: vertex set must be {1.." + std::to_string(n) + "}");
    }
  }
  std::ostringstream out;
  out << "p tw " << n << " " << g.edge_count() << "\n";
  for (const auto& e : g.edges()) {
    out << e.first << " " << e.second << "\n";
  }
  return out.str();
}

}  // namespace tdsolve
