#ifndef TDSOLVE_DECOMP_HPP
#define TDSOLVE_DECOMP_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "tdsolve/graph.hpp"

namespace tdsolve {

// Rooted tree decomposition. Nodes are indexed 0..node_count()-1; the tree
// shape (single root, one parent per non-root node, acyclic) is enforced at
// construction, while the decomposition axioms relative to a graph are
// checked separately by validate().
//
// Normal form used by the solver: empty root bag, at most two children per
// node, and |Y_t| <= |X_t| + 1 where Y_t is the bag of t joined with its
// children's bags.
class RootedTreeDecomposition {
 public:
  // children[t] lists t's children in order; bags[t] is X_t (deduplicated,
  // stored ascending). Throws std::invalid_argument on a malformed tree.
  RootedTreeDecomposition(int root, std::vector<std::vector<int>> children,
                          std::vector<std::vector<int>> bags);

  int node_count() const { return static_cast<int>(bags_.size()); }
  int root() const { return root_; }
  int parent(int t) const { return parents_[t]; }  // -1 for the root
  const std::vector<int>& children(int t) const { return children_[t]; }
  const std::vector<int>& bag(int t) const { return bags_[t]; }

  // Y_t = X_t union the bags of t's children (cached at construction).
  const std::vector<int>& joint_bag(int t) const { return joint_bags_[t]; }

  // Z_t = union of bags over t's whole subtree. Computed on demand: caching
  // every Z_t up front costs Theta(sum |Z_t|) time and memory, which is
  // quadratic on path-like decompositions.
  std::vector<int> subtree_bag(int t) const;

  // max |X_t| - 1 (so -1 for a decomposition whose bags are all empty).
  int width() const { return width_; }

  bool is_normalized() const { return normalized_; }

  // Children-before-parents order, deterministic.
  const std::vector<int>& postorder() const { return postorder_; }

 private:
  int root_;
  std::vector<std::vector<int>> children_;
  std::vector<std::vector<int>> bags_;
  std::vector<std::vector<int>> joint_bags_;
  std::vector<int> parents_;
  std::vector<int> postorder_;
  int width_ = -1;
  bool normalized_ = false;
};

// Checks the three decomposition axioms of D against G:
//   (T1) every vertex of G occurs in some bag,
//   (T2) every edge of G is contained in some bag,
//   (T3) the nodes whose bags contain a given vertex form a subtree.
// Also flags bag vertices that are not vertices of G. Returns a list of
// human-readable violations; empty means valid.
std::vector<std::string> validate(const Graph& g,
                                  const RootedTreeDecomposition& d);

// Parses the PACE .td format (`s td <#bags> <width+1> <n>`, `b <id> <v...>`
// bag lines, then bag-tree edge lines), roots the tree at the lowest-id bag
// node and validates the result against g. Throws std::runtime_error on
// malformed input or axiom violations.
RootedTreeDecomposition parse_td(std::istream& in, const Graph& g);
RootedTreeDecomposition parse_td(const std::string& text, const Graph& g);

// Writes D in .td format. n is taken from g.
std::string serialize_td(const RootedTreeDecomposition& d, const Graph& g);

enum class EliminationStrategy { MinFill, MinDegree };

// Builds a valid decomposition from an elimination ordering. Deterministic:
// ties are broken by lowest vertex id. The empty graph yields a single empty
// bag.
RootedTreeDecomposition heuristic_decomposition(const Graph& g,
                                                EliminationStrategy strategy);

// Rewrites D into the normal form (empty root bag, <= 2 children,
// |Y_t| <= |X_t|+1) without increasing the width. D must be valid for g.
// Adjacent bags related by containment are contracted first, then each
// remaining tree edge is replaced by a chain that forgets and introduces one
// vertex at a time, and joins duplicate the bag; the node count is
// O(width * |V(g)| + nodes(D)).
RootedTreeDecomposition normalize(const Graph& g,
                                  const RootedTreeDecomposition& d);

// D[S]: same tree and root, every bag intersected with S. A decomposition of
// the induced subgraph on S whenever D is one of g.
RootedTreeDecomposition restrict_to(const RootedTreeDecomposition& d,
                                    const std::vector<int>& s);

}  // namespace tdsolve

#endif
