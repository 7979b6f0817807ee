#include "tdsolve/decomp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tdsolve {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<int> set_union(const std::vector<int>& a,
                           const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

RootedTreeDecomposition::RootedTreeDecomposition(
    int root, std::vector<std::vector<int>> children,
    std::vector<std::vector<int>> bags)
    : root_(root), children_(std::move(children)), bags_(std::move(bags)) {
  const int n = static_cast<int>(bags_.size());
  if (n == 0) throw std::invalid_argument("decomposition needs >= 1 node");
  if (children_.size() != bags_.size()) {
    throw std::invalid_argument("children/bags size mismatch");
  }
  if (root_ < 0 || root_ >= n) throw std::invalid_argument("root out of range");

  for (auto& b : bags_) b = sorted_unique(std::move(b));

  parents_.assign(n, -1);
  for (int t = 0; t < n; ++t) {
    for (int c : children_[t]) {
      if (c < 0 || c >= n) throw std::invalid_argument("child id out of range");
      if (c == root_) throw std::invalid_argument("root listed as a child");
      if (parents_[c] != -1) {
        throw std::invalid_argument("node " + std::to_string(c) +
                                    " has two parents");
      }
      parents_[c] = t;
    }
  }
  for (int t = 0; t < n; ++t) {
    if (t != root_ && parents_[t] == -1) {
      throw std::invalid_argument("node " + std::to_string(t) +
                                  " unreachable from root");
    }
  }
  // Reachability doubles as the cycle check: n nodes, n-1 child links, all
  // with unique parents, so reaching everything from the root means a tree.
  postorder_.reserve(n);
  std::vector<std::pair<int, std::size_t>> stack{{root_, 0}};
  while (!stack.empty()) {
    auto& [t, next] = stack.back();
    if (next < children_[t].size()) {
      int c = children_[t][next++];
      stack.push_back({c, 0});
    } else {
      postorder_.push_back(t);
      stack.pop_back();
    }
  }
  if (static_cast<int>(postorder_.size()) != n) {
    throw std::invalid_argument("decomposition tree is not connected");
  }

  joint_bags_.resize(n);
  for (int t = 0; t < n; ++t) {
    std::vector<int> y = bags_[t];
    for (int c : children_[t]) y = set_union(y, bags_[c]);
    joint_bags_[t] = std::move(y);
    width_ = std::max(width_, static_cast<int>(bags_[t].size()) - 1);
  }

  normalized_ = bags_[root_].empty();
  for (int t = 0; t < n && normalized_; ++t) {
    if (children_[t].size() > 2 ||
        joint_bags_[t].size() > bags_[t].size() + 1) {
      normalized_ = false;
    }
  }
}

std::vector<int> RootedTreeDecomposition::subtree_bag(int t) const {
  std::set<int> acc;
  std::vector<int> stack{t};
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    acc.insert(bags_[s].begin(), bags_[s].end());
    for (int c : children_[s]) stack.push_back(c);
  }
  return std::vector<int>(acc.begin(), acc.end());
}

std::vector<std::string> validate(const Graph& g,
                                  const RootedTreeDecomposition& d) {
  std::vector<std::string> violations;
  const int n = d.node_count();

  std::set<int> covered;
  for (int t = 0; t < n; ++t) {
    for (int v : d.bag(t)) {
      if (!g.has_vertex(v)) {
        violations.push_back("bag of node " + std::to_string(t) +
                             " contains unknown vertex " + std::to_string(v));
      }
      covered.insert(v);
    }
  }
  for (int v : g.vertices()) {
    if (!covered.count(v)) {
      violations.push_back("(T1) vertex " + std::to_string(v) +
                           " appears in no bag");
    }
  }
  std::map<int, std::vector<int>> nodes_of;
  for (int t = 0; t < n; ++t) {
    for (int v : d.bag(t)) nodes_of[v].push_back(t);
  }
  for (const auto& e : g.edges()) {
    bool found = false;
    auto it = nodes_of.find(e.first);
    if (it != nodes_of.end()) {
      for (int t : it->second) {
        const auto& bag = d.bag(t);
        if (std::binary_search(bag.begin(), bag.end(), e.second)) {
          found = true;
          break;
        }
      }
    }
    if (!found) {
      violations.push_back("(T2) edge {" + std::to_string(e.first) + "," +
                           std::to_string(e.second) +
                           "} is contained in no bag");
    }
  }
  // (T3): for each vertex, its nodes must induce one connected subtree.
  for (const auto& [v, nodes] : nodes_of) {
    std::set<int> in_set(nodes.begin(), nodes.end());
    // count nodes in the set whose parent is also in the set
    int linked = 0;
    for (int t : nodes) {
      int p = d.parent(t);
      if (p >= 0 && in_set.count(p)) ++linked;
    }
    // a connected subtree on k nodes has exactly k-1 internal parent links
    if (linked != static_cast<int>(nodes.size()) - 1) {
      violations.push_back("(T3) bags containing vertex " + std::to_string(v) +
                           " do not form a connected subtree");
    }
  }
  return violations;
}

namespace {

[[noreturn]] void td_error(int line_no, const std::string& what) {
  throw std::runtime_error(".td parse error at line " +
                           std::to_string(line_no) + ": " + what);
}

}  // namespace

RootedTreeDecomposition parse_td(std::istream& in, const Graph& g) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int num_bags = 0, max_bag = 0, n = 0;
  std::map<int, std::vector<int>> bag_by_id;
  std::vector<std::pair<int, int>> tree_edges;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c") continue;
    if (first == "s") {
      if (have_header) td_error(line_no, "duplicate header");
      std::string kind;
      if (!(ls >> kind >> num_bags >> max_bag >> n) || kind != "td" ||
          num_bags < 1) {
        td_error(line_no, "expected `s td <#bags> <width+1> <n>`");
      }
      have_header = true;
      continue;
    }
    if (!have_header) td_error(line_no, "content before `s td` header");
    if (first == "b") {
      int id = 0;
      if (!(ls >> id) || id < 1 || id > num_bags) {
        td_error(line_no, "bad bag id");
      }
      if (bag_by_id.count(id)) td_error(line_no, "duplicate bag id");
      std::vector<int> verts;
      int v;
      while (ls >> v) verts.push_back(v);
      bag_by_id[id] = std::move(verts);
      continue;
    }
    // bag-tree edge line
    int a = 0, b = 0;
    std::istringstream es(line);
    if (!(es >> a >> b)) td_error(line_no, "expected bag edge `<a> <b>`");
    if (a < 1 || a > num_bags || b < 1 || b > num_bags || a == b) {
      td_error(line_no, "bag edge endpoint out of range");
    }
    tree_edges.emplace_back(a, b);
  }
  if (!have_header) throw std::runtime_error(".td parse error: missing `s td` header");

  std::vector<std::vector<int>> bags(num_bags);
  for (auto& [id, verts] : bag_by_id) bags[id - 1] = std::move(verts);
  for (const auto& bag : bags) {
    for (int v : bag) {
      if (!g.has_vertex(v)) {
        throw std::runtime_error(".td parse error: bag references vertex " +
                                 std::to_string(v) + " not in the graph");
      }
    }
  }

  if (static_cast<int>(tree_edges.size()) != num_bags - 1) {
    throw std::runtime_error(
        ".td parse error: bag-edge set is not a tree (expected " +
        std::to_string(num_bags - 1) + " edges, got " +
        std::to_string(tree_edges.size()) + ")");
  }

  // Root at bag node 1 (lowest id) and orient by BFS.
  std::vector<std::vector<int>> adj(num_bags);
  for (auto [a, b] : tree_edges) {
    adj[a - 1].push_back(b - 1);
    adj[b - 1].push_back(a - 1);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  std::vector<std::vector<int>> children(num_bags);
  std::vector<char> seen(num_bags, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int t = queue[i];
    for (int c : adj[t]) {
      if (seen[c]) continue;
      seen[c] = 1;
      children[t].push_back(c);
      queue.push_back(c);
    }
  }
  if (static_cast<int>(queue.size()) != num_bags) {
    throw std::runtime_error(".td parse error: bag-edge set is not a tree (disconnected)");
  }

  RootedTreeDecomposition d(0, std::move(children), std::move(bags));
  auto violations = validate(g, d);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << ".td validation failed:";
    for (const auto& v : violations) msg << "\n  " << v;
    throw std::runtime_error(msg.str());
  }
  return d;
}

RootedTreeDecomposition parse_td(const std::string& text, const Graph& g) {
  std::istringstream in(text);
  return parse_td(in, g);
}

std::string serialize_td(const RootedTreeDecomposition& d, const Graph& g) {
  // Bag ids are assigned in preorder so that parsing the output keeps the
  // same root (parse_td roots at bag 1).
  std::vector<int> id(d.node_count(), 0);
  std::vector<int> order;
  order.reserve(d.node_count());
  std::vector<int> stack = {d.root()};
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    id[t] = static_cast<int>(order.size()) + 1;
    order.push_back(t);
    const auto& kids = d.children(t);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }

  std::ostringstream out;
  out << "s td " << d.node_count() << " " << d.width() + 1 << " "
      << g.vertex_count() << "\n";
  for (int t : order) {
    out << "b " << id[t];
    for (int v : d.bag(t)) out << " " << v;
    out << "\n";
  }
  for (int t : order) {
    if (d.parent(t) >= 0) out << id[d.parent(t)] << " " << id[t] << "\n";
  }
  return out.str();
}

RootedTreeDecomposition heuristic_decomposition(const Graph& g,
                                                EliminationStrategy strategy) {
  const auto& verts = g.vertices();
  const int n = g.vertex_count();
  if (n == 0) {
    return RootedTreeDecomposition(0, {{}}, {{}});
  }

  // Working adjacency over live vertices, plus a (score, id) selection set.
  std::map<int, std::set<int>> adj;
  for (int v : verts) adj[v];
  for (const auto& e : g.edges()) {
    adj[e.first].insert(e.second);
    adj[e.second].insert(e.first);
  }

  auto score = [&](int v) -> long long {
    const auto& nb = adj[v];
    if (strategy == EliminationStrategy::MinDegree) {
      return static_cast<long long>(nb.size());
    }
    long long fill = 0;
    for (auto it = nb.begin(); it != nb.end(); ++it) {
      auto jt = it;
      for (++jt; jt != nb.end(); ++jt) {
        if (!adj[*it].count(*jt)) ++fill;
      }
    }
    return fill;
  };

  std::set<std::pair<long long, int>> order_set;
  std::map<int, long long> current;
  for (int v : verts) {
    long long s = score(v);
    current[v] = s;
    order_set.insert({s, v});
  }

  std::vector<int> elim_order;
  std::vector<std::vector<int>> elim_bags;
  std::vector<char> was_isolated;

  for (int step = 0; step < n; ++step) {
    int v = order_set.begin()->second;
    order_set.erase(order_set.begin());
    current.erase(v);

    std::vector<int> nb(adj[v].begin(), adj[v].end());
    std::vector<int> bag = nb;
    bag.push_back(v);

    // Complete the neighborhood into a clique, then drop v.
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        adj[nb[i]].insert(nb[j]);
        adj[nb[j]].insert(nb[i]);
      }
    }
    for (int u : nb) adj[u].erase(v);
    adj.erase(v);

    // Rescore the vertices whose fill or degree can have changed.
    std::set<int> affected(nb.begin(), nb.end());
    if (strategy == EliminationStrategy::MinFill) {
      for (int u : nb) {
        for (int w : adj[u]) affected.insert(w);
      }
    }
    for (int u : affected) {
      auto it = current.find(u);
      if (it == current.end()) continue;
      long long s = score(u);
      if (s != it->second) {
        order_set.erase({it->second, u});
        order_set.insert({s, u});
        it->second = s;
      }
    }

    elim_order.push_back(v);
    elim_bags.push_back(sorted_unique(std::move(bag)));
    was_isolated.push_back(nb.empty());
  }

  // Parent of bag k: the bag of the first-eliminated vertex among v_k's
  // neighborhood at elimination time; isolated vertices chain to the next
  // bag in elimination order. The last bag is the root.
  std::map<int, int> position;
  for (int k = 0; k < n; ++k) position[elim_order[k]] = k;

  std::vector<std::vector<int>> children(n);
  for (int k = 0; k < n - 1; ++k) {
    int parent_pos;
    if (was_isolated[k]) {
      parent_pos = k + 1;
    } else {
      parent_pos = n;
      for (int u : elim_bags[k]) {
        if (u == elim_order[k]) continue;
        parent_pos = std::min(parent_pos, position[u]);
      }
    }
    children[parent_pos].push_back(k);
  }
  return RootedTreeDecomposition(n - 1, std::move(children),
                                 std::move(elim_bags));
}

namespace {

// Incremental builder for the normalized tree.
struct TreeBuilder {
  std::vector<std::vector<int>> children;
  std::vector<std::vector<int>> bags;

  int add(std::vector<int> bag, std::vector<int> kids) {
    int id = static_cast<int>(bags.size());
    bags.push_back(std::move(bag));
    children.push_back(std::move(kids));
    return id;
  }

  // Extends `node` (whose bag is `from`) upward to bag `to`, one vertex per
  // step: forget what leaves, then introduce what enters.
  int chain(int node, const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> cur = from;
    for (int v : from) {
      if (std::binary_search(to.begin(), to.end(), v)) continue;
      cur.erase(std::find(cur.begin(), cur.end(), v));
      node = add(cur, {node});
    }
    for (int v : to) {
      if (std::binary_search(from.begin(), from.end(), v)) continue;
      cur.insert(std::lower_bound(cur.begin(), cur.end(), v), v);
      node = add(cur, {node});
    }
    return node;
  }
};

}  // namespace

RootedTreeDecomposition normalize(const Graph& g,
                                  const RootedTreeDecomposition& d) {
  {
    auto violations = validate(g, d);
    if (!violations.empty()) {
      throw std::invalid_argument("normalize: input decomposition invalid: " +
                                  violations.front());
    }
  }

  // Contract tree edges whose bags are related by containment, so chains are
  // only paid for where bags genuinely differ.
  const int n = d.node_count();
  std::vector<std::vector<int>> bags(n);
  std::vector<std::vector<int>> kids(n);
  std::vector<int> parent(n);
  std::vector<char> alive(n, 1);
  for (int t = 0; t < n; ++t) {
    bags[t] = d.bag(t);
    kids[t] = d.children(t);
    parent[t] = d.parent(t);
  }
  int root = d.root();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int t = 0; t < n; ++t) {
      if (!alive[t] || t == root) continue;
      int p = parent[t];
      bool child_in_parent = is_subset(bags[t], bags[p]);
      bool parent_in_child = is_subset(bags[p], bags[t]);
      if (!child_in_parent && !parent_in_child) continue;
      if (parent_in_child && !child_in_parent) bags[p] = bags[t];
      // Merge t into p.
      auto& pk = kids[p];
      pk.erase(std::find(pk.begin(), pk.end(), t));
      for (int c : kids[t]) {
        pk.push_back(c);
        parent[c] = p;
      }
      kids[t].clear();
      alive[t] = 0;
      changed = true;
    }
  }

  TreeBuilder out;
  // Bottom-up construction over the contracted tree: returns the id of a
  // built node whose bag equals bags[t].
  std::vector<int> built(n, -1);
  std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
  while (!stack.empty()) {
    auto& [t, next] = stack.back();
    if (next < kids[t].size()) {
      int c = kids[t][next++];
      stack.push_back({c, 0});
      continue;
    }
    std::vector<int> tops;
    for (int c : kids[t]) {
      tops.push_back(out.chain(built[c], bags[c], bags[t]));
    }
    int node;
    if (tops.empty()) {
      node = out.add(bags[t], {});
    } else if (tops.size() == 1) {
      node = tops[0];
    } else {
      node = tops[0];
      for (std::size_t i = 1; i < tops.size(); ++i) {
        node = out.add(bags[t], {node, tops[i]});
      }
    }
    built[t] = node;
    stack.pop_back();
  }

  int top = out.chain(built[root], bags[root], {});
  return RootedTreeDecomposition(top, std::move(out.children),
                                 std::move(out.bags));
}

RootedTreeDecomposition restrict_to(const RootedTreeDecomposition& d,
                                    const std::vector<int>& s) {
  std::vector<int> keep = sorted_unique(s);
  std::vector<std::vector<int>> bags(d.node_count());
  std::vector<std::vector<int>> children(d.node_count());
  for (int t = 0; t < d.node_count(); ++t) {
    children[t] = d.children(t);
    std::set_intersection(d.bag(t).begin(), d.bag(t).end(), keep.begin(),
                          keep.end(), std::back_inserter(bags[t]));
  }
  return RootedTreeDecomposition(d.root(), std::move(children),
                                 std::move(bags));
}

}  // namespace tdsolve
