#include "tdsolve/base_cores.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tdsolve {

namespace {

class UnionFind {
 public:
  explicit UnionFind(const std::vector<int>& elems) {
    for (int e : elems) parent_.emplace(e, e);
  }
  void add(int e) { parent_.emplace(e, e); }
  int find(int e) {
    int r = e;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[e] != r) {
      int nxt = parent_[e];
      parent_[e] = r;
      e = nxt;
    }
    return r;
  }
  // false if both were already in the same set
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }
  std::map<int, std::vector<int>> groups() {
    std::map<int, std::vector<int>> out;
    for (const auto& [e, p] : parent_) out[find(e)].push_back(e);
    return out;
  }

 private:
  std::map<int, int> parent_;
};

bool is_top(const State& s) { return s.is(State::Kind::Top); }

class AnyCore final : public DynamicCore {
 public:
  std::string name() const override { return "any"; }
  StateSet process_leaf(const Graph&) const override {
    return StateSet(std::vector<State>{State::top()});
  }
  std::vector<StepTransition> process_one(
      const Graph&, const Graph&, const StateSet& child_states) const override {
    std::vector<StepTransition> out;
    for (const auto& c : child_states) {
      if (is_top(c)) out.push_back({State::top(), c});
    }
    return out;
  }
  std::vector<JoinTransition> process_two(
      const Graph&, const Graph&, const StateSet& left_states, const Graph&,
      const StateSet& right_states) const override {
    std::vector<JoinTransition> out;
    for (const auto& l : left_states) {
      if (!is_top(l)) continue;
      for (const auto& r : right_states) {
        if (is_top(r)) out.push_back({State::top(), l, r});
      }
    }
    return out;
  }
  bool accepts(const Graph&, const State& s) const override {
    return is_top(s);
  }
};

class EdgelessCore final : public DynamicCore {
 public:
  std::string name() const override { return "edgeless"; }
  StateSet process_leaf(const Graph& bag) const override {
    if (bag.edge_count() > 0) return StateSet();
    return StateSet(std::vector<State>{State::top()});
  }
  std::vector<StepTransition> process_one(
      const Graph& bag, const Graph&,
      const StateSet& child_states) const override {
    std::vector<StepTransition> out;
    if (bag.edge_count() > 0) return out;
    for (const auto& c : child_states) {
      if (is_top(c)) out.push_back({State::top(), c});
    }
    return out;
  }
  std::vector<JoinTransition> process_two(
      const Graph& bag, const Graph&, const StateSet& left_states,
      const Graph&, const StateSet& right_states) const override {
    std::vector<JoinTransition> out;
    if (bag.edge_count() > 0) return out;
    for (const auto& l : left_states) {
      if (!is_top(l)) continue;
      for (const auto& r : right_states) {
        if (is_top(r)) out.push_back({State::top(), l, r});
      }
    }
    return out;
  }
  bool accepts(const Graph& bag, const State& s) const override {
    return bag.edge_count() == 0 && is_top(s);
  }
};

class BoundedSizeCore final : public DynamicCore {
 public:
  explicit BoundedSizeCore(int p) : p_(p) {
    if (p < 0) throw std::invalid_argument("atmost: bound must be >= 0");
  }
  std::string name() const override {
    return "atmost(" + std::to_string(p_) + ")";
  }
  StateSet process_leaf(const Graph&) const override {
    return StateSet(std::vector<State>{State::count(0)});
  }
  std::vector<StepTransition> process_one(
      const Graph& bag, const Graph& child_bag,
      const StateSet& child_states) const override {
    std::vector<StepTransition> out;
    const int gone = static_cast<int>(forgotten_vertices(bag, child_bag).size());
    for (const auto& c : child_states) {
      if (!c.is(State::Kind::Count) || c.count_value() > p_) continue;
      int q = c.count_value() + gone;
      if (q <= p_) out.push_back({State::count(q), c});
    }
    return out;
  }
  std::vector<JoinTransition> process_two(
      const Graph& bag, const Graph& left_bag, const StateSet& left_states,
      const Graph& right_bag, const StateSet& right_states) const override {
    std::vector<JoinTransition> out;
    std::vector<int> both = left_bag.vertices();
    both.insert(both.end(), right_bag.vertices().begin(),
                right_bag.vertices().end());
    std::sort(both.begin(), both.end());
    both.erase(std::unique(both.begin(), both.end()), both.end());
    int gone = 0;
    for (int v : both) {
      if (!bag.has_vertex(v)) ++gone;
    }
    for (const auto& l : left_states) {
      if (!l.is(State::Kind::Count) || l.count_value() > p_) continue;
      for (const auto& r : right_states) {
        if (!r.is(State::Kind::Count) || r.count_value() > p_) continue;
        int q = l.count_value() + r.count_value() + gone;
        if (q <= p_) out.push_back({State::count(q), l, r});
      }
    }
    return out;
  }
  bool accepts(const Graph& bag, const State& s) const override {
    return s.is(State::Kind::Count) &&
           s.count_value() + bag.vertex_count() <= p_;
  }

 private:
  int p_;
};

bool blocks_shape_ok(const State& s, const Graph& bag) {
  if (!s.is(State::Kind::Blocks)) return false;
  std::vector<int> all;
  for (const auto& b : s.block_partition()) {
    all.insert(all.end(), b.begin(), b.end());
  }
  std::sort(all.begin(), all.end());
  return all == bag.vertices();
}

struct ForestResult {
  bool cyclic = false;
  State state;
};

ForestResult forest_step(const Graph& bag, const Graph& child_bag,
                         const State& child) {
  UnionFind uf(child_bag.vertices());
  for (const auto& block : child.block_partition()) {
    for (std::size_t i = 1; i < block.size(); ++i) {
      uf.unite(block[0], block[i]);
    }
  }
  for (const auto& e : owned_edges(bag, child_bag)) {
    if (!uf.unite(e.first, e.second)) return {true, State()};
  }
  int closed = child.closed_count();
  std::vector<std::vector<int>> blocks;
  for (const auto& [root, members] : uf.groups()) {
    std::vector<int> kept;
    for (int v : members) {
      if (bag.has_vertex(v)) kept.push_back(v);
    }
    if (kept.empty()) {
      ++closed;
    } else {
      blocks.push_back(std::move(kept));
    }
  }
  for (int v : bag.vertices()) {
    if (!child_bag.has_vertex(v)) blocks.push_back({v});
  }
  return {false, State::blocks(std::move(blocks), closed)};
}

ForestResult forest_join(const Graph& bag, const Graph& left_bag,
                         const State& left, const Graph& right_bag,
                         const State& right) {
  UnionFind uf(left_bag.vertices());
  for (int v : right_bag.vertices()) uf.add(v);
  for (const auto& block : left.block_partition()) {
    for (std::size_t i = 1; i < block.size(); ++i) {
      uf.unite(block[0], block[i]);
    }
  }
  // Two vertices already linked through the left side that share a right
  // block close a cycle, as does any owned edge inside a linked pair.
  for (const auto& block : right.block_partition()) {
    for (std::size_t i = 1; i < block.size(); ++i) {
      if (!uf.unite(block[0], block[i])) return {true, State()};
    }
  }
  for (const auto& e : owned_edges(bag, left_bag)) {
    if (!uf.unite(e.first, e.second)) return {true, State()};
  }
  for (const auto& e : owned_edges(bag, right_bag)) {
    if (!uf.unite(e.first, e.second)) return {true, State()};
  }
  int closed = left.closed_count() + right.closed_count();
  std::vector<std::vector<int>> blocks;
  for (const auto& [root, members] : uf.groups()) {
    std::vector<int> kept;
    for (int v : members) {
      if (bag.has_vertex(v)) kept.push_back(v);
    }
    if (kept.empty()) {
      ++closed;
    } else {
      blocks.push_back(std::move(kept));
    }
  }
  for (int v : bag.vertices()) {
    if (!left_bag.has_vertex(v) && !right_bag.has_vertex(v)) {
      blocks.push_back({v});
    }
  }
  return {false, State::blocks(std::move(blocks), closed)};
}

State leaf_blocks(const Graph& bag) {
  std::vector<std::vector<int>> blocks;
  for (int v : bag.vertices()) blocks.push_back({v});
  return State::blocks(std::move(blocks), 0);
}

// Runs the still-unprocessed bag edges through the blocks. Returns false on
// a cycle; otherwise stores the final number of connected pieces.
bool settle_bag_edges(const Graph& bag, const State& s, int* pieces) {
  UnionFind uf(bag.vertices());
  for (const auto& block : s.block_partition()) {
    for (std::size_t i = 1; i < block.size(); ++i) {
      uf.unite(block[0], block[i]);
    }
  }
  for (const auto& e : bag.edges()) {
    if (!uf.unite(e.first, e.second)) return false;
  }
  *pieces = static_cast<int>(uf.groups().size()) + s.closed_count();
  return true;
}

class ForestCore final : public DynamicCore {
 public:
  std::string name() const override { return "forest"; }
  StateSet process_leaf(const Graph& bag) const override {
    return StateSet(std::vector<State>{leaf_blocks(bag)});
  }
  std::vector<StepTransition> process_one(
      const Graph& bag, const Graph& child_bag,
      const StateSet& child_states) const override {
    std::vector<StepTransition> out;
    for (const auto& c : child_states) {
      if (!blocks_shape_ok(c, child_bag)) continue;
      auto res = forest_step(bag, child_bag, c);
      if (!res.cyclic) out.push_back({res.state, c});
    }
    return out;
  }
  std::vector<JoinTransition> process_two(
      const Graph& bag, const Graph& left_bag, const StateSet& left_states,
      const Graph& right_bag, const StateSet& right_states) const override {
    std::vector<JoinTransition> out;
    for (const auto& l : left_states) {
      if (!blocks_shape_ok(l, left_bag)) continue;
      for (const auto& r : right_states) {
        if (!blocks_shape_ok(r, right_bag)) continue;
        auto res = forest_join(bag, left_bag, l, right_bag, r);
        if (!res.cyclic) out.push_back({res.state, l, r});
      }
    }
    return out;
  }
  bool accepts(const Graph& bag, const State& s) const override {
    if (!blocks_shape_ok(s, bag)) return false;
    int pieces = 0;
    return settle_bag_edges(bag, s, &pieces);
  }
};

// A finished piece next to anything else can never reconnect, so such
// states are dropped from the state space.
bool tree_viable(const State& s) {
  int closed = s.closed_count();
  if (closed == 0) return true;
  return closed == 1 && s.block_partition().empty();
}

class TreeCore final : public DynamicCore {
 public:
  std::string name() const override { return "tree"; }
  StateSet process_leaf(const Graph& bag) const override {
    return StateSet(std::vector<State>{leaf_blocks(bag)});
  }
  std::vector<StepTransition> process_one(
      const Graph& bag, const Graph& child_bag,
      const StateSet& child_states) const override {
    std::vector<StepTransition> out;
    for (const auto& c : child_states) {
      if (!blocks_shape_ok(c, child_bag) || !tree_viable(c)) continue;
      auto res = forest_step(bag, child_bag, c);
      if (!res.cyclic && tree_viable(res.state)) {
        out.push_back({res.state, c});
      }
    }
    return out;
  }
  std::vector<JoinTransition> process_two(
      const Graph& bag, const Graph& left_bag, const StateSet& left_states,
      const Graph& right_bag, const StateSet& right_states) const override {
    std::vector<JoinTransition> out;
    for (const auto& l : left_states) {
      if (!blocks_shape_ok(l, left_bag) || !tree_viable(l)) continue;
      for (const auto& r : right_states) {
        if (!blocks_shape_ok(r, right_bag) || !tree_viable(r)) continue;
        auto res = forest_join(bag, left_bag, l, right_bag, r);
        if (!res.cyclic && tree_viable(res.state)) {
          out.push_back({res.state, l, r});
        }
      }
    }
    return out;
  }
  bool accepts(const Graph& bag, const State& s) const override {
    if (!blocks_shape_ok(s, bag) || !tree_viable(s)) return false;
    int pieces = 0;
    if (!settle_bag_edges(bag, s, &pieces)) return false;
    return pieces == 1;
  }
};

}  // namespace

std::unique_ptr<DynamicCore> any_core() { return std::make_unique<AnyCore>(); }

std::unique_ptr<DynamicCore> edgeless_core() {
  return std::make_unique<EdgelessCore>();
}

std::unique_ptr<DynamicCore> bounded_size_core(int p) {
  return std::make_unique<BoundedSizeCore>(p);
}

std::unique_ptr<DynamicCore> forest_core() {
  return std::make_unique<ForestCore>();
}

std::unique_ptr<DynamicCore> tree_core() {
  return std::make_unique<TreeCore>();
}

}  // namespace tdsolve
