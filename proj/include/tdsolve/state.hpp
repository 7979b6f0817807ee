#ifndef TDSOLVE_STATE_HPP
#define TDSOLVE_STATE_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "tdsolve/graph.hpp"

namespace tdsolve {

// Canonical recursive term representing one per-node word of a dynamic core.
//
// Variants:
//   Top                     -- the single letter of trivial cores
//   Bot                     -- the dead-coordinate letter of union cores
//   Count(q)                -- a non-negative counter
//   Blocks(partition, c)    -- disjoint nonempty vertex blocks plus a count
//                              of components already completed
//   Tuple(items)            -- fixed-arity product of states
//   Assigned(inner, part)   -- a state paired with the vertex (or edge) set
//                              it is responsible for in the current bag
//
// States are always stored canonically: vertex sets ascending, blocks sorted
// by minimum element, edge sets ascending. Structural equality therefore
// coincides with equality of the canonical serialization.
class State {
 public:
  enum class Kind : unsigned char { Top, Bot, Count, Blocks, Tuple, Assigned };

  State() : kind_(Kind::Top) {}

  static State top() { return State(); }
  static State bot();
  static State count(int q);
  static State blocks(std::vector<std::vector<int>> partition, int closed);
  static State tuple(std::vector<State> items);
  static State assigned(State inner, std::vector<int> vertex_part);
  static State assigned(State inner, std::vector<Edge> edge_part);

  Kind kind() const { return kind_; }
  bool is(Kind k) const { return kind_ == k; }

  // Count value, or the closed-component count of a Blocks state.
  int count_value() const { return number_; }
  int closed_count() const { return number_; }

  const std::vector<std::vector<int>>& block_partition() const {
    return blocks_;
  }
  const std::vector<State>& items() const { return items_; }

  // Assigned accessors. items().front() holds the inner state.
  const State& inner() const { return items_.front(); }
  bool holds_edges() const { return edge_mode_; }
  const std::vector<int>& part_vertices() const { return part_vertices_; }
  const std::vector<Edge>& part_edges() const { return part_edges_; }

  std::string to_string() const;

  friend std::strong_ordering compare(const State& a, const State& b);
  bool operator==(const State& other) const {
    return compare(*this, other) == std::strong_ordering::equal;
  }
  bool operator!=(const State& other) const { return !(*this == other); }
  bool operator<(const State& other) const {
    return compare(*this, other) == std::strong_ordering::less;
  }

 private:
  Kind kind_;
  int number_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<State> items_;
  std::vector<int> part_vertices_;
  std::vector<Edge> part_edges_;
  bool edge_mode_ = false;
};

std::strong_ordering compare(const State& a, const State& b);

// Deduplicated collection of states in canonical ascending order.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::vector<State> states);

  // Returns true if the state was not present yet.
  bool insert(State s);
  bool contains(const State& s) const;

  std::size_t size() const { return states_.size(); }
  bool empty() const { return states_.empty(); }
  const State& operator[](std::size_t i) const { return states_[i]; }

  std::vector<State>::const_iterator begin() const { return states_.begin(); }
  std::vector<State>::const_iterator end() const { return states_.end(); }

  bool operator==(const StateSet&) const = default;

 private:
  std::vector<State> states_;  // sorted, unique
};

}  // namespace tdsolve

#endif
