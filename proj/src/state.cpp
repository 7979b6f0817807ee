#include "tdsolve/state.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tdsolve {

State State::bot() {
  State s;
  s.kind_ = Kind::Bot;
  return s;
}

State State::count(int q) {
  if (q < 0) throw std::invalid_argument("State::count: negative counter");
  State s;
  s.kind_ = Kind::Count;
  s.number_ = q;
  return s;
}

State State::blocks(std::vector<std::vector<int>> partition, int closed) {
  if (closed < 0) throw std::invalid_argument("State::blocks: negative count");
  State s;
  s.kind_ = Kind::Blocks;
  s.number_ = closed;
  for (auto& block : partition) {
    if (block.empty()) {
      throw std::invalid_argument("State::blocks: empty block");
    }
    std::sort(block.begin(), block.end());
  }
  std::sort(partition.begin(), partition.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.front() < b.front();
            });
  s.blocks_ = std::move(partition);
  return s;
}

State State::tuple(std::vector<State> items) {
  State s;
  s.kind_ = Kind::Tuple;
  s.items_ = std::move(items);
  return s;
}

State State::assigned(State inner, std::vector<int> vertex_part) {
  State s;
  s.kind_ = Kind::Assigned;
  s.items_.push_back(std::move(inner));
  std::sort(vertex_part.begin(), vertex_part.end());
  s.part_vertices_ = std::move(vertex_part);
  s.edge_mode_ = false;
  return s;
}

State State::assigned(State inner, std::vector<Edge> edge_part) {
  State s;
  s.kind_ = Kind::Assigned;
  s.items_.push_back(std::move(inner));
  for (auto& e : edge_part) e = make_edge(e.first, e.second);
  std::sort(edge_part.begin(), edge_part.end());
  s.part_edges_ = std::move(edge_part);
  s.edge_mode_ = true;
  return s;
}

std::strong_ordering compare(const State& a, const State& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  switch (a.kind_) {
    case State::Kind::Top:
    case State::Kind::Bot:
      return std::strong_ordering::equal;
    case State::Kind::Count:
      return a.number_ <=> b.number_;
    case State::Kind::Blocks: {
      if (auto c = a.blocks_ <=> b.blocks_; c != 0) return c;
      return a.number_ <=> b.number_;
    }
    case State::Kind::Tuple: {
      if (auto c = a.items_.size() <=> b.items_.size(); c != 0) return c;
      for (std::size_t i = 0; i < a.items_.size(); ++i) {
        if (auto c = compare(a.items_[i], b.items_[i]); c != 0) return c;
      }
      return std::strong_ordering::equal;
    }
    case State::Kind::Assigned: {
      if (auto c = a.edge_mode_ <=> b.edge_mode_; c != 0) return c;
      if (a.edge_mode_) {
        if (auto c = a.part_edges_ <=> b.part_edges_; c != 0) return c;
      } else {
        if (auto c = a.part_vertices_ <=> b.part_vertices_; c != 0) return c;
      }
      return compare(a.items_.front(), b.items_.front());
    }
  }
  return std::strong_ordering::equal;
}

namespace {

void append(const State& s, std::ostringstream& out) {
  switch (s.kind()) {
    case State::Kind::Top:
      out << "T";
      return;
    case State::Kind::Bot:
      out << "_";
      return;
    case State::Kind::Count:
      out << "q" << s.count_value();
      return;
    case State::Kind::Blocks: {
      out << "B{";
      bool first_block = true;
      for (const auto& block : s.block_partition()) {
        if (!first_block) out << "|";
        first_block = false;
        bool first = true;
        for (int v : block) {
          if (!first) out << " ";
          first = false;
          out << v;
        }
      }
      out << "}+" << s.closed_count();
      return;
    }
    case State::Kind::Tuple: {
      out << "(";
      bool first = true;
      for (const auto& item : s.items()) {
        if (!first) out << ",";
        first = false;
        append(item, out);
      }
      out << ")";
      return;
    }
    case State::Kind::Assigned: {
      out << "[";
      append(s.inner(), out);
      out << "|{";
      bool first = true;
      if (s.holds_edges()) {
        for (const auto& e : s.part_edges()) {
          if (!first) out << " ";
          first = false;
          out << e.first << "-" << e.second;
        }
      } else {
        for (int v : s.part_vertices()) {
          if (!first) out << " ";
          first = false;
          out << v;
        }
      }
      out << "}]";
      return;
    }
  }
}

}  // namespace

std::string State::to_string() const {
  std::ostringstream out;
  append(*this, out);
  return out.str();
}

StateSet::StateSet(std::vector<State> states) : states_(std::move(states)) {
  std::sort(states_.begin(), states_.end());
  states_.erase(std::unique(states_.begin(), states_.end()), states_.end());
}

bool StateSet::insert(State s) {
  auto pos = std::lower_bound(states_.begin(), states_.end(), s);
  if (pos != states_.end() && *pos == s) return false;
  states_.insert(pos, std::move(s));
  return true;
}

bool StateSet::contains(const State& s) const {
  return std::binary_search(states_.begin(), states_.end(), s);
}

}  // namespace tdsolve
