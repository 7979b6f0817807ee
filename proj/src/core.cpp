#include "tdsolve/core.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <stdexcept>

namespace tdsolve {

std::vector<int> forgotten_vertices(const Graph& bag, const Graph& child_bag) {
  std::vector<int> out;
  std::set_difference(child_bag.vertices().begin(), child_bag.vertices().end(),
                      bag.vertices().begin(), bag.vertices().end(),
                      std::back_inserter(out));
  return out;
}

std::vector<Edge> owned_edges(const Graph& bag, const Graph& child_bag) {
  std::vector<Edge> out;
  std::set_difference(child_bag.edges().begin(), child_bag.edges().end(),
                      bag.edges().begin(), bag.edges().end(),
                      std::back_inserter(out));
  return out;
}

bool DynamicCore::check_leaf(const Graph& bag, const State& s) const {
  return process_leaf(bag).contains(s);
}

bool DynamicCore::check_one(const Graph& bag, const Graph& child_bag,
                            const State& s, const State& child) const {
  StateSet only(std::vector<State>{child});
  for (const auto& tr : process_one(bag, child_bag, only)) {
    if (tr.state == s && tr.child == child) return true;
  }
  return false;
}

bool DynamicCore::check_two(const Graph& bag, const Graph& left_bag,
                            const Graph& right_bag, const State& s,
                            const State& left, const State& right) const {
  StateSet lonly(std::vector<State>{left});
  StateSet ronly(std::vector<State>{right});
  for (const auto& tr :
       process_two(bag, left_bag, lonly, right_bag, ronly)) {
    if (tr.state == s && tr.left == left && tr.right == right) return true;
  }
  return false;
}

namespace {

struct Support {
  State a;
  State b;  // meaningful only below join nodes
};

struct NodeWork {
  Graph bag_graph;
  StateSet table;
  std::map<State, Support> support;
  NodeStats stats;
};

void process_node(const DynamicCore& core, const RootedTreeDecomposition& dec,
                  std::vector<NodeWork>& work, int t, bool want_witness) {
  auto start = std::chrono::steady_clock::now();
  NodeWork& w = work[t];
  const auto& kids = dec.children(t);
  if (kids.empty()) {
    w.table = core.process_leaf(w.bag_graph);
    w.stats.transitions = w.table.size();
  } else if (kids.size() == 1) {
    const NodeWork& c = work[kids[0]];
    auto trs = core.process_one(w.bag_graph, c.bag_graph, c.table);
    w.stats.transitions = trs.size();
    if (want_witness) {
      for (const auto& tr : trs) {
        w.support.emplace(tr.state, Support{tr.child, State()});
      }
    }
    std::vector<State> states;
    states.reserve(trs.size());
    for (auto& tr : trs) states.push_back(std::move(tr.state));
    w.table = StateSet(std::move(states));
  } else {
    const NodeWork& l = work[kids[0]];
    const NodeWork& r = work[kids[1]];
    auto trs =
        core.process_two(w.bag_graph, l.bag_graph, l.table, r.bag_graph,
                         r.table);
    w.stats.transitions = trs.size();
    if (want_witness) {
      for (const auto& tr : trs) {
        w.support.emplace(tr.state, Support{tr.left, tr.right});
      }
    }
    std::vector<State> states;
    states.reserve(trs.size());
    for (auto& tr : trs) states.push_back(std::move(tr.state));
    w.table = StateSet(std::move(states));
  }
  w.stats.states = w.table.size();
  w.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                start)
          .count();
}

void compute_tables(const DynamicCore& core, const Graph& g,
                    const RootedTreeDecomposition& dec,
                    std::vector<NodeWork>& work, const RunOptions& opts) {
  const int n = dec.node_count();
  work.resize(n);
  for (int t = 0; t < n; ++t) {
    work[t].bag_graph = g.induced_subgraph(dec.bag(t));
  }
  if (opts.parallel <= 1) {
    for (int t : dec.postorder()) {
      process_node(core, dec, work, t, opts.want_witness);
    }
    return;
  }
  // Subtrees below a join are independent, so they may run concurrently.
  // Tables are value-deterministic, so the verdict cannot depend on the
  // schedule.
  std::atomic<int> permits{opts.parallel - 1};
  std::function<void(int)> solve = [&](int t) {
    const auto& kids = dec.children(t);
    if (kids.size() == 2) {
      if (permits.fetch_sub(1, std::memory_order_acq_rel) > 0) {
        auto fut = std::async(std::launch::async,
                              [&solve, c = kids[0]] { solve(c); });
        solve(kids[1]);
        fut.get();
        permits.fetch_add(1, std::memory_order_acq_rel);
      } else {
        permits.fetch_add(1, std::memory_order_acq_rel);
        solve(kids[0]);
        solve(kids[1]);
      }
    } else {
      for (int c : kids) solve(c);
    }
    process_node(core, dec, work, t, opts.want_witness);
  };
  solve(dec.root());
}

}  // namespace

Verdict run(const DynamicCore& core, const Graph& g,
            const RootedTreeDecomposition& d, const RunOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();

  std::shared_ptr<const RootedTreeDecomposition> nd;
  if (d.is_normalized()) {
    auto violations = validate(g, d);
    if (!violations.empty()) {
      throw std::invalid_argument("run: invalid decomposition: " +
                                  violations.front());
    }
    nd = std::make_shared<RootedTreeDecomposition>(d);
  } else {
    nd = std::make_shared<RootedTreeDecomposition>(normalize(g, d));
  }
  const RootedTreeDecomposition& dec = *nd;
  const int n = dec.node_count();

  std::vector<NodeWork> work;
  compute_tables(core, g, dec, work, opts);

  Verdict v;
  v.decomposition = nd;
  v.stats.nodes = n;
  v.stats.width = dec.width();
  v.stats.per_node.reserve(n);
  for (int t = 0; t < n; ++t) {
    v.stats.per_node.push_back(work[t].stats);
    v.stats.max_states = std::max(v.stats.max_states, work[t].stats.states);
    v.stats.total_states += work[t].stats.states;
    v.stats.total_transitions += work[t].stats.transitions;
  }

  const NodeWork& rootw = work[dec.root()];
  const State* chosen = nullptr;
  for (const auto& s : rootw.table) {
    if (core.accepts(rootw.bag_graph, s)) {
      chosen = &s;
      break;
    }
  }
  v.yes = chosen != nullptr;

  if (v.yes && opts.want_witness) {
    Witness wit;
    wit.states.assign(n, State());
    std::vector<std::pair<int, State>> stack{{dec.root(), *chosen}};
    while (!stack.empty()) {
      auto [t, s] = std::move(stack.back());
      stack.pop_back();
      wit.states[t] = s;
      const auto& kids = dec.children(t);
      if (kids.empty()) continue;
      const Support& sup = work[t].support.at(s);
      stack.push_back({kids[0], sup.a});
      if (kids.size() == 2) stack.push_back({kids[1], sup.b});
    }
    v.witness = std::move(wit);
  }

  v.stats.elapsed_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
  return v;
}

Verdict run(const DynamicCore& core, const Graph& g, const RunOptions& opts) {
  auto d = heuristic_decomposition(g, EliminationStrategy::MinFill);
  return run(core, g, d, opts);
}

StateSet feasible_states(const DynamicCore& core, const Graph& g,
                         const RootedTreeDecomposition& d, int node) {
  if (!d.is_normalized()) {
    throw std::invalid_argument(
        "feasible_states requires a normalized decomposition");
  }
  if (node < 0 || node >= d.node_count()) {
    throw std::invalid_argument("feasible_states: node out of range");
  }
  auto violations = validate(g, d);
  if (!violations.empty()) {
    throw std::invalid_argument("feasible_states: invalid decomposition: " +
                                violations.front());
  }
  std::vector<NodeWork> work;
  compute_tables(core, g, d, work, RunOptions{});
  return work[node].table;
}

bool check_witness(const DynamicCore& core, const Graph& g,
                   const RootedTreeDecomposition& d, const Witness& w) {
  if (static_cast<int>(w.states.size()) != d.node_count()) return false;
  std::vector<Graph> bag_graphs(d.node_count());
  for (int t = 0; t < d.node_count(); ++t) {
    bag_graphs[t] = g.induced_subgraph(d.bag(t));
  }
  for (int t = 0; t < d.node_count(); ++t) {
    const auto& kids = d.children(t);
    bool ok = false;
    if (kids.empty()) {
      ok = core.check_leaf(bag_graphs[t], w.states[t]);
    } else if (kids.size() == 1) {
      ok = core.check_one(bag_graphs[t], bag_graphs[kids[0]], w.states[t],
                          w.states[kids[0]]);
    } else {
      ok = core.check_two(bag_graphs[t], bag_graphs[kids[0]],
                          bag_graphs[kids[1]], w.states[t],
                          w.states[kids[0]], w.states[kids[1]]);
    }
    if (!ok) return false;
  }
  return core.accepts(bag_graphs[d.root()], w.states[d.root()]);
}

}  // namespace tdsolve
