#include "tdsolve/combinators.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace tdsolve {
namespace {

std::string joined_names(
    const std::vector<std::unique_ptr<DynamicCore>>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i]->name();
  }
  return out;
}

// Calls fn once per element of the product, passing one pick per slot.
template <class Fn>
void cartesian(const std::vector<std::vector<State>>& options, Fn&& fn) {
  for (const auto& o : options) {
    if (o.empty()) return;
  }
  std::vector<std::size_t> idx(options.size(), 0);
  std::vector<State> pick(options.size());
  while (true) {
    for (std::size_t i = 0; i < options.size(); ++i) {
      pick[i] = options[i][idx[i]];
    }
    fn(pick);
    std::size_t i = 0;
    while (i < options.size() && ++idx[i] == options[i].size()) {
      idx[i] = 0;
      ++i;
    }
    if (i == options.size()) break;
  }
}

bool is_tuple_of(const State& s, std::size_t k) {
  return s.is(State::Kind::Tuple) && s.items().size() == k;
}

class IntersectionCore final : public DynamicCore {
 public:
  explicit IntersectionCore(std::vector<std::unique_ptr<DynamicCore>> parts)
      : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("and: needs parts");
  }

  std::string name() const override {
    return "and(" + joined_names(parts_) + ")";
  }

  StateSet process_leaf(const Graph& bag) const override {
    const std::size_t k = parts_.size();
    std::vector<std::vector<State>> options(k);
    for (std::size_t i = 0; i < k; ++i) {
      StateSet t = parts_[i]->process_leaf(bag);
      options[i].assign(t.begin(), t.end());
    }
    std::vector<State> out;
    cartesian(options, [&](const std::vector<State>& pick) {
      out.push_back(State::tuple(pick));
    });
    return StateSet(std::move(out));
  }

  std::vector<StepTransition> process_one(
      const Graph& bag, const Graph& child_bag,
      const StateSet& child_states) const override {
    const std::size_t k = parts_.size();
    std::vector<StepTransition> out;
    std::vector<const State*> tuples;
    std::vector<std::vector<State>> coord_children(k);
    for (const auto& c : child_states) {
      if (!is_tuple_of(c, k)) continue;
      tuples.push_back(&c);
      for (std::size_t i = 0; i < k; ++i) {
        coord_children[i].push_back(c.items()[i]);
      }
    }
    std::vector<std::map<State, std::vector<State>>> opts(k);
    for (std::size_t i = 0; i < k; ++i) {
      StateSet distinct(std::move(coord_children[i]));
      for (auto& tr : parts_[i]->process_one(bag, child_bag, distinct)) {
        opts[i][tr.child].push_back(std::move(tr.state));
      }
    }
    for (const State* c : tuples) {
      std::vector<std::vector<State>> options(k);
      bool dead = false;
      for (std::size_t i = 0; i < k && !dead; ++i) {
        auto it = opts[i].find(c->items()[i]);
        if (it == opts[i].end()) {
          dead = true;
        } else {
          options[i] = it->second;
        }
      }
      if (dead) continue;
      cartesian(options, [&](const std::vector<State>& pick) {
        out.push_back({State::tuple(pick), *c});
      });
    }
    return out;
  }

  std::vector<JoinTransition> process_two(
      const Graph& bag, const Graph& left_bag, const StateSet& left_states,
      const Graph& right_bag, const StateSet& right_states) const override {
    const std::size_t k = parts_.size();
    std::vector<JoinTransition> out;
    std::vector<const State*> ltuples, rtuples;
    std::vector<std::vector<State>> lcoord(k), rcoord(k);
    for (const auto& s : left_states) {
      if (!is_tuple_of(s, k)) continue;
      ltuples.push_back(&s);
      for (std::size_t i = 0; i < k; ++i) lcoord[i].push_back(s.items()[i]);
    }
    for (const auto& s : right_states) {
      if (!is_tuple_of(s, k)) continue;
      rtuples.push_back(&s);
      for (std::size_t i = 0; i < k; ++i) rcoord[i].push_back(s.items()[i]);
    }
    std::vector<std::map<std::pair<State, State>, std::vector<State>>> opts(k);
    for (std::size_t i = 0; i < k; ++i) {
      StateSet dl(std::move(lcoord[i]));
      StateSet dr(std::move(rcoord[i]));
      for (auto& tr :
           parts_[i]->process_two(bag, left_bag, dl, right_bag, dr)) {
        opts[i][{tr.left, tr.right}].push_back(std::move(tr.state));
      }
    }
    for (const State* l : ltuples) {
      for (const State* r : rtuples) {
        std::vector<std::vector<State>> options(k);
        bool dead = false;
        for (std::size_t i = 0; i < k && !dead; ++i) {
          auto it = opts[i].find({l->items()[i], r->items()[i]});
          if (it == opts[i].end()) {
            dead = true;
          } else {
            options[i] = it->second;
          }
        }
        if (dead) continue;
        cartesian(options, [&](const std::vector<State>& pick) {
          out.push_back({State::tuple(pick), *l, *r});
        });
      }
    }
    return out;
  }

  bool accepts(const Graph& bag, const State& s) const override {
    if (!is_tuple_of(s, parts_.size())) return false;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (!parts_[i]->accepts(bag, s.items()[i])) return false;
    }
    return true;
  }

 private:
  std::vector<std::unique_ptr<DynamicCore>> parts_;
};

// A coordinate may opt out at the leaves (state _) and then stays out along
// the whole tree; the graph qualifies if one coordinate that stayed in is
// accepted at the root.
class UnionCore final : public DynamicCore {
 public:
  explicit UnionCore(std::vector<std::unique_ptr<DynamicCore>> parts)
      : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("or: needs parts");
  }

  std::string name() const override {
    return "or(" + joined_names(parts_) + ")";
  }

  StateSet process_leaf(const Graph& bag) const override {
    const std::size_t k = parts_.size();
    std::vector<std::vector<State>> options(k);
    for (std::size_t i = 0; i < k; ++i) {
      StateSet t = parts_[i]->process_leaf(bag);
      options[i].assign(t.begin(), t.end());
      options[i].push_back(State::bot());
    }
    std::vector<State> out;
    cartesian(options, [&](const std::vector<State>& pick) {
      out.push_back(State::tuple(pick));
    });
    return StateSet(std::move(out));
  }

  std::vector<StepTransition> process_one(
      const Graph& bag, const Graph& child_bag,
      const StateSet& child_states) const override {
    const std::size_t k = parts_.size();
    std::vector<StepTransition> out;
    std::vector<const State*> tuples;
    std::vector<std::vector<State>> live(k);
    for (const auto& c : child_states) {
      if (!is_tuple_of(c, k)) continue;
      tuples.push_back(&c);
      for (std::size_t i = 0; i < k; ++i) {
        if (!c.items()[i].is(State::Kind::Bot)) {
          live[i].push_back(c.items()[i]);
        }
      }
    }
    std::vector<std::map<State, std::vector<State>>> opts(k);
    for (std::size_t i = 0; i < k; ++i) {
      StateSet distinct(std::move(live[i]));
      for (auto& tr : parts_[i]->process_one(bag, child_bag, distinct)) {
        opts[i][tr.child].push_back(std::move(tr.state));
      }
    }
    for (const State* c : tuples) {
      std::vector<std::vector<State>> options(k);
      bool dead = false;
      for (std::size_t i = 0; i < k && !dead; ++i) {
        const State& ci = c->items()[i];
        if (ci.is(State::Kind::Bot)) {
          options[i] = {State::bot()};
          continue;
        }
        auto it = opts[i].find(ci);
        if (it == opts[i].end()) {
          dead = true;
        } else {
          options[i] = it->second;
        }
      }
      if (dead) continue;
      cartesian(options, [&](const std::vector<State>& pick) {
        out.push_back({State::tuple(pick), *c});
      });
    }
    return out;
  }

  std::vector<JoinTransition> process_two(
      const Graph& bag, const Graph& left_bag, const StateSet& left_states,
      const Graph& right_bag, const StateSet& right_states) const override {
    const std::size_t k = parts_.size();
    std::vector<JoinTransition> out;
    std::vector<const State*> ltuples, rtuples;
    std::vector<std::vector<State>> lcoord(k), rcoord(k);
    for (const auto& s : left_states) {
      if (!is_tuple_of(s, k)) continue;
      ltuples.push_back(&s);
      for (std::size_t i = 0; i < k; ++i) {
        if (!s.items()[i].is(State::Kind::Bot)) lcoord[i].push_back(s.items()[i]);
      }
    }
    for (const auto& s : right_states) {
      if (!is_tuple_of(s, k)) continue;
      rtuples.push_back(&s);
      for (std::size_t i = 0; i < k; ++i) {
        if (!s.items()[i].is(State::Kind::Bot)) rcoord[i].push_back(s.items()[i]);
      }
    }
    std::vector<std::map<std::pair<State, State>, std::vector<State>>> opts(k);
    for (std::size_t i = 0; i < k; ++i) {
      StateSet dl(std::move(lcoord[i]));
      StateSet dr(std::move(rcoord[i]));
      for (auto& tr :
           parts_[i]->process_two(bag, left_bag, dl, right_bag, dr)) {
        opts[i][{tr.left, tr.right}].push_back(std::move(tr.state));
      }
    }
    for (const State* l : ltuples) {
      for (const State* r : rtuples) {
        std::vector<std::vector<State>> options(k);
        bool dead = false;
        for (std::size_t i = 0; i < k && !dead; ++i) {
          const State& li = l->items()[i];
          const State& ri = r->items()[i];
          const bool lb = li.is(State::Kind::Bot);
          const bool rb = ri.is(State::Kind::Bot);
          if (lb != rb) {
            dead = true;
          } else if (lb) {
            options[i] = {State::bot()};
          } else {
            auto it = opts[i].find({li, ri});
            if (it == opts[i].end()) {
              dead = true;
            } else {
              options[i] = it->second;
            }
          }
        }
        if (dead) continue;
        cartesian(options, [&](const std::vector<State>& pick) {
          out.push_back({State::tuple(pick), *l, *r});
        });
      }
    }
    return out;
  }

  bool accepts(const Graph& bag, const State& s) const override {
    if (!is_tuple_of(s, parts_.size())) return false;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      const State& si = s.items()[i];
      if (!si.is(State::Kind::Bot) && parts_[i]->accepts(bag, si)) {
        return true;
      }
    }
    return false;
  }

 private:
  std::vector<std::unique_ptr<DynamicCore>> parts_;
};

struct VertexElems {
  using Elem = int;
  static constexpr bool edges = false;
  static const std::vector<int>& universe(const Graph& bag) {
    return bag.vertices();
  }
  static Graph part_graph(const Graph& bag, const std::vector<int>& s) {
    return bag.induced_subgraph(s);
  }
  static State make(State inner, std::vector<int> s) {
    return State::assigned(std::move(inner), std::move(s));
  }
  static bool mode_ok(const State& a) { return !a.holds_edges(); }
  static const std::vector<int>& set_of(const State& a) {
    return a.part_vertices();
  }
};

struct EdgeElems {
  using Elem = Edge;
  static constexpr bool edges = true;
  static const std::vector<Edge>& universe(const Graph& bag) {
    return bag.edges();
  }
  static Graph part_graph(const Graph& bag, const std::vector<Edge>& s) {
    return bag.edge_subgraph(s);
  }
  static State make(State inner, std::vector<Edge> s) {
    return State::assigned(std::move(inner), std::move(s));
  }
  static bool mode_ok(const State& a) { return a.holds_edges(); }
  static const std::vector<Edge>& set_of(const State& a) {
    return a.part_edges();
  }
};

// Shared engine for the three partition flavors. States are tuples of
// (inner state, bag elements of that part), plus a crossing-edge count
// when a budget is present. A bag element's part is decided where the
// element first appears and carried along unchanged.
template <class P>
class PartitionCore final : public DynamicCore {
  using Elem = typename P::Elem;
  using Sig = std::vector<std::vector<Elem>>;

  struct Member {
    const State* tuple;
    std::vector<const State*> inner;
    int q;
  };
  using Groups = std::map<Sig, std::vector<Member>>;

 public:
  PartitionCore(std::vector<std::unique_ptr<DynamicCore>> parts,
                std::optional<int> budget)
      : parts_(std::move(parts)), budget_(budget) {
    if (parts_.empty()) {
      throw std::invalid_argument("partition: needs parts");
    }
    if (budget_ && *budget_ < 0) {
      throw std::invalid_argument("partition: budget must be >= 0");
    }
  }

  std::string name() const override {
    if (budget_) {
      return "graphpart(" + std::to_string(*budget_) + ";" +
             joined_names(parts_) + ")";
    }
    return (P::edges ? std::string("edgepart(") : std::string("vertpart(")) +
           joined_names(parts_) + ")";
  }

  StateSet process_leaf(const Graph& bag) const override {
    const std::size_t k = parts_.size();
    const auto& elems = P::universe(bag);
    std::vector<State> out;
    std::vector<int> choice(elems.size(), 0);
    while (true) {
      Sig sig(k);
      for (std::size_t e = 0; e < elems.size(); ++e) {
        sig[choice[e]].push_back(elems[e]);
      }
      std::vector<std::vector<State>> options(k);
      bool dead = false;
      for (std::size_t i = 0; i < k && !dead; ++i) {
        StateSet t = parts_[i]->process_leaf(P::part_graph(bag, sig[i]));
        options[i].assign(t.begin(), t.end());
        dead = options[i].empty();
      }
      if (!dead) {
        cartesian(options, [&](const std::vector<State>& pick) {
          out.push_back(make_state(pick, sig, 0));
        });
      }
      std::size_t pos = 0;
      while (pos < choice.size() &&
             ++choice[pos] == static_cast<int>(k)) {
        choice[pos] = 0;
        ++pos;
      }
      if (pos == choice.size()) break;
    }
    return StateSet(std::move(out));
  }

  std::vector<StepTransition> process_one(
      const Graph& bag, const Graph& child_bag,
      const StateSet& child_states) const override {
    const std::size_t k = parts_.size();
    std::vector<StepTransition> out;
    Groups groups = group_states(child_states, child_bag);
    const auto& pune = P::universe(bag);
    const auto& cune = P::universe(child_bag);
    std::vector<Elem> fresh;
    std::set_difference(pune.begin(), pune.end(), cune.begin(), cune.end(),
                        std::back_inserter(fresh));

    for (const auto& [csig, members] : groups) {
      std::vector<Graph> cg;
      cg.reserve(k);
      for (std::size_t i = 0; i < k; ++i) {
        cg.push_back(P::part_graph(child_bag, csig[i]));
      }
      std::vector<StateSet> distinct = distinct_inner(members, k);
      int q_add = 0;
      if constexpr (!P::edges) {
        if (budget_) {
          q_add = crossing_edges(owned_edges(bag, child_bag),
                                 part_of_map(csig));
        }
      }
      Sig base(k);
      for (std::size_t i = 0; i < k; ++i) {
        std::set_intersection(csig[i].begin(), csig[i].end(), pune.begin(),
                              pune.end(), std::back_inserter(base[i]));
      }
      std::vector<int> choice(fresh.size(), 0);
      while (true) {
        Sig psig = base;
        for (std::size_t e = 0; e < fresh.size(); ++e) {
          psig[choice[e]].push_back(fresh[e]);
        }
        for (auto& part : psig) std::sort(part.begin(), part.end());
        std::vector<Graph> pg;
        pg.reserve(k);
        for (std::size_t i = 0; i < k; ++i) {
          pg.push_back(P::part_graph(bag, psig[i]));
        }
        std::vector<std::map<State, std::vector<State>>> opts(k);
        for (std::size_t i = 0; i < k; ++i) {
          for (auto& tr : parts_[i]->process_one(pg[i], cg[i], distinct[i])) {
            opts[i][tr.child].push_back(std::move(tr.state));
          }
        }
        for (const auto& m : members) {
          int q = m.q + q_add;
          if (budget_ && q > *budget_) continue;
          std::vector<std::vector<State>> options(k);
          bool dead = false;
          for (std::size_t i = 0; i < k && !dead; ++i) {
            auto it = opts[i].find(*m.inner[i]);
            if (it == opts[i].end()) {
              dead = true;
            } else {
              options[i] = it->second;
            }
          }
          if (dead) continue;
          cartesian(options, [&](const std::vector<State>& pick) {
            out.push_back({make_state(pick, psig, q), *m.tuple});
          });
        }
        std::size_t pos = 0;
        while (pos < choice.size() &&
               ++choice[pos] == static_cast<int>(k)) {
          choice[pos] = 0;
          ++pos;
        }
        if (pos == choice.size()) break;
      }
    }
    return out;
  }

  std::vector<JoinTransition> process_two(
      const Graph& bag, const Graph& left_bag, const StateSet& left_states,
      const Graph& right_bag, const StateSet& right_states) const override {
    const std::size_t k = parts_.size();
    std::vector<JoinTransition> out;
    Groups lgroups = group_states(left_states, left_bag);
    Groups rgroups = group_states(right_states, right_bag);
    const auto& lune = P::universe(left_bag);
    const auto& rune = P::universe(right_bag);
    const auto& pune = P::universe(bag);
    std::vector<Elem> shared;
    std::set_intersection(lune.begin(), lune.end(), rune.begin(), rune.end(),
                          std::back_inserter(shared));
    std::vector<Elem> either;
    std::set_union(lune.begin(), lune.end(), rune.begin(), rune.end(),
                   std::back_inserter(either));
    std::vector<Elem> fresh;
    std::set_difference(pune.begin(), pune.end(), either.begin(),
                        either.end(), std::back_inserter(fresh));

    // Children may combine only when they put every shared element in the
    // same part, so pair up groups by that restriction.
    auto bucket_key = [&shared](const Sig& sig) {
      std::map<Elem, int> part = part_of_map(sig);
      std::vector<int> key;
      key.reserve(shared.size());
      for (const auto& e : shared) key.push_back(part.at(e));
      return key;
    };
    using GroupEntry = const typename Groups::value_type*;
    std::map<std::vector<int>, std::vector<GroupEntry>> lbuckets, rbuckets;
    for (const auto& entry : lgroups) {
      lbuckets[bucket_key(entry.first)].push_back(&entry);
    }
    for (const auto& entry : rgroups) {
      rbuckets[bucket_key(entry.first)].push_back(&entry);
    }

    for (const auto& [key, llist] : lbuckets) {
      auto rfound = rbuckets.find(key);
      if (rfound == rbuckets.end()) continue;
      for (GroupEntry lentry : llist) {
        const Sig& lsig = lentry->first;
        const auto& lmembers = lentry->second;
        std::vector<Graph> cgl;
        cgl.reserve(k);
        for (std::size_t i = 0; i < k; ++i) {
          cgl.push_back(P::part_graph(left_bag, lsig[i]));
        }
        std::vector<StateSet> dl = distinct_inner(lmembers, k);
        for (GroupEntry rentry : rfound->second) {
          const Sig& rsig = rentry->first;
          const auto& rmembers = rentry->second;
          std::vector<Graph> cgr;
          cgr.reserve(k);
          for (std::size_t i = 0; i < k; ++i) {
            cgr.push_back(P::part_graph(right_bag, rsig[i]));
          }
          std::vector<StateSet> dr = distinct_inner(rmembers, k);
          int q_add = 0;
          if constexpr (!P::edges) {
            if (budget_) {
              q_add = crossing_edges(owned_edges(bag, left_bag),
                                     part_of_map(lsig)) +
                      crossing_edges(owned_edges(bag, right_bag),
                                     part_of_map(rsig));
            }
          }
          Sig base(k);
          for (std::size_t i = 0; i < k; ++i) {
            std::vector<Elem> merged;
            std::set_union(lsig[i].begin(), lsig[i].end(), rsig[i].begin(),
                           rsig[i].end(), std::back_inserter(merged));
            std::set_intersection(merged.begin(), merged.end(), pune.begin(),
                                  pune.end(), std::back_inserter(base[i]));
          }
          std::vector<int> choice(fresh.size(), 0);
          while (true) {
            Sig psig = base;
            for (std::size_t e = 0; e < fresh.size(); ++e) {
              psig[choice[e]].push_back(fresh[e]);
            }
            for (auto& part : psig) std::sort(part.begin(), part.end());
            std::vector<Graph> pg;
            pg.reserve(k);
            for (std::size_t i = 0; i < k; ++i) {
              pg.push_back(P::part_graph(bag, psig[i]));
            }
            std::vector<std::map<std::pair<State, State>, std::vector<State>>>
                opts(k);
            for (std::size_t i = 0; i < k; ++i) {
              for (auto& tr : parts_[i]->process_two(pg[i], cgl[i], dl[i],
                                                     cgr[i], dr[i])) {
                opts[i][{tr.left, tr.right}].push_back(std::move(tr.state));
              }
            }
            for (const auto& lm : lmembers) {
              for (const auto& rm : rmembers) {
                int q = lm.q + rm.q + q_add;
                if (budget_ && q > *budget_) continue;
                std::vector<std::vector<State>> options(k);
                bool dead = false;
                for (std::size_t i = 0; i < k && !dead; ++i) {
                  auto it = opts[i].find({*lm.inner[i], *rm.inner[i]});
                  if (it == opts[i].end()) {
                    dead = true;
                  } else {
                    options[i] = it->second;
                  }
                }
                if (dead) continue;
                cartesian(options, [&](const std::vector<State>& pick) {
                  out.push_back({make_state(pick, psig, q), *lm.tuple,
                                 *rm.tuple});
                });
              }
            }
            std::size_t pos = 0;
            while (pos < choice.size() &&
                   ++choice[pos] == static_cast<int>(k)) {
              choice[pos] = 0;
              ++pos;
            }
            if (pos == choice.size()) break;
          }
        }
      }
    }
    return out;
  }

  bool accepts(const Graph& bag, const State& s) const override {
    Sig sig;
    std::vector<const State*> inner;
    int q = 0;
    if (!read_state(s, bag, &sig, &inner, &q)) return false;
    if constexpr (!P::edges) {
      if (budget_) {
        q += crossing_edges(bag.edges(), part_of_map(sig));
        if (q > *budget_) return false;
      }
    }
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (!parts_[i]->accepts(P::part_graph(bag, sig[i]), *inner[i])) {
        return false;
      }
    }
    return true;
  }

 private:
  State make_state(const std::vector<State>& inners, const Sig& sig,
                   int q) const {
    std::vector<State> items;
    items.reserve(parts_.size() + (budget_ ? 1 : 0));
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      items.push_back(P::make(inners[i], sig[i]));
    }
    if (budget_) items.push_back(State::count(q));
    return State::tuple(std::move(items));
  }

  bool read_state(const State& s, const Graph& bag, Sig* sig,
                  std::vector<const State*>* inner, int* q) const {
    if (!s.is(State::Kind::Tuple)) return false;
    const auto& items = s.items();
    const std::size_t k = parts_.size();
    if (items.size() != k + (budget_ ? 1 : 0)) return false;
    sig->assign(k, {});
    inner->clear();
    std::vector<Elem> all;
    for (std::size_t i = 0; i < k; ++i) {
      const State& a = items[i];
      if (!a.is(State::Kind::Assigned) || !P::mode_ok(a)) return false;
      (*sig)[i] = P::set_of(a);
      all.insert(all.end(), (*sig)[i].begin(), (*sig)[i].end());
      inner->push_back(&a.inner());
    }
    *q = 0;
    if (budget_) {
      const State& c = items[k];
      if (!c.is(State::Kind::Count) || c.count_value() > *budget_) {
        return false;
      }
      *q = c.count_value();
    }
    std::sort(all.begin(), all.end());
    return all == P::universe(bag);
  }

  Groups group_states(const StateSet& states, const Graph& bag) const {
    Groups groups;
    for (const auto& s : states) {
      Sig sig;
      std::vector<const State*> inner;
      int q = 0;
      if (!read_state(s, bag, &sig, &inner, &q)) continue;
      groups[std::move(sig)].push_back(Member{&s, std::move(inner), q});
    }
    return groups;
  }

  std::vector<StateSet> distinct_inner(const std::vector<Member>& members,
                                       std::size_t k) const {
    std::vector<StateSet> out(k);
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<State> ds;
      ds.reserve(members.size());
      for (const auto& m : members) ds.push_back(*m.inner[i]);
      out[i] = StateSet(std::move(ds));
    }
    return out;
  }

  static std::map<Elem, int> part_of_map(const Sig& sig) {
    std::map<Elem, int> m;
    for (std::size_t i = 0; i < sig.size(); ++i) {
      for (const auto& e : sig[i]) m[e] = static_cast<int>(i);
    }
    return m;
  }

  static int crossing_edges(const std::vector<Edge>& es,
                            const std::map<int, int>& part) {
    int c = 0;
    for (const auto& e : es) {
      if (part.at(e.first) != part.at(e.second)) ++c;
    }
    return c;
  }

  std::vector<std::unique_ptr<DynamicCore>> parts_;
  std::optional<int> budget_;
};

}  // namespace

namespace {

void require_parts(const std::vector<std::unique_ptr<DynamicCore>>& parts,
                   std::size_t least, const char* who) {
  if (parts.size() < least) {
    throw std::invalid_argument(std::string(who) + " needs at least " +
                                std::to_string(least) + " inner cores");
  }
  for (const auto& p : parts) {
    if (!p) throw std::invalid_argument(std::string(who) + ": null inner core");
  }
}

}  // namespace

std::unique_ptr<DynamicCore> intersection_core(
    std::vector<std::unique_ptr<DynamicCore>> parts) {
  require_parts(parts, 1, "intersection_core");
  return std::make_unique<IntersectionCore>(std::move(parts));
}

std::unique_ptr<DynamicCore> union_core(
    std::vector<std::unique_ptr<DynamicCore>> parts) {
  require_parts(parts, 1, "union_core");
  return std::make_unique<UnionCore>(std::move(parts));
}

std::unique_ptr<DynamicCore> vertpart_core(
    std::vector<std::unique_ptr<DynamicCore>> parts) {
  require_parts(parts, 2, "vertpart_core");
  return std::make_unique<PartitionCore<VertexElems>>(std::move(parts),
                                                      std::nullopt);
}

std::unique_ptr<DynamicCore> edgepart_core(
    std::vector<std::unique_ptr<DynamicCore>> parts) {
  require_parts(parts, 2, "edgepart_core");
  return std::make_unique<PartitionCore<EdgeElems>>(std::move(parts),
                                                    std::nullopt);
}

std::unique_ptr<DynamicCore> graphpart_core(
    int budget, std::vector<std::unique_ptr<DynamicCore>> parts) {
  require_parts(parts, 2, "graphpart_core");
  if (budget < 0) {
    throw std::invalid_argument("graphpart_core: budget must be >= 0");
  }
  return std::make_unique<PartitionCore<VertexElems>>(std::move(parts),
                                                      budget);
}

ExtractedPartition extract_partition(const Witness& w,
                                     const RootedTreeDecomposition& d) {
  ExtractedPartition out;
  const std::size_t n = std::min(w.states.size(),
                                 static_cast<std::size_t>(d.node_count()));
  for (std::size_t t = 0; t < n; ++t) {
    const State& s = w.states[t];
    if (!s.is(State::Kind::Tuple)) continue;
    const auto& items = s.items();
    for (std::size_t i = 0; i < items.size(); ++i) {
      const State& a = items[i];
      if (!a.is(State::Kind::Assigned)) continue;
      if (a.holds_edges()) {
        out.kind = PartitionKind::Edges;
        for (const auto& e : a.part_edges()) {
          out.edge_part.emplace(e, static_cast<int>(i) + 1);
        }
      } else {
        out.kind = PartitionKind::Vertices;
        for (int v : a.part_vertices()) {
          out.vertex_part.emplace(v, static_cast<int>(i) + 1);
        }
      }
    }
  }
  if (out.kind == PartitionKind::None) {
    throw std::invalid_argument(
        "extract_partition: witness carries no partition states");
  }
  return out;
}

}  // namespace tdsolve
