#include "tsat/tableau.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

#include "tsat/errors.hpp"

namespace tsat {

namespace {

// ---------------------------------------------------------------------------
// Closure: the subformulae of the (F/G-expanded) input, indexed children-first
// and deduplicated structurally.
// ---------------------------------------------------------------------------

struct ClosureNode {
  Op op;
  std::string var;          // Var
  const BoolFn* fn = nullptr;  // Apply (canonical built-in)
  std::vector<int> kids;
};

struct Closure {
  std::vector<ClosureNode> nodes;
  int root = -1;
  std::vector<int> var_nodes, next_nodes, until_nodes, since_nodes;

  int lhs(int i) const { return nodes[i].kids[0]; }
  int rhs(int i) const { return nodes[i].kids[1]; }
};

class ClosureBuilder {
 public:
  Closure build(const Formula& phi) {
    closure_.root = visit(phi);
    return std::move(closure_);
  }

 private:
  int visit(const Formula& f) {
    switch (f.op) {
      case Op::Var:
        return intern(Op::Var, f.var, nullptr, {});
      case Op::Apply: {
        const BoolFnPtr* canonical = builtin::equivalent(*f.fn);
        if (!canonical)
          throw ArgumentError("tableau: connective '" + f.fn->name() +
                              "' is not built-in; flatten the formula first");
        std::vector<int> kids;
        for (const auto& k : f.kids) kids.push_back(visit(*k));
        return intern(Op::Apply, {}, canonical->get(), std::move(kids));
      }
      case Op::Next:
        return intern(Op::Next, {}, nullptr, {visit(*f.kids[0])});
      case Op::Eventually:  // F a  =  true U a
        return make_until(make_true(), visit(*f.kids[0]));
      case Op::Globally: {  // G a  =  not(true U not a)
        const int na = make_not(visit(*f.kids[0]));
        return make_not(make_until(make_true(), na));
      }
      case Op::Until:
        return make_until(visit(*f.kids[0]), visit(*f.kids[1]));
      case Op::Since: {
        const int a = visit(*f.kids[0]);
        const int b = visit(*f.kids[1]);
        return intern(Op::Since, {}, nullptr, {a, b});
      }
    }
    throw InvariantError("closure: unreachable");
  }

  int make_true() { return intern(Op::Apply, {}, builtin::fn_true().get(), {}); }
  int make_not(int a) { return intern(Op::Apply, {}, builtin::fn_not().get(), {a}); }
  int make_until(int a, int b) { return intern(Op::Until, {}, nullptr, {a, b}); }

  int intern(Op op, std::string var, const BoolFn* fn, std::vector<int> kids) {
    Key key{op, std::move(var), fn, kids};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int id = static_cast<int>(closure_.nodes.size());
    closure_.nodes.push_back({op, key.var, fn, std::move(kids)});
    switch (op) {
      case Op::Var: closure_.var_nodes.push_back(id); break;
      case Op::Next: closure_.next_nodes.push_back(id); break;
      case Op::Until: closure_.until_nodes.push_back(id); break;
      case Op::Since: closure_.since_nodes.push_back(id); break;
      default: break;
    }
    memo_.emplace(std::move(key), id);
    return id;
  }

  struct Key {
    Op op;
    std::string var;
    const BoolFn* fn;
    std::vector<int> kids;
    bool operator<(const Key& o) const {
      return std::tie(op, var, fn, kids) < std::tie(o.op, o.var, o.fn, o.kids);
    }
  };

  Closure closure_;
  std::map<Key, int> memo_;
};

// ---------------------------------------------------------------------------
// Atoms: one truth value per closure node, subject to local consistency.
// ---------------------------------------------------------------------------

using Atom = std::vector<uint8_t>;

struct AtomHash {
  size_t operator()(const Atom& a) const {
    size_t h = 1469598103934665603ull;
    for (uint8_t v : a) h = (h ^ v) * 1099511628211ull;
    return h;
  }
};

constexpr int8_t kFree = -1;

// Forced-value propagation. Conservative: only adds values that are implied,
// never removes possibilities. Returns false on contradiction.
bool propagate(const Closure& c, std::vector<int8_t>& forced) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < c.nodes.size(); ++i) {
      const ClosureNode& n = c.nodes[i];
      switch (n.op) {
        case Op::Apply: {
          // Rows of the function's table compatible with what is known.
          const int arity = n.fn->arity();
          unsigned compatible = 0;
          int count = 0;
          for (unsigned k = 0; k < (1u << arity); ++k) {
            bool ok = true;
            for (int j = 0; j < arity && ok; ++j) {
              const int8_t kv = forced[n.kids[j]];
              const bool bit = (k >> (arity - 1 - j)) & 1u;
              if (kv != kFree && kv != static_cast<int8_t>(bit)) ok = false;
            }
            if (ok && forced[i] != kFree && n.fn->value_at(k) != (forced[i] == 1)) ok = false;
            if (ok) {
              compatible |= 1u << k;
              ++count;
            }
          }
          if (count == 0) return false;
          // Output decided by the remaining rows?
          bool all1 = true, all0 = true;
          for (unsigned k = 0; k < (1u << arity); ++k)
            if (compatible & (1u << k)) (n.fn->value_at(k) ? all0 : all1) = false;
          if (all1 && forced[i] != 1) { forced[i] = 1; changed = true; }
          if (all0 && forced[i] != 0) { forced[i] = 0; changed = true; }
          // Argument decided by the remaining rows?
          for (int j = 0; j < arity; ++j) {
            bool can0 = false, can1 = false;
            for (unsigned k = 0; k < (1u << arity); ++k)
              if (compatible & (1u << k)) ((k >> (arity - 1 - j)) & 1u ? can1 : can0) = true;
            const int kid = n.kids[j];
            if (can0 && !can1 && forced[kid] != 0) {
              if (forced[kid] == 1) return false;
              forced[kid] = 0;
              changed = true;
            }
            if (can1 && !can0 && forced[kid] != 1) {
              if (forced[kid] == 0) return false;
              forced[kid] = 1;
              changed = true;
            }
          }
          break;
        }
        case Op::Until:
        case Op::Since: {
          // value 0 requires the right operand false; right operand true
          // requires value 1.
          if (forced[i] == 0 && forced[c.rhs(i)] == kFree) {
            forced[c.rhs(i)] = 0;
            changed = true;
          } else if (forced[i] == 0 && forced[c.rhs(i)] == 1) {
            return false;
          }
          if (forced[c.rhs(i)] == 1 && forced[i] == kFree) {
            forced[i] = 1;
            changed = true;
          }
          if (forced[c.rhs(i)] == 0 && forced[c.lhs(i)] == 0 && forced[i] == kFree) {
            forced[i] = 0;
            changed = true;
          }
          break;
        }
        default:
          break;
      }
    }
  }
  return true;
}

// Enumerates every atom compatible with `forced`.
//  - prev_since: Since values of the predecessor atom; when given, Since
//    values here are derived (an atom at position 0 uses all-zero history).
//  - next_until: Until values of the successor atom; when given, Until
//    values here are derived.
// Assigning in index order visits children before parents, so derived values
// and conflicts surface as early as possible. Returns false if the consumer
// stopped the enumeration.
class AtomEnumerator {
 public:
  AtomEnumerator(const Closure& c, std::vector<int8_t> forced, const Atom* prev_since,
                 const Atom* next_until)
      : c_(c), forced_(std::move(forced)), prev_(prev_since), next_(next_until) {}

  bool run(const std::function<bool(const Atom&)>& yield) {
    if (!propagate(c_, forced_)) return true;
    vals_.assign(c_.nodes.size(), 0);
    yield_ = &yield;
    return rec(0);
  }

 private:
  bool rec(size_t i) {
    if (i == c_.nodes.size()) return (*yield_)(vals_);
    const ClosureNode& n = c_.nodes[i];
    const int8_t want = forced_[i];
    auto with = [&](uint8_t v) {
      if (want != kFree && want != static_cast<int8_t>(v)) return true;  // pruned
      vals_[i] = v;
      return rec(i + 1);
    };
    switch (n.op) {
      case Op::Var:
      case Op::Next:
        return with(0) && with(1);
      case Op::Apply: {
        unsigned k = 0;
        for (int kid : n.kids) k = (k << 1) | vals_[kid];
        return with(n.fn->value_at(k) ? 1 : 0);
      }
      case Op::Until: {
        const uint8_t va = vals_[c_.lhs(i)], vb = vals_[c_.rhs(i)];
        if (next_) return with(vb || (va && (*next_)[i]) ? 1 : 0);
        if (vb) return with(1);
        if (!va) return with(0);
        return with(0) && with(1);
      }
      case Op::Since: {
        const uint8_t va = vals_[c_.lhs(i)], vb = vals_[c_.rhs(i)];
        if (prev_) return with(vb || (va && (*prev_)[i]) ? 1 : 0);
        if (vb) return with(1);
        if (!va) return with(0);
        return with(0) && with(1);
      }
      default:
        throw InvariantError("atom enumeration: unreachable");
    }
  }

  const Closure& c_;
  std::vector<int8_t> forced_;
  const Atom* prev_;
  const Atom* next_;
  Atom vals_;
  const std::function<bool(const Atom&)>* yield_ = nullptr;
};

// ---------------------------------------------------------------------------
// The search.
// ---------------------------------------------------------------------------

class TableauSearch {
 public:
  TableauSearch(const Formula& phi, const TableauOptions& opts)
      : phi_(phi), opts_(opts), closure_(ClosureBuilder().build(phi)) {}

  SatResult run() {
    collect_candidates();
    if (candidates_.empty()) return {false, std::nullopt, Strategy::Tableau};

    std::vector<int> reachable_candidates;
    if (opts_.initial_state_only) {
      // Candidates were enumerated against the empty past already.
      reachable_candidates = candidates_;
      std::sort(reachable_candidates.begin(), reachable_candidates.end());
      for (int id : reachable_candidates) region_parent_[id] = id;
    } else {
      reachable_candidates = connect_to_initial();
    }
    if (reachable_candidates.empty()) return {false, std::nullopt, Strategy::Tableau};

    // Without Until and Next nodes every atom extends forever and any cycle
    // is fulfilling, so reachability alone decides.
    if (closure_.until_nodes.empty() && closure_.next_nodes.empty())
      return sat_result(reachable_candidates.front(), /*needs_fulfilling=*/false);

    return forward_phase(reachable_candidates);
  }

 private:
  int intern(const Atom& a) {
    auto it = atom_ids_.find(a);
    if (it != atom_ids_.end()) return it->second;
    if (atoms_.size() >= opts_.max_atoms)
      throw ResourceError("tableau: atom cap exceeded (" + std::to_string(opts_.max_atoms) + ")");
    const int id = static_cast<int>(atoms_.size());
    atoms_.push_back(a);
    atom_ids_.emplace(atoms_.back(), id);
    return id;
  }

  bool is_initial(const Atom& a) const {
    for (int s : closure_.since_nodes)
      if (a[s] != (a[closure_.rhs(s)] ? 1 : 0)) return false;
    return true;
  }

  void collect_candidates() {
    std::vector<int8_t> forced(closure_.nodes.size(), kFree);
    forced[closure_.root] = 1;
    const Atom zero_history(closure_.nodes.size(), 0);
    AtomEnumerator en(closure_, forced, opts_.initial_state_only ? &zero_history : nullptr,
                      nullptr);
    en.run([&](const Atom& a) {
      candidates_.push_back(intern(a));
      return true;
    });
  }

  std::vector<int8_t> no_constraints() const {
    return std::vector<int8_t>(closure_.nodes.size(), kFree);
  }

  static bool force(std::vector<int8_t>& forced, int node, uint8_t v) {
    if (forced[node] != kFree && forced[node] != static_cast<int8_t>(v)) return false;
    forced[node] = static_cast<int8_t>(v);
    return true;
  }

  // Successor constraints derived from atom a; false when contradictory
  // (no successor exists).
  bool successor_frame(const Atom& a, std::vector<int8_t>& forced) const {
    for (int x : closure_.next_nodes)
      if (!force(forced, closure_.lhs(x), a[x])) return false;
    for (int u : closure_.until_nodes)
      if (!a[closure_.rhs(u)] && a[closure_.lhs(u)])
        if (!force(forced, u, a[u])) return false;
    return true;
  }

  // Predecessor constraints derived from atom b; false when contradictory.
  bool predecessor_frame(const Atom& b, std::vector<int8_t>& forced) const {
    for (int x : closure_.next_nodes)
      if (!force(forced, x, b[closure_.lhs(x)])) return false;
    for (int s : closure_.since_nodes)
      if (!b[closure_.rhs(s)] && b[closure_.lhs(s)])
        if (!force(forced, s, b[s])) return false;
    return true;
  }

  // Backward closure of the candidate set; returns the candidates that are
  // forward-reachable from some initial atom. Populates region_succ_ with the
  // forward edges discovered on the way and init_atoms_ with entry points.
  std::vector<int> connect_to_initial() {
    std::vector<int> queue = candidates_;
    std::set<int> in_region(candidates_.begin(), candidates_.end());
    for (int id : queue)
      if (is_initial(atoms_[id])) init_atoms_.push_back(id);

    for (size_t qi = 0; qi < queue.size(); ++qi) {
      const int cur = queue[qi];
      const Atom cur_atom = atoms_[cur];  // copy: intern() may grow atoms_
      std::vector<int8_t> forced = no_constraints();
      if (!predecessor_frame(cur_atom, forced)) continue;
      AtomEnumerator en(closure_, std::move(forced), nullptr, &cur_atom);
      en.run([&](const Atom& a) {
        const int id = intern(a);
        region_succ_[id].push_back(cur);
        if (in_region.insert(id).second) {
          queue.push_back(id);
          if (is_initial(atoms_[id])) init_atoms_.push_back(id);
        }
        return true;
      });
    }

    // Forward reachability from the initial atoms along discovered edges.
    std::set<int> cand_set(candidates_.begin(), candidates_.end());
    std::vector<int> reached;
    std::set<int> seen(init_atoms_.begin(), init_atoms_.end());
    std::vector<int> fq = init_atoms_;
    for (size_t qi = 0; qi < fq.size(); ++qi) {
      const int cur = fq[qi];
      region_parent_.emplace(cur, cur);  // keep first-discovered parent only
      if (cand_set.count(cur)) reached.push_back(cur);
      auto it = region_succ_.find(cur);
      if (it == region_succ_.end()) continue;
      for (int nxt : it->second)
        if (seen.insert(nxt).second) {
          fq.push_back(nxt);
          region_parent_[nxt] = cur;
        }
    }
    std::sort(reached.begin(), reached.end());
    return reached;
  }

  // Forward exploration from the reachable candidates, SCC analysis, and the
  // fulfilling-cycle test.
  SatResult forward_phase(const std::vector<int>& candidates) {
    std::vector<int> queue = candidates;
    std::set<int> explored(candidates.begin(), candidates.end());
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      const int cur = queue[qi];
      const Atom cur_atom = atoms_[cur];  // copy: intern() may grow atoms_
      std::vector<int8_t> forced = no_constraints();
      if (!successor_frame(cur_atom, forced)) continue;
      AtomEnumerator en(closure_, std::move(forced), &cur_atom, nullptr);
      en.run([&](const Atom& a) {
        const int id = intern(a);
        fwd_succ_[cur].push_back(id);
        if (explored.insert(id).second) queue.push_back(id);
        return true;
      });
    }

    tarjan(explored);
    mark_fulfilling();

    // can-reach-fulfilling over the condensation (components are numbered in
    // reverse topological order by Tarjan, so one pass suffices).
    std::vector<char> reach_ok(scc_count_, 0);
    for (int comp = 0; comp < scc_count_; ++comp) {
      if (scc_fulfilling_[comp]) reach_ok[comp] = 1;
    }
    // Iterate until fixpoint (component graph is small).
    bool changed = true;
    while (changed) {
      changed = false;
      for (int atom : scc_order_) {
        const int comp = scc_of_[atom];
        if (reach_ok[comp]) continue;
        auto it = fwd_succ_.find(atom);
        if (it == fwd_succ_.end()) continue;
        for (int nxt : it->second)
          if (reach_ok[scc_of_[nxt]]) {
            reach_ok[comp] = 1;
            changed = true;
            break;
          }
      }
    }

    for (int a : candidates)
      if (reach_ok[scc_of_[a]]) return sat_result(a, /*needs_fulfilling=*/true);
    return {false, std::nullopt, Strategy::Tableau};
  }

  void tarjan(const std::set<int>& universe) {
    scc_of_.clear();
    int index_counter = 0;
    std::map<int, int> index, low;
    std::vector<int> stack;
    std::set<int> on_stack;
    // Iterative Tarjan to avoid deep recursion.
    struct Frame {
      int node;
      size_t child = 0;
    };
    for (int start : universe) {
      if (index.count(start)) continue;
      std::vector<Frame> call{{start}};
      while (!call.empty()) {
        Frame& f = call.back();
        const int v = f.node;
        if (f.child == 0) {
          index[v] = low[v] = index_counter++;
          stack.push_back(v);
          on_stack.insert(v);
        }
        const auto succ_it = fwd_succ_.find(v);
        const size_t degree = succ_it == fwd_succ_.end() ? 0 : succ_it->second.size();
        bool descended = false;
        while (f.child < degree) {
          const int w = succ_it->second[f.child++];
          if (!index.count(w)) {
            call.push_back({w});
            descended = true;
            break;
          }
          if (on_stack.count(w)) low[v] = std::min(low[v], index[w]);
        }
        if (descended) continue;
        if (low[v] == index[v]) {
          const int comp = scc_count_++;
          while (true) {
            const int w = stack.back();
            stack.pop_back();
            on_stack.erase(w);
            scc_of_[w] = comp;
            scc_members_[comp].push_back(w);
            if (w == v) break;
          }
        }
        call.pop_back();
        if (!call.empty()) {
          const int parent = call.back().node;
          low[parent] = std::min(low[parent], low[v]);
        }
        scc_order_.push_back(v);
      }
    }
  }

  void mark_fulfilling() {
    scc_fulfilling_.assign(scc_count_, 0);
    for (int comp = 0; comp < scc_count_; ++comp) {
      const auto& members = scc_members_[comp];
      bool has_edge = false;
      for (int v : members) {
        auto it = fwd_succ_.find(v);
        if (it == fwd_succ_.end()) continue;
        for (int w : it->second)
          if (scc_of_.at(w) == comp) has_edge = true;
      }
      if (!has_edge) continue;
      bool ok = true;
      for (int u : closure_.until_nodes) {
        bool active = false, witnessed = false;
        for (int v : members) {
          if (atoms_[v][u]) active = true;
          if (atoms_[v][closure_.rhs(u)]) witnessed = true;
        }
        if (active && !witnessed) {
          ok = false;
          break;
        }
      }
      scc_fulfilling_[comp] = ok;
    }
  }

  // -- witness assembly -----------------------------------------------------

  Assignment atom_assignment(int id) const {
    Assignment a;
    for (int v : closure_.var_nodes)
      if (atoms_[id][v]) a.insert(closure_.nodes[v].var);
    return a;
  }

  std::vector<int> path_from_initial(int target) const {
    if (opts_.initial_state_only) return {target};
    std::vector<int> path{target};
    int cur = target;
    while (region_parent_.at(cur) != cur) {
      cur = region_parent_.at(cur);
      path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  // First successor of an atom, preferring all-false choices; used for cheap
  // loop closure when no fulfillment obligations exist.
  int first_successor(int id) {
    const Atom cur_atom = atoms_[id];  // copy: intern() may grow atoms_
    std::vector<int8_t> forced = no_constraints();
    if (!successor_frame(cur_atom, forced))
      throw InvariantError("tableau: atom without successor in Since-only search");
    AtomEnumerator en(closure_, std::move(forced), &cur_atom, nullptr);
    int found = -1;
    en.run([&](const Atom& a) {
      found = intern(a);
      return false;  // stop at the first
    });
    if (found < 0) throw InvariantError("tableau: atom without successor in Since-only search");
    return found;
  }

  SatResult sat_result(int candidate, bool needs_fulfilling) {
    std::vector<int> prefix_atoms = path_from_initial(candidate);
    const size_t index = prefix_atoms.size() - 1;
    std::vector<int> loop_atoms;

    if (!needs_fulfilling) {
      // Extend greedily until an atom repeats; the tail becomes the loop and
      // anything before it joins the prefix.
      std::map<int, size_t> seen;
      std::vector<int> walk{candidate};
      seen[candidate] = 0;
      while (true) {
        const int nxt = first_successor(walk.back());
        auto it = seen.find(nxt);
        if (it != seen.end()) {
          loop_atoms.assign(walk.begin() + it->second, walk.end());
          walk.resize(it->second);
          break;
        }
        seen[nxt] = walk.size();
        walk.push_back(nxt);
      }
      prefix_atoms.pop_back();  // the walk re-adds the candidate unless it loops
      prefix_atoms.insert(prefix_atoms.end(), walk.begin(), walk.end());
    } else {
      // March toward a fulfilling component, then walk a cycle inside it that
      // visits a witness for every Until active there.
      const std::vector<int> march = bfs_to_fulfilling(candidate);
      prefix_atoms.insert(prefix_atoms.end(), march.begin() + 1, march.end());
      const int entry = prefix_atoms.back();
      prefix_atoms.pop_back();
      loop_atoms = fulfilling_cycle(entry);
    }

    Lasso lasso;
    for (int id : prefix_atoms) lasso.prefix.push_back(atom_assignment(id));
    for (int id : loop_atoms) lasso.loop.push_back(atom_assignment(id));
    Witness w{std::move(lasso), index};
    if (!eval_at(w.lasso, w.index, phi_))
      throw InvariantError("tableau: extracted witness failed verification: " +
                           w.lasso.to_json_text() + " index " + std::to_string(w.index));
    return {true, std::move(w), Strategy::Tableau};
  }

  std::vector<int> bfs_to_fulfilling(int from) const {
    std::map<int, int> parent{{from, from}};
    std::vector<int> q{from};
    for (size_t qi = 0; qi < q.size(); ++qi) {
      const int cur = q[qi];
      if (scc_fulfilling_[scc_of_.at(cur)]) {
        std::vector<int> path{cur};
        int v = cur;
        while (parent.at(v) != v) {
          v = parent.at(v);
          path.push_back(v);
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      auto it = fwd_succ_.find(cur);
      if (it == fwd_succ_.end()) continue;
      for (int nxt : it->second)
        if (parent.emplace(nxt, cur).second) q.push_back(nxt);
    }
    throw InvariantError("tableau: fulfilling component vanished");
  }

  std::vector<int> bfs_within_scc(int from, int to) const {
    const int comp = scc_of_.at(from);
    std::map<int, int> parent{{from, from}};
    std::vector<int> q{from};
    for (size_t qi = 0; qi < q.size(); ++qi) {
      const int cur = q[qi];
      if (cur == to && qi > 0) break;
      auto it = fwd_succ_.find(cur);
      if (it == fwd_succ_.end()) continue;
      for (int nxt : it->second) {
        if (scc_of_.at(nxt) != comp) continue;
        if (parent.emplace(nxt, cur).second) q.push_back(nxt);
      }
    }
    std::vector<int> path{to};
    int v = to;
    while (v != from) {
      v = parent.at(v);
      path.push_back(v);
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  std::vector<int> fulfilling_cycle(int entry) {
    const int comp = scc_of_.at(entry);
    std::vector<int> needed;
    for (int u : closure_.until_nodes) {
      bool active = false;
      for (int v : scc_members_[comp])
        if (atoms_[v][u]) active = true;
      if (!active) continue;
      for (int v : scc_members_[comp])
        if (atoms_[v][closure_.rhs(u)]) {
          needed.push_back(v);
          break;
        }
    }
    std::sort(needed.begin(), needed.end());
    needed.erase(std::unique(needed.begin(), needed.end()), needed.end());

    std::vector<int> walk{entry};
    for (int w : needed) {
      const std::vector<int> leg = bfs_within_scc(walk.back(), w);
      walk.insert(walk.end(), leg.begin() + 1, leg.end());
    }
    if (walk.back() != entry) {
      const std::vector<int> leg = bfs_within_scc(walk.back(), entry);
      walk.insert(walk.end(), leg.begin() + 1, leg.end());
    }
    if (walk.size() == 1) {
      // No witnesses to visit: take any cycle through the entry.
      int nxt = -1;
      for (int cand : fwd_succ_.at(entry))
        if (scc_of_.at(cand) == comp) {
          nxt = cand;
          break;
        }
      if (nxt < 0) throw InvariantError("tableau: fulfilling component without internal edge");
      walk.push_back(nxt);
      if (nxt != entry) {
        const std::vector<int> leg = bfs_within_scc(nxt, entry);
        walk.insert(walk.end(), leg.begin() + 1, leg.end());
      }
    }
    if (walk.back() == entry && walk.size() > 1) walk.pop_back();
    return walk;
  }

  const Formula& phi_;
  TableauOptions opts_;
  Closure closure_;

  std::vector<Atom> atoms_;
  std::unordered_map<Atom, int, AtomHash> atom_ids_;
  std::vector<int> candidates_;
  std::vector<int> init_atoms_;
  std::map<int, std::vector<int>> region_succ_;
  std::map<int, int> region_parent_;
  std::map<int, std::vector<int>> fwd_succ_;

  std::map<int, int> scc_of_;
  std::map<int, std::vector<int>> scc_members_;
  std::vector<char> scc_fulfilling_;
  std::vector<int> scc_order_;
  int scc_count_ = 0;
};

}  // namespace

SatResult decide_tableau(const Formula& phi, const TableauOptions& opts) {
  TableauSearch search(phi, opts);
  return search.run();
}

}  // namespace tsat
