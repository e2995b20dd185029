#include "tsat/synth.hpp"

#include <cstdint>
#include <map>
#include <vector>

#include "tsat/errors.hpp"

namespace tsat {

namespace {

// Bottom-up enumeration over semantic signatures instead of raw trees: a
// candidate is its truth table over (x, y) together with how often each
// designated variable occurs (counts saturate at 2). Keeping only the first
// (hence smallest) tree per signature makes the size cap cheap to exhaust
// while preserving the first-found result.
struct Candidate {
  uint8_t table;   // 4 bits over (x,y): row k = value at x=k>>1, y=k&1
  uint8_t uses_x;  // 0, 1, 2 = more than once
  uint8_t uses_y;
  FormulaPtr tree;
  int size;
};

uint8_t saturating_add(uint8_t a, uint8_t b) { return std::min<int>(2, a + b); }

class Enumerator {
 public:
  Enumerator(const Base& base, bool read_once, int max_nodes)
      : base_(base), read_once_(read_once), max_nodes_(max_nodes) {}

  // First candidate (smallest size, stable generation order) accepted by the
  // matcher, or null.
  template <typename Match>
  const Candidate* find(Match match) {
    for (int size = 1; size <= max_nodes_; ++size) {
      grow_to(size);
      for (const Candidate& c : by_size_[size])
        if (match(c)) return &c;
    }
    return nullptr;
  }

 private:
  void grow_to(int size) {
    while (static_cast<int>(by_size_.size()) <= size) {
      const int n = static_cast<int>(by_size_.size());
      by_size_.emplace_back();
      if (n == 0) continue;
      if (n == 1) {
        add({0b1100, 1, 0, f_var("x"), 1});  // x: rows 10,11
        add({0b1010, 0, 1, f_var("y"), 1});  // y: rows 01,11
        for (const auto& fn : base_.functions())
          if (fn->arity() == 0)
            add({static_cast<uint8_t>(fn->value_at(0) ? 0b1111 : 0), 0, 0,
                 Formula::make_apply(fn, {}), 1});
        continue;
      }
      for (const auto& fn : base_.functions()) {
        if (fn->arity() == 0 || fn->arity() > n - 1) continue;
        std::vector<const Candidate*> picked(fn->arity());
        compose(*fn, n, 0, n - 1, picked);
      }
    }
  }

  // All ways to split the remaining size among the function's arguments.
  void compose(const BoolFn& fn, int total, int arg, int budget,
               std::vector<const Candidate*>& picked) {
    const int arity = fn.arity();
    if (arg == arity) {
      if (budget != 0) return;
      emit(fn, total, picked);
      return;
    }
    const int remaining_args = arity - arg - 1;
    for (int share = 1; share <= budget - remaining_args; ++share) {
      for (const Candidate& c : by_size_[share]) {
        picked[arg] = &c;
        compose(fn, total, arg + 1, budget - share, picked);
      }
    }
  }

  void emit(const BoolFn& fn, int total, const std::vector<const Candidate*>& picked) {
    uint8_t uses_x = 0, uses_y = 0;
    for (const Candidate* c : picked) {
      uses_x = saturating_add(uses_x, c->uses_x);
      uses_y = saturating_add(uses_y, c->uses_y);
    }
    if (read_once_ && (uses_x > 1 || uses_y > 1)) return;
    uint8_t table = 0;
    for (int row = 0; row < 4; ++row) {
      unsigned k = 0;
      for (const Candidate* c : picked) k = (k << 1) | ((c->table >> row) & 1u);
      if (fn.value_at(k)) table |= 1u << row;
    }
    add_composed(fn, table, uses_x, uses_y, total, picked);
  }

  void add_composed(const BoolFn& fn, uint8_t table, uint8_t ux, uint8_t uy, int size,
                    const std::vector<const Candidate*>& picked) {
    const auto key = std::make_tuple(table, ux, uy);
    if (!seen_.insert(key).second) return;
    std::vector<FormulaPtr> args;
    args.reserve(picked.size());
    for (const Candidate* c : picked) args.push_back(c->tree);
    const BoolFnPtr* owned = base_.find(fn.name());
    by_size_[size].push_back({table, ux, uy, Formula::make_apply(*owned, std::move(args)), size});
  }

  void add(Candidate c) {
    const auto key = std::make_tuple(c.table, c.uses_x, c.uses_y);
    if (!seen_.insert(key).second) return;
    by_size_[c.size].push_back(std::move(c));
  }

  const Base& base_;
  bool read_once_;
  int max_nodes_;
  std::vector<std::vector<Candidate>> by_size_;
  std::set<std::tuple<uint8_t, uint8_t, uint8_t>> seen_;
};

uint8_t table_of_target(SynthTarget t) {
  switch (t) {
    case SynthTarget::And: return 0b1000;  // true only at x=1,y=1
    case SynthTarget::Or: return 0b1110;
    case SynthTarget::Not: return 0b0011;  // over x only: true at x=0 rows
  }
  return 0;
}

}  // namespace

FormulaPtr synth_short(const Base& base, SynthTarget target, int max_nodes) {
  Enumerator en(base, /*read_once=*/true, max_nodes);
  const bool unary = target == SynthTarget::Not;
  const uint8_t table = table_of_target(target);
  const uint8_t want_y = unary ? 0 : 1;
  const Candidate* c = en.find([&](const Candidate& cand) {
    return cand.table == table && cand.uses_x == 1 && cand.uses_y == want_y;
  });
  if (!c)
    throw SynthError("synthesis inconclusive: no read-once realization within " +
                     std::to_string(max_nodes) + " nodes");
  return c->tree;
}

FormulaPtr synth_fn(const Base& base, const BoolFn& target, int max_nodes) {
  if (target.arity() < 1 || target.arity() > 2)
    throw ArgumentError("synth_fn: only unary and binary targets are supported");
  // Expand a unary target to its binary table with y irrelevant.
  uint8_t table = 0;
  for (int row = 0; row < 4; ++row) {
    const bool x = (row >> 1) & 1, y = row & 1;
    const bool v = target.arity() == 1 ? target.value_at(x) : target.value_at((x << 1) | y);
    if (v) table |= 1u << row;
  }
  Enumerator en(base, /*read_once=*/false, max_nodes);
  // Unary targets must not mention y structurally; beyond that the table is
  // all that matters.
  const Candidate* c = en.find([&](const Candidate& cand) {
    return cand.table == table && (target.arity() == 2 || cand.uses_y == 0);
  });
  if (c) return c->tree;
  throw SynthError("synthesis inconclusive: no realization of '" + target.name() + "' within " +
                   std::to_string(max_nodes) + " nodes");
}

FormulaPtr instantiate_template(const Formula& tpl, const FormulaPtr& x, const FormulaPtr& y) {
  switch (tpl.op) {
    case Op::Var:
      if (tpl.var == "x") return x;
      if (tpl.var == "y") {
        if (!y) throw ArgumentError("template uses y but no argument was given");
        return y;
      }
      throw ArgumentError("template contains unexpected variable '" + tpl.var + "'");
    case Op::Apply: {
      std::vector<FormulaPtr> args;
      args.reserve(tpl.kids.size());
      for (const auto& k : tpl.kids) args.push_back(instantiate_template(*k, x, y));
      return Formula::make_apply(tpl.fn, std::move(args));
    }
    default:
      throw ArgumentError("template contains a temporal operator");
  }
}

}  // namespace tsat
