#include "tsat/gen.hpp"

#include "tsat/errors.hpp"

namespace tsat {

namespace {

FormulaPtr gen(std::mt19937& rng, const FragmentSpec& spec, int budget, int num_vars) {
  auto var = [&] {
    std::uniform_int_distribution<int> pick(0, num_vars - 1);
    return f_var("v" + std::to_string(pick(rng)));
  };

  // Constructors that fit into the remaining budget.
  struct Choice {
    int kind;  // 0 = var, 1 = function, 2 = temporal
    size_t idx;
  };
  std::vector<Choice> choices;
  choices.push_back({0, 0});
  const auto& fns = spec.base.functions();
  for (size_t i = 0; i < fns.size(); ++i)
    if (fns[i]->arity() <= budget - 1 || fns[i]->arity() == 0) choices.push_back({1, i});
  std::vector<TemporalOp> ops(spec.temporal.begin(), spec.temporal.end());
  for (size_t i = 0; i < ops.size(); ++i) {
    const int need = (ops[i] == TemporalOp::U || ops[i] == TemporalOp::S) ? 2 : 1;
    if (need <= budget - 1) choices.push_back({2, i});
  }

  std::uniform_int_distribution<size_t> pick(0, choices.size() - 1);
  const Choice c = choices[pick(rng)];
  switch (c.kind) {
    case 0:
      return var();
    case 1: {
      const BoolFnPtr& fn = fns[c.idx];
      if (fn->arity() == 0) return Formula::make_apply(fn, {});
      // Split the remaining budget across the arguments.
      std::vector<FormulaPtr> args;
      int rest = budget - 1;
      for (int a = 0; a < fn->arity(); ++a) {
        const int slots_left = fn->arity() - a - 1;
        std::uniform_int_distribution<int> share(1, std::max(1, rest - slots_left));
        const int take = a + 1 == fn->arity() ? rest : share(rng);
        args.push_back(gen(rng, spec, take, num_vars));
        rest -= take;
      }
      return Formula::make_apply(fn, std::move(args));
    }
    default: {
      const TemporalOp op = ops[c.idx];
      switch (op) {
        case TemporalOp::X: return f_next(gen(rng, spec, budget - 1, num_vars));
        case TemporalOp::F: return f_eventually(gen(rng, spec, budget - 1, num_vars));
        case TemporalOp::G: return f_globally(gen(rng, spec, budget - 1, num_vars));
        case TemporalOp::U:
        case TemporalOp::S: {
          const int rest = budget - 1;
          std::uniform_int_distribution<int> share(1, rest - 1);
          const int lhs = share(rng);
          FormulaPtr l = gen(rng, spec, lhs, num_vars);
          FormulaPtr r = gen(rng, spec, rest - lhs, num_vars);
          return op == TemporalOp::U ? f_until(std::move(l), std::move(r))
                                     : f_since(std::move(l), std::move(r));
        }
      }
      throw InvariantError("random_formula: unreachable");
    }
  }
}

}  // namespace

FormulaPtr random_formula(std::mt19937& rng, const FragmentSpec& spec, int max_nodes,
                          int num_vars) {
  if (max_nodes < 1 || num_vars < 1)
    throw ArgumentError("random_formula: need at least one node and one variable");
  std::uniform_int_distribution<int> size(1, max_nodes);
  return gen(rng, spec, size(rng), num_vars);
}

}  // namespace tsat
