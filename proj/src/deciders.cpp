#include "tsat/deciders.hpp"

#include <algorithm>
#include <map>

#include "tsat/errors.hpp"
#include "tsat/reductions.hpp"

namespace tsat {

namespace {

void check_fragment(const Formula& phi, const FragmentSpec& spec) {
  for (const auto& fn : functions_used(phi)) {
    const BoolFnPtr* found = spec.base.find(fn->name());
    if (!found || !(*found)->same_function(*fn))
      throw FragmentError("formula uses function '" + fn->name() + "' outside the base");
  }
  for (TemporalOp op : temporal_ops(phi))
    if (!spec.temporal.count(op))
      throw FragmentError("formula uses temporal operator " + to_string(op) +
                          " outside the fragment");
}

bool all_functions_builtin(const Formula& phi) {
  const auto fns = functions_used(phi);
  return std::ranges::all_of(fns, [](const BoolFnPtr& f) { return builtin::equivalent(*f); });
}

Witness verified_witness(const Formula& phi, Lasso lasso, size_t index) {
  Witness w{std::move(lasso), index};
  if (!eval_at(w.lasso, w.index, phi))
    throw InvariantError("decider produced a witness that fails verification");
  return w;
}

ConstStatus flip(ConstStatus s) {
  switch (s) {
    case ConstStatus::Const0: return ConstStatus::Const1;
    case ConstStatus::Const1: return ConstStatus::Const0;
    case ConstStatus::NoConstant: return ConstStatus::NoConstant;
  }
  return ConstStatus::NoConstant;
}

}  // namespace

std::string to_string(ConstStatus s) {
  switch (s) {
    case ConstStatus::Const0: return "const-0";
    case ConstStatus::Const1: return "const-1";
    case ConstStatus::NoConstant: return "no-constant";
  }
  return "?";
}

SatResult decide_all_true(const Formula& phi) {
  for (const auto& fn : functions_used(phi))
    if (!is_one_reproducing(*fn))
      throw FragmentError("decide_all_true: function '" + fn->name() + "' is not 1-reproducing");
  Lasso model = all_true_lasso(variables(phi));
  return {true, verified_witness(phi, std::move(model), 0), Strategy::AllTrueWitness};
}

SatResult decide_self_dual(const Formula& phi) {
  for (const auto& fn : functions_used(phi))
    if (!is_self_dual(*fn))
      throw FragmentError("decide_self_dual: function '" + fn->name() + "' is not self-dual");
  const Lasso ones = all_true_lasso(variables(phi));
  const Lasso zeros = all_false_lasso();
  const bool on_ones = eval_at(ones, 0, phi);
  const bool on_zeros = eval_at(zeros, 0, phi);
  if (on_ones == on_zeros)
    throw InvariantError("decide_self_dual: all-true and all-false structures agree");
  Lasso model = on_ones ? ones : zeros;
  return {true, verified_witness(phi, std::move(model), 0), Strategy::SelfDualWitness};
}

ConstStatus constant_analysis_n(const Formula& phi) {
  switch (phi.op) {
    case Op::Var:
      return ConstStatus::NoConstant;
    case Op::Apply: {
      const auto essential = essential_positions(*phi.fn);
      if (essential.size() > 1)
        throw FragmentError("constant_analysis_n: function '" + phi.fn->name() +
                            "' depends on more than one variable");
      if (essential.empty())
        return phi.fn->value_at(0) ? ConstStatus::Const1 : ConstStatus::Const0;
      // Unary in effect: either the projection or the negation of the
      // essential argument.
      const int pos = essential[0];
      const unsigned unit = 1u << (phi.fn->arity() - 1 - pos);
      const bool negating = phi.fn->value_at(0) && !phi.fn->value_at(unit);
      const ConstStatus arg = constant_analysis_n(*phi.kids[pos]);
      return negating ? flip(arg) : arg;
    }
    case Op::Next:
    case Op::Eventually:
    case Op::Globally:
      // X c, F c and G c are all equivalent to c.
      return constant_analysis_n(*phi.kids[0]);
    case Op::Until: {
      const ConstStatus rhs = constant_analysis_n(*phi.kids[1]);
      if (rhs != ConstStatus::NoConstant) return rhs;
      const ConstStatus lhs = constant_analysis_n(*phi.kids[0]);
      if (lhs == ConstStatus::Const0) return rhs;  // 0 U b  =  b
      if (lhs == ConstStatus::Const1) return rhs;  // 1 U b  =  F b, constant iff b is
      return ConstStatus::NoConstant;
    }
    case Op::Since: {
      const ConstStatus rhs = constant_analysis_n(*phi.kids[1]);
      if (rhs != ConstStatus::NoConstant) return rhs;
      const ConstStatus lhs = constant_analysis_n(*phi.kids[0]);
      if (lhs == ConstStatus::Const0) return rhs;  // 0 S b  =  b
      // 1 S b = "b held at some point", nonconstant whenever b is.
      return ConstStatus::NoConstant;
    }
  }
  throw InvariantError("constant_analysis_n: unreachable");
}

SatResult decide_n(const Formula& phi) {
  const ConstStatus status = constant_analysis_n(phi);
  if (status == ConstStatus::Const0) return {false, std::nullopt, Strategy::ConstantAnalysisN};
  // A nonconstant formula here is equivalent to a constant-free one built
  // from negation and temporal operators, which is self-dual; one of the two
  // uniform structures must work.
  const Lasso ones = all_true_lasso(variables(phi));
  if (eval_at(ones, 0, phi))
    return {true, verified_witness(phi, ones, 0), Strategy::ConstantAnalysisN};
  const Lasso zeros = all_false_lasso();
  if (eval_at(zeros, 0, phi))
    return {true, verified_witness(phi, zeros, 0), Strategy::ConstantAnalysisN};
  throw InvariantError("decide_n: satisfiable formula without a uniform model");
}

// ---------------------------------------------------------------------------
// Monotone rewriting
// ---------------------------------------------------------------------------

namespace {

bool is_propositional(const Formula& f) {
  if (f.op == Op::Var) return true;
  if (f.op != Op::Apply) return false;
  return std::ranges::all_of(f.kids,
                             [](const FormulaPtr& k) { return is_propositional(*k); });
}

// One bottom-up pass of the four replacement rules; sets `changed` whenever a
// node is rewritten.
FormulaPtr monotone_pass(const FormulaPtr& f, bool& changed) {
  std::vector<FormulaPtr> kids;
  kids.reserve(f->kids.size());
  bool kid_changed = false;
  for (const auto& k : f->kids) kids.push_back(monotone_pass(k, kid_changed));
  FormulaPtr cur = f;
  if (kid_changed) {
    changed = true;
    switch (f->op) {
      case Op::Apply: cur = Formula::make_apply(f->fn, kids); break;
      case Op::Next:
      case Op::Eventually:
      case Op::Globally: cur = Formula::make_unary(f->op, kids[0]); break;
      case Op::Until:
      case Op::Since: cur = Formula::make_binary(f->op, kids[0], kids[1]); break;
      case Op::Var: break;
    }
  }

  auto rewrite = [&](FormulaPtr to) {
    changed = true;
    return to;
  };

  switch (cur->op) {
    case Op::Var:
      return cur;
    case Op::Apply: {
      if (is_constant(*cur, false)) return cur;  // already the constant 0
      // A monotone propositional subformula is unsatisfiable iff it is
      // false under the all-true assignment.
      if (is_propositional(*cur) && !eval_prop(*cur, variables(*cur)))
        return rewrite(f_false());
      // Application on arguments already known to be 0: test the function on
      // the 0/1 abstraction of its arguments.
      if (cur->fn->arity() > 0) {
        std::vector<bool> abstracted(cur->kids.size());
        for (size_t i = 0; i < cur->kids.size(); ++i)
          abstracted[i] = !is_constant(*cur->kids[i], false);
        if (!cur->fn->eval(abstracted)) return rewrite(f_false());
      }
      return cur;
    }
    case Op::Next:
    case Op::Eventually:
    case Op::Globally:
      if (is_constant(*cur->kids[0], false)) return rewrite(f_false());  // X0, F0, G0
      return cur;
    case Op::Until:
    case Op::Since:
      if (is_constant(*cur->kids[1], false)) return rewrite(f_false());  // a U 0, a S 0
      if (is_constant(*cur->kids[0], false)) return rewrite(cur->kids[1]);  // 0 U b, 0 S b
      return cur;
  }
  throw InvariantError("monotone_pass: unreachable");
}

}  // namespace

SatResult decide_monotone(const Formula& phi) {
  for (const auto& fn : functions_used(phi))
    if (!is_monotone(*fn))
      throw FragmentError("decide_monotone: function '" + fn->name() + "' is not monotone");
  FormulaPtr cur = std::make_shared<Formula>(phi);
  const size_t bound = node_count(phi) + 2;
  for (size_t round = 0; round < bound; ++round) {
    bool changed = false;
    cur = monotone_pass(cur, changed);
    if (!changed) break;
  }
  if (is_constant(*cur, false)) return {false, std::nullopt, Strategy::MonotoneRewrite};
  Lasso model = all_true_lasso(variables(phi));
  return {true, verified_witness(phi, std::move(model), 0), Strategy::MonotoneRewrite};
}

// ---------------------------------------------------------------------------
// Parity decomposition for linear bases with X
// ---------------------------------------------------------------------------

namespace {

// Formula over a linear base with only X, canonicalized: the set of (X-depth,
// variable) pairs with odd occurrence count, plus a parity constant.
struct ParityForm {
  std::set<std::pair<int, std::string>> atoms;
  bool constant = false;

  void toggle(int depth, const std::string& var) {
    auto key = std::make_pair(depth, var);
    if (!atoms.erase(key)) atoms.insert(key);
  }
};

void parity_collect(const Formula& f, int depth, ParityForm& out) {
  switch (f.op) {
    case Op::Var:
      out.toggle(depth, f.var);
      return;
    case Op::Next:
      parity_collect(*f.kids[0], depth + 1, out);
      return;
    case Op::Apply: {
      if (!is_linear(*f.fn))
        throw FragmentError("decide_xor_next: function '" + f.fn->name() + "' is not linear");
      const AffineForm form = affine_form(*f.fn);
      if (form.constant) out.constant = !out.constant;
      for (size_t i = 0; i < f.kids.size(); ++i)
        if (form.coeffs[i]) parity_collect(*f.kids[i], depth, out);
      return;
    }
    default:
      throw FragmentError("decide_xor_next: temporal operator other than X");
  }
}

struct SatTaut {
  bool sat;
  bool taut;
};

// Satisfiability and tautology of  X p1 ^ ... ^ X pk ^ p  with p the depth-0
// part: a nonconstant p settles both; otherwise recurse on the X-stripped
// remainder with p's constant folded per the parity.
SatTaut parity_decide(const ParityForm& form) {
  bool depth0 = false;
  for (const auto& [d, v] : form.atoms)
    if (d == 0) depth0 = true;
  if (depth0) return {true, false};
  if (form.atoms.empty()) return {form.constant, form.constant};

  ParityForm rest;
  for (const auto& [d, v] : form.atoms) rest.atoms.emplace(d - 1, v);
  rest.constant = false;
  const SatTaut inner = parity_decide(rest);
  if (!form.constant) return inner;
  return {!inner.taut, !inner.sat};
}

}  // namespace

SatResult decide_xor_next(const Formula& phi, const DecideOptions& opts) {
  ParityForm form;
  parity_collect(phi, 0, form);
  const SatTaut verdict = parity_decide(form);
  if (!verdict.sat) return {false, std::nullopt, Strategy::XorNext};
  auto witness = sat_bounded(phi, x_depth(phi) + 1, 1, opts.bounded);
  if (!witness) throw InvariantError("decide_xor_next: bounded search missed a model");
  return {true, verified_witness(phi, witness->lasso, witness->index), Strategy::XorNext};
}

SatResult decide_x_bounded(const Formula& phi, const DecideOptions& opts) {
  const int depth = x_depth(phi);
  const std::set<std::string> var_set = variables(phi);
  const std::vector<std::string> vars(var_set.begin(), var_set.end());
  const size_t states = static_cast<size_t>(depth) + 1;
  const size_t bits = vars.size() * states;
  if (bits > 62 || (uint64_t{1} << bits) * node_count(phi) > opts.bounded.work_limit)
    throw ResourceError("decide_x_bounded: assignment space exceeds the work limit");
  for (uint64_t id = 0; id < (uint64_t{1} << bits); ++id) {
    Lasso s;
    s.prefix.resize(states);
    s.loop = {Assignment{}};
    for (size_t j = 0; j < states; ++j)
      for (size_t v = 0; v < vars.size(); ++v)
        if ((id >> (bits - 1 - (j * vars.size() + v))) & 1u) s.prefix[j].insert(vars[v]);
    if (eval_at(s, 0, phi))
      return {true, verified_witness(phi, std::move(s), 0), Strategy::XBounded};
  }
  return {false, std::nullopt, Strategy::XBounded};
}

SatResult decide_prop(const Formula& phi, const Base& base, const DecideOptions& opts) {
  if (!temporal_ops(phi).empty())
    throw FragmentError("decide_prop: formula contains temporal operators");
  const std::set<std::string> var_set = variables(phi);
  const std::vector<std::string> vars(var_set.begin(), var_set.end());

  if (base_within(base, CloneTag::L)) {
    // Affine analysis: constant from the all-false point, one coefficient
    // per unit flip.
    const bool c = eval_prop(phi, {});
    if (c) {
      Lasso model = all_false_lasso();
      return {true, verified_witness(phi, std::move(model), 0), Strategy::PropLinear};
    }
    for (const auto& v : vars)
      if (eval_prop(phi, {v}) != c) {
        Lasso model{{}, {Assignment{v}}};
        return {true, verified_witness(phi, std::move(model), 0), Strategy::PropLinear};
      }
    return {false, std::nullopt, Strategy::PropLinear};
  }

  const size_t bits = vars.size();
  if (bits > 62 || (uint64_t{1} << bits) * node_count(phi) > opts.bounded.work_limit)
    throw ResourceError("decide_prop: assignment space exceeds the work limit");
  for (uint64_t id = 0; id < (uint64_t{1} << bits); ++id) {
    Assignment a;
    for (size_t v = 0; v < bits; ++v)
      if ((id >> (bits - 1 - v)) & 1u) a.insert(vars[v]);
    if (eval_prop(phi, a)) {
      Lasso model{{}, {std::move(a)}};
      return {true, verified_witness(phi, std::move(model), 0), Strategy::PropEnum};
    }
  }
  return {false, std::nullopt, Strategy::PropEnum};
}

SatResult decide(const Formula& phi, const FragmentSpec& spec, const DecideOptions& opts) {
  check_fragment(phi, spec);
  const Verdict verdict = classify(spec);
  switch (verdict.strategy) {
    case Strategy::AllTrueWitness: return decide_all_true(phi);
    case Strategy::SelfDualWitness: return decide_self_dual(phi);
    case Strategy::ConstantAnalysisN: return decide_n(phi);
    case Strategy::MonotoneRewrite: return decide_monotone(phi);
    case Strategy::XorNext: return decide_xor_next(phi, opts);
    case Strategy::PropLinear:
    case Strategy::PropEnum: return decide_prop(phi, spec.base, opts);
    case Strategy::XBounded: return decide_x_bounded(phi, opts);
    case Strategy::Tableau: break;
  }
  if (all_functions_builtin(phi)) return decide_tableau(phi, opts.tableau);
  // Flatten into built-in connectives, decide, and pull the witness back.
  const ReductionOutput flat = flatten(phi, FlattenMode::Full);
  SatResult flat_result = decide_tableau(*flat.formula, opts.tableau);
  if (!flat_result.satisfiable) return {false, std::nullopt, Strategy::Tableau};
  Witness w = std::move(*flat_result.witness);
  auto strip = [](std::vector<Assignment>& states) {
    for (auto& a : states)
      for (auto it = a.begin(); it != a.end();)
        it = it->starts_with(kReservedPrefix) ? a.erase(it) : std::next(it);
  };
  strip(w.lasso.prefix);
  strip(w.lasso.loop);
  return {true, verified_witness(phi, std::move(w.lasso), w.index), Strategy::Tableau};
}

}  // namespace tsat
