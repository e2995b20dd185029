#include "tsat/reductions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "tsat/errors.hpp"

namespace tsat {

namespace {

// ---------------------------------------------------------------------------
// Shared helpers
// ---------------------------------------------------------------------------

FormulaPtr fold_and(const std::vector<FormulaPtr>& parts) {
  if (parts.empty()) throw ArgumentError("fold_and: empty conjunction");
  FormulaPtr out = parts.back();
  for (size_t i = parts.size() - 1; i-- > 0;) out = f_and(parts[i], out);
  return out;
}

// Disjunctive normal form of a function over the given argument formulae.
FormulaPtr dnf_template(const BoolFn& fn, const std::vector<FormulaPtr>& args) {
  if (fn.arity() == 0) return fn.value_at(0) ? f_true() : f_false();
  std::vector<FormulaPtr> rows;
  for (unsigned k = 0; k < (1u << fn.arity()); ++k) {
    if (!fn.value_at(k)) continue;
    std::vector<FormulaPtr> lits;
    for (int i = 0; i < fn.arity(); ++i) {
      const bool bit = (k >> (fn.arity() - 1 - i)) & 1u;
      lits.push_back(bit ? args[i] : f_not(args[i]));
    }
    rows.push_back(fold_and(lits));
  }
  if (rows.empty()) return f_false();
  FormulaPtr out = rows.back();
  for (size_t i = rows.size() - 1; i-- > 0;) out = f_or(rows[i], out);
  return out;
}

FormulaPtr expand_iff(const FormulaPtr& a, const FormulaPtr& b) {
  return f_or(f_and(a, b), f_and(f_not(a), f_not(b)));
}

bool fn_is(const BoolFn& f, const BoolFnPtr& b) { return f.same_function(*b); }

}  // namespace

// ---------------------------------------------------------------------------
// Flattening
// ---------------------------------------------------------------------------

namespace {

void collect_subformulas(const FormulaPtr& f, std::vector<FormulaPtr>& out,
                         std::map<std::string, int>& seen) {
  const std::string key = print_formula(*f);
  if (seen.emplace(key, static_cast<int>(out.size())).second) out.push_back(f);
  for (const auto& k : f->kids) collect_subformulas(k, out, seen);
}

}  // namespace

std::vector<FormulaPtr> subformulas(const Formula& phi) {
  std::vector<FormulaPtr> out;
  std::map<std::string, int> seen;
  collect_subformulas(std::make_shared<Formula>(phi), out, seen);
  return out;
}

ReductionOutput flatten(const Formula& phi, FlattenMode mode) {
  if (mode == FlattenMode::FutureOnly)
    for (TemporalOp op : temporal_ops(phi))
      if (op != TemporalOp::F && op != TemporalOp::G)
        throw ArgumentError("flatten: FutureOnly mode admits only F and G, found " +
                            to_string(op));

  const std::vector<FormulaPtr> subs = subformulas(phi);
  std::map<std::string, int> index;
  for (size_t i = 0; i < subs.size(); ++i) index[print_formula(*subs[i])] = static_cast<int>(i);

  ReductionOutput out;
  auto xvar = [&](const Formula& sub) {
    return f_var("__x" + std::to_string(index.at(print_formula(sub)) + 1));
  };
  auto mode_f = [&](FormulaPtr a) {
    return mode == FlattenMode::Full ? f_until(f_true(), std::move(a))
                                     : f_eventually(std::move(a));
  };
  auto mode_g = [&](FormulaPtr a) { return f_not(mode_f(f_not(std::move(a)))); };

  std::vector<FormulaPtr> constraints;
  for (size_t i = 0; i < subs.size(); ++i) {
    const Formula& sub = *subs[i];
    out.fresh_vars.push_back({"__x" + std::to_string(i + 1),
                              "names subformula " + print_formula(sub)});
    FormulaPtr rhs;
    switch (sub.op) {
      case Op::Var:
        rhs = f_var(sub.var);
        break;
      case Op::Apply: {
        std::vector<FormulaPtr> args;
        for (const auto& k : sub.kids) args.push_back(xvar(*k));
        rhs = dnf_template(*sub.fn, args);
        break;
      }
      case Op::Next:
        rhs = f_next(xvar(*sub.kids[0]));
        break;
      case Op::Eventually:
        rhs = mode_f(xvar(*sub.kids[0]));
        break;
      case Op::Globally:
        rhs = mode_g(xvar(*sub.kids[0]));
        break;
      case Op::Until:
        rhs = f_until(xvar(*sub.kids[0]), xvar(*sub.kids[1]));
        break;
      case Op::Since:
        rhs = f_since(xvar(*sub.kids[0]), xvar(*sub.kids[1]));
        break;
    }
    const FormulaPtr defining = expand_iff(xvar(sub), rhs);
    if (mode == FlattenMode::Full)
      constraints.push_back(
          f_and(mode_g(defining), f_not(f_since(f_true(), f_not(defining)))));
    else
      constraints.push_back(mode_g(defining));
  }

  std::vector<FormulaPtr> parts{xvar(*subs[0])};
  parts.insert(parts.end(), constraints.begin(), constraints.end());
  out.formula = fold_and(parts);
  return out;
}

// ---------------------------------------------------------------------------
// Rewriting over a base with the truth anchor
// ---------------------------------------------------------------------------

namespace {

struct BaseTemplates {
  Base bprime;  // base plus the constant 1
  FormulaPtr tpl_and, tpl_or, tpl_not;
};

BaseTemplates make_templates(const Base& base) {
  BaseTemplates t;
  for (const auto& fn : base.functions()) t.bprime.add(fn);
  if (const BoolFnPtr* existing = t.bprime.find("true")) {
    if (!(*existing)->same_function(*builtin::fn_true()))
      throw ArgumentError("base defines 'true' with a different table");
  } else {
    t.bprime.add(builtin::fn_true());
  }
  t.tpl_and = synth_short(t.bprime, SynthTarget::And);
  t.tpl_or = synth_short(t.bprime, SynthTarget::Or);
  t.tpl_not = synth_short(t.bprime, SynthTarget::Not);
  return t;
}

// Rewrites a formula over and/or/not (plus constants) into base-plus-1 form,
// leaving variables and temporal operators in place.
FormulaPtr rewrite_over(const BaseTemplates& t, const Formula& f) {
  switch (f.op) {
    case Op::Var:
      return f_var(f.var);
    case Op::Apply: {
      if (fn_is(*f.fn, builtin::fn_and()))
        return instantiate_template(*t.tpl_and, rewrite_over(t, *f.kids[0]),
                                    rewrite_over(t, *f.kids[1]));
      if (fn_is(*f.fn, builtin::fn_or()))
        return instantiate_template(*t.tpl_or, rewrite_over(t, *f.kids[0]),
                                    rewrite_over(t, *f.kids[1]));
      if (fn_is(*f.fn, builtin::fn_not()))
        return instantiate_template(*t.tpl_not, rewrite_over(t, *f.kids[0]), nullptr);
      if (fn_is(*f.fn, builtin::fn_true()))
        return Formula::make_apply(*t.bprime.find("true"), {});
      if (fn_is(*f.fn, builtin::fn_false()))
        return instantiate_template(
            *t.tpl_not, Formula::make_apply(*t.bprime.find("true"), {}), nullptr);
      throw ArgumentError("rewrite: connective '" + f.fn->name() +
                          "' is not among and, or, not");
    }
    case Op::Next:
    case Op::Eventually:
    case Op::Globally:
      return Formula::make_unary(f.op, rewrite_over(t, *f.kids[0]));
    case Op::Until:
    case Op::Since:
      return Formula::make_binary(f.op, rewrite_over(t, *f.kids[0]),
                                  rewrite_over(t, *f.kids[1]));
  }
  throw InvariantError("rewrite_over: unreachable");
}

// Every constant-1 leaf becomes the given variable.
FormulaPtr replace_true(const Formula& f, const FormulaPtr& t) {
  if (is_constant(f, true)) return t;
  if (f.kids.empty())
    return f.op == Op::Var ? f_var(f.var) : Formula::make_apply(f.fn, {});
  std::vector<FormulaPtr> kids;
  for (const auto& k : f.kids) kids.push_back(replace_true(*k, t));
  switch (f.op) {
    case Op::Apply: return Formula::make_apply(f.fn, std::move(kids));
    case Op::Next:
    case Op::Eventually:
    case Op::Globally: return Formula::make_unary(f.op, kids[0]);
    case Op::Until:
    case Op::Since: return Formula::make_binary(f.op, kids[0], kids[1]);
    default: throw InvariantError("replace_true: unreachable");
  }
}

const char* kAnchorName = "__t";

BoolFn and_not_fn() { return BoolFn::from_bits("and_not", 2, "0010"); }

}  // namespace

ReductionOutput rewrite_with_true_anchor(const Formula& phi, const Base& base, AnchorOps ops) {
  if (!generates_above_s1(base))
    throw FragmentError("anchor rewrite: base must generate a clone above the 1-separating "
                        "functions");
  for (const auto& fn : functions_used(phi))
    if (!fn_is(*fn, builtin::fn_and()) && !fn_is(*fn, builtin::fn_or()) &&
        !fn_is(*fn, builtin::fn_not()))
      throw ArgumentError("anchor rewrite: input must use only and, or, not");
  const std::set<TemporalOp> want =
      ops == AnchorOps::GX ? std::set<TemporalOp>{TemporalOp::G, TemporalOp::X}
                           : std::set<TemporalOp>{TemporalOp::F, TemporalOp::X};
  for (TemporalOp op : temporal_ops(phi))
    if (!want.count(op))
      throw ArgumentError("anchor rewrite: temporal operator " + to_string(op) +
                          " not in the requested set");

  const BaseTemplates tpls = make_templates(base);
  const FormulaPtr t = f_var(kAnchorName);
  const FormulaPtr anchored = replace_true(*rewrite_over(tpls, phi), t);

  const FormulaPtr and_b = synth_fn(base, *builtin::fn_and());
  FormulaPtr forever_t;
  if (ops == AnchorOps::GX) {
    forever_t = f_globally(t);
  } else {
    const FormulaPtr g_b = synth_fn(base, and_not_fn());
    forever_t = instantiate_template(
        *g_b, t, f_eventually(instantiate_template(*g_b, t, f_next(t))));
  }
  ReductionOutput out;
  out.formula = instantiate_template(*and_b, anchored,
                                     instantiate_template(*and_b, t, forever_t));
  out.fresh_vars.push_back({kAnchorName, "truth anchor"});
  return out;
}

// ---------------------------------------------------------------------------
// QBF
// ---------------------------------------------------------------------------

QbfInstance parse_qbf(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  QbfInstance qbf;
  std::string matrix_text;
  bool in_matrix = false;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string head;
    if (!(fields >> head)) continue;
    if (!in_matrix && (head == "forall" || head == "exists")) {
      std::string var;
      if (!(fields >> var)) throw ArgumentError("qbf: quantifier line without a variable");
      std::string extra;
      if (fields >> extra) throw ArgumentError("qbf: trailing text on quantifier line");
      if (var.starts_with(kReservedPrefix))
        throw ArgumentError("qbf: variable '" + var + "' uses the reserved prefix");
      for (const auto& [q, v] : qbf.prefix)
        if (v == var) throw ArgumentError("qbf: duplicate quantifier variable '" + var + "'");
      qbf.prefix.emplace_back(head == "forall" ? Quant::ForAll : Quant::Exists, var);
    } else {
      in_matrix = true;
      matrix_text += line + " ";
    }
  }
  if (matrix_text.empty()) throw ArgumentError("qbf: missing matrix");
  qbf.matrix = parse_formula(matrix_text, Base{});
  for (const auto& fn : functions_used(*qbf.matrix))
    if (!fn_is(*fn, builtin::fn_and()) && !fn_is(*fn, builtin::fn_or()) &&
        !fn_is(*fn, builtin::fn_not()) && fn->arity() != 0)
      throw ArgumentError("qbf: matrix must use only and, or, not and constants");
  if (!temporal_ops(*qbf.matrix).empty())
    throw ArgumentError("qbf: matrix must be propositional");
  std::set<std::string> bound;
  for (const auto& [q, v] : qbf.prefix) bound.insert(v);
  for (const auto& v : variables(*qbf.matrix))
    if (!bound.count(v)) throw ArgumentError("qbf: matrix variable '" + v + "' is unbound");
  return qbf;
}

std::string print_qbf(const QbfInstance& qbf) {
  std::string out;
  for (const auto& [q, v] : qbf.prefix)
    out += (q == Quant::ForAll ? "forall " : "exists ") + v + "\n";
  out += print_formula(*qbf.matrix) + "\n";
  return out;
}

bool qbf_valid(const QbfInstance& qbf) {
  Assignment assignment;
  std::function<bool(size_t)> go = [&](size_t i) -> bool {
    if (i == qbf.prefix.size()) return eval_prop(*qbf.matrix, assignment);
    const auto& [q, v] = qbf.prefix[i];
    bool result;
    if (q == Quant::ForAll) {
      result = go(i + 1);
      if (result) {
        assignment.insert(v);
        result = go(i + 1);
        assignment.erase(v);
      }
    } else {
      result = go(i + 1);
      if (!result) {
        assignment.insert(v);
        result = go(i + 1);
        assignment.erase(v);
      }
    }
    return result;
  };
  return go(0);
}

namespace {

// The encoding's building blocks, parameterized over Since/Until so the
// mirrored variant shares the construction.
struct QbfEncoder {
  const QbfInstance& qbf;
  Op op;  // Op::Since or Op::Until

  std::string tname(size_t i) const { return "__t" + std::to_string(i); }
  std::string uname(size_t i) const { return "__u" + std::to_string(i); }
  std::string xname(size_t i) const { return qbf.prefix[i - 1].second; }  // 1-based

  FormulaPtr chain(FormulaPtr a, FormulaPtr b) const {
    return Formula::make_binary(op, std::move(a), std::move(b));
  }

  FormulaPtr lit(const std::string& v, bool positive) const {
    return positive ? f_var(v) : f_not(f_var(v));
  }

  // The five-literal conjunction over u_{i-1}, t_{i-1}, u_i, t_i, x_i.
  FormulaPtr block5(size_t i, bool up, bool tp, bool uc, bool tc, bool x) const {
    return fold_and({lit(uname(i - 1), up), lit(tname(i - 1), tp), lit(uname(i), uc),
                     lit(tname(i), tc), lit(xname(i), x)});
  }

  FormulaPtr alpha() const {
    const FormulaPtr a = fold_and({lit(uname(0), true), lit(tname(0), false)});
    const FormulaPtr b = fold_and({lit(uname(0), false), lit(tname(0), false)});
    const FormulaPtr c = fold_and({lit(uname(0), false), lit(tname(0), true)});
    return f_and(a, f_and(chain(a, chain(b, c)), chain(chain(a, b), c)));
  }

  // Right-nested and left-nested runs through the six universal blocks.
  FormulaPtr beta1(size_t i) const {
    return chain(block5(i, 1, 0, 1, 0, 0),
                 chain(block5(i, 0, 0, 0, 0, 0),
                       chain(block5(i, 0, 0, 0, 1, 0),
                             chain(block5(i, 0, 0, 1, 0, 1),
                                   chain(block5(i, 0, 0, 0, 0, 1),
                                         block5(i, 0, 1, 0, 1, 1))))));
  }
  FormulaPtr beta2(size_t i) const {
    return chain(chain(chain(chain(chain(block5(i, 1, 0, 1, 0, 0), block5(i, 0, 0, 0, 0, 0)),
                                   block5(i, 0, 0, 0, 1, 0)),
                             block5(i, 0, 0, 1, 0, 1)),
                       block5(i, 0, 0, 0, 0, 1)),
                 block5(i, 0, 1, 0, 1, 1));
  }

  // The three-block runs that pin an existential variable to one value.
  FormulaPtr gamma(size_t i, bool x) const {
    return chain(block5(i, 1, 0, 1, 0, x),
                 chain(block5(i, 0, 0, 0, 0, x), block5(i, 0, 1, 0, 1, x)));
  }

  // psi' = alpha and the per-quantifier runs anchored at t0, and the matrix
  // anchored at t0.
  std::vector<FormulaPtr> top_conjuncts() const {
    std::vector<FormulaPtr> parts{alpha()};
    const FormulaPtr t0 = f_var(tname(0));
    for (size_t i = 1; i <= qbf.prefix.size(); ++i)
      if (qbf.prefix[i - 1].first == Quant::ForAll)
        parts.push_back(chain(f_and(beta1(i), beta2(i)), t0));
    for (size_t i = 1; i <= qbf.prefix.size(); ++i)
      if (qbf.prefix[i - 1].first == Quant::Exists)
        parts.push_back(chain(f_or(gamma(i, false), gamma(i, true)), t0));
    parts.push_back(chain(qbf.matrix, t0));
    return parts;
  }

  std::vector<FreshVar> fresh_vars() const {
    std::vector<FreshVar> out;
    for (size_t i = 0; i <= qbf.prefix.size(); ++i) {
      out.push_back({tname(i), "block end marker " + std::to_string(i)});
      out.push_back({uname(i), "block start marker " + std::to_string(i)});
    }
    return out;
  }
};

}  // namespace

ReductionOutput qbf_to_since(const QbfInstance& qbf) {
  QbfEncoder enc{qbf, Op::Since};
  return {fold_and(enc.top_conjuncts()), enc.fresh_vars()};
}

ReductionOutput qbf_to_until(const QbfInstance& qbf) {
  QbfEncoder enc{qbf, Op::Until};
  return {fold_and(enc.top_conjuncts()), enc.fresh_vars()};
}

namespace {

// Balanced conjunction tree over and_B, logarithmic depth.
FormulaPtr balanced_and_b(const Formula& and_b, const std::vector<FormulaPtr>& parts,
                          size_t lo, size_t hi) {
  if (hi - lo == 1) return parts[lo];
  const size_t mid = lo + (hi - lo + 1) / 2;
  return instantiate_template(and_b, balanced_and_b(and_b, parts, lo, mid),
                              balanced_and_b(and_b, parts, mid, hi));
}

}  // namespace

ReductionOutput qbf_to_since_b(const QbfInstance& qbf, const Base& base) {
  if (!generates_above_s1(base))
    throw FragmentError("qbf_to_since_b: base must generate a clone above the 1-separating "
                        "functions");
  const BaseTemplates tpls = make_templates(base);
  const FormulaPtr and_b = synth_fn(base, *builtin::fn_and());
  const FormulaPtr t = f_var(kAnchorName);

  // A propositional block becomes and_B(t, block over B' with 1 swapped for
  // t); the conjunction with t pins t true wherever the block holds, which
  // is what makes the swap sound.
  auto wrap_block = [&](const FormulaPtr& prop) {
    const FormulaPtr over_b = replace_true(*rewrite_over(tpls, *prop), t);
    return instantiate_template(*and_b, t, over_b);
  };

  QbfEncoder enc{qbf, Op::Since};
  auto chain = [&](FormulaPtr a, FormulaPtr b) {
    return Formula::make_binary(Op::Since, std::move(a), std::move(b));
  };
  const FormulaPtr t0 = f_var(enc.tname(0));

  // alpha with its literal blocks wrapped and its two outer conjunctions
  // realized through and_B directly.
  const FormulaPtr a = wrap_block(fold_and({enc.lit(enc.uname(0), true), enc.lit(enc.tname(0), false)}));
  const FormulaPtr b = wrap_block(fold_and({enc.lit(enc.uname(0), false), enc.lit(enc.tname(0), false)}));
  const FormulaPtr c = wrap_block(fold_and({enc.lit(enc.uname(0), false), enc.lit(enc.tname(0), true)}));
  const FormulaPtr alpha_b = instantiate_template(
      *and_b, a,
      instantiate_template(*and_b, chain(a, chain(b, c)), chain(chain(a, b), c)));

  std::vector<FormulaPtr> parts{alpha_b};
  for (size_t i = 1; i <= qbf.prefix.size(); ++i) {
    const auto wb = [&](bool up, bool tp, bool uc, bool tc, bool x) {
      return wrap_block(enc.block5(i, up, tp, uc, tc, x));
    };
    if (qbf.prefix[i - 1].first == Quant::ForAll) {
      const FormulaPtr b1 =
          chain(wb(1, 0, 1, 0, 0),
                chain(wb(0, 0, 0, 0, 0),
                      chain(wb(0, 0, 0, 1, 0),
                            chain(wb(0, 0, 1, 0, 1), chain(wb(0, 0, 0, 0, 1), wb(0, 1, 0, 1, 1))))));
      const FormulaPtr b2 =
          chain(chain(chain(chain(chain(wb(1, 0, 1, 0, 0), wb(0, 0, 0, 0, 0)), wb(0, 0, 0, 1, 0)),
                            wb(0, 0, 1, 0, 1)),
                      wb(0, 0, 0, 0, 1)),
                wb(0, 1, 0, 1, 1));
      parts.push_back(chain(instantiate_template(*and_b, b1, b2), t0));
    } else {
      auto gamma_b = [&](bool x) {
        return chain(wb(1, 0, 1, 0, x), chain(wb(0, 0, 0, 0, x), wb(0, 1, 0, 1, x)));
      };
      const FormulaPtr disj =
          instantiate_template(*tpls.tpl_or, gamma_b(false), gamma_b(true));
      parts.push_back(chain(disj, t0));
    }
  }
  parts.push_back(chain(wrap_block(qbf.matrix), t0));

  FormulaPtr result = balanced_and_b(*and_b, parts, 0, parts.size());
  // Constants introduced by the or-template outside the wrapped blocks are
  // evaluated only at states where t is pinned, so the swap stays sound.
  result = replace_true(*result, t);

  for (const auto& fn : functions_used(*result))
    if (!base.find(fn->name()))
      throw InvariantError("qbf_to_since_b: output uses '" + fn->name() +
                           "' outside the base");

  ReductionOutput out{std::move(result), enc.fresh_vars()};
  out.fresh_vars.push_back({kAnchorName, "truth anchor"});
  return out;
}

// ---------------------------------------------------------------------------
// Model shape verification
// ---------------------------------------------------------------------------

bool verify_model_shape(const Lasso& structure, size_t m, const QbfInstance& qbf) {
  const ReductionOutput enc = qbf_to_since(qbf);
  if (!eval_at(structure, m, *enc.formula))
    throw ArgumentError("verify_model_shape: the structure does not satisfy the encoding "
                        "at the given index");

  const size_t n = qbf.prefix.size();
  std::vector<size_t> forall_indices;  // 1-based variable indices
  for (size_t i = 1; i <= n; ++i)
    if (qbf.prefix[i - 1].first == Quant::ForAll) forall_indices.push_back(i);
  const size_t k = forall_indices.size();
  if (k > 20) throw ResourceError("verify_model_shape: too many universal quantifiers");
  const size_t block_count = 3 * (size_t{1} << k);

  // Relevant variables: x_1..x_n and the markers.
  std::vector<std::string> relevant;
  for (size_t i = 1; i <= n; ++i) relevant.push_back(qbf.prefix[i - 1].second);
  for (size_t i = 0; i <= n; ++i) {
    relevant.push_back("__t" + std::to_string(i));
    relevant.push_back("__u" + std::to_string(i));
  }
  auto fingerprint = [&](size_t pos) {
    std::vector<bool> fp;
    const Assignment& a = structure.at(pos);
    fp.reserve(relevant.size());
    for (const auto& v : relevant) fp.push_back(a.count(v) != 0);
    return fp;
  };

  // Split s_m, s_{m-1}, ... into maximal runs of constant fingerprint; the
  // blocks must be exactly the first 3 * 2^k of them (the final one may run
  // longer, which the cut-point bound allows).
  std::vector<std::pair<size_t, std::vector<bool>>> runs;  // (top position, fingerprint)
  for (size_t off = 0; off <= m; ++off) {
    const size_t pos = m - off;
    std::vector<bool> fp = fingerprint(pos);
    if (runs.empty() || runs.back().second != fp) runs.push_back({pos, std::move(fp)});
    if (runs.size() > block_count) break;  // anything below the last block is free
  }
  if (runs.size() < block_count) return false;

  // relevant layout: x_1..x_n then (t_0,u_0),(t_1,u_1),...
  auto t_at = [&](const std::vector<bool>& fp, size_t i) { return fp[n + 2 * i]; };
  auto u_at = [&](const std::vector<bool>& fp, size_t i) { return fp[n + 2 * i + 1]; };
  auto x_at = [&](const std::vector<bool>& fp, size_t i) { return fp[i - 1]; };

  for (size_t blk = 1; blk <= block_count; ++blk) {
    const std::vector<bool>& fp = runs[blk - 1].second;
    // Index-0 markers.
    if (u_at(fp, 0) != (blk == 1)) return false;
    if (t_at(fp, 0) != (blk == block_count)) return false;
    // Universal variables and their markers.
    for (size_t h = 1; h <= k; ++h) {
      const size_t span = 3 * (size_t{1} << (k - h));
      const size_t var = forall_indices[h - 1];
      const bool x_expected = ((blk + span - 1) / span) % 2 == 0;  // ceil(blk/span) even
      if (x_at(fp, var) != x_expected) return false;
      if (t_at(fp, var) != (blk % span == 0)) return false;
      if (u_at(fp, var) != (blk % span == 1)) return false;
    }
    // Existential markers copy the previous index's markers.
    for (size_t i = 1; i <= n; ++i)
      if (qbf.prefix[i - 1].first == Quant::Exists) {
        if (t_at(fp, i) != t_at(fp, i - 1)) return false;
        if (u_at(fp, i) != u_at(fp, i - 1)) return false;
      }
  }

  // Existential variables must be choice functions of the lower-indexed
  // variables, consistent across blocks.
  for (size_t q = 1; q <= n; ++q) {
    if (qbf.prefix[q - 1].first != Quant::Exists) continue;
    std::map<std::vector<bool>, bool> choice;
    for (size_t blk = 1; blk <= block_count; ++blk) {
      const std::vector<bool>& fp = runs[blk - 1].second;
      std::vector<bool> args;
      for (size_t d = 1; d < q; ++d) args.push_back(x_at(fp, d));
      const bool val = x_at(fp, q);
      auto [it, inserted] = choice.emplace(std::move(args), val);
      if (!inserted && it->second != val) return false;
    }
  }
  return true;
}

}  // namespace tsat
