#include "tsat/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "tsat/errors.hpp"

namespace tsat {

FormulaPtr Formula::make_var(std::string name) {
  auto f = std::make_shared<Formula>();
  f->op = Op::Var;
  f->var = std::move(name);
  return f;
}

FormulaPtr Formula::make_apply(BoolFnPtr fn, std::vector<FormulaPtr> args) {
  if (!fn) throw ArgumentError("apply: null function");
  if (static_cast<int>(args.size()) != fn->arity())
    throw ArgumentError("apply: function '" + fn->name() + "' expects " +
                        std::to_string(fn->arity()) + " arguments, got " +
                        std::to_string(args.size()));
  auto f = std::make_shared<Formula>();
  f->op = Op::Apply;
  f->fn = std::move(fn);
  f->kids = std::move(args);
  return f;
}

FormulaPtr Formula::make_unary(Op op, FormulaPtr child) {
  if (op != Op::Next && op != Op::Eventually && op != Op::Globally)
    throw ArgumentError("make_unary: not a unary temporal operator");
  if (!child) throw ArgumentError("make_unary: null operand");
  auto f = std::make_shared<Formula>();
  f->op = op;
  f->kids = {std::move(child)};
  return f;
}

FormulaPtr Formula::make_binary(Op op, FormulaPtr lhs, FormulaPtr rhs) {
  if (op != Op::Until && op != Op::Since)
    throw ArgumentError("make_binary: not a binary temporal operator");
  if (!lhs || !rhs) throw ArgumentError("make_binary: null operand");
  auto f = std::make_shared<Formula>();
  f->op = op;
  f->kids = {std::move(lhs), std::move(rhs)};
  return f;
}

FormulaPtr f_var(std::string name) { return Formula::make_var(std::move(name)); }
FormulaPtr f_and(FormulaPtr a, FormulaPtr b) {
  return Formula::make_apply(builtin::fn_and(), {std::move(a), std::move(b)});
}
FormulaPtr f_or(FormulaPtr a, FormulaPtr b) {
  return Formula::make_apply(builtin::fn_or(), {std::move(a), std::move(b)});
}
FormulaPtr f_not(FormulaPtr a) {
  return Formula::make_apply(builtin::fn_not(), {std::move(a)});
}
FormulaPtr f_xor(FormulaPtr a, FormulaPtr b) {
  return Formula::make_apply(builtin::fn_xor(), {std::move(a), std::move(b)});
}
FormulaPtr f_true() { return Formula::make_apply(builtin::fn_true(), {}); }
FormulaPtr f_false() { return Formula::make_apply(builtin::fn_false(), {}); }
FormulaPtr f_next(FormulaPtr a) { return Formula::make_unary(Op::Next, std::move(a)); }
FormulaPtr f_eventually(FormulaPtr a) {
  return Formula::make_unary(Op::Eventually, std::move(a));
}
FormulaPtr f_globally(FormulaPtr a) {
  return Formula::make_unary(Op::Globally, std::move(a));
}
FormulaPtr f_until(FormulaPtr a, FormulaPtr b) {
  return Formula::make_binary(Op::Until, std::move(a), std::move(b));
}
FormulaPtr f_since(FormulaPtr a, FormulaPtr b) {
  return Formula::make_binary(Op::Since, std::move(a), std::move(b));
}

bool structurally_equal(const Formula& a, const Formula& b) {
  if (a.op != b.op) return false;
  switch (a.op) {
    case Op::Var:
      return a.var == b.var;
    case Op::Apply:
      if (a.fn->name() != b.fn->name() || !a.fn->same_function(*b.fn)) return false;
      break;
    default:
      break;
  }
  if (a.kids.size() != b.kids.size()) return false;
  for (size_t i = 0; i < a.kids.size(); ++i)
    if (!structurally_equal(*a.kids[i], *b.kids[i])) return false;
  return true;
}

size_t node_count(const Formula& f) {
  size_t n = 1;
  for (const auto& k : f.kids) n += node_count(*k);
  return n;
}

std::set<std::string> variables(const Formula& f) {
  std::set<std::string> out;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    if (g.op == Op::Var) out.insert(g.var);
    for (const auto& k : g.kids) walk(*k);
  };
  walk(f);
  return out;
}

std::set<TemporalOp> temporal_ops(const Formula& f) {
  std::set<TemporalOp> out;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    switch (g.op) {
      case Op::Next: out.insert(TemporalOp::X); break;
      case Op::Eventually: out.insert(TemporalOp::F); break;
      case Op::Globally: out.insert(TemporalOp::G); break;
      case Op::Until: out.insert(TemporalOp::U); break;
      case Op::Since: out.insert(TemporalOp::S); break;
      default: break;
    }
    for (const auto& k : g.kids) walk(*k);
  };
  walk(f);
  return out;
}

std::vector<BoolFnPtr> functions_used(const Formula& f) {
  std::vector<BoolFnPtr> out;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    if (g.op == Op::Apply) {
      bool seen = false;
      for (const auto& h : out)
        if (h->name() == g.fn->name() && h->same_function(*g.fn)) seen = true;
      if (!seen) out.push_back(g.fn);
    }
    for (const auto& k : g.kids) walk(*k);
  };
  walk(f);
  return out;
}

bool is_constant(const Formula& f, bool value) {
  return f.op == Op::Apply && f.fn->arity() == 0 && f.fn->value_at(0) == value;
}

int x_depth(const Formula& f) {
  switch (f.op) {
    case Op::Var:
      return 0;
    case Op::Next:
      return 1 + x_depth(*f.kids[0]);
    case Op::Apply: {
      int d = 0;
      for (const auto& k : f.kids) d = std::max(d, x_depth(*k));
      return d;
    }
    default:
      throw FragmentError("x_depth: formula contains a temporal operator other than X");
  }
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct Parser {
  const std::string& text;
  const Base& base;
  const ParseOptions& opts;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  static bool is_operator_name(const std::string& s) {
    return s == "X" || s == "F" || s == "G" || s == "U" || s == "S";
  }

  std::string peek_ident() {
    skip_ws();
    if (pos >= text.size() || !ident_start(text[pos])) return {};
    size_t end = pos;
    while (end < text.size() && ident_char(text[end])) ++end;
    return text.substr(pos, end - pos);
  }

  std::string take_ident() {
    std::string id = peek_ident();
    pos += id.size();
    return id;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  FormulaPtr parse_expr() {
    FormulaPtr lhs = parse_unary();
    const std::string id = peek_ident();
    if (id == "U" || id == "S") {
      take_ident();
      FormulaPtr rhs = parse_unary();
      // Explicit parentheses required for nested U/S.
      const std::string next = peek_ident();
      if (next == "U" || next == "S")
        fail("chained " + id + "/" + next + " needs explicit parentheses");
      return Formula::make_binary(id == "U" ? Op::Until : Op::Since, std::move(lhs),
                                  std::move(rhs));
    }
    return lhs;
  }

  FormulaPtr parse_unary() {
    const std::string id = peek_ident();
    if (id == "X" || id == "F" || id == "G") {
      take_ident();
      Op op = id == "X" ? Op::Next : id == "F" ? Op::Eventually : Op::Globally;
      return Formula::make_unary(op, parse_unary());
    }
    return parse_primary();
  }

  FormulaPtr parse_primary() {
    if (consume('(')) {
      FormulaPtr inner = parse_expr();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    const std::string id = peek_ident();
    if (id.empty()) fail("expected a formula");
    if (is_operator_name(id)) fail("temporal operator '" + id + "' needs an operand");
    take_ident();
    if (consume('(')) {
      std::vector<FormulaPtr> args;
      if (!consume(')')) {
        do {
          args.push_back(parse_expr());
        } while (consume(','));
        if (!consume(')')) fail("expected ')' or ','");
      }
      const BoolFnPtr* fn = resolve(id);
      if (!fn) fail("unknown function '" + id + "'");
      if (static_cast<int>(args.size()) != (*fn)->arity())
        fail("function '" + id + "' expects " + std::to_string((*fn)->arity()) +
             " arguments, got " + std::to_string(args.size()));
      return Formula::make_apply(*fn, std::move(args));
    }
    // A bare name: an arity-0 function if the base defines one, else a variable.
    if (const BoolFnPtr* fn = resolve(id); fn && (*fn)->arity() == 0)
      return Formula::make_apply(*fn, {});
    if (!opts.allow_reserved && id.starts_with(kReservedPrefix))
      fail("variable name '" + id + "' uses the reserved prefix '" + kReservedPrefix + "'");
    return Formula::make_var(id);
  }

  const BoolFnPtr* resolve(const std::string& name) {
    if (const BoolFnPtr* fn = base.find(name)) return fn;
    return builtin::base().find(name);
  }
};

}  // namespace

FormulaPtr parse_formula(const std::string& text, const Base& base, const ParseOptions& opts) {
  Parser p{text, base, opts};
  FormulaPtr f = p.parse_expr();
  if (!p.at_end()) p.fail("trailing text after formula");
  return f;
}

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

namespace {

void print_rec(const Formula& f, std::string& out, bool arg_of_unary_or_infix) {
  switch (f.op) {
    case Op::Var:
      out += f.var;
      return;
    case Op::Apply:
      out += f.fn->name();
      if (f.fn->arity() > 0) {
        out += '(';
        for (size_t i = 0; i < f.kids.size(); ++i) {
          if (i) out += ", ";
          print_rec(*f.kids[i], out, false);
        }
        out += ')';
      }
      return;
    case Op::Next:
    case Op::Eventually:
    case Op::Globally:
      out += f.op == Op::Next ? "X " : f.op == Op::Eventually ? "F " : "G ";
      print_rec(*f.kids[0], out, true);
      return;
    case Op::Until:
    case Op::Since: {
      const bool parens = arg_of_unary_or_infix;
      if (parens) out += '(';
      print_rec(*f.kids[0], out, true);
      out += f.op == Op::Until ? " U " : " S ";
      print_rec(*f.kids[1], out, true);
      if (parens) out += ')';
      return;
    }
  }
}

}  // namespace

std::string print_formula(const Formula& f) {
  std::string out;
  print_rec(f, out, false);
  return out;
}

std::string to_string(TemporalOp op) {
  switch (op) {
    case TemporalOp::X: return "X";
    case TemporalOp::F: return "F";
    case TemporalOp::G: return "G";
    case TemporalOp::U: return "U";
    case TemporalOp::S: return "S";
  }
  return "?";
}

std::set<TemporalOp> parse_temporal_ops(const std::string& text) {
  std::set<TemporalOp> out;
  for (char c : text) {
    switch (c) {
      case 'X': out.insert(TemporalOp::X); break;
      case 'F': out.insert(TemporalOp::F); break;
      case 'G': out.insert(TemporalOp::G); break;
      case 'U': out.insert(TemporalOp::U); break;
      case 'S': out.insert(TemporalOp::S); break;
      case ',': case ' ': case '\t': break;
      default:
        if (text == "none" || text == "-") return {};
        throw ArgumentError(std::string("unknown temporal operator '") + c + "'");
    }
  }
  return out;
}

std::string to_string(const std::set<TemporalOp>& ops) {
  if (ops.empty()) return "none";
  std::string out;
  for (TemporalOp op : ops) {
    if (!out.empty()) out += ",";
    out += to_string(op);
  }
  return out;
}

}  // namespace tsat
