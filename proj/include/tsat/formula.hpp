#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "tsat/boolfn.hpp"

namespace tsat {

enum class Op : uint8_t { Var, Apply, Next, Eventually, Globally, Until, Since };

enum class TemporalOp : uint8_t { X, F, G, U, S };

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable AST node of a temporal formula: a variable, an application of a
// Boolean function to argument formulae, or a temporal operator.
class Formula {
 public:
  Op op;
  std::string var;              // Op::Var
  BoolFnPtr fn;                 // Op::Apply
  std::vector<FormulaPtr> kids;  // Apply arguments / temporal operands

  static FormulaPtr make_var(std::string name);
  static FormulaPtr make_apply(BoolFnPtr fn, std::vector<FormulaPtr> args);
  static FormulaPtr make_unary(Op op, FormulaPtr child);   // Next/Eventually/Globally
  static FormulaPtr make_binary(Op op, FormulaPtr lhs, FormulaPtr rhs);  // Until/Since
};

// Shorthands over the built-in connectives.
FormulaPtr f_var(std::string name);
FormulaPtr f_and(FormulaPtr a, FormulaPtr b);
FormulaPtr f_or(FormulaPtr a, FormulaPtr b);
FormulaPtr f_not(FormulaPtr a);
FormulaPtr f_xor(FormulaPtr a, FormulaPtr b);
FormulaPtr f_true();
FormulaPtr f_false();
FormulaPtr f_next(FormulaPtr a);
FormulaPtr f_eventually(FormulaPtr a);
FormulaPtr f_globally(FormulaPtr a);
FormulaPtr f_until(FormulaPtr a, FormulaPtr b);
FormulaPtr f_since(FormulaPtr a, FormulaPtr b);

bool structurally_equal(const Formula& a, const Formula& b);
size_t node_count(const Formula& f);

// Variables occurring in the formula, sorted.
std::set<std::string> variables(const Formula& f);

// Temporal operators occurring in the formula.
std::set<TemporalOp> temporal_ops(const Formula& f);

// Distinct functions applied in the formula (deduplicated by name + table).
std::vector<BoolFnPtr> functions_used(const Formula& f);

// True iff the node is an application of an arity-0 function with the given
// value, i.e. a constant leaf.
bool is_constant(const Formula& f, bool value);

// Maximal nesting of the X operator. The formula must not contain any other
// temporal operator.
int x_depth(const Formula& f);

// Variable names starting with this prefix are reserved for fresh variables
// introduced by reductions; the parser rejects them unless asked not to.
inline constexpr const char* kReservedPrefix = "__";

struct ParseOptions {
  bool allow_reserved = false;  // accept "__" variables (reduction output)
};

// Grammar (whitespace-insensitive):
//   formula  := unary (('U' | 'S') unary)?          -- no U/S chaining without parens
//   unary    := ('X' | 'F' | 'G') unary | primary
//   primary  := '(' formula ')' | name '(' args ')' | name
//   args     := formula (',' formula)*
//   name     := identifier: [A-Za-z_][A-Za-z0-9_]*, excluding X F G U S
// A bare name denotes an arity-0 function if the base (or the built-ins
// and, or, not, xor, true, false) defines one, otherwise a variable.
// Functions resolve against the given base first, then the built-ins.
FormulaPtr parse_formula(const std::string& text, const Base& base,
                         const ParseOptions& opts = {});

// Canonical text form; parse_formula(print_formula(f)) reproduces f.
std::string print_formula(const Formula& f);

std::string to_string(TemporalOp op);
std::set<TemporalOp> parse_temporal_ops(const std::string& text);
std::string to_string(const std::set<TemporalOp>& ops);

}  // namespace tsat
