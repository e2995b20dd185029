#pragma once

#include <utility>

#include "tsat/formula.hpp"
#include "tsat/lasso.hpp"
#include "tsat/synth.hpp"

namespace tsat {

struct FreshVar {
  std::string name;
  std::string role;
};

struct ReductionOutput {
  FormulaPtr formula;
  std::vector<FreshVar> fresh_vars;
};

enum class FlattenMode { Full, FutureOnly };

// Distinct subformulae in first-visit order; the formula itself comes first.
// This is the numbering flatten's fresh variables refer to.
std::vector<FormulaPtr> subformulas(const Formula& phi);

// Equisatisfiable flattening: one fresh variable per distinct subformula,
// each tied to a one-step defining constraint that is pinned everywhere.
// Full mode pins constraints over the whole timeline with G plus a Since
// guard and emits only built-in connectives with U, S, X.  FutureOnly mode
// (input restricted to F/G) pins them with G alone and emits only F.
ReductionOutput flatten(const Formula& phi, FlattenMode mode);

enum class AnchorOps { GX, FX };

// Re-expresses a formula over {and, or, not} and the given operators as a
// pure base-formula: rewrite over base + constant 1 with read-once
// templates, swap every 1 for a fresh anchor variable t, and conjoin t with
// a "t holds forever" clause - G t directly, or, when only F and X are
// available, g(t, F(g(t, X t))) with g the base's realization of x and not y.
// Requires a base whose clone lies above the 1-separating functions.
ReductionOutput rewrite_with_true_anchor(const Formula& phi, const Base& base, AnchorOps ops);

enum class Quant { ForAll, Exists };

// Prenex quantified Boolean formula: quantifier prefix over distinct
// variables and a matrix over and/or/not (constants allowed) whose variables
// all occur in the prefix.
struct QbfInstance {
  std::vector<std::pair<Quant, std::string>> prefix;
  FormulaPtr matrix;
};

// File format: one "forall x" or "exists x" line per quantifier, then the
// matrix in the formula grammar (may span the remaining lines).
QbfInstance parse_qbf(const std::string& text);
std::string print_qbf(const QbfInstance& qbf);

// Brute-force validity by quantifier expansion.
bool qbf_valid(const QbfInstance& qbf);

// Encoding of QBF validity into satisfiability with Since as the only
// temporal operator: a satisfying model must lay out, backwards in time, one
// block per assignment of the universally quantified variables, with marker
// variables __u0..__un / __t0..__tn delimiting the blocks and the matrix
// holding throughout. Output over and/or/not and S only.
ReductionOutput qbf_to_since(const QbfInstance& qbf);

// The same encoding pushed into a base above the 1-separating functions:
// literal blocks become and_B(t, block with 1 replaced by t), remaining
// conjunctions go through and_B with the top level re-associated as a
// balanced tree of logarithmic depth. Output is a pure base-formula over S.
ReductionOutput qbf_to_since_b(const QbfInstance& qbf, const Base& base);

// Time-mirrored variant with U in place of S; the block pattern lies in the
// future instead of the past. Correctness is contract-by-test.
ReductionOutput qbf_to_until(const QbfInstance& qbf);

// Checks that a model of qbf_to_since(qbf) exhibits the block structure the
// encoding enforces: cut points splitting states m, m-1, ... into 3 * 2^k
// blocks whose marker and universal-variable patterns follow the block
// index, with existentially quantified variables read off as choice
// functions of the lower-indexed variables (consistently across blocks).
// Throws ArgumentError if (structure, m) does not satisfy the encoding.
bool verify_model_shape(const Lasso& structure, size_t m, const QbfInstance& qbf);

}  // namespace tsat
