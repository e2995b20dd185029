#pragma once

#include "tsat/satresult.hpp"
#include "tsat/tableau.hpp"

namespace tsat {

enum class ConstStatus { Const0, Const1, NoConstant };

struct DecideOptions {
  TableauOptions tableau;
  BoundedSearchOptions bounded;
};

// Routes the formula to the strategy selected by classify(spec). Open and
// hard classes go through the complete tableau (flattening first when the
// formula uses connectives beyond the built-ins). Throws FragmentError if
// the formula does not live inside the fragment.
SatResult decide(const Formula& phi, const FragmentSpec& spec, const DecideOptions& opts = {});

// Every connective 1-reproducing: the everywhere-all-true structure
// satisfies any formula. Returns it, verified.
SatResult decide_all_true(const Formula& phi);

// Every connective self-dual: exactly one of the all-true / all-false
// structures satisfies the formula at its first state.
SatResult decide_self_dual(const Formula& phi);

// Connectives depending on at most one variable: decides whether the formula
// is equivalent to 0, to 1, or to neither.
ConstStatus constant_analysis_n(const Formula& phi);

// Satisfiable iff constant_analysis_n is not Const0.
SatResult decide_n(const Formula& phi);

// Monotone connectives: rewrites to a fixpoint; unsatisfiable iff the
// formula collapses to the constant 0, otherwise the all-true structure is a
// model at state 0.
SatResult decide_monotone(const Formula& phi);

// Linear connectives, X as the only temporal operator: parity decomposition
// by X-depth decides satisfiability and tautology together.
SatResult decide_xor_next(const Formula& phi, const DecideOptions& opts = {});

// X as the only temporal operator, any base: exhaustive assignment search
// over the first x_depth+1 states, all-false afterwards.
SatResult decide_x_bounded(const Formula& phi, const DecideOptions& opts = {});

// Temporal-operator-free formulae: affine analysis when the base is linear,
// truth-table enumeration otherwise.
SatResult decide_prop(const Formula& phi, const Base& base, const DecideOptions& opts = {});

std::string to_string(ConstStatus s);

}  // namespace tsat
