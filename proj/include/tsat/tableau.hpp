#pragma once

#include "tsat/satresult.hpp"

namespace tsat {

struct TableauOptions {
  // Cap on distinct atoms materialized during one decision; exceeding it
  // raises ResourceError instead of blowing up.
  size_t max_atoms = 1'000'000;
  // Demand satisfaction at the first state instead of at some state.
  bool initial_state_only = false;
};

// Complete satisfiability decision for formulae over the built-in
// connectives (and, or, not, xor, true, false) and X, F, G, U, S.
// Callers with other bases must flatten first.
//
// F and G are expanded to Until form; atoms are maximal propositionally
// consistent subsets of the closure; edges unfold Until forward and Since
// backward; a formula is satisfiable iff an atom containing it is reachable
// from an atom with no past obligations and can reach a cycle fulfilling
// every Until it carries. SAT verdicts come with an eval_at-verified lasso.
SatResult decide_tableau(const Formula& phi, const TableauOptions& opts = {});

}  // namespace tsat
