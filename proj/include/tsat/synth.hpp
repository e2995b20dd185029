#pragma once

#include "tsat/formula.hpp"

namespace tsat {

enum class SynthTarget { And, Or, Not };

// Smallest base-formula over x, y (just x for Not) whose truth table equals
// the target, with each designated variable occurring exactly once; other
// leaves may only be arity-0 base functions. Size-bounded search; throws
// SynthError when the cap is exhausted, which is inconclusive rather than a
// nonexistence proof.
FormulaPtr synth_short(const Base& base, SynthTarget target, int max_nodes = 12);

// Same search with repeated variable occurrences allowed; used to realize a
// connective over a base when read-once templates need not exist.
FormulaPtr synth_fn(const Base& base, const BoolFn& target, int max_nodes = 12);

// Substitutes arguments for the variables x (and y) of a synthesized
// template.
FormulaPtr instantiate_template(const Formula& tpl, const FormulaPtr& x, const FormulaPtr& y);

}  // namespace tsat
