#pragma once

#include <set>
#include <string>

#include "tsat/boolfn.hpp"
#include "tsat/formula.hpp"

namespace tsat {

// A fragment: the propositional base B and the allowed temporal operators M.
struct FragmentSpec {
  Base base;
  std::set<TemporalOp> temporal;
};

enum class ComplexityClass { Trivial, PTime, NPComplete, PSPACEComplete, Open };

enum class Strategy {
  AllTrueWitness,
  SelfDualWitness,
  ConstantAnalysisN,
  MonotoneRewrite,
  XorNext,
  PropLinear,
  PropEnum,
  XBounded,
  Tableau,
};

struct Verdict {
  ComplexityClass cls;
  Strategy strategy;
  std::string citation;  // the classification fact the verdict rests on
};

// Complexity of satisfiability for the fragment, with the decision strategy.
// First match wins:
//   (1) base within R1             -> Trivial   (all-true model)
//   (2) base within D              -> Trivial   (all-true or all-false model)
//   (3) base within N              -> PTime     (constant analysis)
//   (4) base within M              -> PTime     (monotone rewriting)
//   (5) base within L              -> PTime for M = {} or M within {X};
//                                     Open otherwise
//   (6) otherwise the base generates a clone above S1:
//       M = {} or M within {F,G} or M within {X}  -> NP-complete
//       anything else                             -> PSPACE-complete
Verdict classify(const FragmentSpec& spec);

std::string to_string(ComplexityClass c);
std::string to_string(Strategy s);

}  // namespace tsat
