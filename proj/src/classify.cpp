#include "tsat/classify.hpp"

#include <algorithm>

namespace tsat {

namespace {

bool subset_of(const std::set<TemporalOp>& m, std::initializer_list<TemporalOp> allowed) {
  return std::ranges::all_of(
      m, [&](TemporalOp op) { return std::find(allowed.begin(), allowed.end(), op) != allowed.end(); });
}

}  // namespace

Verdict classify(const FragmentSpec& spec) {
  const Base& b = spec.base;
  const std::set<TemporalOp>& m = spec.temporal;

  if (base_within(b, CloneTag::R1))
    return {ComplexityClass::Trivial, Strategy::AllTrueWitness,
            "all operators 1-reproducing: the everywhere-all-true structure satisfies every formula"};
  if (base_within(b, CloneTag::D))
    return {ComplexityClass::Trivial, Strategy::SelfDualWitness,
            "all operators self-dual: exactly one of the all-true/all-false structures satisfies"};
  if (base_within(b, CloneTag::N))
    return {ComplexityClass::PTime, Strategy::ConstantAnalysisN,
            "operators depend on at most one variable: constant analysis decides in polynomial time"};
  if (base_within(b, CloneTag::M))
    return {ComplexityClass::PTime, Strategy::MonotoneRewrite,
            "all operators monotone: rewriting to fixpoint decides in polynomial time"};
  if (base_within(b, CloneTag::L)) {
    if (m.empty())
      return {ComplexityClass::PTime, Strategy::PropLinear,
              "linear propositional formulae: affine analysis decides in polynomial time"};
    if (subset_of(m, {TemporalOp::X}))
      return {ComplexityClass::PTime, Strategy::XorNext,
              "linear operators with X only: parity decomposition decides in polynomial time"};
    return {ComplexityClass::Open, Strategy::Tableau,
            "linear operators with eventualities: complexity open, deciding via the complete tableau"};
  }
  // By elimination the clone generated by the base contains every
  // 1-separating function, in particular x and not y.
  if (m.empty())
    return {ComplexityClass::NPComplete, Strategy::PropEnum,
            "x and not y expressible, no temporal operators: propositional satisfiability, NP-complete"};
  if (subset_of(m, {TemporalOp::F, TemporalOp::G}))
    return {ComplexityClass::NPComplete, Strategy::Tableau,
            "x and not y expressible with F/G only: NP-complete, deciding via the tableau"};
  if (subset_of(m, {TemporalOp::X}))
    return {ComplexityClass::NPComplete, Strategy::XBounded,
            "x and not y expressible with X only: NP-complete, deciding by depth-bounded search"};
  return {ComplexityClass::PSPACEComplete, Strategy::Tableau,
          "x and not y expressible with unrestricted eventualities: PSPACE-complete, deciding via the tableau"};
}

std::string to_string(ComplexityClass c) {
  switch (c) {
    case ComplexityClass::Trivial: return "trivial";
    case ComplexityClass::PTime: return "ptime";
    case ComplexityClass::NPComplete: return "np-complete";
    case ComplexityClass::PSPACEComplete: return "pspace-complete";
    case ComplexityClass::Open: return "open";
  }
  return "?";
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::AllTrueWitness: return "all-true-witness";
    case Strategy::SelfDualWitness: return "self-dual-witness";
    case Strategy::ConstantAnalysisN: return "constant-analysis";
    case Strategy::MonotoneRewrite: return "monotone-rewrite";
    case Strategy::XorNext: return "xor-next";
    case Strategy::PropLinear: return "prop-linear";
    case Strategy::PropEnum: return "prop-enum";
    case Strategy::XBounded: return "x-bounded";
    case Strategy::Tableau: return "tableau";
  }
  return "?";
}

}  // namespace tsat
