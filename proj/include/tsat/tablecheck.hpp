#pragma once

#include <string>
#include <vector>

#include "tsat/classify.hpp"

namespace tsat {

// The named bases the published classification is stated for, keyed by the
// clone each generates.
struct NamedBase {
  std::string name;
  Base base;
};
const std::vector<NamedBase>& named_bases();
const Base* find_named_base(const std::string& name);

// Hand-frozen expected class for one (named base, operator set) cell,
// independent of classify(). Encodes the published table rows:
//   or_iff, selfdual3          -> trivial everywhere
//   and_or_const, or_const, and_const, not_const, const_only -> ptime
//   xor_const, xor_only        -> ptime for {} and {X}, open otherwise
//   and_not                    -> NP-complete for {}, subsets of {F,G}, {X};
//                                 PSPACE-complete otherwise
ComplexityClass expected_class(const std::string& base_name, const std::set<TemporalOp>& ops);

struct TableCheckCell {
  std::string base_name;
  std::set<TemporalOp> ops;
  ComplexityClass expected;
  ComplexityClass got;
};

struct TableCheckReport {
  size_t cells = 0;
  std::vector<TableCheckCell> mismatches;
};

// Replays classify() over every named base and all 32 operator sets against
// the frozen expectations; `expected_override` (lines of
// "<base> <ops|none> <class>") replaces the frozen table when given.
TableCheckReport run_table_check(const std::string* expected_override = nullptr);

std::vector<std::set<TemporalOp>> all_operator_subsets();

ComplexityClass parse_complexity_class(const std::string& text);

}  // namespace tsat
