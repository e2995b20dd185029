#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tsat/formula.hpp"

namespace tsat {

using Assignment = std::set<std::string>;  // the variables true at a state

// Finite representation of an infinite sequence of propositional assignments:
// the prefix, then the loop repeated forever. The loop is never empty.
// Variables absent from an assignment are false; variables never mentioned
// anywhere are false everywhere.
struct Lasso {
  std::vector<Assignment> prefix;
  std::vector<Assignment> loop;

  const Assignment& at(size_t i) const;
  size_t period_start() const { return prefix.size(); }

  // Same assignment sequence with the loop unrolled once more into the prefix.
  Lasso unrolled_once() const;

  // JSON object with "prefix" and "loop" arrays of variable-name arrays.
  static Lasso from_json_text(const std::string& text);
  std::string to_json_text() const;
};

bool operator==(const Lasso& a, const Lasso& b);

// All-true loop over the given variables / all-false loop.
Lasso all_true_lasso(const std::set<std::string>& vars);
Lasso all_false_lasso();

struct Witness {
  Lasso lasso;
  size_t index = 0;
};

// Satisfaction of the formula at state index i of the lasso's infinite word.
bool eval_at(const Lasso& s, size_t i, const Formula& phi);

struct BoundedSearchOptions {
  // Enumeration work limit, counted in evaluated lasso candidates times
  // formula size; exceeding it raises ResourceError.
  uint64_t work_limit = 200'000'000;
};

// Enumerates every lasso over the formula's variables with prefix length at
// most max_prefix and loop length at most max_loop, in a fixed order (total
// state count ascending, then loop length ascending, then assignments as a
// binary counter with state 0's bits most significant), and every satisfaction
// index inside prefix + one loop round. Returns the first witness, if any.
// A miss is not an unsatisfiability proof.
std::optional<Witness> sat_bounded(const Formula& phi, int max_prefix, int max_loop,
                                   const BoundedSearchOptions& opts = {});

// Propositional evaluation under a single assignment (no temporal operators).
bool eval_prop(const Formula& phi, const Assignment& assignment);

}  // namespace tsat
