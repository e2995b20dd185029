#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tsat {

// A finite Boolean function given by name, arity and truth table.
//
// Table bit k holds the value on the argument tuple whose binary encoding
// is k, with argument 1 as the most significant bit.  Example: the binary
// AND has table "0001" (inputs 00, 01, 10, 11).  Arity 0 functions are the
// constants; their table is a single bit.
class BoolFn {
 public:
  static constexpr int kMaxArity = 6;

  BoolFn(std::string name, int arity, uint64_t table);

  // Parses the table from a 2^arity character string of 0s and 1s,
  // index k first. Rejects malformed tables.
  static BoolFn from_bits(std::string name, int arity, const std::string& bits);

  const std::string& name() const { return name_; }
  int arity() const { return arity_; }
  uint64_t table() const { return table_; }

  bool value_at(unsigned k) const { return (table_ >> k) & 1u; }
  bool eval(const std::vector<bool>& args) const;

  // Table rendered back as the 0/1 string, index k first.
  std::string bits() const;

  // Same arity and same table; the name does not matter.
  bool same_function(const BoolFn& other) const {
    return arity_ == other.arity_ && table_ == other.table_;
  }

 private:
  std::string name_;
  int arity_;
  uint64_t table_;
};

using BoolFnPtr = std::shared_ptr<const BoolFn>;

// Closure properties that characterize the clones used for classification.
bool is_one_reproducing(const BoolFn& f);
bool is_monotone(const BoolFn& f);
bool is_self_dual(const BoolFn& f);
bool is_linear(const BoolFn& f);
bool is_one_separating(const BoolFn& f);
bool depends_on_at_most_one(const BoolFn& f);

// Positions whose value can change the function's output.
std::vector<int> essential_positions(const BoolFn& f);

// Affine shape of a linear function: f = c ^ xor of args with coefficient 1.
// Only meaningful when is_linear(f) holds.
struct AffineForm {
  bool constant;
  std::vector<bool> coeffs;  // one per argument position
};
AffineForm affine_form(const BoolFn& f);

enum class CloneTag { R1, D, M, N, L };

// A finite set of named Boolean functions. Names are unique; the empty base
// denotes the clone of projections.
class Base {
 public:
  Base() = default;
  explicit Base(std::vector<BoolFnPtr> fns);

  // Base definition file: one record per line, "name arity table", where
  // table is a binary string of length 2^arity (bit k first, argument 1 =
  // most significant bit). '#' starts a comment. Example:
  //   and 2 0001
  //   one 0 1
  static Base parse(const std::string& text);
  std::string to_text() const;

  void add(BoolFnPtr fn);
  const BoolFnPtr* find(const std::string& name) const;
  const std::vector<BoolFnPtr>& functions() const { return fns_; }
  bool empty() const { return fns_.empty(); }
  size_t size() const { return fns_.size(); }

 private:
  std::vector<BoolFnPtr> fns_;
};

// True iff every function of the base satisfies the defining property of the
// tagged clone. Sound and complete for these five clones, each of which is
// exactly the set of functions with its property.
bool base_within(const Base& base, CloneTag tag);

// By elimination: a base inside none of R1, D, M, N, L generates a clone
// containing every 1-separating function.
bool generates_above_s1(const Base& base);

// The connectives that are always available to reductions and the tableau.
namespace builtin {
const BoolFnPtr& fn_and();
const BoolFnPtr& fn_or();
const BoolFnPtr& fn_not();
const BoolFnPtr& fn_xor();
const BoolFnPtr& fn_true();
const BoolFnPtr& fn_false();
const Base& base();
// The built-in with the same arity and table, if there is one.
const BoolFnPtr* equivalent(const BoolFn& f);
}  // namespace builtin

}  // namespace tsat
