#include "tsat/boolfn.hpp"

#include <algorithm>
#include <sstream>

#include "tsat/errors.hpp"

namespace tsat {

BoolFn::BoolFn(std::string name, int arity, uint64_t table)
    : name_(std::move(name)), arity_(arity), table_(table) {
  if (arity_ < 0 || arity_ > kMaxArity)
    throw ArgumentError("function '" + name_ + "': arity must be between 0 and " +
                        std::to_string(kMaxArity));
  const unsigned rows = 1u << arity_;
  if (rows < 64 && (table_ >> rows) != 0)
    throw ArgumentError("function '" + name_ + "': table has bits beyond 2^arity");
}

BoolFn BoolFn::from_bits(std::string name, int arity, const std::string& bits) {
  if (arity < 0 || arity > kMaxArity)
    throw ArgumentError("function '" + name + "': arity must be between 0 and " +
                        std::to_string(kMaxArity));
  if (bits.size() != (size_t{1} << arity))
    throw ArgumentError("function '" + name + "': table must have exactly 2^arity bits, got " +
                        std::to_string(bits.size()));
  uint64_t table = 0;
  for (size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] == '1')
      table |= uint64_t{1} << k;
    else if (bits[k] != '0')
      throw ArgumentError("function '" + name + "': table must consist of 0s and 1s");
  }
  return BoolFn(std::move(name), arity, table);
}

bool BoolFn::eval(const std::vector<bool>& args) const {
  if (static_cast<int>(args.size()) != arity_)
    throw ArgumentError("function '" + name_ + "' expects " + std::to_string(arity_) +
                        " arguments, got " + std::to_string(args.size()));
  unsigned k = 0;
  for (bool a : args) k = (k << 1) | (a ? 1u : 0u);
  return value_at(k);
}

std::string BoolFn::bits() const {
  std::string out(size_t{1} << arity_, '0');
  for (size_t k = 0; k < out.size(); ++k)
    if (value_at(static_cast<unsigned>(k))) out[k] = '1';
  return out;
}

bool is_one_reproducing(const BoolFn& f) {
  return f.value_at((1u << f.arity()) - 1);
}

bool is_monotone(const BoolFn& f) {
  // Compare every tuple against all one-bit-raised neighbors.
  const unsigned rows = 1u << f.arity();
  for (unsigned k = 0; k < rows; ++k)
    for (int i = 0; i < f.arity(); ++i) {
      const unsigned bit = 1u << i;
      if (!(k & bit) && f.value_at(k) && !f.value_at(k | bit)) return false;
    }
  return true;
}

bool is_self_dual(const BoolFn& f) {
  const unsigned rows = 1u << f.arity();
  for (unsigned k = 0; k < rows; ++k)
    if (f.value_at(k) == f.value_at(~k & (rows - 1))) return false;
  return true;
}

bool is_linear(const BoolFn& f) {
  const AffineForm form = affine_form(f);
  const unsigned rows = 1u << f.arity();
  for (unsigned k = 0; k < rows; ++k) {
    bool v = form.constant;
    for (int i = 0; i < f.arity(); ++i) {
      const bool arg = (k >> (f.arity() - 1 - i)) & 1u;
      if (form.coeffs[i] && arg) v = !v;
    }
    if (v != f.value_at(k)) return false;
  }
  return true;
}

bool is_one_separating(const BoolFn& f) {
  // Requires a witnessing position, so arity-0 constants are excluded.
  const unsigned rows = 1u << f.arity();
  for (int i = 0; i < f.arity(); ++i) {
    const unsigned bit = 1u << (f.arity() - 1 - i);
    bool separating = true;
    for (unsigned k = 0; k < rows && separating; ++k)
      if (f.value_at(k) && !(k & bit)) separating = false;
    if (separating) return true;
  }
  return false;
}

std::vector<int> essential_positions(const BoolFn& f) {
  std::vector<int> out;
  const unsigned rows = 1u << f.arity();
  for (int i = 0; i < f.arity(); ++i) {
    const unsigned bit = 1u << (f.arity() - 1 - i);
    for (unsigned k = 0; k < rows; ++k)
      if (!(k & bit) && f.value_at(k) != f.value_at(k | bit)) {
        out.push_back(i);
        break;
      }
  }
  return out;
}

bool depends_on_at_most_one(const BoolFn& f) {
  return essential_positions(f).size() <= 1;
}

AffineForm affine_form(const BoolFn& f) {
  AffineForm form;
  form.constant = f.value_at(0);
  form.coeffs.resize(f.arity());
  for (int i = 0; i < f.arity(); ++i) {
    const unsigned unit = 1u << (f.arity() - 1 - i);
    form.coeffs[i] = f.value_at(unit) != form.constant;
  }
  return form;
}

Base::Base(std::vector<BoolFnPtr> fns) {
  for (auto& f : fns) add(std::move(f));
}

void Base::add(BoolFnPtr fn) {
  if (!fn) throw ArgumentError("base: null function");
  if (find(fn->name())) throw ArgumentError("base: duplicate function name '" + fn->name() + "'");
  fns_.push_back(std::move(fn));
}

const BoolFnPtr* Base::find(const std::string& name) const {
  for (const auto& f : fns_)
    if (f->name() == name) return &f;
  return nullptr;
}

Base Base::parse(const std::string& text) {
  Base base;
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string name, table;
    int arity;
    if (!(fields >> name)) continue;  // blank line
    if (!(fields >> arity >> table))
      throw ParseError("base line " + std::to_string(lineno) +
                           ": expected 'name arity table'",
                       lineno);
    std::string extra;
    if (fields >> extra)
      throw ParseError("base line " + std::to_string(lineno) + ": trailing text '" + extra + "'",
                       lineno);
    base.add(std::make_shared<BoolFn>(BoolFn::from_bits(name, arity, table)));
  }
  return base;
}

std::string Base::to_text() const {
  std::string out;
  for (const auto& f : fns_)
    out += f->name() + " " + std::to_string(f->arity()) + " " + f->bits() + "\n";
  return out;
}

bool base_within(const Base& base, CloneTag tag) {
  auto pred = [&](const BoolFn& f) {
    switch (tag) {
      case CloneTag::R1: return is_one_reproducing(f);
      case CloneTag::D: return is_self_dual(f);
      case CloneTag::M: return is_monotone(f);
      case CloneTag::N: return depends_on_at_most_one(f);
      case CloneTag::L: return is_linear(f);
    }
    return false;
  };
  return std::ranges::all_of(base.functions(), [&](const BoolFnPtr& f) { return pred(*f); });
}

bool generates_above_s1(const Base& base) {
  return !base_within(base, CloneTag::R1) && !base_within(base, CloneTag::D) &&
         !base_within(base, CloneTag::M) && !base_within(base, CloneTag::N) &&
         !base_within(base, CloneTag::L);
}

namespace builtin {

static BoolFnPtr make(const char* name, int arity, const char* bits) {
  return std::make_shared<BoolFn>(BoolFn::from_bits(name, arity, bits));
}

const BoolFnPtr& fn_and() {
  static const BoolFnPtr f = make("and", 2, "0001");
  return f;
}
const BoolFnPtr& fn_or() {
  static const BoolFnPtr f = make("or", 2, "0111");
  return f;
}
const BoolFnPtr& fn_not() {
  static const BoolFnPtr f = make("not", 1, "10");
  return f;
}
const BoolFnPtr& fn_xor() {
  static const BoolFnPtr f = make("xor", 2, "0110");
  return f;
}
const BoolFnPtr& fn_true() {
  static const BoolFnPtr f = make("true", 0, "1");
  return f;
}
const BoolFnPtr& fn_false() {
  static const BoolFnPtr f = make("false", 0, "0");
  return f;
}

const Base& base() {
  static const Base b({fn_and(), fn_or(), fn_not(), fn_xor(), fn_true(), fn_false()});
  return b;
}

const BoolFnPtr* equivalent(const BoolFn& f) {
  for (const auto& b : base().functions())
    if (b->same_function(f)) return &b;
  return nullptr;
}

}  // namespace builtin

}  // namespace tsat
