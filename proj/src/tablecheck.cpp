#include "tsat/tablecheck.hpp"

#include <map>
#include <sstream>

#include "tsat/errors.hpp"

namespace tsat {

namespace {

BoolFnPtr mk(const char* name, int arity, const char* bits) {
  return std::make_shared<BoolFn>(BoolFn::from_bits(name, arity, bits));
}

std::vector<NamedBase> build_named_bases() {
  std::vector<NamedBase> out;
  // iff: 1 iff both arguments agree. sd3: x and not y, or x and not z, or
  // (not y and not z); the ternary self-dual base function. and_not: x and
  // not y, the minimal base whose clone makes satisfiability hard.
  const BoolFnPtr iff = mk("iff", 2, "1001");
  const BoolFnPtr sd3 = mk("sd3", 3, "10001110");
  const BoolFnPtr and_not = mk("and_not", 2, "0010");
  const BoolFnPtr one = mk("one", 0, "1");
  const BoolFnPtr zero = mk("zero", 0, "0");
  out.push_back({"or_iff", Base({builtin::fn_or(), iff})});
  out.push_back({"selfdual3", Base({sd3})});
  out.push_back({"and_or_const", Base({builtin::fn_and(), builtin::fn_or(), one, zero})});
  out.push_back({"and_not", Base({and_not})});
  out.push_back({"xor_const", Base({builtin::fn_xor(), one})});
  out.push_back({"xor_only", Base({builtin::fn_xor()})});
  out.push_back({"or_const", Base({builtin::fn_or(), one, zero})});
  out.push_back({"and_const", Base({builtin::fn_and(), one, zero})});
  out.push_back({"not_const", Base({builtin::fn_not(), one, zero})});
  out.push_back({"const_only", Base({one, zero})});
  out.push_back({"empty", Base{}});
  return out;
}

}  // namespace

const std::vector<NamedBase>& named_bases() {
  static const std::vector<NamedBase> bases = build_named_bases();
  return bases;
}

const Base* find_named_base(const std::string& name) {
  for (const auto& nb : named_bases())
    if (nb.name == name) return &nb.base;
  return nullptr;
}

ComplexityClass expected_class(const std::string& base_name, const std::set<TemporalOp>& ops) {
  const bool only_x = ops.size() == 1 && ops.count(TemporalOp::X);
  const bool within_fg =
      !ops.empty() && ops.size() <= 2 && !ops.count(TemporalOp::X) &&
      !ops.count(TemporalOp::U) && !ops.count(TemporalOp::S);
  if (base_name == "or_iff" || base_name == "selfdual3" || base_name == "empty")
    return ComplexityClass::Trivial;
  if (base_name == "and_or_const" || base_name == "or_const" || base_name == "and_const" ||
      base_name == "not_const" || base_name == "const_only")
    return ComplexityClass::PTime;
  if (base_name == "xor_const" || base_name == "xor_only") {
    if (ops.empty() || only_x) return ComplexityClass::PTime;
    return ComplexityClass::Open;
  }
  if (base_name == "and_not") {
    if (ops.empty() || only_x || within_fg) return ComplexityClass::NPComplete;
    return ComplexityClass::PSPACEComplete;
  }
  throw ArgumentError("expected_class: unknown named base '" + base_name + "'");
}

std::vector<std::set<TemporalOp>> all_operator_subsets() {
  const TemporalOp all[5] = {TemporalOp::X, TemporalOp::F, TemporalOp::G, TemporalOp::U,
                             TemporalOp::S};
  std::vector<std::set<TemporalOp>> out;
  for (unsigned mask = 0; mask < 32; ++mask) {
    std::set<TemporalOp> ops;
    for (int i = 0; i < 5; ++i)
      if (mask & (1u << i)) ops.insert(all[i]);
    out.push_back(std::move(ops));
  }
  return out;
}

ComplexityClass parse_complexity_class(const std::string& text) {
  if (text == "trivial") return ComplexityClass::Trivial;
  if (text == "ptime") return ComplexityClass::PTime;
  if (text == "np-complete") return ComplexityClass::NPComplete;
  if (text == "pspace-complete") return ComplexityClass::PSPACEComplete;
  if (text == "open") return ComplexityClass::Open;
  throw ArgumentError("unknown complexity class '" + text + "'");
}

TableCheckReport run_table_check(const std::string* expected_override) {
  std::map<std::pair<std::string, std::string>, ComplexityClass> override_cells;
  if (expected_override) {
    std::istringstream in(*expected_override);
    std::string line;
    while (std::getline(in, line)) {
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream fields(line);
      std::string base_name, ops_text, cls_text;
      if (!(fields >> base_name)) continue;
      if (!(fields >> ops_text >> cls_text))
        throw ArgumentError("expected-table line needs '<base> <ops|none> <class>'");
      override_cells[{base_name, to_string(parse_temporal_ops(ops_text))}] =
          parse_complexity_class(cls_text);
    }
  }

  TableCheckReport report;
  for (const auto& nb : named_bases()) {
    for (const auto& ops : all_operator_subsets()) {
      ++report.cells;
      ComplexityClass expected;
      if (expected_override) {
        const auto it = override_cells.find({nb.name, to_string(ops)});
        if (it == override_cells.end())
          throw ArgumentError("expected-table is missing cell " + nb.name + " / " +
                              to_string(ops));
        expected = it->second;
      } else {
        expected = expected_class(nb.name, ops);
      }
      const Verdict got = classify({nb.base, ops});
      if (got.cls != expected) report.mismatches.push_back({nb.name, ops, expected, got.cls});
    }
  }
  return report;
}

}  // namespace tsat
