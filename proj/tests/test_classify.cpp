#include <doctest.h>

#include "tsat/classify.hpp"
#include "tsat/tablecheck.hpp"

using namespace tsat;

namespace {

std::set<TemporalOp> ops(const char* text) { return parse_temporal_ops(text); }

ComplexityClass cls(const Base& base, const char* m) {
  return classify({base, ops(m)}).cls;
}

int rank(ComplexityClass c) {
  switch (c) {
    case ComplexityClass::Trivial: return 0;
    case ComplexityClass::PTime: return 1;
    case ComplexityClass::NPComplete: return 2;
    case ComplexityClass::PSPACEComplete: return 3;
    case ComplexityClass::Open: return -1;
  }
  return -1;
}

}  // namespace

TEST_CASE("classification of documented fragments") {
  const Base bf({builtin::fn_and(), builtin::fn_or(), builtin::fn_not()});
  CHECK(cls(bf, "F") == ComplexityClass::NPComplete);

  const Base* and_not = find_named_base("and_not");
  REQUIRE(and_not);
  CHECK(cls(*and_not, "U") == ComplexityClass::PSPACEComplete);
  CHECK(cls(*and_not, "S") == ComplexityClass::PSPACEComplete);
  CHECK(cls(*and_not, "FX") == ComplexityClass::PSPACEComplete);
  CHECK(cls(*and_not, "GX") == ComplexityClass::PSPACEComplete);
  CHECK(cls(*and_not, "X") == ComplexityClass::NPComplete);
  CHECK(cls(*and_not, "FG") == ComplexityClass::NPComplete);
  CHECK(cls(*and_not, "none") == ComplexityClass::NPComplete);

  const Base* xor_const = find_named_base("xor_const");
  REQUIRE(xor_const);
  CHECK(cls(*xor_const, "F") == ComplexityClass::Open);
  CHECK(cls(*xor_const, "X") == ComplexityClass::PTime);
  CHECK(classify({*xor_const, ops("X")}).strategy == Strategy::XorNext);
  CHECK(cls(*xor_const, "none") == ComplexityClass::PTime);
  CHECK(classify({*xor_const, ops("none")}).strategy == Strategy::PropLinear);

  const Base just_or({builtin::fn_or()});
  CHECK(cls(just_or, "USX") == ComplexityClass::Trivial);
  CHECK(classify({just_or, ops("USX")}).strategy == Strategy::AllTrueWitness);

  // The lone negation is self-dual, so it lands in the trivial row before
  // the one-variable row can fire.
  const Base just_not({builtin::fn_not()});
  CHECK(cls(just_not, "FX") == ComplexityClass::Trivial);
  CHECK(classify({just_not, ops("FX")}).strategy == Strategy::SelfDualWitness);

  const Base* not_const = find_named_base("not_const");
  REQUIRE(not_const);
  CHECK(cls(*not_const, "FX") == ComplexityClass::PTime);
  CHECK(classify({*not_const, ops("FX")}).strategy == Strategy::ConstantAnalysisN);

  CHECK(cls(Base{}, "UFGXS") == ComplexityClass::Trivial);
}

TEST_CASE("verdict invariants") {
  for (const auto& nb : named_bases())
    for (const auto& m : all_operator_subsets()) {
      const Verdict v = classify({nb.base, m});
      if (v.cls == ComplexityClass::Trivial)
        CHECK((v.strategy == Strategy::AllTrueWitness || v.strategy == Strategy::SelfDualWitness));
      if (v.cls == ComplexityClass::Open) CHECK(v.strategy == Strategy::Tableau);
      CHECK_FALSE(v.citation.empty());
    }
}

TEST_CASE("full table reproduction") {
  const TableCheckReport report = run_table_check();
  CHECK(report.cells == named_bases().size() * 32);
  for (const auto& cell : report.mismatches) {
    CAPTURE(cell.base_name);
    CAPTURE(to_string(cell.ops));
    CHECK(to_string(cell.expected) == to_string(cell.got));
  }
  CHECK(report.mismatches.empty());
}

TEST_CASE("a corrupted expected table is reported") {
  std::string corrupted;
  for (const auto& nb : named_bases())
    for (const auto& m : all_operator_subsets()) {
      // Claim everything is PSPACE-complete.
      corrupted += nb.name + " " + to_string(m) + " pspace-complete\n";
    }
  const TableCheckReport report = run_table_check(&corrupted);
  CHECK(report.mismatches.size() > 0);
}

TEST_CASE("enlarging the operator set never lowers the class") {
  for (const auto& nb : named_bases()) {
    const auto subsets = all_operator_subsets();
    for (const auto& small : subsets)
      for (const auto& large : subsets) {
        if (!std::includes(large.begin(), large.end(), small.begin(), small.end())) continue;
        const int a = rank(classify({nb.base, small}).cls);
        const int b = rank(classify({nb.base, large}).cls);
        if (a >= 0 && b >= 0) {
          CAPTURE(nb.name);
          CHECK(a <= b);
        }
      }
  }
}
