#include <doctest.h>

#include "tsat/boolfn.hpp"
#include "tsat/errors.hpp"

using namespace tsat;

namespace {

BoolFn mk(const char* name, int arity, const char* bits) {
  return BoolFn::from_bits(name, arity, bits);
}

// Definition-level oracles, exhaustive over tuples; independent of the
// library's predicate implementations.
bool oracle_monotone(const BoolFn& f) {
  const unsigned rows = 1u << f.arity();
  for (unsigned a = 0; a < rows; ++a)
    for (unsigned b = 0; b < rows; ++b) {
      if ((a & b) != a) continue;  // a <= b pointwise
      if (f.value_at(a) > f.value_at(b)) return false;
    }
  return true;
}

bool oracle_self_dual(const BoolFn& f) {
  const unsigned rows = 1u << f.arity();
  for (unsigned a = 0; a < rows; ++a)
    if (f.value_at(a) != !f.value_at(~a & (rows - 1))) return false;
  return true;
}

bool oracle_one_separating(const BoolFn& f) {
  const unsigned rows = 1u << f.arity();
  for (int i = 0; i < f.arity(); ++i) {
    bool ok = true;
    for (unsigned a = 0; a < rows; ++a)
      if (f.value_at(a) && !((a >> (f.arity() - 1 - i)) & 1u)) ok = false;
    if (ok) return true;
  }
  return false;
}

int oracle_essential_count(const BoolFn& f) {
  int count = 0;
  const unsigned rows = 1u << f.arity();
  for (int i = 0; i < f.arity(); ++i) {
    const unsigned bit = 1u << (f.arity() - 1 - i);
    for (unsigned a = 0; a < rows; ++a)
      if (f.value_at(a) != f.value_at(a ^ bit)) {
        ++count;
        break;
      }
  }
  return count;
}

}  // namespace

TEST_CASE("truth table evaluation") {
  const BoolFn g = mk("g", 2, "0010");  // x and not y
  CHECK(builtin::fn_and()->eval({true, true}));
  CHECK_FALSE(builtin::fn_and()->eval({true, false}));
  CHECK(g.eval({true, false}));
  CHECK_FALSE(g.eval({true, true}));
  CHECK_THROWS_AS(g.eval({true}), ArgumentError);
}

TEST_CASE("construction rejects malformed tables") {
  CHECK_THROWS_AS(mk("f", 2, "001"), ArgumentError);
  CHECK_THROWS_AS(mk("f", 2, "00012"), ArgumentError);
  CHECK_THROWS_AS(mk("f", 2, "00x1"), ArgumentError);
  CHECK_THROWS_AS(mk("f", 7, "0"), ArgumentError);
  CHECK(mk("f", 0, "1").value_at(0));
}

TEST_CASE("closure property spot checks") {
  const BoolFn g = mk("g", 2, "0010");
  const BoolFn zero = mk("zero", 0, "0");
  const BoolFn one = mk("one", 0, "1");
  const BoolFn proj1 = mk("pr21", 2, "0011");  // (x, y) -> x

  CHECK(is_one_reproducing(*builtin::fn_or()));
  CHECK_FALSE(is_one_reproducing(zero));
  CHECK_FALSE(is_one_reproducing(g));

  CHECK(is_monotone(*builtin::fn_and()));
  CHECK_FALSE(is_monotone(*builtin::fn_not()));
  CHECK_FALSE(is_monotone(*builtin::fn_xor()));

  CHECK(is_self_dual(*builtin::fn_not()));
  CHECK(is_self_dual(mk("id", 1, "01")));
  CHECK_FALSE(is_self_dual(*builtin::fn_and()));

  CHECK(is_linear(*builtin::fn_xor()));
  CHECK(is_linear(one));
  CHECK_FALSE(is_linear(*builtin::fn_and()));

  CHECK(is_one_separating(g));
  CHECK_FALSE(is_one_separating(*builtin::fn_or()));
  CHECK(is_one_separating(*builtin::fn_and()));

  CHECK(depends_on_at_most_one(*builtin::fn_not()));
  CHECK(depends_on_at_most_one(proj1));
  CHECK_FALSE(depends_on_at_most_one(*builtin::fn_and()));
}

TEST_CASE("predicates agree with definition-level oracles on all functions up to arity 3") {
  for (int arity = 0; arity <= 3; ++arity) {
    const unsigned rows = 1u << arity;
    for (uint64_t table = 0; table < (uint64_t{1} << rows); ++table) {
      const BoolFn f("f", arity, table);
      CAPTURE(arity);
      CAPTURE(table);
      CHECK(is_monotone(f) == oracle_monotone(f));
      CHECK(is_self_dual(f) == oracle_self_dual(f));
      CHECK(is_one_separating(f) == oracle_one_separating(f));
      CHECK(depends_on_at_most_one(f) == (oracle_essential_count(f) <= 1));
      // Affine fits, exhaustively over coefficient vectors.
      bool has_affine = false;
      for (unsigned coeffs = 0; coeffs < rows && !has_affine; ++coeffs)
        for (unsigned c = 0; c <= 1 && !has_affine; ++c) {
          bool match = true;
          for (unsigned a = 0; a < rows && match; ++a) {
            bool v = c;
            for (int i = 0; i < arity; ++i)
              if (((coeffs >> i) & 1u) && ((a >> i) & 1u)) v = !v;
            if (v != f.value_at(a)) match = false;
          }
          has_affine = match;
        }
      CHECK(is_linear(f) == has_affine);
      // 1-separating output structure: a 1 output under the all-false tuple
      // would contradict every separating position.
      if (is_one_separating(f)) CHECK_FALSE(f.value_at(0));
      // Functions of at most one essential variable are affine.
      if (depends_on_at_most_one(f)) CHECK(is_linear(f));
    }
  }
}

TEST_CASE("base membership") {
  const Base monotone_base({builtin::fn_or(), builtin::fn_and(),
                            std::make_shared<BoolFn>(mk("zero", 0, "0")),
                            std::make_shared<BoolFn>(mk("one", 0, "1"))});
  CHECK(base_within(monotone_base, CloneTag::M));
  const Base bf({builtin::fn_and(), builtin::fn_or(), builtin::fn_not()});
  CHECK_FALSE(base_within(bf, CloneTag::R1));
  const Base xors({builtin::fn_xor()});
  CHECK(base_within(xors, CloneTag::L));
  CHECK(base_within(Base{}, CloneTag::R1));  // empty base, vacuously
}

TEST_CASE("base membership is monotone under shrinking") {
  const std::vector<BoolFnPtr> fns = {builtin::fn_and(), builtin::fn_or(), builtin::fn_not(),
                                      builtin::fn_xor(), builtin::fn_true(),
                                      builtin::fn_false()};
  const CloneTag tags[] = {CloneTag::R1, CloneTag::D, CloneTag::M, CloneTag::N, CloneTag::L};
  for (unsigned mask = 0; mask < (1u << fns.size()); ++mask) {
    Base base;
    for (size_t i = 0; i < fns.size(); ++i)
      if (mask & (1u << i)) base.add(fns[i]);
    for (unsigned sub = mask;; sub = (sub - 1) & mask) {
      if (sub != mask) {
        Base smaller;
        for (size_t i = 0; i < fns.size(); ++i)
          if (sub & (1u << i)) smaller.add(fns[i]);
        for (CloneTag tag : tags)
          if (base_within(base, tag)) CHECK(base_within(smaller, tag));
      }
      if (sub == 0) break;
    }
  }
}

TEST_CASE("base definition file round trip and rejection") {
  const std::string text = "and 2 0001\none 0 1  # the constant\n\nzero 0 0\n";
  const Base base = Base::parse(text);
  CHECK(base.size() == 3);
  CHECK((*base.find("and"))->bits() == "0001");
  const Base again = Base::parse(base.to_text());
  CHECK(again.size() == 3);

  CHECK_THROWS(Base::parse("and 2 001\n"));
  CHECK_THROWS(Base::parse("and 2\n"));
  CHECK_THROWS(Base::parse("and 2 0001 junk\n"));
  CHECK_THROWS(Base::parse("and 2 0001\nand 2 0001\n"));
}
