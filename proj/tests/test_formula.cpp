#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "tsat/errors.hpp"
#include "tsat/formula.hpp"
#include "tsat/gen.hpp"

using namespace tsat;

TEST_CASE("parsing the documented grammar") {
  const Base empty;
  const FormulaPtr f = parse_formula("x U y", empty);
  CHECK(f->op == Op::Until);
  CHECK(f->kids[0]->op == Op::Var);
  CHECK(f->kids[0]->var == "x");
  CHECK(f->kids[1]->var == "y");

  const FormulaPtr g = parse_formula("and(x, X y)", empty);
  CHECK(g->op == Op::Apply);
  CHECK(g->fn->name() == "and");
  CHECK(g->kids[1]->op == Op::Next);

  CHECK(parse_formula("true", empty)->op == Op::Apply);
  CHECK(parse_formula("(x U y) S z", empty)->op == Op::Since);
  CHECK(parse_formula("X F G x", empty)->op == Op::Next);
}

TEST_CASE("parse errors") {
  const Base empty;
  CHECK_THROWS_AS(parse_formula("x U (y U", empty), ParseError);
  CHECK_THROWS_AS(parse_formula("x U y U z", empty), ParseError);
  CHECK_THROWS_AS(parse_formula("mystery(x)", empty), ParseError);
  CHECK_THROWS_AS(parse_formula("and(x)", empty), ParseError);
  CHECK_THROWS_AS(parse_formula("x)", empty), ParseError);
  CHECK_THROWS_AS(parse_formula("", empty), ParseError);
  CHECK_THROWS_AS(parse_formula("U", empty), ParseError);
}

TEST_CASE("reserved variable prefix") {
  const Base empty;
  CHECK_THROWS_AS(parse_formula("__t", empty), ParseError);
  ParseOptions allow;
  allow.allow_reserved = true;
  CHECK(parse_formula("__t", empty, allow)->var == "__t");
}

TEST_CASE("user base resolution") {
  const Base base = Base::parse("g 2 0010\none 0 1\n");
  const FormulaPtr f = parse_formula("g(x, one)", base);
  CHECK(f->fn->name() == "g");
  CHECK(f->kids[1]->op == Op::Apply);
  CHECK(f->kids[1]->fn->arity() == 0);
  // Built-ins remain available alongside the base.
  CHECK(parse_formula("and(x, g(x, y))", base)->fn->name() == "and");
}

TEST_CASE("print and parse round trip") {
  const Base empty;
  const char* samples[] = {
      "x U y",
      "and(x, X y)",
      "G or(x, not(y))",
      "(x U y) S (x U x)",
      "X X x",
      "F (x S y)",
      "xor(true, false)",
  };
  for (const char* text : samples) {
    const FormulaPtr f = parse_formula(text, empty);
    const FormulaPtr again = parse_formula(print_formula(*f), empty);
    CAPTURE(text);
    CHECK(structurally_equal(*f, *again));
  }
}

TEST_CASE("round trip on random fragment formulae") {
  std::mt19937 rng(20240901);
  FragmentSpec spec{Base({builtin::fn_and(), builtin::fn_or(), builtin::fn_not(),
                          builtin::fn_xor(), builtin::fn_true(), builtin::fn_false()}),
                    {TemporalOp::X, TemporalOp::F, TemporalOp::G, TemporalOp::U, TemporalOp::S}};
  for (int round = 0; round < 500; ++round) {
    const FormulaPtr f = random_formula(rng, spec, 15, 3);
    const FormulaPtr again = parse_formula(print_formula(*f), spec.base);
    CAPTURE(print_formula(*f));
    CHECK(structurally_equal(*f, *again));
  }
}

TEST_CASE("x_depth") {
  const Base empty;
  CHECK(x_depth(*parse_formula("X X x", empty)) == 2);
  CHECK(x_depth(*parse_formula("and(x, X y)", empty)) == 1);
  CHECK(x_depth(*parse_formula("x", empty)) == 0);
  CHECK_THROWS_AS(x_depth(*parse_formula("F x", empty)), FragmentError);
  CHECK_THROWS_AS(x_depth(*parse_formula("x U y", empty)), FragmentError);
}

TEST_CASE("variable and operator collection") {
  const Base empty;
  const FormulaPtr f = parse_formula("and(x, or(y, X (x U z)))", empty);
  CHECK(variables(*f) == std::set<std::string>{"x", "y", "z"});
  CHECK(temporal_ops(*f) == std::set<TemporalOp>{TemporalOp::X, TemporalOp::U});
  CHECK(node_count(*f) == 8);
}
