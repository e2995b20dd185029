#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "tsat/errors.hpp"
#include "tsat/gen.hpp"
#include "tsat/lasso.hpp"

using namespace tsat;
using namespace tsat::testing;

namespace {

const Base kEmpty;

FormulaPtr fp(const char* text) {
  ParseOptions allow;
  allow.allow_reserved = true;
  return parse_formula(text, kEmpty, allow);
}

Lasso mk_lasso(std::vector<Assignment> prefix, std::vector<Assignment> loop) {
  return Lasso{std::move(prefix), std::move(loop)};
}

}  // namespace

TEST_CASE("satisfaction clauses on small structures") {
  CHECK(eval_at(mk_lasso({}, {{"x"}}), 0, *fp("G x")));

  const Lasso past = mk_lasso({{"y"}, {}}, {{}});
  CHECK_FALSE(eval_at(past, 1, *fp("x S y")));
  CHECK(eval_at(past, 0, *fp("x S y")));

  CHECK(eval_at(mk_lasso({{}}, {{"x"}}), 0, *fp("F x")));

  // Unknown variables are false, never an error.
  CHECK_FALSE(eval_at(mk_lasso({}, {{"x"}}), 0, *fp("z")));
  CHECK(eval_at(mk_lasso({}, {{"x"}}), 3, *fp("x")));
}

TEST_CASE("labeling agrees with the naive clause transcription") {
  // Exhaustive small formulae over x, y against exhaustive small lassos.
  TreeAlphabet alpha;
  alpha.leaves = {fp("x"), fp("y")};
  alpha.unary = {[](FormulaPtr a) { return f_not(std::move(a)); },
                 [](FormulaPtr a) { return f_next(std::move(a)); },
                 [](FormulaPtr a) { return f_eventually(std::move(a)); },
                 [](FormulaPtr a) { return f_globally(std::move(a)); }};
  alpha.binary = {[](FormulaPtr a, FormulaPtr b) { return f_and(std::move(a), std::move(b)); },
                  [](FormulaPtr a, FormulaPtr b) { return f_until(std::move(a), std::move(b)); },
                  [](FormulaPtr a, FormulaPtr b) { return f_since(std::move(a), std::move(b)); }};

  std::vector<Lasso> lassos;
  for (int p = 0; p <= 1; ++p)
    for (int l = 1; l <= 2; ++l)
      for (Lasso& s : enumerate_lassos({"x", "y"}, p, l)) lassos.push_back(std::move(s));

  size_t checked = 0;
  enumerate_trees_up_to(alpha, 4, [&](const FormulaPtr& f) {
    for (const Lasso& s : lassos)
      for (size_t i = 0; i < s.prefix.size() + s.loop.size() + 1; ++i) {
        if (eval_at(s, i, *f) != naive_eval(s, i, *f)) {
          CAPTURE(print_formula(*f));
          CAPTURE(s.to_json_text());
          CAPTURE(i);
          REQUIRE(eval_at(s, i, *f) == naive_eval(s, i, *f));
        }
        ++checked;
      }
  });
  CHECK(checked > 100000);
}

TEST_CASE("labeling agrees with the naive transcription on random deep formulae") {
  std::mt19937 rng(7);
  FragmentSpec spec{Base({builtin::fn_and(), builtin::fn_or(), builtin::fn_not(),
                          builtin::fn_true()}),
                    {TemporalOp::X, TemporalOp::F, TemporalOp::G, TemporalOp::U, TemporalOp::S}};
  std::uniform_int_distribution<int> pick_prefix(0, 3), pick_loop(1, 3), pick_bit(0, 1);
  for (int round = 0; round < 400; ++round) {
    const FormulaPtr f = random_formula(rng, spec, 10, 2);
    Lasso s;
    s.prefix.resize(pick_prefix(rng));
    s.loop.resize(pick_loop(rng));
    for (auto* states : {&s.prefix, &s.loop})
      for (Assignment& a : *states) {
        if (pick_bit(rng)) a.insert("v0");
        if (pick_bit(rng)) a.insert("v1");
      }
    for (size_t i = 0; i < s.prefix.size() + 2 * s.loop.size(); ++i) {
      CAPTURE(print_formula(*f));
      CAPTURE(s.to_json_text());
      REQUIRE(eval_at(s, i, *f) == naive_eval(s, i, *f));
    }
  }
}

TEST_CASE("loop unrolling invariance") {
  std::mt19937 rng(11);
  FragmentSpec spec{Base({builtin::fn_and(), builtin::fn_not()}),
                    {TemporalOp::X, TemporalOp::F, TemporalOp::G, TemporalOp::U, TemporalOp::S}};
  std::uniform_int_distribution<int> pick_bit(0, 1);
  for (int round = 0; round < 300; ++round) {
    const FormulaPtr f = random_formula(rng, spec, 9, 2);
    Lasso s;
    s.prefix.resize(round % 3);
    s.loop.resize(1 + round % 2);
    for (auto* states : {&s.prefix, &s.loop})
      for (Assignment& a : *states) {
        if (pick_bit(rng)) a.insert("v0");
        if (pick_bit(rng)) a.insert("v1");
      }
    const Lasso unrolled = s.unrolled_once();
    for (size_t i = 0; i < s.prefix.size() + 2 * s.loop.size(); ++i)
      CHECK(eval_at(s, i, *f) == eval_at(unrolled, i, *f));
  }
}

TEST_CASE("F and G match their Until abbreviations") {
  std::mt19937 rng(13);
  FragmentSpec spec{Base({builtin::fn_and(), builtin::fn_or(), builtin::fn_not()}),
                    {TemporalOp::X, TemporalOp::U, TemporalOp::S}};
  std::uniform_int_distribution<int> pick_bit(0, 1);
  for (int round = 0; round < 200; ++round) {
    const FormulaPtr body = random_formula(rng, spec, 6, 2);
    Lasso s;
    s.prefix.resize(round % 3);
    s.loop.resize(1 + round % 3);
    for (auto* states : {&s.prefix, &s.loop})
      for (Assignment& a : *states) {
        if (pick_bit(rng)) a.insert("v0");
        if (pick_bit(rng)) a.insert("v1");
      }
    const FormulaPtr f_direct = f_eventually(body);
    const FormulaPtr f_abbrev = f_until(f_true(), body);
    const FormulaPtr g_direct = f_globally(body);
    const FormulaPtr g_abbrev = f_not(f_until(f_true(), f_not(body)));
    for (size_t i = 0; i < s.prefix.size() + s.loop.size() + 1; ++i) {
      CHECK(eval_at(s, i, *f_direct) == eval_at(s, i, *f_abbrev));
      CHECK(eval_at(s, i, *g_direct) == eval_at(s, i, *g_abbrev));
    }
  }
}

TEST_CASE("stutter duplication preserves Since-only formulae") {
  std::mt19937 rng(17);
  FragmentSpec spec{Base({builtin::fn_and(), builtin::fn_or(), builtin::fn_not()}),
                    {TemporalOp::S}};
  std::uniform_int_distribution<int> pick_bit(0, 1);
  for (int round = 0; round < 300; ++round) {
    const FormulaPtr f = random_formula(rng, spec, 8, 2);
    Lasso s;
    s.prefix.resize(2 + round % 3);
    s.loop.resize(1);
    for (auto* states : {&s.prefix, &s.loop})
      for (Assignment& a : *states) {
        if (pick_bit(rng)) a.insert("v0");
        if (pick_bit(rng)) a.insert("v1");
      }
    const size_t dup = round % s.prefix.size();
    Lasso stuttered = s;
    stuttered.prefix.insert(stuttered.prefix.begin() + dup, s.prefix[dup]);
    for (size_t i = 0; i < s.prefix.size(); ++i) {
      const size_t shifted = i < dup ? i : i + 1;
      CAPTURE(print_formula(*f));
      CHECK(eval_at(s, i, *f) == eval_at(stuttered, shifted, *f));
    }
  }
}

TEST_CASE("X-only satisfaction depends only on the first depth+1 states") {
  std::mt19937 rng(19);
  FragmentSpec spec{Base({builtin::fn_and(), builtin::fn_or(), builtin::fn_not()}),
                    {TemporalOp::X}};
  std::uniform_int_distribution<int> pick_bit(0, 1);
  for (int round = 0; round < 300; ++round) {
    const FormulaPtr f = random_formula(rng, spec, 8, 2);
    const int depth = x_depth(*f);
    Lasso s;
    s.prefix.resize(depth + 1);
    s.loop.resize(1);
    for (auto* states : {&s.prefix, &s.loop})
      for (Assignment& a : *states) {
        if (pick_bit(rng)) a.insert("v0");
        if (pick_bit(rng)) a.insert("v1");
      }
    Lasso mutated = s;
    mutated.loop = {{Assignment{"v0", "v1"}}};
    CHECK(eval_at(s, 0, *f) == eval_at(mutated, 0, *f));
  }
}

TEST_CASE("bounded search returns the documented first witnesses") {
  const auto contradiction = sat_bounded(*fp("and(x, not(x))"), 3, 2);
  CHECK_FALSE(contradiction.has_value());

  const auto plain = sat_bounded(*fp("x"), 3, 2);
  REQUIRE(plain.has_value());
  CHECK(plain->lasso == mk_lasso({}, {{"x"}}));
  CHECK(plain->index == 0);

  const auto flip = sat_bounded(*fp("and(x, X not(x))"), 3, 2);
  REQUIRE(flip.has_value());
  CHECK(flip->lasso == mk_lasso({{"x"}}, {{}}));
  CHECK(flip->index == 0);
}

TEST_CASE("bounded search respects its work limit") {
  BoundedSearchOptions opts;
  opts.work_limit = 10;
  CHECK_THROWS_AS(sat_bounded(*fp("and(and(x, y), and(z, w))"), 4, 3, opts), ResourceError);
}

TEST_CASE("bounded witnesses always verify") {
  std::mt19937 rng(23);
  FragmentSpec spec{Base({builtin::fn_and(), builtin::fn_or(), builtin::fn_not()}),
                    {TemporalOp::X, TemporalOp::F, TemporalOp::G, TemporalOp::U, TemporalOp::S}};
  for (int round = 0; round < 200; ++round) {
    const FormulaPtr f = random_formula(rng, spec, 7, 2);
    const auto w = sat_bounded(*f, 2, 2);
    if (w) CHECK(eval_at(w->lasso, w->index, *f));
  }
}

TEST_CASE("lasso json round trip") {
  const Lasso s = mk_lasso({{"x", "y"}, {}}, {{"x"}});
  const Lasso back = Lasso::from_json_text(s.to_json_text());
  CHECK(back == s);
  CHECK_THROWS(Lasso::from_json_text("{\"prefix\": []}"));
  CHECK_THROWS(Lasso::from_json_text("{\"prefix\": [], \"loop\": []}"));
  CHECK_THROWS(Lasso::from_json_text("not json"));
}
