#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "efftop/vm/code.hpp"
#include "efftop/vm/read.hpp"

using namespace efftop::vm;

namespace {

Value force(const CodePtr& c, Fuel fuel = 10000) {
  EvalOutcome o = eval(c, {}, fuel);
  REQUIRE(is_done(o));
  return *done_value(o);
}

CodePtr omega() {
  CodePtr w = lam(app(var(0), var(0)));
  return app(w, w);
}

}  // namespace

TEST_CASE("numerals and primitives") {
  CHECK(force(nat(7)).as_num() == 7);
  CHECK(force(app(succ_op(), nat(4))).as_num() == 5);
  CHECK(force(app(pred_op(), nat(4))).as_num() == 3);
  // pred is total with pred 0 = 0
  CHECK(force(app(pred_op(), nat(0))).as_num() == 0);
  CHECK(force(app(fst_op(), pair(nat(1), nat(2)))).as_num() == 1);
  CHECK(force(app(snd_op(), pair(nat(1), nat(2)))).as_num() == 2);
}

TEST_CASE("beta reduction and de Bruijn indexing") {
  // (\a.\b. a) 3 9 -> 3
  CHECK(force(app(lam(lam(var(1))), nat(3), nat(9))).as_num() == 3);
  // (\a.\b. b) 3 9 -> 9
  CHECK(force(app(lam(lam(var(0))), nat(3), nat(9))).as_num() == 9);
  // shadowing: (\x. (\x. x) 1) 5 -> 1
  CHECK(force(app(lam(app(lam(var(0)), nat(1))), nat(5))).as_num() == 1);
}

TEST_CASE("ifz branches bind the predecessor") {
  CHECK(force(ifz(nat(0), nat(42), var(0))).as_num() == 42);
  CHECK(force(ifz(nat(5), nat(42), var(0))).as_num() == 4);
  EvalOutcome o = eval(ifz(pair(nat(0), nat(0)), nat(1), nat(2)), {}, 100);
  CHECK(std::holds_alternative<Stuck>(o));
}

TEST_CASE("recursor iterates step over base") {
  // rec <0, \i.\acc. succ acc> 3 -> 3, stepping 0,1,2,3
  CodePtr spec = pair(nat(0), lam(lam(app(succ_op(), var(0)))));
  EvalOutcome o = eval(app(rec_op(), spec, nat(3)), {}, 100);
  REQUIRE(is_done(o));
  CHECK(done_value(o)->as_num() == 3);

  // step receives the index as its first argument: rec <0, \i.\acc. succ i> 4
  // computes the last index plus one, i.e. 4.
  CodePtr last = pair(nat(0), lam(lam(app(succ_op(), var(1)))));
  CHECK(force(app(rec_op(), last, nat(4))).as_num() == 4);

  // partial application yields a function value
  Value partial = force(app(rec_op(), spec));
  REQUIRE(partial.as_closure() != nullptr);
  EvalOutcome applied = kapply(partial, Value::num(2), 100);
  REQUIRE(is_done(applied));
  CHECK(done_value(applied)->as_num() == 2);
}

TEST_CASE("primitives are first-class via eta closures") {
  Value s = force(succ_op());
  REQUIRE(s.as_closure() != nullptr);
  EvalOutcome o = kapply(s, Value::num(4), 100);
  REQUIRE(is_done(o));
  CHECK(done_value(o)->as_num() == 5);
}

TEST_CASE("stuck states are distinguished from fuel exhaustion") {
  CHECK(std::holds_alternative<Stuck>(eval(app(nat(1), nat(2)), {}, 100)));
  CHECK(std::holds_alternative<Stuck>(eval(app(fst_op(), nat(3)), {}, 100)));
  CHECK(std::holds_alternative<Stuck>(eval(var(0), {}, 100)));
  CHECK(std::holds_alternative<Stuck>(eval(builtin("nope"), {}, 100)));
  CHECK(std::holds_alternative<OutOfFuel>(eval(omega(), {}, 100000)));
}

TEST_CASE("fuel monotonicity on terminating terms") {
  std::vector<CodePtr> samples = {
      nat(0),
      app(succ_op(), nat(4)),
      app(lam(lam(var(1))), nat(3), nat(9)),
      app(rec_op(), pair(nat(0), lam(lam(app(succ_op(), var(0))))), nat(5)),
      ifz(nat(3), nat(0), app(succ_op(), var(0))),
      app(builtin("swap"), pair(nat(1), nat(2))),
  };
  for (const CodePtr& c : samples) {
    EvalOutcome big = eval(c, {}, 100000);
    REQUIRE(is_done(big));
    // find the least sufficient fuel, then check every larger budget agrees
    Fuel least = 1;
    while (!is_done(eval(c, {}, least))) ++least;
    for (Fuel extra : {Fuel{0}, Fuel{1}, Fuel{7}, Fuel{1000}}) {
      EvalOutcome o = eval(c, {}, least + extra);
      REQUIRE(is_done(o));
      CHECK(value_equal(*done_value(o), *done_value(big)));
    }
    CHECK(std::holds_alternative<OutOfFuel>(eval(c, {}, least - 1)));
  }
}

TEST_CASE("builtins expand to fixed combinators") {
  CHECK(force(app(builtin("id"), nat(9))).as_num() == 9);
  CHECK(force(app(builtin("const0"), nat(9))).as_num() == 0);
  Value v = force(app(builtin("swap"), pair(nat(1), nat(2))));
  auto p = un_pair(v);
  REQUIRE(p.has_value());
  CHECK(p->first.as_num() == 2);
  CHECK(p->second.as_num() == 1);
}

TEST_CASE("pair helpers and cantor view") {
  Value p = mk_pair(Value::num(1), Value::num(2));
  auto up = un_pair(p);
  REQUIRE(up.has_value());
  CHECK(up->first.as_num() == 1);
  CHECK(up->second.as_num() == 2);
  // (1,2) -> (1+2)(1+2+1)/2 + 2 = 8
  CHECK(cantor_view(p) == 8);
  CHECK(cantor_view(Value::num(5)) == 5);
  CHECK(cantor_view(mk_pair(Value::num(0), Value::num(0))) == 0);
  CHECK(cantor_view(mk_pair(p, Value::num(0))) == 8 * 9 / 2);
  CHECK(!cantor_view(force(lam(var(0)))).has_value());
}

TEST_CASE("reify inverts evaluation on first-order values") {
  Value p = mk_pair(Value::num(3), mk_pair(Value::num(0), Value::num(1)));
  auto c = reify(p);
  REQUIRE(c.has_value());
  CHECK(value_equal(force(*c), p));
  CHECK(!reify(force(lam(var(0)))).has_value());
}

TEST_CASE("code parser and printer round-trip") {
  std::vector<std::string> sources = {
      "(lam (var 0))",
      "(app succ (nat 4))",
      "(app (lam (lam (var 1))) (nat 3) (nat 9))",
      "(pair (nat 1) (pair (nat 2) (nat 3)))",
      "(ifz (nat 2) (nat 0) (app succ (var 0)))",
      "(app rec (pair (nat 0) (lam (lam (app succ (var 0))))) (nat 3))",
      "(builtin swap)",
      "pred",
      "fst",
      "snd",
  };
  for (const std::string& src : sources) {
    CodePtr c = parse_code(src);
    std::string printed = code_to_string(c);
    CodePtr again = parse_code(printed);
    CHECK(structural_equal(c, again));
    CHECK(code_to_string(again) == printed);
  }
  CHECK_THROWS(parse_code("(lam)"));
  CHECK_THROWS(parse_code("(frob 1)"));
  CHECK_THROWS(parse_code("(var -1)"));
  CHECK_THROWS(parse_code("(nat 1 2)"));
}

TEST_CASE("size and free variable accounting") {
  CHECK(code_size(nat(0)) == 1);
  CHECK(code_size(lam(var(0))) == 2);
  CHECK(code_size(app(succ_op(), nat(1))) == 3);
  CHECK(free_var_bound(lam(var(0))) == 0);
  CHECK(free_var_bound(var(2)) == 3);
  CHECK(free_var_bound(lam(var(1))) == 1);
  CHECK(free_var_bound(ifz(nat(0), nat(0), var(0))) == 0);
}

TEST_CASE("determinism") {
  CodePtr c = app(rec_op(), pair(nat(1), lam(lam(app(succ_op(), app(succ_op(), var(0)))))), nat(6));
  EvalOutcome a = eval(c, {}, 5000);
  EvalOutcome b = eval(c, {}, 5000);
  REQUIRE(is_done(a));
  REQUIRE(is_done(b));
  CHECK(value_equal(*done_value(a), *done_value(b)));
  CHECK(done_value(a)->as_num() == 13);
}
