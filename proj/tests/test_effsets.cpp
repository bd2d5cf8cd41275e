#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "efftop/effsets/fns.hpp"
#include "efftop/effsets/sets.hpp"

using namespace efftop;
using effsets::ElPredicate;
using effsets::FiniteSpec;
using logic::SearchBudget;
using logic::Verdict;
using sem::CarrierValue;
using sem::ElValue;
using sem::SemFormula;

namespace {

SearchBudget small_budget(std::uint64_t nat_bound = 6) {
  SearchBudget b;
  b.nat_sample_bound = nat_bound;
  return b;
}

CarrierValue lab(const std::string& s) { return CarrierValue::label(s); }
CarrierValue num(std::uint64_t n) { return CarrierValue::natv(n); }
CarrierValue pred(ElValue e) { return CarrierValue::pred(std::move(e)); }
ElValue el_nat(std::uint64_t n) { return effsets::el_inject(effsets::nat_set(), num(n)); }

vm::CodePtr t4(vm::CodePtr s, vm::CodePtr u, vm::CodePtr e, vm::CodePtr q) {
  return vm::pair(std::move(s), vm::pair(std::move(u), vm::pair(std::move(e), std::move(q))));
}

// Two labels, each equal only to itself, every proof trivial.
const sem::EffSetPtr& two_top() {
  static const sem::EffSetPtr s = effsets::finite_set(
      FiniteSpec{"two",
                 {"a", "b"},
                 {{"a", "a", SemFormula::top()}, {"b", "b", SemFormula::top()}}},
      SearchBudget{});
  return s;
}

// Non-reflexive table: b is not equal to anything, including itself.
const sem::EffSetPtr& two_partial() {
  static const sem::EffSetPtr s = effsets::finite_set(
      FiniteSpec{"half", {"a", "b"}, {{"a", "a", SemFormula::top()}}}, SearchBudget{});
  return s;
}

// Proofs of self-equality carry information: a specific numeral each.
const sem::EffSetPtr& two_coded() {
  static const sem::EffSetPtr s = effsets::finite_set(
      FiniteSpec{"coded",
                 {"a", "b"},
                 {{"a", "a", SemFormula::nat_eq(1, 1)}, {"b", "b", SemFormula::nat_eq(2, 2)}}},
      SearchBudget{});
  return s;
}

// Both labels equal to each other; proofs are ordered pairs of numerals, so
// symmetry genuinely has to swap and transitivity has to recombine.
const sem::EffSetPtr& two_linked() {
  auto ee = [](std::uint64_t n, std::uint64_t m) {
    return SemFormula::conj(SemFormula::nat_eq(n, n), SemFormula::nat_eq(m, m));
  };
  static const sem::EffSetPtr s = effsets::finite_set(
      FiniteSpec{"linked",
                 {"a", "b"},
                 {{"a", "a", ee(1, 1)},
                  {"b", "b", ee(2, 2)},
                  {"a", "b", ee(1, 2)},
                  {"b", "a", ee(2, 1)}}},
      SearchBudget{});
  return s;
}

const sem::EffSetPtr& three_top() {
  static const sem::EffSetPtr s = effsets::finite_set(
      FiniteSpec{"three",
                 {"a", "b", "c"},
                 {{"a", "a", SemFormula::top()},
                  {"b", "b", SemFormula::top()},
                  {"c", "c", SemFormula::top()}}},
      SearchBudget{});
  return s;
}

}  // namespace

TEST_CASE("one-point equality is total and exactly realized") {
  auto one = effsets::one_set();
  auto r = logic::holds(one->eq(CarrierValue::star(), CarrierValue::star()), small_budget());
  CHECK(r.check.verdict == Verdict::Yes);
  CHECK(r.check.exact);
}

TEST_CASE("numeral equality: diagonal realized by the numeral, off-diagonal exactly refuted") {
  auto nat = effsets::nat_set();
  SearchBudget b = small_budget();
  auto yes = logic::holds(nat->eq(num(3), num(3)), b);
  CHECK(yes.check.verdict == Verdict::Yes);
  CHECK(yes.check.exact);
  REQUIRE(yes.realizer);
  auto no = logic::holds(nat->eq(num(2), num(3)), b);
  CHECK(no.check.verdict == Verdict::No);
  CHECK(no.check.exact);
}

TEST_CASE("product equality is componentwise") {
  auto p = effsets::prod_set(effsets::nat_set(), effsets::one_set());
  SemFormula f = p->eq(CarrierValue::pair(num(2), CarrierValue::star()),
                       CarrierValue::pair(num(2), CarrierValue::star()));
  SearchBudget b = small_budget();
  CHECK(logic::realizes_value(vm::Value::pair(vm::Value::num(2), vm::Value::num(0)), f, b)
            .verdict == Verdict::Yes);
  CHECK(logic::realizes_value(vm::Value::pair(vm::Value::num(3), vm::Value::num(0)), f, b)
            .verdict == Verdict::No);
  CHECK(logic::realizes_value(vm::Value::num(2), f, b).verdict == Verdict::No);
  CHECK(logic::holds(f, b).check.verdict == Verdict::Yes);
}

TEST_CASE("finite set construction validates the equality laws and rejects bad tables") {
  CHECK(two_top() != nullptr);
  CHECK(two_partial() != nullptr);
  CHECK(two_coded() != nullptr);
  CHECK(two_linked() != nullptr);
  CHECK(three_top() != nullptr);
  FiniteSpec asym{"asym", {"a", "b"}, {{"a", "b", SemFormula::top()}}};
  CHECK_THROWS_AS(effsets::finite_set(asym, SearchBudget{}), effsets::SetConstructionError);
  FiniteSpec dup{"dup", {"a", "a"}, {}};
  CHECK_THROWS_AS(effsets::finite_set(dup, SearchBudget{}), effsets::SetConstructionError);
  FiniteSpec stray{"stray", {"a"}, {{"a", "z", SemFormula::top()}}};
  CHECK_THROWS_AS(effsets::finite_set(stray, SearchBudget{}), effsets::SetConstructionError);
}

TEST_CASE("stored equality-law realizers check exactly on the finite fixtures") {
  for (const auto& s : {two_top(), two_partial(), two_coded(), two_linked(), three_top()}) {
    SearchBudget bs = small_budget();
    bs.hint_realizers.push_back(s->sym_code);
    auto sy = logic::holds(effsets::symmetry_formula(s), bs);
    CHECK(sy.check.verdict == Verdict::Yes);
    CHECK(sy.check.exact);
    SearchBudget bt = small_budget();
    bt.hint_realizers.push_back(s->trans_code);
    auto tr = logic::holds(effsets::transitivity_formula(s), bt);
    CHECK(tr.check.verdict == Verdict::Yes);
    CHECK(tr.check.exact);
  }
}

TEST_CASE("injected point of the one-point set is self-equal at the element level") {
  auto one = effsets::one_set();
  ElValue star_el = effsets::el_inject(one, CarrierValue::star());
  auto r = logic::holds(effsets::el_eq(one, star_el, star_el), small_budget());
  CHECK(r.check.verdict == Verdict::Yes);
  CHECK(r.check.exact);
}

TEST_CASE("element equality of numeral injections tracks numeral equality") {
  auto nat = effsets::nat_set();
  auto yes = logic::holds(effsets::el_eq(nat, el_nat(2), el_nat(2)), small_budget());
  CHECK(yes.check.verdict == Verdict::Yes);
  auto no = logic::holds(effsets::el_eq(nat, el_nat(2), el_nat(3)), small_budget());
  CHECK(no.check.verdict == Verdict::No);
  // the equivalence clause pairs an inhabited instance with an empty one
  CHECK(no.check.exact);
}

TEST_CASE("equality to an injection splits into self-equality plus membership") {
  auto nat = effsets::nat_set();
  SearchBudget b = small_budget();
  ElValue u = el_nat(4);
  SemFormula lhs = effsets::el_eq(nat, u, el_nat(4));
  SemFormula rhs = SemFormula::conj(effsets::el_eq(nat, u, u), sem::el_apply(u, num(4)));
  CHECK(logic::realizes(effsets::el_eq_split_member_code(nat), SemFormula::impl(lhs, rhs), b)
            .verdict == Verdict::Yes);
  CHECK(logic::realizes(effsets::el_eq_join_member_code(), SemFormula::impl(rhs, lhs), b)
            .verdict == Verdict::Yes);
  vm::CodePtr both =
      vm::pair(effsets::el_eq_split_member_code(nat), effsets::el_eq_join_member_code());
  CHECK(logic::realizes(both, SemFormula::iff(lhs, rhs), b).verdict == Verdict::Yes);
  // mismatched member: both sides are empty and the same codes still work
  SemFormula lhs5 = effsets::el_eq(nat, el_nat(5), el_nat(4));
  SemFormula rhs5 = SemFormula::conj(effsets::el_eq(nat, el_nat(5), el_nat(5)),
                                     sem::el_apply(el_nat(5), num(4)));
  CHECK(logic::realizes(both, SemFormula::iff(lhs5, rhs5), b).verdict == Verdict::Yes);
}

TEST_CASE("injection both preserves and reflects carrier equality") {
  auto nat = effsets::nat_set();
  SearchBudget b = small_budget();
  SemFormula low = nat->eq(num(4), num(4));
  SemFormula high = effsets::el_eq(nat, el_nat(4), el_nat(4));
  CHECK(logic::realizes(effsets::inject_cong_code(nat), SemFormula::impl(low, high), b).verdict ==
        Verdict::Yes);
  CHECK(logic::realizes(effsets::inject_reflect_code(nat), SemFormula::impl(high, low), b)
            .verdict == Verdict::Yes);
  CHECK(logic::holds(low, b).check.verdict == Verdict::Yes);
  CHECK(logic::holds(high, b).check.verdict == Verdict::Yes);
}

TEST_CASE("injection membership realizers are the carrier equality realizers") {
  auto nat = effsets::nat_set();
  SemFormula m = sem::el_apply(effsets::el_inject(nat, num(0)), num(0));
  SearchBudget b = small_budget();
  CHECK(logic::realizes_value(vm::Value::num(0), m, b).verdict == Verdict::Yes);
  CHECK(logic::realizes_value(vm::Value::num(1), m, b).verdict == Verdict::No);
  CHECK_THROWS_AS(effsets::el_inject(nat, CarrierValue::star()), std::invalid_argument);
}

TEST_CASE("lifting the successor through extension agrees with it on injections") {
  auto nat = effsets::nat_set();
  auto succ_low = effsets::make_fn(
      "succ-low", {nat}, effsets::el_of(nat), [nat](const std::vector<CarrierValue>& xs) {
        return pred(effsets::el_inject(nat, num(*xs.at(0).as_nat() + 1)));
      });
  auto succ = effsets::extend(succ_low, 1);
  CarrierValue out = effsets::apply_fn(succ, {pred(el_nat(3))});
  REQUIRE(out.as_pred());
  // treat the numeral carrier as bounded so off-witness memberships are
  // provably empty; element witnesses still extend the sample past the bound
  SearchBudget b0 = small_budget();
  b0.pools["nat"] = logic::PoolEntry{{}, true};
  auto r = logic::holds(effsets::el_eq(nat, *out.as_pred(), el_nat(4)), b0);
  CHECK(r.check.verdict == Verdict::Yes);

  // one fixed code realizes the agreement at every sampled argument: the
  // guard numeral rebuilds the existence witness and both bridge directions
  vm::CodePtr agree = vm::lam(
      t4(vm::lam(vm::lam(vm::var(1))), vm::lam(vm::lam(vm::snd_of(vm::var(1)))),
         vm::pair(vm::var(0), vm::app(vm::succ_op(), vm::var(0))),
         vm::pair(vm::lam(vm::snd_of(vm::var(0))), vm::lam(vm::pair(vm::var(1), vm::var(0))))));
  SearchBudget b = small_budget();
  b.pools["nat"] = logic::PoolEntry{{}, true};
  b.hint_realizers.push_back(agree);
  auto ag = logic::holds(effsets::extension_agreement_formula(succ, succ_low, 1), b);
  CHECK(ag.check.verdict == Verdict::Yes);
  REQUIRE(ag.realizer);
  CHECK(vm::structural_equal(*ag.realizer, agree));
}

TEST_CASE("an extension coincides extensionally with a directly written map") {
  auto a = two_top();
  auto low = effsets::make_fn(
      "inj-low", {a}, effsets::el_of(a),
      [a](const std::vector<CarrierValue>& xs) { return pred(effsets::el_inject(a, xs.at(0))); });
  auto g = effsets::extend(low, 1);
  auto h = effsets::morphism("direct", a, a, [](const ElValue& u) { return u; });
  CHECK(effsets::approx_equal(g, h, small_budget()).check.verdict == Verdict::Yes);
}

TEST_CASE("the described element of `equals seven` is element-equal to seven") {
  auto nat = effsets::nat_set();
  ElPredicate f{"is-seven",
                [nat](const ElValue& u) { return effsets::el_eq(nat, u, el_nat(7)); }};
  ElValue d = effsets::description(nat, f);
  // frozen by unfolding the membership formula at 7: proofs of numeral
  // equality are the numeral, so every transport is a projection
  vm::CodePtr r77 = t4(vm::lam(vm::lam(vm::var(1))), vm::lam(vm::lam(vm::var(1))), vm::nat(7),
                       vm::pair(vm::identity(), vm::identity()));
  vm::CodePtr outer = t4(vm::lam(vm::lam(vm::var(1))), vm::lam(vm::lam(vm::nat(7))), r77,
                         vm::pair(vm::lam(vm::nat(7)), vm::lam(r77)));
  SearchBudget b = small_budget();
  b.hint_realizers.push_back(outer);
  b.hint_realizers.push_back(r77);
  CHECK(logic::holds(effsets::el_eq(nat, d, el_nat(7)), b).check.verdict == Verdict::Yes);
}

TEST_CASE("the described element of an empty predicate is not self-equal") {
  auto nat = effsets::nat_set();
  ElPredicate f{"never", [](const ElValue&) { return SemFormula::bot(); }};
  ElValue d = effsets::description(nat, f);
  auto r = logic::holds(effsets::el_eq(nat, d, d), small_budget());
  CHECK(r.check.verdict == Verdict::No);
  CHECK_FALSE(r.check.exact);  // the numeral carrier is sampled, never enumerated
}

TEST_CASE("a stable unique inhabited predicate holds of its described element") {
  auto a = three_top();
  ElPredicate f{"is-a", [a](const ElValue& u) {
                  return effsets::el_eq(a, u, effsets::el_inject(a, lab("a")));
                }};
  ElValue d = effsets::description(a, f);
  vm::CodePtr raa = t4(vm::lam(vm::lam(vm::nat(0))), vm::lam(vm::lam(vm::nat(0))), vm::nat(0),
                       vm::pair(vm::lam(vm::nat(0)), vm::lam(vm::nat(0))));
  vm::CodePtr outer = t4(vm::lam(vm::lam(vm::var(1))), vm::lam(vm::lam(vm::nat(0))), raa,
                         vm::pair(vm::lam(vm::nat(0)), vm::lam(raa)));
  SearchBudget b = small_budget();
  b.hint_realizers.push_back(outer);
  b.hint_realizers.push_back(raa);
  auto r = logic::holds(f.at(d), b);
  CHECK(r.check.verdict == Verdict::Yes);
  CHECK(r.check.exact);
}

TEST_CASE("restricting by a true side condition changes nothing") {
  auto nat = effsets::nat_set();
  ElValue r2 = effsets::restrict_el(el_nat(2), SemFormula::top());
  CHECK(logic::holds(effsets::el_eq(nat, r2, el_nat(2)), small_budget()).check.verdict ==
        Verdict::Yes);
}

TEST_CASE("restricting by a false side condition empties the element") {
  auto nat = effsets::nat_set();
  ElValue rb = effsets::restrict_el(el_nat(2), SemFormula::bot());
  CHECK(logic::holds(effsets::el_eq(nat, el_nat(2), rb), small_budget()).check.verdict ==
        Verdict::No);
}

TEST_CASE("equality to a restriction is equality plus the side condition") {
  SearchBudget b = small_budget();
  vm::CodePtr both = vm::pair(effsets::restrict_split_code(), effsets::restrict_intro_code());

  auto a = two_coded();
  ElValue u = effsets::el_inject(a, lab("a"));
  SemFormula cond = SemFormula::nat_eq(1, 1);
  SemFormula lhs = effsets::el_eq(a, u, effsets::restrict_el(u, cond));
  SemFormula rhs = SemFormula::conj(effsets::el_eq(a, u, u), cond);
  CHECK(logic::realizes(both, SemFormula::iff(lhs, rhs), b).verdict == Verdict::Yes);

  auto nat = effsets::nat_set();
  ElValue v = el_nat(2);
  SemFormula lhs2 = effsets::el_eq(nat, v, effsets::restrict_el(v, SemFormula::nat_eq(3, 3)));
  SemFormula rhs2 =
      SemFormula::conj(effsets::el_eq(nat, v, v), SemFormula::nat_eq(3, 3));
  CHECK(logic::realizes(both, SemFormula::iff(lhs2, rhs2), b).verdict == Verdict::Yes);
}

TEST_CASE("subset equality is base equality plus membership") {
  auto a = two_top();
  ElPredicate f{"contains-a", [](const ElValue& u) { return sem::el_apply(u, lab("a")); }};
  auto ev = effsets::check_el_predicate_stability(a, f, small_budget());
  REQUIRE(ev);
  auto b_set = effsets::subset_set("has-a", a, f, *ev);
  SearchBudget b = small_budget();
  CHECK(logic::holds(b_set->eq(lab("a"), lab("a")), b).check.verdict == Verdict::Yes);
  auto nob = logic::holds(b_set->eq(lab("b"), lab("b")), b);
  CHECK(nob.check.verdict == Verdict::No);
  CHECK(nob.check.exact);
  // the spliced transport codes satisfy the equality laws
  SearchBudget bs = small_budget();
  bs.hint_realizers.push_back(b_set->sym_code);
  CHECK(logic::holds(effsets::symmetry_formula(b_set), bs).check.verdict == Verdict::Yes);
  SearchBudget bt = small_budget();
  bt.hint_realizers.push_back(b_set->trans_code);
  CHECK(logic::holds(effsets::transitivity_formula(b_set), bt).check.verdict == Verdict::Yes);
}

TEST_CASE("first projection of a constructed pair returns the first component") {
  auto ops = effsets::product_ops(effsets::nat_set(), effsets::one_set());
  CarrierValue w = effsets::apply_fn(
      ops.cons,
      {pred(el_nat(1)), pred(effsets::el_inject(effsets::one_set(), CarrierValue::star()))});
  REQUIRE(w.as_pred());
  CarrierValue p1w = effsets::apply_fn(ops.p1, {w});
  REQUIRE(p1w.as_pred());
  SearchBudget b = small_budget(4);
  b.pools["nat"] = logic::PoolEntry{{}, true};
  auto r = logic::holds(effsets::el_eq(effsets::nat_set(), *p1w.as_pred(), el_nat(1)), b);
  CHECK(r.check.verdict == Verdict::Yes);
}

TEST_CASE("constructed pairs are element-equal to injected pairs") {
  auto a = two_top();
  auto ops = effsets::product_ops(a, a);
  CarrierValue w = effsets::apply_fn(ops.cons, {pred(effsets::el_inject(a, lab("a"))),
                                                pred(effsets::el_inject(a, lab("b")))});
  REQUIRE(w.as_pred());
  ElValue direct = effsets::el_inject(ops.prod, CarrierValue::pair(lab("a"), lab("b")));
  CHECK(logic::holds(effsets::el_eq(ops.prod, *w.as_pred(), direct), small_budget())
            .check.verdict == Verdict::Yes);
}

TEST_CASE("componentwise element-equal pairs are element-equal") {
  auto a = two_top();
  auto ops = effsets::product_ops(a, a);
  ElValue w = effsets::el_inject(ops.prod, CarrierValue::pair(lab("a"), lab("b")));
  ElValue w2 = effsets::el_inject(ops.prod, CarrierValue::pair(lab("a"), lab("b")));
  auto p1 = [&](const ElValue& x) { return *effsets::apply_fn(ops.p1, {pred(x)}).as_pred(); };
  auto p2 = [&](const ElValue& x) { return *effsets::apply_fn(ops.p2, {pred(x)}).as_pred(); };
  SemFormula premise = SemFormula::conj(effsets::el_eq(a, p1(w), p1(w2)),
                                        effsets::el_eq(a, p2(w), p2(w2)));
  SemFormula goal = effsets::el_eq(ops.prod, w, w2);
  CHECK(logic::holds(SemFormula::impl(premise, goal), small_budget()).check.verdict ==
        Verdict::Yes);
}

TEST_CASE("the low pair constructor is stable") {
  auto a = two_top();
  auto ops = effsets::product_ops(a, a);
  CHECK(effsets::check_stability(ops.cons_low, small_budget()).check.verdict == Verdict::Yes);
}

TEST_CASE("a constant low map into elements is stable over an information-carrying table") {
  auto a = two_coded();
  auto c = effsets::make_fn(
      "const-a", {a}, effsets::el_of(a), [a](const std::vector<CarrierValue>&) {
        return pred(effsets::el_inject(a, lab("a")));
      });
  CHECK(effsets::check_stability(c, small_budget()).check.verdict == Verdict::Yes);
}

TEST_CASE("applying an abstracted identity map returns its argument") {
  auto a = two_top();
  auto ops = effsets::closure_ops(a, a);
  ElValue lamf = effsets::lam_el(a, a, "id", [](const ElValue& u) { return u; });
  CarrierValue out =
      effsets::apply_fn(ops.app, {pred(lamf), pred(effsets::el_inject(a, lab("a")))});
  REQUIRE(out.as_pred());
  // the map carrier is only reachable through element witnesses: an empty
  // complete pool makes memberships with no witness provably empty
  SearchBudget b = small_budget();
  b.pools["(map two two)"] = logic::PoolEntry{{}, true};
  auto r = logic::holds(effsets::el_eq(a, *out.as_pred(), effsets::el_inject(a, lab("a"))), b);
  CHECK(r.check.verdict == Verdict::Yes);
}

TEST_CASE("map-set equality rejects values outside the carrier") {
  auto a = two_top();
  auto maps = effsets::closure_set(a, a);
  auto r = logic::holds(maps->eq(num(3), num(3)), small_budget());
  CHECK(r.check.verdict == Verdict::No);
  CHECK(r.check.exact);
}

TEST_CASE("reading back an injected truth value gives an equivalent proposition") {
  auto omega = effsets::omega_set();
  std::vector<SemFormula> basis = {
      SemFormula::top(), SemFormula::bot(),
      SemFormula::conj(SemFormula::top(), SemFormula::bot()),
      SemFormula::impl(SemFormula::bot(), SemFormula::bot()),
      SemFormula::impl(SemFormula::top(), SemFormula::bot())};
  for (const auto& q : basis) {
    ElValue el_q = effsets::el_inject(omega, CarrierValue::prop(q));
    auto r = logic::holds(SemFormula::iff(effsets::prop_of(el_q), q), small_budget());
    CHECK(r.check.verdict == Verdict::Yes);
    CHECK(r.check.exact);
  }
}

TEST_CASE("the truth map lands on a true proposition") {
  auto ops = effsets::classifier_ops();
  CarrierValue t = effsets::apply_fn(
      ops.truth, {pred(effsets::el_inject(effsets::one_set(), CarrierValue::star()))});
  REQUIRE(t.as_pred());
  CHECK(logic::holds(effsets::prop_of(*t.as_pred()), small_budget()).check.verdict ==
        Verdict::Yes);
}

TEST_CASE("the characteristic map of the identity holds on reachable elements") {
  auto a = two_top();
  auto chi = effsets::chi_fn(effsets::identity_morphism(a));
  CarrierValue v = effsets::apply_fn(chi, {pred(effsets::el_inject(a, lab("a")))});
  REQUIRE(v.as_pred());
  CHECK(logic::holds(effsets::prop_of(*v.as_pred()), small_budget()).check.verdict ==
        Verdict::Yes);
}

TEST_CASE("composition with the identity changes nothing extensionally") {
  auto a = two_top();
  auto f = effsets::morphism("keep", a, a, [](const ElValue& u) { return u; });
  auto gf = effsets::compose(effsets::identity_morphism(a), f);
  CHECK(effsets::approx_equal(gf, f, small_budget()).check.verdict == Verdict::Yes);
}

TEST_CASE("a low-level truth lifts mechanically to the element level") {
  auto nat = effsets::nat_set();
  auto inhabited = [nat](const ElValue& u) {
    return SemFormula::exists(
        nat->carrier, [u](const CarrierValue& y) { return sem::el_apply(u, y); },
        sem::el_witnesses(u));
  };
  // stability: move a member along the forward clause of the equality tuple
  auto fwd_of = [](vm::CodePtr r) {
    return vm::fst_of(vm::snd_of(vm::snd_of(vm::snd_of(std::move(r)))));
  };
  vm::CodePtr st = vm::lam(vm::lam(vm::app(fwd_of(vm::var(1)), vm::var(0))));
  vm::CodePtr low = vm::identity();  // the guard numeral is already the member
  vm::CodePtr lift = effsets::lift_truth_code({nat}, 1, st, low);
  SemFormula lifted = effsets::forall_in(effsets::el_of(nat), [&](const CarrierValue& u) {
    return inhabited(*u.as_pred());
  });
  CHECK(logic::realizes(lift, lifted, small_budget()).verdict == Verdict::Yes);
}

TEST_CASE("guarded quantifiers expand to guard-implication and guard-conjunction") {
  auto one = effsets::one_set();
  SemFormula fa = effsets::forall_in(one, [](const CarrierValue&) { return SemFormula::bot(); });
  const auto& n = static_cast<const sem::FormulaNode::variant&>(fa.node());
  REQUIRE(std::holds_alternative<sem::ForAllF>(n));
  CHECK(std::get<sem::ForAllF>(n).body(CarrierValue::star()).to_string() == "(imp top bot)");
  SemFormula ex = effsets::exists_in(one, [](const CarrierValue&) { return SemFormula::bot(); });
  const auto& m = static_cast<const sem::FormulaNode::variant&>(ex.node());
  REQUIRE(std::holds_alternative<sem::ExistsF>(m));
  CHECK(std::get<sem::ExistsF>(m).body(CarrierValue::star()).to_string() == "(and top bot)");
}
