#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "efftop/logic/check.hpp"
#include "efftop/sem.hpp"
#include "efftop/vm/code.hpp"

using namespace efftop;
using logic::CheckResult;
using logic::SearchBudget;
using logic::Verdict;
using sem::CarrierValue;
using sem::SemFormula;

namespace {

// Natural numbers with numeral equality; symmetry is the identity map and
// transitivity returns its second argument.
sem::EffSetPtr nat_set() {
  static const sem::EffSetPtr s = std::make_shared<const sem::EffSet>(sem::EffSet{
      "nat", sem::nat_c(),
      [](const CarrierValue& a, const CarrierValue& b) {
        return SemFormula::nat_eq(*a.as_nat(), *b.as_nat());
      },
      vm::identity(), vm::lam(vm::lam(vm::var(0)))});
  return s;
}

// Two-element set where each label is equal only to itself.
sem::EffSetPtr id_pair_set() {
  static const sem::EffSetPtr s = std::make_shared<const sem::EffSet>(sem::EffSet{
      "pairs", sem::finite_c({"a", "b"}),
      [](const CarrierValue& a, const CarrierValue& b) {
        return *a.as_label() == *b.as_label() ? SemFormula::top() : SemFormula::bot();
      },
      vm::identity(), vm::lam(vm::lam(vm::var(0)))});
  return s;
}

vm::CodePtr omega() {
  vm::CodePtr w = vm::lam(vm::app(vm::var(0), vm::var(0)));
  return vm::app(w, w);
}

SemFormula nat_eq(std::uint64_t n, std::uint64_t m) { return SemFormula::nat_eq(n, m); }

}  // namespace

TEST_CASE("numeric equations are realized by the numeral itself") {
  SearchBudget b;
  CHECK(logic::realizes_value(vm::Value::num(5), nat_eq(5, 5), b).verdict == Verdict::Yes);
  CHECK(logic::realizes_value(vm::Value::num(5), nat_eq(5, 5), b).exact);
  CHECK(logic::realizes_value(vm::Value::num(4), nat_eq(5, 5), b).verdict == Verdict::No);
  CHECK(logic::realizes_value(vm::Value::num(4), nat_eq(5, 5), b).exact);
  CHECK(logic::realizes_value(vm::Value::num(2), nat_eq(2, 3), b).verdict == Verdict::No);
  CHECK(logic::realizes_value(vm::Value::pair(vm::Value::num(0), vm::Value::num(0)), nat_eq(1, 1), b)
            .verdict == Verdict::No);
}

TEST_CASE("top is realized by every closed code without evaluating it") {
  SearchBudget b;
  b.fuel = 50;
  CheckResult r = logic::realizes(omega(), SemFormula::top(), b);
  CHECK(r.verdict == Verdict::Yes);
  CHECK(r.exact);
  // Equality formulas that unfold to top inherit the by-fiat rule.
  CheckResult r2 = logic::realizes(
      omega(), SemFormula::eq_in(id_pair_set(), CarrierValue::label("a"), CarrierValue::label("a")),
      b);
  CHECK(r2.verdict == Verdict::Yes);
  CHECK(r2.exact);
}

TEST_CASE("non-top formulas require the code to reach a value") {
  SearchBudget b;
  b.fuel = 200;
  CHECK(logic::realizes(omega(), nat_eq(0, 0), b).verdict == Verdict::Unknown);
  CheckResult stuck = logic::realizes(vm::app(vm::fst_op(), vm::nat(3)), nat_eq(0, 0), b);
  CHECK(stuck.verdict == Verdict::No);
  CHECK(stuck.exact);
}

TEST_CASE("equality in a set unfolds to the set's equality formula") {
  SearchBudget b;
  auto f = SemFormula::eq_in(nat_set(), CarrierValue::natv(5), CarrierValue::natv(5));
  CheckResult r = logic::realizes(vm::nat(5), f, b);
  CHECK(r.verdict == Verdict::Yes);
  CHECK(r.exact);
  CHECK(logic::realizes(vm::nat(4), f, b).verdict == Verdict::No);
}

TEST_CASE("conjunction realizers are pairs checked componentwise") {
  SearchBudget b;
  auto f = SemFormula::conj(nat_eq(5, 5), nat_eq(7, 7));
  CheckResult ok = logic::realizes(vm::pair(vm::nat(5), vm::nat(7)), f, b);
  CHECK(ok.verdict == Verdict::Yes);
  CHECK(ok.exact);
  CHECK(logic::realizes(vm::pair(vm::nat(7), vm::nat(5)), f, b).verdict == Verdict::No);
  CHECK(logic::realizes(vm::nat(5), f, b).verdict == Verdict::No);
}

TEST_CASE("top-and-bottom conjunction is exactly refuted") {
  SearchBudget b;
  auto r = logic::holds(SemFormula::conj(SemFormula::top(), SemFormula::bot()), b);
  CHECK(r.check.verdict == Verdict::No);
  CHECK(r.check.exact);
  CHECK(!r.realizer.has_value());
}

TEST_CASE("implications with provably empty premise hold vacuously") {
  SearchBudget b;
  auto r = logic::holds(SemFormula::impl(SemFormula::bot(), SemFormula::bot()), b);
  REQUIRE(r.check.verdict == Verdict::Yes);
  CHECK(r.check.exact);
  REQUIRE(r.realizer.has_value());
  // Refuted-premise implications also accept non-function realizers.
  SearchBudget b2;
  CheckResult nf = logic::realizes(vm::nat(0), SemFormula::impl(SemFormula::bot(), nat_eq(1, 2)), b2);
  CHECK(nf.verdict == Verdict::Yes);
  CHECK(nf.exact);
}

TEST_CASE("top-to-bottom implication is exactly refuted") {
  SearchBudget b;
  auto r = logic::holds(SemFormula::impl(SemFormula::top(), SemFormula::bot()), b);
  CHECK(r.check.verdict == Verdict::No);
  CHECK(r.check.exact);
}

TEST_CASE("an implication between distinct numerals is refuted at its witness") {
  SearchBudget b;
  auto f = SemFormula::impl(nat_eq(2, 2), nat_eq(2, 3));
  CheckResult id_fails = logic::realizes(vm::identity(), f, b);
  CHECK(id_fails.verdict == Verdict::No);
  CHECK(id_fails.exact);
  CHECK(id_fails.detail.find("2") != std::string::npos);
  auto h = logic::holds(f, b);
  CHECK(h.check.verdict == Verdict::No);
  CHECK(h.check.exact);
}

TEST_CASE("implication checked on its full finite premise set is exact") {
  SearchBudget b;
  auto f = SemFormula::impl(nat_eq(9, 9), nat_eq(9, 9));
  CheckResult r = logic::realizes(vm::identity(), f, b);
  CHECK(r.verdict == Verdict::Yes);
  CHECK(r.exact);
}

TEST_CASE("universal quantification over complete domains gives exact verdicts") {
  SearchBudget b;
  auto dom = sem::finite_c({"a", "b", "c"});
  auto f = SemFormula::forall(dom, [](const CarrierValue&) { return nat_eq(0, 0); });
  CheckResult r = logic::realizes(vm::nat(0), f, b);
  CHECK(r.verdict == Verdict::Yes);
  CHECK(r.exact);

  auto g = SemFormula::forall(dom, [](const CarrierValue& x) {
    return *x.as_label() == "a" ? SemFormula::top() : SemFormula::bot();
  });
  CheckResult bad = logic::realizes(vm::nat(0), g, b);
  CHECK(bad.verdict == Verdict::No);
  CHECK(bad.exact);
  CHECK(bad.detail.find("fails at b") != std::string::npos);
}

TEST_CASE("universal quantification over the naturals is never exact") {
  SearchBudget b;
  auto f = SemFormula::forall(sem::nat_c(), [](const CarrierValue&) { return nat_eq(0, 0); });
  CheckResult r = logic::realizes(vm::nat(0), f, b);
  CHECK(r.verdict == Verdict::Yes);
  CHECK(!r.exact);
}

TEST_CASE("existentials over the naturals find genuine witnesses") {
  SearchBudget b;
  auto f = SemFormula::exists(sem::nat_c(),
                              [](const CarrierValue& x) { return nat_eq(*x.as_nat(), 7); });
  auto r = logic::holds(f, b);
  REQUIRE(r.check.verdict == Verdict::Yes);
  CHECK(r.check.exact);  // the witness makes the membership certain
  REQUIRE(r.realizer.has_value());
  CHECK(vm::structural_equal(*r.realizer, vm::nat(7)));
}

TEST_CASE("existential refutation is exact only over complete domains") {
  SearchBudget b;
  auto fin = SemFormula::exists(sem::finite_c({"a", "b"}),
                                [](const CarrierValue&) { return SemFormula::bot(); });
  CheckResult r = logic::realizes_value(vm::Value::num(0), fin, b);
  CHECK(r.verdict == Verdict::No);
  CHECK(r.exact);

  auto inf = SemFormula::exists(sem::nat_c(), [](const CarrierValue&) { return SemFormula::bot(); });
  CheckResult ri = logic::realizes_value(vm::Value::num(0), inf, b);
  CHECK(ri.verdict == Verdict::No);
  CHECK(!ri.exact);
  CHECK(logic::exact_empty(fin, b));
  CHECK(!logic::exact_empty(inf, b));
}

TEST_CASE("quantifier hints extend the sampled domain") {
  SearchBudget b;
  b.nat_sample_bound = 3;
  auto body = [](const CarrierValue& x) { return nat_eq(*x.as_nat(), 50); };
  auto without = SemFormula::exists(sem::nat_c(), body);
  CHECK(logic::realizes(vm::nat(50), without, b).verdict == Verdict::No);
  auto with = SemFormula::exists(sem::nat_c(), body, {CarrierValue::natv(50)});
  CheckResult r = logic::realizes(vm::nat(50), with, b);
  CHECK(r.verdict == Verdict::Yes);
  CHECK(r.exact);
}

TEST_CASE("hint realizers and larger term budgets both rescue the search") {
  auto f = SemFormula::forall(sem::nat_c(), [](const CarrierValue& x) {
    std::uint64_t n = *x.as_nat();
    return SemFormula::impl(nat_eq(n, n), SemFormula::conj(nat_eq(n, n), nat_eq(n, n)));
  });
  SearchBudget small;
  small.nat_sample_bound = 4;
  CHECK(logic::holds(f, small).check.verdict == Verdict::Unknown);

  SearchBudget hinted = small;
  hinted.hint_realizers = {vm::lam(vm::pair(vm::var(0), vm::var(0)))};
  auto hr = logic::holds(f, hinted);
  REQUIRE(hr.check.verdict == Verdict::Yes);
  CHECK(!hr.check.exact);  // naturals are sampled

  SearchBudget bigger = small;
  bigger.max_term_size = 4;
  auto br = logic::holds(f, bigger);
  REQUIRE(br.check.verdict == Verdict::Yes);
  CHECK(vm::structural_equal(*br.realizer, vm::lam(vm::pair(vm::var(0), vm::var(0)))));
}

TEST_CASE("witness value enumeration") {
  SearchBudget b;
  SUBCASE("conjunction takes pairwise products") {
    auto ws = logic::witness_values(SemFormula::conj(nat_eq(3, 3), nat_eq(4, 4)), b);
    REQUIRE(ws.values.size() == 1);
    CHECK(ws.exact);
    CHECK(vm::value_equal(ws.values[0], vm::Value::pair(vm::Value::num(3), vm::Value::num(4))));
  }
  SUBCASE("complete universals intersect instance sets") {
    auto f = SemFormula::forall(sem::finite_c({"a", "b"}),
                                [](const CarrierValue&) { return nat_eq(2, 2); });
    auto ws = logic::witness_values(f, b);
    REQUIRE(ws.values.size() == 1);
    CHECK(ws.exact);
    CHECK(vm::value_equal(ws.values[0], vm::Value::num(2)));
  }
  SUBCASE("a single empty instance empties a universal exactly") {
    auto f = SemFormula::forall(sem::finite_c({"a", "b"}), [](const CarrierValue& x) {
      return *x.as_label() == "a" ? nat_eq(1, 1) : SemFormula::bot();
    });
    auto ws = logic::witness_values(f, b);
    CHECK(ws.values.empty());
    CHECK(ws.exact);
  }
  SUBCASE("existential witnesses are genuine even over incomplete domains") {
    auto f = SemFormula::exists(sem::nat_c(),
                                [](const CarrierValue& x) { return nat_eq(*x.as_nat(), 5); });
    auto ws = logic::witness_values(f, b);
    REQUIRE(ws.values.size() == 1);
    CHECK(!ws.exact);
    CHECK(vm::value_equal(ws.values[0], vm::Value::num(5)));
  }
}

TEST_CASE("emptiness and inhabitation analysis") {
  SearchBudget b;
  CHECK(logic::exact_empty(SemFormula::impl(SemFormula::top(), SemFormula::bot()), b));
  CHECK(!logic::exact_empty(SemFormula::impl(SemFormula::bot(), SemFormula::bot()), b));
  CHECK(logic::provably_inhabited(SemFormula::impl(nat_eq(1, 2), SemFormula::bot()), b));
  CHECK(logic::provably_inhabited(SemFormula::conj(SemFormula::top(), nat_eq(3, 3)), b));
  CHECK(!logic::provably_inhabited(SemFormula::bot(), b));
  // One refuted instance empties a universal even over an incomplete domain.
  auto f = SemFormula::forall(sem::nat_c(), [](const CarrierValue& x) {
    return *x.as_nat() == 3 ? SemFormula::bot() : SemFormula::top();
  });
  CHECK(logic::exact_empty(f, b));
}

TEST_CASE("carrier samples") {
  SearchBudget b;
  SUBCASE("unit and finite carriers are complete") {
    auto u = logic::carrier_sample(sem::unit_c(), b);
    CHECK(u.complete);
    CHECK(u.values.size() == 1);
    auto f = logic::carrier_sample(sem::finite_c({"x", "y", "z"}), b);
    CHECK(f.complete);
    CHECK(f.values.size() == 3);
  }
  SUBCASE("products of complete carriers stay complete") {
    auto p = logic::carrier_sample(sem::prod_c(sem::finite_c({"x", "y"}), sem::unit_c()), b);
    CHECK(p.complete);
    CHECK(p.values.size() == 2);
  }
  SUBCASE("naturals are sampled up to the bound") {
    SearchBudget b2;
    b2.nat_sample_bound = 6;
    auto n = logic::carrier_sample(sem::nat_c(), b2);
    CHECK(!n.complete);
    CHECK(n.values.size() == 7);
  }
  SUBCASE("expression carriers inject the base sample and are never complete") {
    auto e = logic::carrier_sample(sem::el_c(id_pair_set()), b);
    CHECK(!e.complete);
    CHECK(e.values.size() == 2);
    CHECK(e.values[0].as_pred() != nullptr);
  }
  SUBCASE("map carriers rely on pools") {
    auto mc = sem::map_c(nat_set(), nat_set());
    CHECK(logic::carrier_sample(mc, b).values.empty());
    SearchBudget b2;
    b2.pools[sem::carrier_key(mc)].members.push_back(
        CarrierValue::fun("id", [](const sem::ElValue& u) { return u; }));
    auto s = logic::carrier_sample(mc, b2);
    CHECK(s.values.size() == 1);
    CHECK(!s.complete);
  }
  SUBCASE("pool members merge into the sample") {
    SearchBudget b2;
    b2.nat_sample_bound = 2;
    b2.pools["nat"].members.push_back(CarrierValue::natv(100));
    auto s = logic::carrier_sample(sem::nat_c(), b2);
    CHECK(s.values.size() == 4);
  }
}

TEST_CASE("quantifying over an unsampled carrier is unknown, not vacuous") {
  SearchBudget b;
  auto mc = sem::map_c(nat_set(), nat_set());
  auto f = SemFormula::forall(mc, [](const CarrierValue&) { return SemFormula::bot(); });
  CheckResult r = logic::realizes_value(vm::Value::num(0), f, b);
  CHECK(r.verdict == Verdict::Unknown);
}

TEST_CASE("closed code enumeration is deterministic and sized") {
  // 9 leaves; 10 abstractions of the 10 depth-1 leaves; at size three, 11
  // abstractions plus 81 applications plus 81 pairs.
  auto codes = logic::enumerate_closed_codes(3, 100000);
  CHECK(codes.size() == 192);
  CHECK(vm::structural_equal(codes[0], vm::nat(0)));
  CHECK(vm::structural_equal(codes[9], vm::lam(vm::var(0))));
  auto again = logic::enumerate_closed_codes(3, 100000);
  REQUIRE(again.size() == codes.size());
  for (std::size_t i = 0; i < codes.size(); ++i)
    CHECK(vm::code_to_string(codes[i]) == vm::code_to_string(again[i]));
  for (const auto& c : codes) {
    CHECK(vm::code_size(c) <= 3);
    CHECK(vm::free_var_bound(c) == 0);
  }
}

TEST_CASE("search accounting reaches the stats sink") {
  SearchBudget b;
  b.stats = std::make_shared<logic::EvalStats>();
  logic::holds(SemFormula::impl(SemFormula::top(), SemFormula::bot()), b);
  CHECK(b.stats->candidates_tried > 0);
  CHECK(b.stats->evals > 0);
}
