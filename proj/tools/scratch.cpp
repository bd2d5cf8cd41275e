#include <chrono>
#include <cstdio>
#include <iostream>

#include "efftop/extract/extract.hpp"
#include "efftop/kernel/check.hpp"
#include "efftop/kernel/denote.hpp"
#include "efftop/kernel/read.hpp"
#include "efftop/logic/check.hpp"

using namespace efftop;

static kernel::DenoteOptions mk_opt() {
  kernel::DenoteOptions opt;
  opt.budget.pools["nat"] = logic::PoolEntry{{}, true};
  return opt;
}

static void report(const char* name, const logic::CheckResult& r) {
  std::printf("%-28s %s%s  %s\n", name, logic::verdict_name(r.verdict), r.exact ? " exact" : "",
              r.detail.c_str());
}

int main() {
  auto opt = mk_opt();

  // denote(s z) equals el 1
  {
    auto t = kernel::parse_term("(s z)");
    kernel::check_term({}, t, kernel::nat_ty());
    auto u = kernel::denote_term({}, t, {}, opt);
    auto f = effsets::el_eq(effsets::nat_set(), u,
                            effsets::el_inject(effsets::nat_set(), sem::CarrierValue::natv(1)));
    report("denote(s z) = el 1", logic::holds(f, opt.budget).check);
  }

  // prop(el top) <=> Top
  {
    auto t = kernel::parse_term("(el top)");
    auto f = sem::SemFormula::iff(
        effsets::prop_of(kernel::denote_term({}, t, {}, opt)), sem::SemFormula::top());
    report("prop(el top) <=> Top", logic::holds(f, opt.budget).check);
  }

  // and_comm: F /\ G |- G /\ F
  {
    auto d = kernel::parse_proof(
        "(proof (rule and-intro)"
        " (concl (seq () ((and (eq nat z z) top)) (and top (eq nat z z))))"
        " (prem (proof (rule and-elim-2)"
        "   (concl (seq () ((and (eq nat z z) top)) top))"
        "   (prem (proof (rule hyp) (concl (seq () ((and (eq nat z z) top)) (and (eq nat z z) "
        "top)))))))"
        " (prem (proof (rule and-elim-1)"
        "   (concl (seq () ((and (eq nat z z) top)) (eq nat z z)))"
        "   (prem (proof (rule hyp) (concl (seq () ((and (eq nat z z) top)) (and (eq nat z z) "
        "top))))))))");
    kernel::check_proof(d);
    std::puts("and_comm checks");
    auto code = extract::extract(d, opt);
    std::printf("extract(and_comm) = %s\n", vm::code_to_string(code).c_str());
    auto goal = extract::adequacy_formula(d->concl, opt);
    report("and_comm adequacy", logic::realizes(code, goal, opt.budget));
  }

  // axiom: sym at nat, whole-scheme adequacy
  {
    auto d = kernel::parse_proof(
        "(proof (rule ax-sym)"
        " (concl (seq () () (forall (a nat) (forall (b nat)"
        "   (imp (eq nat a b) (eq nat b a))))))"
        " (type nat))");
    kernel::check_proof(d);
    auto code = extract::extract(d, opt);
    auto goal = extract::adequacy_formula(d->concl, opt);
    report("ax-sym@nat adequacy", logic::realizes(code, goal, opt.budget));
  }

  // axiom: p1-beta at (one, nat)
  {
    auto d = kernel::parse_proof(
        "(proof (rule ax-p1-beta)"
        " (concl (seq () () (forall (a unit) (forall (b nat)"
        "   (imp (eq unit a a) (imp (eq nat b b)"
        "        (eq unit (p1 (pair a b)) a)))))))"
        " (types unit nat))");
    kernel::check_proof(d);
    auto code = extract::extract(d, opt);
    auto goal = extract::adequacy_formula(d->concl, opt);
    report("ax-p1-beta@(one,nat)", logic::realizes(code, goal, opt.budget));
  }

  // subset type with stability derivation
  {
    auto ty = kernel::parse_type(
        "(sub (x nat) top (stability"
        " (proof (rule all-intro)"
        "  (concl (seq () () (forall (x nat) (forall (y nat) (imp top (imp (eq nat x y) "
        "top))))))"
        "  (prem (proof (rule all-intro)"
        "   (concl (seq ((x nat)) () (forall (y nat) (imp top (imp (eq nat x y) top)))))"
        "   (prem (proof (rule imp-intro)"
        "    (concl (seq ((x nat) (y nat)) () (imp top (imp (eq nat x y) top))))"
        "    (prem (proof (rule imp-intro)"
        "     (concl (seq ((x nat) (y nat)) (top) (imp (eq nat x y) top)))"
        "     (prem (proof (rule top-intro)"
        "      (concl (seq ((x nat) (y nat)) (top (eq nat x y)) top)))))))))))))");
    kernel::check_wf_type(ty);
    std::puts("subset type checks");
    auto s = kernel::denote_type(ty, opt);
    std::printf("denoted subset: %s\n", s->name.c_str());
  }

  // full axiom table sweep at the totality instantiations
  {
    using kernel::Rule;
    auto one = kernel::one_ty();
    auto nat = kernel::nat_ty();
    auto pn = kernel::prod_ty(one, nat);
    std::vector<kernel::TypePtr> singles = {one, nat, pn};
    std::vector<std::pair<kernel::TypePtr, kernel::TypePtr>> pairs = {
        {nat, nat}, {one, pn}};
    std::vector<Rule> gens = {Rule::AxSym, Rule::AxTrans};
    std::vector<Rule> units = {Rule::AxUnitRefl, Rule::AxUnitConnect};
    std::vector<Rule> prods = {Rule::AxP1Refl,   Rule::AxP1Cong, Rule::AxP2Refl,
                               Rule::AxP2Cong,   Rule::AxPairRefl, Rule::AxPairCong,
                               Rule::AxP1Beta,   Rule::AxP2Beta, Rule::AxPairEta};
    auto try_ax = [&](Rule r, std::vector<kernel::TypePtr> ts, std::uint64_t bound) {
      auto local = opt;
      local.budget.nat_sample_bound = bound;
      auto t0 = std::chrono::steady_clock::now();
      kernel::Sequent s{{}, {}, kernel::axiom_formula(r, ts)};
      auto d = kernel::derive(r, s, {}, nullptr, ts);
      kernel::check_proof(d);
      auto code = extract::extract(d, opt);
      auto goal = extract::adequacy_formula(d->concl, local);
      std::string label = std::string(kernel::rule_name(r)) + " b" + std::to_string(bound);
      for (auto& t : ts) label += " " + kernel::key_string(t);
      auto res = logic::realizes(code, goal, local.budget);
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
      label += " [" + std::to_string(ms) + "ms]";
      report(label.c_str(), res);
    };
    for (auto r : gens)
      for (auto& t : singles) try_ax(r, {t}, 6);
    for (auto r : units) try_ax(r, {}, 6);
    for (auto r : prods) {
      try_ax(r, {one, nat}, 6);
      try_ax(r, {nat, one}, 6);
      for (auto& [a, b] : pairs) try_ax(r, {a, b}, 2);
    }
  }

  // extract_nat_function on succ . succ
  {
    auto nat = effsets::nat_set();
    auto low = effsets::make_fn("succ2", {nat}, effsets::el_of(nat),
                                [nat](const std::vector<sem::CarrierValue>& xs) {
                                  return sem::CarrierValue::pred(effsets::el_inject(
                                      nat, sem::CarrierValue::natv(*xs.at(0).as_nat() + 2)));
                                });
    auto f = effsets::extend(low, 1);
    auto table = extract::extract_nat_function(f, 5, 10000);
    bool ok = true;
    for (const auto& row : table.rows) ok = ok && row.output == row.input + 2;
    std::printf("extract_nat_function(succ2): %s (%zu rows)\n", ok ? "ok" : "WRONG",
                table.rows.size());
  }

  return 0;
}
