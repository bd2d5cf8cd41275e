#include "efftop/extract/extract.hpp"

#include <memory>

#include "efftop/effsets/fns.hpp"
#include "efftop/effsets/sets.hpp"
#include "efftop/kernel/check.hpp"

namespace efftop::extract {

using kernel::DenoteOptions;
using kernel::DerivPtr;
using kernel::Rule;
using sem::CarrierValue;
using sem::ElValue;
using sem::SemFormula;
using vm::app;
using vm::CodePtr;
using vm::lam;
using vm::nat;
using vm::pair;
using vm::var;

const char* xerrc_name(Xerrc c) {
  switch (c) {
    case Xerrc::UnknownAxiomShape: return "UnknownAxiomShape";
    case Xerrc::DecodeBoundExceeded: return "DecodeBoundExceeded";
    case Xerrc::NonFunctional: return "NonFunctional";
  }
  return "?";
}

ExtractError::ExtractError(Xerrc code_, const std::string& detail)
    : std::runtime_error(std::string(xerrc_name(code_)) + ": " + detail), code(code_) {}

CodePtr extract_open(const DerivPtr& d, const DenoteOptions& opt) {
  auto prem = [&](std::size_t i) { return extract_open(d->prems.at(i), opt); };
  switch (d->rule) {
    case Rule::TopIntro: return nat(0);
    case Rule::BotElim: return app(lam(nat(0)), prem(0));
    case Rule::Hyp: return var(0);
    case Rule::AndIntro: return pair(prem(0), prem(1));
    case Rule::AndElim1: return vm::fst_of(prem(0));
    case Rule::AndElim2: return vm::snd_of(prem(0));
    case Rule::ImpIntro: return lam(prem(0));
    case Rule::ImpElim: return app(prem(0), prem(1));
    // Quantifier realizers are uniform: introduction and instantiation reuse
    // the premise code; an existential realizer is a realizer of the body.
    case Rule::AllIntro:
    case Rule::AllElim:
    case Rule::ExIntro: return prem(0);
    case Rule::ExElim: return app(lam(prem(1)), prem(0));
    default: break;
  }
  std::vector<sem::EffSetPtr> comps;
  comps.reserve(d->inst_types.size());
  for (const auto& t : d->inst_types) comps.push_back(kernel::denote_type(t, opt));
  return axiom_realizer(d->rule, comps);
}

CodePtr extract(const DerivPtr& d, const DenoteOptions& opt) {
  CodePtr e = extract_open(d, opt);
  for (std::size_t i = 0; i < d->concl.hyps.size(); ++i) e = lam(e);
  return e;
}

namespace {

SemFormula adequacy_at(const kernel::Sequent& s, const DenoteOptions& opt, std::size_t i,
                       const std::vector<ElValue>& env) {
  if (i < s.ctx.size()) {
    auto as = kernel::denote_type(s.ctx[i].type, opt);
    auto dom = effsets::el_of(as)->carrier;
    const kernel::Sequent sc = s;
    const DenoteOptions o = opt;
    return SemFormula::forall(dom, [sc, o, i, env](const CarrierValue& u) {
      const ElValue* p = u.as_pred();
      if (!p) return SemFormula::impl(SemFormula::bot(), SemFormula::top());
      auto env2 = env;
      env2.push_back(*p);
      return adequacy_at(sc, o, i + 1, env2);
    });
  }
  SemFormula out = kernel::denote_form(s.ctx, s.concl, env, opt);
  for (auto it = s.hyps.rbegin(); it != s.hyps.rend(); ++it)
    out = SemFormula::impl(kernel::denote_form(s.ctx, *it, env, opt), out);
  return out;
}

}  // namespace

SemFormula adequacy_formula(const kernel::Sequent& s, const DenoteOptions& opt) {
  return adequacy_at(s, opt, 0, {});
}

NatFnTable extract_nat_function(const sem::StableFnPtr& f, std::uint64_t search_bound,
                                vm::Fuel fuel) {
  auto nat_s = effsets::nat_set();
  NatFnTable table;
  table.search_bound = search_bound;
  table.decode_bound = 2 * search_bound + 4;
  for (std::uint64_t x = 0; x <= search_bound; ++x) {
    logic::SearchBudget b;
    b.fuel = fuel;
    b.nat_sample_bound = table.decode_bound;
    b.pools["nat"] = logic::PoolEntry{{}, true};
    b.stats = std::make_shared<logic::EvalStats>();
    CarrierValue out = effsets::apply_fn(
        f, {CarrierValue::pred(effsets::el_inject(nat_s, CarrierValue::natv(x)))});
    const ElValue* image = out.as_pred();
    if (!image) throw std::invalid_argument("function does not land in elements");
    // Numerals that provably belong to the image predicate are the only
    // candidates for verified element equality (its existence clause).
    std::vector<std::uint64_t> members;
    for (std::uint64_t m = 0; m <= table.decode_bound; ++m)
      if (logic::holds(sem::el_apply(*image, CarrierValue::natv(m)), b).check.verdict ==
          logic::Verdict::Yes)
        members.push_back(m);
    std::vector<NatFnRow> verified;
    for (std::uint64_t m : members) {
      auto h = logic::holds(
          effsets::el_eq(nat_s, *image, effsets::el_inject(nat_s, CarrierValue::natv(m))), b);
      if (h.check.verdict == logic::Verdict::Yes && h.realizer)
        verified.push_back(NatFnRow{x, m, *h.realizer, 0});
    }
    if (verified.empty())
      throw ExtractError(Xerrc::DecodeBoundExceeded,
                         "input " + std::to_string(x) + ": no numeral up to " +
                             std::to_string(table.decode_bound) + " verifies");
    if (verified.size() > 1)
      throw ExtractError(Xerrc::NonFunctional,
                         "input " + std::to_string(x) + ": numerals " +
                             std::to_string(verified[0].output) + " and " +
                             std::to_string(verified[1].output) + " both verify");
    verified.front().fuel_spent = b.stats->fuel_spent;
    table.rows.push_back(verified.front());
  }
  return table;
}

}  // namespace efftop::extract
