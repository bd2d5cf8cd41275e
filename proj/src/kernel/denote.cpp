#include "efftop/kernel/denote.hpp"

#include <stdexcept>

#include "efftop/extract/extract.hpp"
#include "efftop/kernel/check.hpp"
#include "efftop/vm/code.hpp"

namespace efftop::kernel {

using effsets::EffSetPtr;
using effsets::ElPredicate;
using effsets::StabilityEvidence;
using sem::CarrierValue;
using sem::ElValue;
using sem::SemFormula;
using sem::StableFnPtr;
using vm::app;
using vm::lam;
using vm::var;

namespace {

std::vector<CtxEntry> extended(const std::vector<CtxEntry>& ctx, const std::string& hint,
                               const TypePtr& a) {
  std::vector<CtxEntry> out = ctx;
  out.push_back(CtxEntry{hint, a});
  return out;
}

// Predicate on El(a) denoted by a one-variable formula.
ElPredicate form_predicate(const std::vector<CtxEntry>& ctx, const std::string& hint,
                           const TypePtr& a, const FormPtr& f,
                           const std::vector<sem::ElValue>& env, const DenoteOptions& opt) {
  auto ctx2 = extended(ctx, hint, a);
  return ElPredicate{key_string(f), [ctx2, f, env, opt](const ElValue& u) {
                       auto env2 = env;
                       env2.push_back(u);
                       return denote_form(ctx2, f, env2, opt);
                     }};
}

}  // namespace

const StableFnPtr& succ_el_fn() {
  static const StableFnPtr fn = [] {
    auto nat = effsets::nat_set();
    auto low = effsets::make_fn(
        "succ", {nat}, effsets::el_of(nat), [nat](const std::vector<CarrierValue>& xs) {
          const std::optional<std::uint64_t> n = xs.at(0).as_nat();
          if (!n)
            return CarrierValue::pred(
                ElValue::user("none", [](const CarrierValue&) { return SemFormula::bot(); }));
          return CarrierValue::pred(effsets::el_inject(nat, CarrierValue::natv(*n + 1)));
        });
    return effsets::extend(low, 1);
  }();
  return fn;
}

EffSetPtr denote_type(const TypePtr& t, const DenoteOptions& opt) {
  struct V {
    const TypePtr& t;
    const DenoteOptions& opt;
    EffSetPtr operator()(const OneTy&) const { return effsets::one_set(); }
    EffSetPtr operator()(const OmegaTy&) const { return effsets::omega_set(); }
    EffSetPtr operator()(const NatTy&) const { return effsets::nat_set(); }
    EffSetPtr operator()(const ProdTy& x) const {
      return effsets::prod_set(denote_type(x.a, opt), denote_type(x.b, opt));
    }
    EffSetPtr operator()(const ArrTy& x) const {
      return effsets::closure_set(denote_type(x.a, opt), denote_type(x.b, opt));
    }
    EffSetPtr operator()(const SubTy& x) const {
      if (!x.stability)
        throw KernelError(Errc::MissingStabilityProof, "denote",
                          "subset type carries no stability derivation: " + key_string(t));
      EffSetPtr base = denote_type(x.a, opt);
      ElPredicate pred = form_predicate({}, x.hint, x.a, x.f, {}, opt);
      // The derivation proves F => eq => F'; the semantic side condition wants
      // eq => F => F', so swap the first two arguments of the extracted code.
      vm::CodePtr r = extract::extract(x.stability, opt);
      vm::CodePtr adapted = lam(lam(app(r, var(0), var(1))));
      auto found = effsets::check_el_predicate_stability(base, pred, opt.budget, {adapted});
      if (!found)
        throw KernelError(Errc::SideConditionFailed, "denote",
                          "stability realizer failed the semantic check for " + key_string(t));
      StabilityEvidence ev{found->realizer, found->check, "derivation"};
      return effsets::subset_set(key_string(t), base, pred, ev);
    }
  };
  return std::visit(V{t, opt}, static_cast<const Type::variant&>(*t));
}

ElValue denote_term(const std::vector<CtxEntry>& ctx, const TermPtr& u,
                    const std::vector<sem::ElValue>& env, const DenoteOptions& opt) {
  if (env.size() != ctx.size())
    throw std::invalid_argument("environment length does not match context");
  struct V {
    const std::vector<CtxEntry>& ctx;
    const TermPtr& t;
    const std::vector<sem::ElValue>& env;
    const DenoteOptions& opt;

    ElValue den(const TermPtr& u) const { return denote_term(ctx, u, env, opt); }

    // Component sets of the stripped product/arrow type of a subterm.
    std::pair<EffSetPtr, EffSetPtr> pair_sets(const TermPtr& u) const {
      TypePtr ty = strip_subsets(infer_term(ctx, u, "denote"));
      if (const auto* p = std::get_if<ProdTy>(static_cast<const Type::variant*>(ty.get())))
        return std::pair<EffSetPtr, EffSetPtr>{denote_type(p->a, opt), denote_type(p->b, opt)};
      throw KernelError(Errc::TypeMismatch, "denote", "projection of non-product");
    }

    ElValue operator()(const VarTm& x) const { return env[env.size() - 1 - x.idx]; }
    ElValue operator()(const UnitTm&) const {
      return effsets::el_inject(effsets::one_set(), CarrierValue::star());
    }
    ElValue operator()(const P1Tm& x) const {
      auto [a, b] = pair_sets(x.u);
      auto ops = effsets::product_ops(a, b);
      return *effsets::apply_fn(ops.p1, {CarrierValue::pred(den(x.u))}).as_pred();
    }
    ElValue operator()(const P2Tm& x) const {
      auto [a, b] = pair_sets(x.u);
      auto ops = effsets::product_ops(a, b);
      return *effsets::apply_fn(ops.p2, {CarrierValue::pred(den(x.u))}).as_pred();
    }
    ElValue operator()(const PairTm& x) const {
      EffSetPtr a = denote_type(infer_term(ctx, x.u, "denote"), opt);
      EffSetPtr b = denote_type(infer_term(ctx, x.v, "denote"), opt);
      auto ops = effsets::product_ops(a, b);
      return *effsets::apply_fn(ops.cons,
                                {CarrierValue::pred(den(x.u)), CarrierValue::pred(den(x.v))})
                  .as_pred();
    }
    ElValue operator()(const AppTm& x) const {
      TypePtr ty = strip_subsets(infer_term(ctx, x.u, "denote"));
      const auto* f = std::get_if<ArrTy>(static_cast<const Type::variant*>(ty.get()));
      if (!f) throw KernelError(Errc::TypeMismatch, "denote", "application of non-function");
      auto ops = effsets::closure_ops(denote_type(f->a, opt), denote_type(f->b, opt));
      return *effsets::apply_fn(ops.app,
                                {CarrierValue::pred(den(x.u)), CarrierValue::pred(den(x.v))})
                  .as_pred();
    }
    ElValue operator()(const LamTm& x) const {
      EffSetPtr a = denote_type(x.a, opt);
      auto ctx2 = extended(ctx, x.hint, x.a);
      EffSetPtr b = denote_type(infer_term(ctx2, x.body, "denote"), opt);
      auto body = x.body;
      auto envc = env;
      auto o = opt;
      return effsets::lam_el(a, b, key_string(t), [ctx2, body, envc, o](const ElValue& v) {
        auto env2 = envc;
        env2.push_back(v);
        return denote_term(ctx2, body, env2, o);
      });
    }
    ElValue operator()(const ElTm& x) const {
      return effsets::el_inject(effsets::omega_set(),
                                CarrierValue::prop(denote_form(ctx, x.f, env, opt)));
    }
    ElValue operator()(const DescTm& x) const {
      EffSetPtr a = denote_type(x.a, opt);
      return effsets::description(a, form_predicate(ctx, x.hint, x.a, x.f, env, opt));
    }
    ElValue operator()(const ZeroTm&) const {
      return effsets::el_inject(effsets::nat_set(), CarrierValue::natv(0));
    }
    ElValue operator()(const SuccTm& x) const {
      return *effsets::apply_fn(succ_el_fn(), {CarrierValue::pred(den(x.u))}).as_pred();
    }
  };
  return std::visit(V{ctx, u, env, opt}, static_cast<const Term::variant&>(*u));
}

SemFormula denote_form(const std::vector<CtxEntry>& ctx, const FormPtr& f,
                       const std::vector<sem::ElValue>& env, const DenoteOptions& opt) {
  if (env.size() != ctx.size())
    throw std::invalid_argument("environment length does not match context");
  struct V {
    const std::vector<CtxEntry>& ctx;
    const std::vector<sem::ElValue>& env;
    const DenoteOptions& opt;

    SemFormula den(const FormPtr& g) const { return denote_form(ctx, g, env, opt); }

    SemFormula quantify(bool universal, const std::string& hint, const TypePtr& a,
                        const FormPtr& body) const {
      EffSetPtr as = denote_type(a, opt);
      auto ela = effsets::el_of(as);
      auto ctx2 = extended(ctx, hint, a);
      auto envc = env;
      auto o = opt;
      auto at = [ctx2, body, envc, o, universal](const CarrierValue& u) {
        const ElValue* p = u.as_pred();
        if (!p)
          return universal ? SemFormula::impl(SemFormula::bot(), SemFormula::top())
                           : SemFormula::bot();
        auto env2 = envc;
        env2.push_back(*p);
        return denote_form(ctx2, body, env2, o);
      };
      return universal ? SemFormula::forall(ela->carrier, at)
                       : SemFormula::exists(ela->carrier, at);
    }

    SemFormula operator()(const TopFm&) const { return SemFormula::top(); }
    SemFormula operator()(const BotFm&) const { return SemFormula::bot(); }
    SemFormula operator()(const AndFm& x) const {
      return SemFormula::conj(den(x.l), den(x.r));
    }
    SemFormula operator()(const ImpFm& x) const {
      return SemFormula::impl(den(x.l), den(x.r));
    }
    SemFormula operator()(const AllFm& x) const { return quantify(true, x.hint, x.a, x.body); }
    SemFormula operator()(const ExFm& x) const { return quantify(false, x.hint, x.a, x.body); }
    SemFormula operator()(const EqFm& x) const {
      EffSetPtr as = denote_type(x.a, opt);
      return effsets::el_eq(as, denote_term(ctx, x.l, env, opt), denote_term(ctx, x.r, env, opt));
    }
    SemFormula operator()(const PropFm& x) const {
      return effsets::prop_of(denote_term(ctx, x.u, env, opt));
    }
  };
  return std::visit(V{ctx, env, opt}, static_cast<const Form::variant&>(*f));
}

}  // namespace efftop::kernel
