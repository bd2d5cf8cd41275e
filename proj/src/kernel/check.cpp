#include "efftop/kernel/check.hpp"

namespace efftop::kernel {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void fail(Errc code, const std::string& path, const std::string& detail) {
  throw KernelError(code, path, detail);
}

void expect(bool ok, Errc code, const std::string& path, const std::string& detail) {
  if (!ok) fail(code, path, detail);
}

std::vector<CtxEntry> extended(std::vector<CtxEntry> ctx, const std::string& name,
                               const TypePtr& a) {
  ctx.push_back(CtxEntry{name, a});
  return ctx;
}

std::vector<FormPtr> shifted_hyps(const std::vector<FormPtr>& hyps) {
  std::vector<FormPtr> out;
  out.reserve(hyps.size());
  for (const auto& h : hyps) out.push_back(shift_form(h, 1));
  return out;
}

bool ctx_equal(const std::vector<CtxEntry>& a, const std::vector<CtxEntry>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!type_equal(a[i].type, b[i].type)) return false;
  return true;
}

bool hyps_equal(const std::vector<FormPtr>& a, const std::vector<FormPtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!form_equal(a[i], b[i])) return false;
  return true;
}

// The stability sequent of {x in a | f}:
//   forall x:a, forall x':a . f => |x =_a x'| => f[x'/x]
FormPtr stability_goal(const TypePtr& a, const FormPtr& f) {
  return all_fm("x", a,
                all_fm("x'", a,
                       imp_fm(shift_form(f, 1),
                              imp_fm(eq_fm(tvar(1), a, tvar(0)), f))));
}

void check_sequent_forms(const Sequent& s, const std::string& path) {
  for (const auto& entry : s.ctx) check_wf_type(entry.type, path + ".ctx");
  for (std::size_t i = 0; i < s.hyps.size(); ++i)
    check_form(s.ctx, s.hyps[i], path + ".hyp[" + std::to_string(i) + "]");
  check_form(s.ctx, s.concl, path + ".goal");
}

}  // namespace

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::IllScoped:
      return "IllScoped";
    case Errc::UnboundVariable:
      return "UnboundVariable";
    case Errc::TypeMismatch:
      return "TypeMismatch";
    case Errc::MissingStabilityProof:
      return "MissingStabilityProof";
    case Errc::RuleMismatch:
      return "RuleMismatch";
    case Errc::SideConditionFailed:
      return "SideConditionFailed";
    case Errc::SubstitutionMismatch:
      return "SubstitutionMismatch";
  }
  return "?";
}

KernelError::KernelError(Errc code_, std::string path_, std::string detail_)
    : std::runtime_error("at " + path_ + ": " + errc_name(code_) + ": " + detail_),
      code(code_),
      path(std::move(path_)),
      detail(std::move(detail_)) {}

TypePtr strip_subsets(const TypePtr& t) {
  TypePtr cur = t;
  while (const auto* sub = std::get_if<SubTy>(cur.get())) cur = sub->a;
  return cur;
}

void check_wf_type(const TypePtr& a, const std::string& path) {
  std::visit(
      overloaded{
          [&](const ProdTy& x) {
            check_wf_type(x.a, path);
            check_wf_type(x.b, path);
          },
          [&](const ArrTy& x) {
            check_wf_type(x.a, path);
            check_wf_type(x.b, path);
          },
          [&](const SubTy& x) {
            check_wf_type(x.a, path);
            check_form({CtxEntry{x.hint, x.a}}, x.f, path);
            expect(x.stability != nullptr, Errc::MissingStabilityProof, path,
                   "subset type " + to_string(a) + " carries no stability derivation");
            const Sequent& s = x.stability->concl;
            expect(s.ctx.empty() && s.hyps.empty(), Errc::SideConditionFailed, path,
                   "stability derivation must conclude a closed sequent with no hypotheses");
            FormPtr goal = stability_goal(x.a, x.f);
            expect(form_equal(s.concl, goal), Errc::SideConditionFailed, path,
                   "stability derivation concludes " + to_string(s.concl) + ", expected " +
                       to_string(goal));
            check_proof(x.stability, path + ".stability");
          },
          [](const auto&) {},
      },
      *a);
}

TypePtr infer_term(const std::vector<CtxEntry>& ctx, const TermPtr& u, const std::string& path) {
  return std::visit(
      overloaded{
          [&](const VarTm& x) -> TypePtr {
            expect(x.idx >= 0 && x.idx < static_cast<int>(ctx.size()), Errc::UnboundVariable,
                   path, "variable index " + std::to_string(x.idx) + " exceeds the context");
            return ctx[ctx.size() - 1 - static_cast<std::size_t>(x.idx)].type;
          },
          [&](const UnitTm&) -> TypePtr { return one_ty(); },
          [&](const P1Tm& x) -> TypePtr {
            TypePtr t = strip_subsets(infer_term(ctx, x.u, path));
            const auto* p = std::get_if<ProdTy>(t.get());
            expect(p != nullptr, Errc::TypeMismatch, path,
                   "first projection of " + to_string(x.u) + " : " + to_string(t) +
                       ", which is not a product");
            return p->a;
          },
          [&](const P2Tm& x) -> TypePtr {
            TypePtr t = strip_subsets(infer_term(ctx, x.u, path));
            const auto* p = std::get_if<ProdTy>(t.get());
            expect(p != nullptr, Errc::TypeMismatch, path,
                   "second projection of " + to_string(x.u) + " : " + to_string(t) +
                       ", which is not a product");
            return p->b;
          },
          [&](const PairTm& x) -> TypePtr {
            return prod_ty(infer_term(ctx, x.u, path), infer_term(ctx, x.v, path));
          },
          [&](const AppTm& x) -> TypePtr {
            TypePtr t = strip_subsets(infer_term(ctx, x.u, path));
            const auto* f = std::get_if<ArrTy>(t.get());
            expect(f != nullptr, Errc::TypeMismatch, path,
                   "application head " + to_string(x.u) + " : " + to_string(t) +
                       ", which is not a map type");
            check_term(ctx, x.v, f->a, path);
            return f->b;
          },
          [&](const LamTm& x) -> TypePtr {
            check_wf_type(x.a, path);
            return arr_ty(x.a, infer_term(extended(ctx, x.hint, x.a), x.body, path));
          },
          [&](const ElTm& x) -> TypePtr {
            check_form(ctx, x.f, path);
            return omega_ty();
          },
          [&](const DescTm& x) -> TypePtr {
            check_wf_type(x.a, path);
            check_form(extended(ctx, x.hint, x.a), x.f, path);
            return x.a;
          },
          [&](const ZeroTm&) -> TypePtr { return nat_ty(); },
          [&](const SuccTm& x) -> TypePtr {
            check_term(ctx, x.u, nat_ty(), path);
            return nat_ty();
          },
      },
      *u);
}

void check_term(const std::vector<CtxEntry>& ctx, const TermPtr& u, const TypePtr& a,
                const std::string& path) {
  // Subset introduction: peel the target after validating the comprehension.
  if (const auto* sub = std::get_if<SubTy>(a.get())) {
    check_wf_type(a, path);
    check_term(ctx, u, sub->a, path);
    return;
  }
  if (const auto* pr = std::get_if<PairTm>(u.get())) {
    if (const auto* pt = std::get_if<ProdTy>(a.get())) {
      check_term(ctx, pr->u, pt->a, path);
      check_term(ctx, pr->v, pt->b, path);
      return;
    }
  }
  if (const auto* lm = std::get_if<LamTm>(u.get())) {
    if (const auto* ar = std::get_if<ArrTy>(a.get())) {
      expect(type_equal(lm->a, ar->a), Errc::TypeMismatch, path,
             "binder annotation " + to_string(lm->a) + " differs from the expected domain " +
                 to_string(ar->a));
      check_wf_type(lm->a, path);
      check_term(extended(ctx, lm->hint, lm->a), lm->body, ar->b, path);
      return;
    }
  }
  TypePtr inferred = infer_term(ctx, u, path);
  expect(type_equal(strip_subsets(inferred), a), Errc::TypeMismatch, path,
         to_string(u) + " : " + to_string(inferred) + ", expected " + to_string(a));
}

void check_form(const std::vector<CtxEntry>& ctx, const FormPtr& f, const std::string& path) {
  std::visit(
      overloaded{
          [&](const AndFm& x) {
            check_form(ctx, x.l, path);
            check_form(ctx, x.r, path);
          },
          [&](const ImpFm& x) {
            check_form(ctx, x.l, path);
            check_form(ctx, x.r, path);
          },
          [&](const AllFm& x) {
            check_wf_type(x.a, path);
            check_form(extended(ctx, x.hint, x.a), x.body, path);
          },
          [&](const ExFm& x) {
            check_wf_type(x.a, path);
            check_form(extended(ctx, x.hint, x.a), x.body, path);
          },
          [&](const EqFm& x) {
            check_wf_type(x.a, path);
            check_term(ctx, x.l, x.a, path);
            check_term(ctx, x.r, x.a, path);
          },
          [&](const PropFm& x) { check_term(ctx, x.u, omega_ty(), path); },
          [](const auto&) {},
      },
      *f);
}

void check_proof(const DerivPtr& d, const std::string& path) {
  expect(d != nullptr, Errc::RuleMismatch, path, "missing derivation");
  const Sequent& s = d->concl;
  check_sequent_forms(s, path);

  auto need_prems = [&](std::size_t n) {
    expect(d->prems.size() == n, Errc::RuleMismatch, path,
           std::string(rule_name(d->rule)) + " takes " + std::to_string(n) + " premise(s), got " +
               std::to_string(d->prems.size()));
    for (const auto& p : d->prems)
      expect(p != nullptr, Errc::RuleMismatch, path, "missing premise derivation");
  };
  auto same_frame = [&](const Sequent& p, const char* which) {
    expect(ctx_equal(p.ctx, s.ctx), Errc::RuleMismatch, path,
           std::string(which) + " premise changes the variable context");
    expect(hyps_equal(p.hyps, s.hyps), Errc::RuleMismatch, path,
           std::string(which) + " premise changes the hypotheses");
  };

  if (is_axiom(d->rule)) {
    need_prems(0);
    const int arity = axiom_arity(d->rule);
    expect(static_cast<int>(d->inst_types.size()) == arity, Errc::RuleMismatch, path,
           std::string(rule_name(d->rule)) + " takes " + std::to_string(arity) +
               " type parameter(s), got " + std::to_string(d->inst_types.size()));
    for (const auto& t : d->inst_types) check_wf_type(t, path);
    FormPtr goal = axiom_formula(d->rule, d->inst_types);
    expect(form_equal(s.concl, goal), Errc::RuleMismatch, path,
           "conclusion " + to_string(s.concl) + " does not match the " + rule_name(d->rule) +
               " scheme, expected " + to_string(goal));
    return;
  }

  switch (d->rule) {
    case Rule::TopIntro: {
      need_prems(0);
      expect(std::holds_alternative<TopFm>(*s.concl), Errc::RuleMismatch, path,
             "top-intro concludes " + to_string(s.concl));
      break;
    }
    case Rule::BotElim: {
      need_prems(1);
      const Sequent& p = d->prems[0]->concl;
      same_frame(p, "bot-elim");
      expect(std::holds_alternative<BotFm>(*p.concl), Errc::RuleMismatch, path,
             "bot-elim premise concludes " + to_string(p.concl));
      check_form(s.ctx, s.concl, path);
      break;
    }
    case Rule::Hyp: {
      need_prems(0);
      expect(!s.hyps.empty(), Errc::RuleMismatch, path, "hypothesis rule with no hypotheses");
      expect(form_equal(s.hyps.back(), s.concl), Errc::RuleMismatch, path,
             "conclusion " + to_string(s.concl) + " is not the last hypothesis " +
                 to_string(s.hyps.back()));
      break;
    }
    case Rule::AndIntro: {
      need_prems(2);
      const auto* f = std::get_if<AndFm>(s.concl.get());
      expect(f != nullptr, Errc::RuleMismatch, path,
             "and-intro concludes " + to_string(s.concl));
      same_frame(d->prems[0]->concl, "left");
      same_frame(d->prems[1]->concl, "right");
      expect(form_equal(d->prems[0]->concl.concl, f->l), Errc::RuleMismatch, path,
             "left premise proves " + to_string(d->prems[0]->concl.concl));
      expect(form_equal(d->prems[1]->concl.concl, f->r), Errc::RuleMismatch, path,
             "right premise proves " + to_string(d->prems[1]->concl.concl));
      break;
    }
    case Rule::AndElim1:
    case Rule::AndElim2: {
      need_prems(1);
      const Sequent& p = d->prems[0]->concl;
      same_frame(p, "and-elim");
      const auto* f = std::get_if<AndFm>(p.concl.get());
      expect(f != nullptr, Errc::RuleMismatch, path,
             "and-elim premise proves " + to_string(p.concl) + ", not a conjunction");
      const FormPtr& kept = d->rule == Rule::AndElim1 ? f->l : f->r;
      expect(form_equal(kept, s.concl), Errc::RuleMismatch, path,
             "conclusion " + to_string(s.concl) + " is not the kept conjunct " + to_string(kept));
      break;
    }
    case Rule::ImpIntro: {
      need_prems(1);
      const auto* f = std::get_if<ImpFm>(s.concl.get());
      expect(f != nullptr, Errc::RuleMismatch, path,
             "imp-intro concludes " + to_string(s.concl));
      check_form(s.ctx, f->l, path);
      const Sequent& p = d->prems[0]->concl;
      expect(ctx_equal(p.ctx, s.ctx), Errc::RuleMismatch, path,
             "imp-intro premise changes the variable context");
      std::vector<FormPtr> want = s.hyps;
      want.push_back(f->l);
      expect(hyps_equal(p.hyps, want), Errc::RuleMismatch, path,
             "imp-intro premise must add the antecedent as the last hypothesis");
      expect(form_equal(p.concl, f->r), Errc::RuleMismatch, path,
             "imp-intro premise proves " + to_string(p.concl));
      break;
    }
    case Rule::ImpElim: {
      need_prems(2);
      const Sequent& pf = d->prems[0]->concl;
      const Sequent& pa = d->prems[1]->concl;
      same_frame(pf, "map");
      same_frame(pa, "argument");
      const auto* f = std::get_if<ImpFm>(pf.concl.get());
      expect(f != nullptr, Errc::RuleMismatch, path,
             "imp-elim head premise proves " + to_string(pf.concl) + ", not an implication");
      expect(form_equal(f->r, s.concl), Errc::RuleMismatch, path,
             "conclusion " + to_string(s.concl) + " is not the consequent of " +
                 to_string(pf.concl));
      expect(form_equal(pa.concl, f->l), Errc::RuleMismatch, path,
             "argument premise proves " + to_string(pa.concl) + ", expected " + to_string(f->l));
      break;
    }
    case Rule::AllIntro: {
      need_prems(1);
      const auto* f = std::get_if<AllFm>(s.concl.get());
      expect(f != nullptr, Errc::RuleMismatch, path,
             "all-intro concludes " + to_string(s.concl));
      check_wf_type(f->a, path);
      for (const auto& h : s.hyps) check_form(s.ctx, h, path);
      const Sequent& p = d->prems[0]->concl;
      expect(ctx_equal(p.ctx, extended(s.ctx, f->hint, f->a)), Errc::RuleMismatch, path,
             "all-intro premise must extend the context by the quantified variable");
      expect(hyps_equal(p.hyps, shifted_hyps(s.hyps)), Errc::RuleMismatch, path,
             "all-intro premise hypotheses must be the conclusion's, weakened");
      expect(form_equal(p.concl, f->body), Errc::RuleMismatch, path,
             "all-intro premise proves " + to_string(p.concl));
      break;
    }
    case Rule::AllElim: {
      need_prems(1);
      expect(d->inst_term != nullptr, Errc::RuleMismatch, path,
             "all-elim carries no instantiation term");
      const Sequent& p = d->prems[0]->concl;
      same_frame(p, "all-elim");
      const auto* f = std::get_if<AllFm>(p.concl.get());
      expect(f != nullptr, Errc::RuleMismatch, path,
             "all-elim premise proves " + to_string(p.concl) + ", not a universal");
      check_term(s.ctx, d->inst_term, f->a, path);
      FormPtr want = subst_form(f->body, 0, d->inst_term);
      expect(form_equal(s.concl, want), Errc::SubstitutionMismatch, path,
             "conclusion " + to_string(s.concl) + " differs from the instance " +
                 to_string(want));
      break;
    }
    case Rule::ExIntro: {
      need_prems(1);
      expect(d->inst_term != nullptr, Errc::RuleMismatch, path,
             "ex-intro carries no witness term");
      const auto* f = std::get_if<ExFm>(s.concl.get());
      expect(f != nullptr, Errc::RuleMismatch, path,
             "ex-intro concludes " + to_string(s.concl));
      check_term(s.ctx, d->inst_term, f->a, path);
      const Sequent& p = d->prems[0]->concl;
      same_frame(p, "ex-intro");
      FormPtr want = subst_form(f->body, 0, d->inst_term);
      expect(form_equal(p.concl, want), Errc::SubstitutionMismatch, path,
             "premise proves " + to_string(p.concl) + ", expected the instance " +
                 to_string(want));
      break;
    }
    case Rule::ExElim: {
      need_prems(2);
      const Sequent& pe = d->prems[0]->concl;
      same_frame(pe, "existence");
      const auto* f = std::get_if<ExFm>(pe.concl.get());
      expect(f != nullptr, Errc::RuleMismatch, path,
             "ex-elim head premise proves " + to_string(pe.concl) + ", not an existential");
      check_form(s.ctx, s.concl, path);
      const Sequent& p = d->prems[1]->concl;
      expect(ctx_equal(p.ctx, extended(s.ctx, f->hint, f->a)), Errc::RuleMismatch, path,
             "ex-elim branch must extend the context by the witness variable");
      std::vector<FormPtr> want = shifted_hyps(s.hyps);
      want.push_back(f->body);
      expect(hyps_equal(p.hyps, want), Errc::RuleMismatch, path,
             "ex-elim branch hypotheses must be the conclusion's, weakened, plus the body");
      expect(form_equal(p.concl, shift_form(s.concl, 1)), Errc::RuleMismatch, path,
             "ex-elim branch proves " + to_string(p.concl) + ", expected the weakened goal");
      break;
    }
    default:
      fail(Errc::RuleMismatch, path, "unhandled rule");
  }

  for (std::size_t i = 0; i < d->prems.size(); ++i)
    check_proof(d->prems[i], path + ".prem[" + std::to_string(i) + "]");
}

}  // namespace efftop::kernel
