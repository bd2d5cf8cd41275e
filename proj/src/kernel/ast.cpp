#include "efftop/kernel/ast.hpp"

#include <map>

namespace efftop::kernel {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

TypePtr mk(Type t) { return std::make_shared<const Type>(std::move(t)); }
TermPtr mk(Term t) { return std::make_shared<const Term>(std::move(t)); }
FormPtr mk(Form f) { return std::make_shared<const Form>(std::move(f)); }

}  // namespace

// --------------------------------------------------------------- factories

TypePtr one_ty() {
  static const TypePtr t = mk(Type{OneTy{}});
  return t;
}
TypePtr omega_ty() {
  static const TypePtr t = mk(Type{OmegaTy{}});
  return t;
}
TypePtr nat_ty() {
  static const TypePtr t = mk(Type{NatTy{}});
  return t;
}
TypePtr prod_ty(TypePtr a, TypePtr b) { return mk(Type{ProdTy{std::move(a), std::move(b)}}); }
TypePtr arr_ty(TypePtr a, TypePtr b) { return mk(Type{ArrTy{std::move(a), std::move(b)}}); }
TypePtr sub_ty(std::string hint, TypePtr a, FormPtr f, DerivPtr stability) {
  return mk(Type{SubTy{std::move(hint), std::move(a), std::move(f), std::move(stability)}});
}

TermPtr tvar(int idx, std::string hint) { return mk(Term{VarTm{idx, std::move(hint)}}); }
TermPtr unit_tm() {
  static const TermPtr t = mk(Term{UnitTm{}});
  return t;
}
TermPtr p1_tm(TermPtr u) { return mk(Term{P1Tm{std::move(u)}}); }
TermPtr p2_tm(TermPtr u) { return mk(Term{P2Tm{std::move(u)}}); }
TermPtr pair_tm(TermPtr u, TermPtr v) { return mk(Term{PairTm{std::move(u), std::move(v)}}); }
TermPtr app_tm(TermPtr u, TermPtr v) { return mk(Term{AppTm{std::move(u), std::move(v)}}); }
TermPtr lam_tm(std::string hint, TypePtr a, TermPtr body) {
  return mk(Term{LamTm{std::move(hint), std::move(a), std::move(body)}});
}
TermPtr el_tm(FormPtr f) { return mk(Term{ElTm{std::move(f)}}); }
TermPtr d_tm(std::string hint, TypePtr a, FormPtr f) {
  return mk(Term{DescTm{std::move(hint), std::move(a), std::move(f)}});
}
TermPtr zero_tm() {
  static const TermPtr t = mk(Term{ZeroTm{}});
  return t;
}
TermPtr succ_tm(TermPtr u) { return mk(Term{SuccTm{std::move(u)}}); }
TermPtr numeral_tm(std::uint64_t n) {
  TermPtr t = zero_tm();
  for (std::uint64_t i = 0; i < n; ++i) t = succ_tm(t);
  return t;
}

FormPtr top_fm() {
  static const FormPtr f = mk(Form{TopFm{}});
  return f;
}
FormPtr bot_fm() {
  static const FormPtr f = mk(Form{BotFm{}});
  return f;
}
FormPtr and_fm(FormPtr l, FormPtr r) { return mk(Form{AndFm{std::move(l), std::move(r)}}); }
FormPtr imp_fm(FormPtr l, FormPtr r) { return mk(Form{ImpFm{std::move(l), std::move(r)}}); }
FormPtr all_fm(std::string hint, TypePtr a, FormPtr body) {
  return mk(Form{AllFm{std::move(hint), std::move(a), std::move(body)}});
}
FormPtr ex_fm(std::string hint, TypePtr a, FormPtr body) {
  return mk(Form{ExFm{std::move(hint), std::move(a), std::move(body)}});
}
FormPtr eq_fm(TermPtr l, TypePtr a, TermPtr r) {
  return mk(Form{EqFm{std::move(l), std::move(a), std::move(r)}});
}
FormPtr prop_fm(TermPtr u) { return mk(Form{PropFm{std::move(u)}}); }

// -------------------------------------------------------------- comparison

bool type_equal(const TypePtr& a, const TypePtr& b) {
  if (a.get() == b.get()) return true;
  if (a->index() != b->index()) return false;
  return std::visit(
      overloaded{
          [&](const ProdTy& x) {
            const auto& y = std::get<ProdTy>(*b);
            return type_equal(x.a, y.a) && type_equal(x.b, y.b);
          },
          [&](const ArrTy& x) {
            const auto& y = std::get<ArrTy>(*b);
            return type_equal(x.a, y.a) && type_equal(x.b, y.b);
          },
          [&](const SubTy& x) {
            const auto& y = std::get<SubTy>(*b);
            return type_equal(x.a, y.a) && form_equal(x.f, y.f);
          },
          [](const auto&) { return true; },
      },
      *a);
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->index() != b->index()) return false;
  return std::visit(
      overloaded{
          [&](const VarTm& x) { return x.idx == std::get<VarTm>(*b).idx; },
          [&](const P1Tm& x) { return term_equal(x.u, std::get<P1Tm>(*b).u); },
          [&](const P2Tm& x) { return term_equal(x.u, std::get<P2Tm>(*b).u); },
          [&](const PairTm& x) {
            const auto& y = std::get<PairTm>(*b);
            return term_equal(x.u, y.u) && term_equal(x.v, y.v);
          },
          [&](const AppTm& x) {
            const auto& y = std::get<AppTm>(*b);
            return term_equal(x.u, y.u) && term_equal(x.v, y.v);
          },
          [&](const LamTm& x) {
            const auto& y = std::get<LamTm>(*b);
            return type_equal(x.a, y.a) && term_equal(x.body, y.body);
          },
          [&](const ElTm& x) { return form_equal(x.f, std::get<ElTm>(*b).f); },
          [&](const DescTm& x) {
            const auto& y = std::get<DescTm>(*b);
            return type_equal(x.a, y.a) && form_equal(x.f, y.f);
          },
          [&](const SuccTm& x) { return term_equal(x.u, std::get<SuccTm>(*b).u); },
          [](const auto&) { return true; },
      },
      *a);
}

bool form_equal(const FormPtr& a, const FormPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->index() != b->index()) return false;
  return std::visit(
      overloaded{
          [&](const AndFm& x) {
            const auto& y = std::get<AndFm>(*b);
            return form_equal(x.l, y.l) && form_equal(x.r, y.r);
          },
          [&](const ImpFm& x) {
            const auto& y = std::get<ImpFm>(*b);
            return form_equal(x.l, y.l) && form_equal(x.r, y.r);
          },
          [&](const AllFm& x) {
            const auto& y = std::get<AllFm>(*b);
            return type_equal(x.a, y.a) && form_equal(x.body, y.body);
          },
          [&](const ExFm& x) {
            const auto& y = std::get<ExFm>(*b);
            return type_equal(x.a, y.a) && form_equal(x.body, y.body);
          },
          [&](const EqFm& x) {
            const auto& y = std::get<EqFm>(*b);
            return term_equal(x.l, y.l) && type_equal(x.a, y.a) && term_equal(x.r, y.r);
          },
          [&](const PropFm& x) { return term_equal(x.u, std::get<PropFm>(*b).u); },
          [](const auto&) { return true; },
      },
      *a);
}

// ------------------------------------------------------------------- shift

TypePtr shift_type(const TypePtr& t, int d, int cutoff) {
  return std::visit(
      overloaded{
          [&](const ProdTy& x) { return prod_ty(shift_type(x.a, d, cutoff), shift_type(x.b, d, cutoff)); },
          [&](const ArrTy& x) { return arr_ty(shift_type(x.a, d, cutoff), shift_type(x.b, d, cutoff)); },
          [&](const SubTy& x) {
            return sub_ty(x.hint, shift_type(x.a, d, cutoff), shift_form(x.f, d, cutoff + 1),
                          x.stability);
          },
          [&](const auto&) { return t; },
      },
      *t);
}

TermPtr shift_term(const TermPtr& t, int d, int cutoff) {
  return std::visit(
      overloaded{
          [&](const VarTm& x) { return x.idx >= cutoff ? tvar(x.idx + d, x.hint) : t; },
          [&](const P1Tm& x) { return p1_tm(shift_term(x.u, d, cutoff)); },
          [&](const P2Tm& x) { return p2_tm(shift_term(x.u, d, cutoff)); },
          [&](const PairTm& x) {
            return pair_tm(shift_term(x.u, d, cutoff), shift_term(x.v, d, cutoff));
          },
          [&](const AppTm& x) {
            return app_tm(shift_term(x.u, d, cutoff), shift_term(x.v, d, cutoff));
          },
          [&](const LamTm& x) {
            return lam_tm(x.hint, shift_type(x.a, d, cutoff), shift_term(x.body, d, cutoff + 1));
          },
          [&](const ElTm& x) { return el_tm(shift_form(x.f, d, cutoff)); },
          [&](const DescTm& x) {
            return d_tm(x.hint, shift_type(x.a, d, cutoff), shift_form(x.f, d, cutoff + 1));
          },
          [&](const SuccTm& x) { return succ_tm(shift_term(x.u, d, cutoff)); },
          [&](const auto&) { return t; },
      },
      *t);
}

FormPtr shift_form(const FormPtr& t, int d, int cutoff) {
  return std::visit(
      overloaded{
          [&](const AndFm& x) { return and_fm(shift_form(x.l, d, cutoff), shift_form(x.r, d, cutoff)); },
          [&](const ImpFm& x) { return imp_fm(shift_form(x.l, d, cutoff), shift_form(x.r, d, cutoff)); },
          [&](const AllFm& x) {
            return all_fm(x.hint, shift_type(x.a, d, cutoff), shift_form(x.body, d, cutoff + 1));
          },
          [&](const ExFm& x) {
            return ex_fm(x.hint, shift_type(x.a, d, cutoff), shift_form(x.body, d, cutoff + 1));
          },
          [&](const EqFm& x) {
            return eq_fm(shift_term(x.l, d, cutoff), shift_type(x.a, d, cutoff),
                         shift_term(x.r, d, cutoff));
          },
          [&](const PropFm& x) { return prop_fm(shift_term(x.u, d, cutoff)); },
          [&](const auto&) { return t; },
      },
      *t);
}

// ------------------------------------------------------------ substitution

TypePtr subst_type(const TypePtr& t, int idx, const TermPtr& u) {
  return std::visit(
      overloaded{
          [&](const ProdTy& x) { return prod_ty(subst_type(x.a, idx, u), subst_type(x.b, idx, u)); },
          [&](const ArrTy& x) { return arr_ty(subst_type(x.a, idx, u), subst_type(x.b, idx, u)); },
          [&](const SubTy& x) {
            return sub_ty(x.hint, subst_type(x.a, idx, u), subst_form(x.f, idx + 1, u),
                          x.stability);
          },
          [&](const auto&) { return t; },
      },
      *t);
}

TermPtr subst_term(const TermPtr& t, int idx, const TermPtr& u) {
  return std::visit(
      overloaded{
          [&](const VarTm& x) {
            if (x.idx == idx) return shift_term(u, idx);
            return x.idx > idx ? tvar(x.idx - 1, x.hint) : t;
          },
          [&](const P1Tm& x) { return p1_tm(subst_term(x.u, idx, u)); },
          [&](const P2Tm& x) { return p2_tm(subst_term(x.u, idx, u)); },
          [&](const PairTm& x) {
            return pair_tm(subst_term(x.u, idx, u), subst_term(x.v, idx, u));
          },
          [&](const AppTm& x) {
            return app_tm(subst_term(x.u, idx, u), subst_term(x.v, idx, u));
          },
          [&](const LamTm& x) {
            return lam_tm(x.hint, subst_type(x.a, idx, u), subst_term(x.body, idx + 1, u));
          },
          [&](const ElTm& x) { return el_tm(subst_form(x.f, idx, u)); },
          [&](const DescTm& x) {
            return d_tm(x.hint, subst_type(x.a, idx, u), subst_form(x.f, idx + 1, u));
          },
          [&](const SuccTm& x) { return succ_tm(subst_term(x.u, idx, u)); },
          [&](const auto&) { return t; },
      },
      *t);
}

FormPtr subst_form(const FormPtr& t, int idx, const TermPtr& u) {
  return std::visit(
      overloaded{
          [&](const AndFm& x) { return and_fm(subst_form(x.l, idx, u), subst_form(x.r, idx, u)); },
          [&](const ImpFm& x) { return imp_fm(subst_form(x.l, idx, u), subst_form(x.r, idx, u)); },
          [&](const AllFm& x) {
            return all_fm(x.hint, subst_type(x.a, idx, u), subst_form(x.body, idx + 1, u));
          },
          [&](const ExFm& x) {
            return ex_fm(x.hint, subst_type(x.a, idx, u), subst_form(x.body, idx + 1, u));
          },
          [&](const EqFm& x) {
            return eq_fm(subst_term(x.l, idx, u), subst_type(x.a, idx, u),
                         subst_term(x.r, idx, u));
          },
          [&](const PropFm& x) { return prop_fm(subst_term(x.u, idx, u)); },
          [&](const auto&) { return t; },
      },
      *t);
}

// ---------------------------------------------------------------- printing

namespace {

// keys=true prints hint-free de Bruijn form (canonical). keys=false prints a
// named, re-parseable form: binders are named from their hints (made unique
// against the enclosing scope), variables are resolved through the scope.
using Scope = std::vector<std::string>;

std::string var_name(int idx, bool keys, const Scope& sc) {
  if (!keys && idx >= 0 && static_cast<std::size_t>(idx) < sc.size())
    return sc[sc.size() - 1 - static_cast<std::size_t>(idx)];
  return "#" + std::to_string(idx);
}

std::string print_type(const TypePtr& t, bool keys, const Scope& sc);
std::string print_term(const TermPtr& t, bool keys, const Scope& sc);
std::string print_form(const FormPtr& t, bool keys, const Scope& sc);

std::string binder(const std::string& hint, bool keys, const Scope& sc) {
  if (keys) return "_";
  std::string base = hint.empty() ? "v" : hint;
  std::string name = base;
  int n = 0;
  while (std::find(sc.begin(), sc.end(), name) != sc.end())
    name = base + std::to_string(++n);
  return name;
}

Scope with_name(const Scope& sc, const std::string& name) {
  Scope out = sc;
  out.push_back(name);
  return out;
}

std::string print_type(const TypePtr& t, bool keys, const Scope& sc) {
  return std::visit(
      overloaded{
          [&](const OneTy&) { return std::string("unit"); },
          [&](const OmegaTy&) { return std::string("omega"); },
          [&](const NatTy&) { return std::string("nat"); },
          [&](const ProdTy& x) {
            return "(prod " + print_type(x.a, keys, sc) + " " + print_type(x.b, keys, sc) + ")";
          },
          [&](const ArrTy& x) {
            return "(arr " + print_type(x.a, keys, sc) + " " + print_type(x.b, keys, sc) + ")";
          },
          [&](const SubTy& x) {
            std::string b = binder(x.hint, keys, sc);
            return "(sub (" + b + " " + print_type(x.a, keys, sc) + ") " +
                   print_form(x.f, keys, with_name(sc, b)) + ")";
          },
      },
      *t);
}

std::string print_term(const TermPtr& t, bool keys, const Scope& sc) {
  return std::visit(
      overloaded{
          [&](const VarTm& x) { return var_name(x.idx, keys, sc); },
          [&](const UnitTm&) { return std::string("star"); },
          [&](const P1Tm& x) { return "(p1 " + print_term(x.u, keys, sc) + ")"; },
          [&](const P2Tm& x) { return "(p2 " + print_term(x.u, keys, sc) + ")"; },
          [&](const PairTm& x) {
            return "(pair " + print_term(x.u, keys, sc) + " " + print_term(x.v, keys, sc) + ")";
          },
          [&](const AppTm& x) {
            return "(app " + print_term(x.u, keys, sc) + " " + print_term(x.v, keys, sc) + ")";
          },
          [&](const LamTm& x) {
            std::string b = binder(x.hint, keys, sc);
            return "(lam (" + b + " " + print_type(x.a, keys, sc) + ") " +
                   print_term(x.body, keys, with_name(sc, b)) + ")";
          },
          [&](const ElTm& x) { return "(el " + print_form(x.f, keys, sc) + ")"; },
          [&](const DescTm& x) {
            std::string b = binder(x.hint, keys, sc);
            return "(d (" + b + " " + print_type(x.a, keys, sc) + ") " +
                   print_form(x.f, keys, with_name(sc, b)) + ")";
          },
          [&](const ZeroTm&) { return std::string("z"); },
          [&](const SuccTm& x) { return "(s " + print_term(x.u, keys, sc) + ")"; },
      },
      *t);
}

std::string print_form(const FormPtr& t, bool keys, const Scope& sc) {
  return std::visit(
      overloaded{
          [&](const TopFm&) { return std::string("top"); },
          [&](const BotFm&) { return std::string("bot"); },
          [&](const AndFm& x) {
            return "(and " + print_form(x.l, keys, sc) + " " + print_form(x.r, keys, sc) + ")";
          },
          [&](const ImpFm& x) {
            return "(imp " + print_form(x.l, keys, sc) + " " + print_form(x.r, keys, sc) + ")";
          },
          [&](const AllFm& x) {
            std::string b = binder(x.hint, keys, sc);
            return "(forall (" + b + " " + print_type(x.a, keys, sc) + ") " +
                   print_form(x.body, keys, with_name(sc, b)) + ")";
          },
          [&](const ExFm& x) {
            std::string b = binder(x.hint, keys, sc);
            return "(exists (" + b + " " + print_type(x.a, keys, sc) + ") " +
                   print_form(x.body, keys, with_name(sc, b)) + ")";
          },
          [&](const EqFm& x) {
            return "(eq " + print_type(x.a, keys, sc) + " " + print_term(x.l, keys, sc) + " " +
                   print_term(x.r, keys, sc) + ")";
          },
          [&](const PropFm& x) { return "(prop " + print_term(x.u, keys, sc) + ")"; },
      },
      *t);
}

}  // namespace

std::string to_string(const TypePtr& t) { return print_type(t, false, {}); }
std::string to_string(const TermPtr& t) { return print_term(t, false, {}); }
std::string to_string(const FormPtr& t) { return print_form(t, false, {}); }
std::string key_string(const TypePtr& t) { return print_type(t, true); }
std::string key_string(const TermPtr& t) { return print_term(t, true); }
std::string key_string(const FormPtr& t) { return print_form(t, true); }

// ---------------------------------------------------------------- sequents

bool sequent_equal(const Sequent& a, const Sequent& b) {
  if (a.ctx.size() != b.ctx.size() || a.hyps.size() != b.hyps.size()) return false;
  for (std::size_t i = 0; i < a.ctx.size(); ++i)
    if (!type_equal(a.ctx[i].type, b.ctx[i].type)) return false;
  for (std::size_t i = 0; i < a.hyps.size(); ++i)
    if (!form_equal(a.hyps[i], b.hyps[i])) return false;
  return form_equal(a.concl, b.concl);
}

std::string to_string(const Sequent& s) {
  std::string out = "(seq (";
  for (std::size_t i = 0; i < s.ctx.size(); ++i) {
    if (i) out += " ";
    out += "(" + (s.ctx[i].name.empty() ? "_" : s.ctx[i].name) + " " + to_string(s.ctx[i].type) +
           ")";
  }
  out += ") (";
  for (std::size_t i = 0; i < s.hyps.size(); ++i) {
    if (i) out += " ";
    out += to_string(s.hyps[i]);
  }
  out += ") " + to_string(s.concl) + ")";
  return out;
}

// ------------------------------------------------------------- derivations

namespace {

const std::map<std::string, Rule>& rule_table() {
  static const std::map<std::string, Rule> table = {
      {"top-intro", Rule::TopIntro},
      {"bot-elim", Rule::BotElim},
      {"hyp", Rule::Hyp},
      {"and-intro", Rule::AndIntro},
      {"and-elim-1", Rule::AndElim1},
      {"and-elim-2", Rule::AndElim2},
      {"imp-intro", Rule::ImpIntro},
      {"imp-elim", Rule::ImpElim},
      {"all-intro", Rule::AllIntro},
      {"all-elim", Rule::AllElim},
      {"ex-intro", Rule::ExIntro},
      {"ex-elim", Rule::ExElim},
      {"ax-sym", Rule::AxSym},
      {"ax-trans", Rule::AxTrans},
      {"ax-unit-refl", Rule::AxUnitRefl},
      {"ax-unit-connect", Rule::AxUnitConnect},
      {"ax-p1-refl", Rule::AxP1Refl},
      {"ax-p1-cong", Rule::AxP1Cong},
      {"ax-p2-refl", Rule::AxP2Refl},
      {"ax-p2-cong", Rule::AxP2Cong},
      {"ax-pair-refl", Rule::AxPairRefl},
      {"ax-pair-cong", Rule::AxPairCong},
      {"ax-p1-beta", Rule::AxP1Beta},
      {"ax-p2-beta", Rule::AxP2Beta},
      {"ax-pair-eta", Rule::AxPairEta},
  };
  return table;
}

}  // namespace

const char* rule_name(Rule r) {
  for (const auto& [name, rule] : rule_table())
    if (rule == r) return name.c_str();
  return "?";
}

std::optional<Rule> rule_from_name(const std::string& name) {
  auto it = rule_table().find(name);
  if (it == rule_table().end()) return std::nullopt;
  return it->second;
}

bool is_axiom(Rule r) { return r >= Rule::AxSym; }

int axiom_arity(Rule r) {
  switch (r) {
    case Rule::AxSym:
    case Rule::AxTrans:
      return 1;
    case Rule::AxUnitRefl:
    case Rule::AxUnitConnect:
      return 0;
    default:
      return is_axiom(r) ? 2 : 0;
  }
}

DerivPtr derive(Rule rule, Sequent concl, std::vector<DerivPtr> prems, TermPtr inst_term,
                std::vector<TypePtr> inst_types) {
  return std::make_shared<const Derivation>(Derivation{
      rule, std::move(concl), std::move(prems), std::move(inst_term), std::move(inst_types)});
}

FormPtr axiom_formula(Rule r, const std::vector<TypePtr>& types) {
  const TypePtr a = types.size() > 0 ? types[0] : nullptr;
  const TypePtr b = types.size() > 1 ? types[1] : nullptr;
  const TypePtr ab = (a && b) ? prod_ty(a, b) : nullptr;
  auto v = [](int i) { return tvar(i); };
  switch (r) {
    case Rule::AxSym:
      return all_fm("a", a,
                    all_fm("b", a, imp_fm(eq_fm(v(1), a, v(0)), eq_fm(v(0), a, v(1)))));
    case Rule::AxTrans:
      return all_fm(
          "a", a,
          all_fm("b", a,
                 all_fm("c", a,
                        imp_fm(eq_fm(v(2), a, v(1)),
                               imp_fm(eq_fm(v(1), a, v(0)), eq_fm(v(2), a, v(0)))))));
    case Rule::AxUnitRefl:
      return eq_fm(unit_tm(), one_ty(), unit_tm());
    case Rule::AxUnitConnect:
      return all_fm("a", one_ty(),
                    all_fm("b", one_ty(),
                           imp_fm(eq_fm(v(1), one_ty(), v(1)),
                                  imp_fm(eq_fm(v(0), one_ty(), v(0)),
                                         eq_fm(v(1), one_ty(), v(0))))));
    case Rule::AxP1Refl:
      return all_fm("g", ab,
                    imp_fm(eq_fm(p1_tm(v(0)), a, p1_tm(v(0))), eq_fm(v(0), ab, v(0))));
    case Rule::AxP1Cong:
      return all_fm("g", ab,
                    all_fm("h", ab,
                           imp_fm(eq_fm(v(1), ab, v(0)),
                                  eq_fm(p1_tm(v(1)), a, p1_tm(v(0))))));
    case Rule::AxP2Refl:
      return all_fm("g", ab,
                    imp_fm(eq_fm(p2_tm(v(0)), b, p2_tm(v(0))), eq_fm(v(0), ab, v(0))));
    case Rule::AxP2Cong:
      return all_fm("g", ab,
                    all_fm("h", ab,
                           imp_fm(eq_fm(v(1), ab, v(0)),
                                  eq_fm(p2_tm(v(1)), b, p2_tm(v(0))))));
    case Rule::AxPairRefl:
      return all_fm(
          "a", a,
          all_fm("b", b,
                 imp_fm(eq_fm(pair_tm(v(1), v(0)), ab, pair_tm(v(1), v(0))),
                        and_fm(eq_fm(v(1), a, v(1)), eq_fm(v(0), b, v(0))))));
    case Rule::AxPairCong:
      return all_fm(
          "a", a,
          all_fm("a'", a,
                 all_fm("b", b,
                        all_fm("b'", b,
                               imp_fm(eq_fm(v(3), a, v(2)),
                                      imp_fm(eq_fm(v(1), b, v(0)),
                                             eq_fm(pair_tm(v(3), v(1)), ab,
                                                   pair_tm(v(2), v(0)))))))));
    case Rule::AxP1Beta:
      return all_fm(
          "a", a,
          all_fm("b", b,
                 imp_fm(eq_fm(v(1), a, v(1)),
                        imp_fm(eq_fm(v(0), b, v(0)),
                               eq_fm(p1_tm(pair_tm(v(1), v(0))), a, v(1))))));
    case Rule::AxP2Beta:
      return all_fm(
          "a", a,
          all_fm("b", b,
                 imp_fm(eq_fm(v(1), a, v(1)),
                        imp_fm(eq_fm(v(0), b, v(0)),
                               eq_fm(p2_tm(pair_tm(v(1), v(0))), b, v(0))))));
    case Rule::AxPairEta:
      return all_fm(
          "g", ab,
          all_fm("h", ab,
                 imp_fm(eq_fm(p1_tm(v(1)), a, p1_tm(v(0))),
                        imp_fm(eq_fm(p2_tm(v(1)), b, p2_tm(v(0))),
                               eq_fm(v(1), ab, v(0))))));
    default:
      return nullptr;
  }
}

}  // namespace efftop::kernel
