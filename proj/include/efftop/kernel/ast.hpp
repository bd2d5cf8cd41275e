#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

// Syntax of the object language: simple types over unit/Omega/Nat with
// products, maps and subset comprehension; terms; first-order formulas;
// sequents; derivation trees. Variables are de Bruijn indices. Binder nodes
// keep the surface name as a printing hint, ignored by comparison.
namespace efftop::kernel {

struct Type;
struct Term;
struct Form;
struct Derivation;
using TypePtr = std::shared_ptr<const Type>;
using TermPtr = std::shared_ptr<const Term>;
using FormPtr = std::shared_ptr<const Form>;
using DerivPtr = std::shared_ptr<const Derivation>;

// ------------------------------------------------------------------ types

struct OneTy {};
struct OmegaTy {};
struct NatTy {};
struct ProdTy {
  TypePtr a, b;
};
struct ArrTy {
  TypePtr a, b;
};
// {x in a | f}. `stability` optionally carries the closed derivation of the
// stability sequent demanded by type formation; it is evidence, not syntax,
// and comparison ignores it.
struct SubTy {
  std::string hint;
  TypePtr a;
  FormPtr f;
  DerivPtr stability;
};

struct Type : std::variant<OneTy, OmegaTy, NatTy, ProdTy, ArrTy, SubTy> {
  using variant::variant;
};

// ------------------------------------------------------------------ terms

struct VarTm {
  int idx;
  std::string hint;
};
struct UnitTm {};
struct P1Tm {
  TermPtr u;
};
struct P2Tm {
  TermPtr u;
};
struct PairTm {
  TermPtr u, v;
};
struct AppTm {
  TermPtr u, v;
};
struct LamTm {
  std::string hint;
  TypePtr a;
  TermPtr body;
};
struct ElTm {
  FormPtr f;
};
// d(x:a. f) — the element description operator
struct DescTm {
  std::string hint;
  TypePtr a;
  FormPtr f;
};
struct ZeroTm {};
struct SuccTm {
  TermPtr u;
};

struct Term : std::variant<VarTm, UnitTm, P1Tm, P2Tm, PairTm, AppTm, LamTm, ElTm, DescTm, ZeroTm,
                           SuccTm> {
  using variant::variant;
};

// --------------------------------------------------------------- formulas

struct TopFm {};
struct BotFm {};
struct AndFm {
  FormPtr l, r;
};
struct ImpFm {
  FormPtr l, r;
};
struct AllFm {
  std::string hint;
  TypePtr a;
  FormPtr body;
};
struct ExFm {
  std::string hint;
  TypePtr a;
  FormPtr body;
};
// |l =_a r|
struct EqFm {
  TermPtr l;
  TypePtr a;
  TermPtr r;
};
struct PropFm {
  TermPtr u;
};

struct Form : std::variant<TopFm, BotFm, AndFm, ImpFm, AllFm, ExFm, EqFm, PropFm> {
  using variant::variant;
};

// -------------------------------------------------------------- factories

TypePtr one_ty();
TypePtr omega_ty();
TypePtr nat_ty();
TypePtr prod_ty(TypePtr a, TypePtr b);
TypePtr arr_ty(TypePtr a, TypePtr b);
TypePtr sub_ty(std::string hint, TypePtr a, FormPtr f, DerivPtr stability = nullptr);

TermPtr tvar(int idx, std::string hint = {});
TermPtr unit_tm();
TermPtr p1_tm(TermPtr u);
TermPtr p2_tm(TermPtr u);
TermPtr pair_tm(TermPtr u, TermPtr v);
TermPtr app_tm(TermPtr u, TermPtr v);
TermPtr lam_tm(std::string hint, TypePtr a, TermPtr body);
TermPtr el_tm(FormPtr f);
TermPtr d_tm(std::string hint, TypePtr a, FormPtr f);
TermPtr zero_tm();
TermPtr succ_tm(TermPtr u);
// S^n(Z)
TermPtr numeral_tm(std::uint64_t n);

FormPtr top_fm();
FormPtr bot_fm();
FormPtr and_fm(FormPtr l, FormPtr r);
FormPtr imp_fm(FormPtr l, FormPtr r);
FormPtr all_fm(std::string hint, TypePtr a, FormPtr body);
FormPtr ex_fm(std::string hint, TypePtr a, FormPtr body);
FormPtr eq_fm(TermPtr l, TypePtr a, TermPtr r);
FormPtr prop_fm(TermPtr u);

// ------------------------------------------------------------- operations

// Structural comparison; binder hints and attached stability evidence are
// ignored, so this is exactly alpha-equivalence of the named surface syntax.
bool type_equal(const TypePtr& a, const TypePtr& b);
bool term_equal(const TermPtr& a, const TermPtr& b);
bool form_equal(const FormPtr& a, const FormPtr& b);

// Adds d to every free index >= cutoff.
TypePtr shift_type(const TypePtr& t, int d, int cutoff = 0);
TermPtr shift_term(const TermPtr& t, int d, int cutoff = 0);
FormPtr shift_form(const FormPtr& t, int d, int cutoff = 0);

// Capture-avoiding substitution of u for the free index `idx`; indices above
// it drop by one.
TypePtr subst_type(const TypePtr& t, int idx, const TermPtr& u);
TermPtr subst_term(const TermPtr& t, int idx, const TermPtr& u);
FormPtr subst_form(const FormPtr& t, int idx, const TermPtr& u);

// Named printing (binder hints, for diagnostics).
std::string to_string(const TypePtr& t);
std::string to_string(const TermPtr& t);
std::string to_string(const FormPtr& t);
// Canonical hint-free printing (de Bruijn indices), used for deterministic
// set and predicate names during denotation.
std::string key_string(const TypePtr& t);
std::string key_string(const TermPtr& t);
std::string key_string(const FormPtr& t);

// ---------------------------------------------------------------- sequents

struct CtxEntry {
  std::string name;
  TypePtr type;
};

// ctx is outermost-first: Var(0) refers to the back entry. hyps is oldest
// first: the hypothesis rule concludes the back formula.
struct Sequent {
  std::vector<CtxEntry> ctx;
  std::vector<FormPtr> hyps;
  FormPtr concl;
};

bool sequent_equal(const Sequent& a, const Sequent& b);
std::string to_string(const Sequent& s);

// -------------------------------------------------------------- derivations

enum class Rule {
  TopIntro,
  BotElim,
  Hyp,
  AndIntro,
  AndElim1,
  AndElim2,
  ImpIntro,
  ImpElim,
  AllIntro,
  AllElim,
  ExIntro,
  ExElim,
  AxSym,
  AxTrans,
  AxUnitRefl,
  AxUnitConnect,
  AxP1Refl,
  AxP1Cong,
  AxP2Refl,
  AxP2Cong,
  AxPairRefl,
  AxPairCong,
  AxP1Beta,
  AxP2Beta,
  AxPairEta,
};

const char* rule_name(Rule r);
std::optional<Rule> rule_from_name(const std::string& name);
bool is_axiom(Rule r);
// 0 for the unit schemes, 1 for the generic ones, 2 for the product ones.
int axiom_arity(Rule r);

struct Derivation {
  Rule rule;
  Sequent concl;
  std::vector<DerivPtr> prems;
  TermPtr inst_term;                // instantiation witness of all-elim / ex-intro
  std::vector<TypePtr> inst_types;  // axiom scheme parameters
};

DerivPtr derive(Rule rule, Sequent concl, std::vector<DerivPtr> prems = {},
                TermPtr inst_term = nullptr, std::vector<TypePtr> inst_types = {});

// The closed formula an axiom scheme concludes at the given parameters.
FormPtr axiom_formula(Rule r, const std::vector<TypePtr>& types);

}  // namespace efftop::kernel
