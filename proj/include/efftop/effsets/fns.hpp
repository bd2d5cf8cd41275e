#pragma once

#include "efftop/effsets/sets.hpp"

// Stable functions between effective sets, their extensions to the El level,
// composition, extensional comparison, and the operator bundles for products,
// map sets and the truth-value set.
namespace efftop::effsets {

using sem::StableFn;
using sem::StableFnPtr;

// Codomains follow one convention: a function into Y is stored with codomain
// el_of(Y) and its body returns El-values of Y (PredV). Domains may be any
// effective sets, including El sets.
StableFnPtr make_fn(std::string name, std::vector<EffSetPtr> domain, EffSetPtr codomain,
                    std::function<CarrierValue(const std::vector<CarrierValue>&)> body);
// Morphism of the category: El(x) -> El(y).
StableFnPtr morphism(std::string name, const EffSetPtr& x, const EffSetPtr& y,
                     std::function<ElValue(const ElValue&)> body);

CarrierValue apply_fn(const StableFnPtr& f, const std::vector<CarrierValue>& args);
// Applies a morphism to an El-value (unwraps the predicate result).
ElValue apply_morphism(const StableFnPtr& f, const ElValue& u);

// forall x1..xn x1'..xn' raw, eq_1(x1,x1') => .. => eq_cod(f(x..), f(x'..))
SemFormula stability_formula(const StableFnPtr& f);
logic::HoldsResult check_stability(const StableFnPtr& f, const logic::SearchBudget& budget,
                                   std::vector<vm::CodePtr> extra_hints = {});

// forall xi in Xi (guarded), eq_cod(f(x..), g(x..))
SemFormula approx_formula(const StableFnPtr& f, const StableFnPtr& g);
logic::HoldsResult approx_equal(const StableFnPtr& f, const StableFnPtr& g,
                                const logic::SearchBudget& budget,
                                std::vector<vm::CodePtr> extra_hints = {});

// Lifts the first k arguments to the El level; the body is the canonical
// existential predicate expression over the low function.
StableFnPtr extend(const StableFnPtr& f, std::size_t k);
// forall x1..xn guarded, eq_El(g(el x1, .., el xk, x..), f(x..)) — the
// defining property of an extension of f on the first k arguments.
SemFormula extension_agreement_formula(const StableFnPtr& g, const StableFnPtr& f, std::size_t k);

// Unary composition g . f; domains must align by set name.
StableFnPtr compose(const StableFnPtr& g, const StableFnPtr& f);
StableFnPtr identity_morphism(const EffSetPtr& x);

struct ProductOps {
  EffSetPtr prod;
  StableFnPtr p1_low, p2_low, cons_low;  // carrier-level maps landing in El
  StableFnPtr p1, p2, cons;              // their extensions
};
ProductOps product_ops(const EffSetPtr& a, const EffSetPtr& b);

struct ClosureOps {
  EffSetPtr maps;       // the set of maps |El(a)| -> |El(b)|
  StableFnPtr app_low;  // maps -> El(a) -> El(b), plain application
  StableFnPtr app;      // extension on the first argument
};
ClosureOps closure_ops(const EffSetPtr& a, const EffSetPtr& b);
// Injects a named function on El-values into El(a => b).
ElValue lam_el(const EffSetPtr& a, const EffSetPtr& b, std::string name,
               std::function<ElValue(const ElValue&)> f);

struct ClassifierOps {
  EffSetPtr omega;
  StableFnPtr truth;  // El(one) -> El(omega), constantly el(Top)
};
ClassifierOps classifier_ops();
// u(Top): reads a truth-value element back as a proposition.
SemFormula prop_of(const ElValue& u);
// The unique morphism El(x) -> El(one).
StableFnPtr star_fn(const EffSetPtr& x);
// Characteristic morphism of m : El(a) -> El(b):
// v -> el_omega(exists u in El(a), eq_El(m(u), v)).
StableFnPtr chi_fn(const StableFnPtr& m);

}  // namespace efftop::effsets
