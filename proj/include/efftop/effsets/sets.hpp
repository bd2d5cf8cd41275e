#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "efftop/logic/check.hpp"
#include "efftop/sem.hpp"

// Constructions of effective sets and the El layer above them: injection,
// description, restriction, guarded quantifiers, and mechanically assembled
// realizer codes for the bridge lemmas between the carrier level and the
// El level.
namespace efftop::effsets {

using sem::CarrierValue;
using sem::EffSetPtr;
using sem::ElValue;
using sem::SemFormula;

// A requested set failed its partial-equivalence or stability checks.
struct SetConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Named predicate on El(A); the name keeps printouts and dedup deterministic.
struct ElPredicate {
  std::string name;
  std::function<SemFormula(const ElValue&)> at;
};

// ----------------------------------------------------------- law formulas

// forall x y, eq(x,y) => eq(y,x)
SemFormula symmetry_formula(const EffSetPtr& x);
// forall x y z, eq(x,y) => eq(y,z) => eq(x,z)
SemFormula transitivity_formula(const EffSetPtr& x);

// ---------------------------------------------------------- canonical sets

EffSetPtr one_set();    // one-point carrier, equality constantly Top
EffSetPtr omega_set();  // carrier Prop, equality is bi-implication
EffSetPtr nat_set();    // carrier of numerals, primitive diagonal equality

struct FiniteRow {
  std::string left, right;
  SemFormula when;
};
struct FiniteSpec {
  std::string name;
  std::vector<std::string> labels;
  std::vector<FiniteRow> rows;  // pairs absent from the table are unequal
};
// Validates the table by exact realizer checks of both laws over the whole
// carrier; throws SetConstructionError when validation fails.
EffSetPtr finite_set(const FiniteSpec& spec, const logic::SearchBudget& budget);

EffSetPtr prod_set(const EffSetPtr& a, const EffSetPtr& b);
// Carrier |El(a)| -> |El(b)|; equality is the extensional one over El-equal
// argument pairs.
EffSetPtr closure_set(const EffSetPtr& a, const EffSetPtr& b);

// Evidence that an El-predicate respects El-equality: a realizer of
// el_predicate_stability_formula plus the check that validated it.
struct StabilityEvidence {
  vm::CodePtr realizer;
  logic::CheckResult check;
  std::string origin;  // "checked" | "derivation" | "builtin"
};

// forall u u' in |El(a)| raw, eq_El(u,u') => F(u) => F(u')
SemFormula el_predicate_stability_formula(const EffSetPtr& a, const ElPredicate& f);

// Searches for the stability realizer; nullopt when none is found.
std::optional<StabilityEvidence> check_el_predicate_stability(
    const EffSetPtr& a, const ElPredicate& f, const logic::SearchBudget& budget,
    std::vector<vm::CodePtr> extra_hints = {});

// Carrier of a with equality eq_a(x,y) /\ F(el_a(x)).
EffSetPtr subset_set(const std::string& name, const EffSetPtr& a, const ElPredicate& f,
                     const StabilityEvidence& ev);

// ----------------------------------------------------------------- El layer

// The set of elements: carrier |X| -> Prop, four-clause equality.
EffSetPtr el_of(const EffSetPtr& x);
// el_X(v): the predicate y -> eq_X(v, y).
ElValue el_inject(const EffSetPtr& x, const CarrierValue& v);
// The four-clause El-equality, with existential witness hints harvested from
// both sides.
SemFormula el_eq(const EffSetPtr& x, const ElValue& u, const ElValue& v);
// eq_X(v, v); the membership guard of the quantifier notation.
SemFormula self_eq(const EffSetPtr& x, const CarrierValue& v);

// d(F): the predicate x -> F(el_a(x)), "the unique element satisfying F".
ElValue description(const EffSetPtr& a, const ElPredicate& f);
// [u | cond]: pointwise conjunction of u with a fixed side condition.
ElValue restrict_el(const ElValue& u, const SemFormula& cond);

// Guarded quantifiers over an effective set: forall expands to
// eq(x,x) => body(x), exists to eq(x,x) /\ body(x).
SemFormula forall_in(const EffSetPtr& x, std::function<SemFormula(const CarrierValue&)> body,
                     std::vector<CarrierValue> hints = {});
SemFormula exists_in(const EffSetPtr& x, std::function<SemFormula(const CarrierValue&)> body,
                     std::vector<CarrierValue> hints = {});

// ------------------------------------------------ mechanical realizer codes
//
// El-equality realizers are right-nested 4-tuples
//   <stability, <unicity, <existence, <fwd, bwd>>>>
// and every builder below manipulates that layout. Builders suffixed with a
// set argument splice in that set's symmetry/transitivity codes; the rest are
// set-independent.

// eq_El(u,v) -> eq_El(v,u)
vm::CodePtr el_sym_code();
// eq_El(u,v) -> eq_El(v,w) -> eq_El(u,w)
vm::CodePtr el_trans_code();
// eq_El(u,v) -> eq_El(u,u)
vm::CodePtr el_left_self_code();
// eq_El(u,u) -> (forall x, u(x) <=> v(x)) -> eq_El(u,v)
vm::CodePtr el_eq_patch_equiv_code();
// eq_El(u,u) -> eq_El(v,v) -> (forall x, u(x) => v(x)) -> eq_El(u,v)
vm::CodePtr el_eq_from_inclusion_code();
// eq_El(u, el x) -> <eq_El(u,u), u(x)>
vm::CodePtr el_eq_split_member_code(const EffSetPtr& x);
// <eq_El(u,u), u(x)> -> eq_El(u, el x)
vm::CodePtr el_eq_join_member_code();
// eq_X(x,y) -> eq_El(el x, el y)
vm::CodePtr inject_cong_code(const EffSetPtr& x);
// eq_El(el x, el y) -> eq_X(x,y)
vm::CodePtr inject_reflect_code(const EffSetPtr& x);
// eq_El(u,u) -> exists x, eq_El(u, el x)     (the union realizer)
vm::CodePtr self_to_inject_eq_code();
// eq_El(u, el x) -> eq_El(u,u)
vm::CodePtr self_from_inject_eq_code();
// eq_El(u,v) -> u(x) -> eq_X(x,x)
vm::CodePtr member_self_code();
// eq_El(u, [v|F]) -> <eq_El(u,v), F>
vm::CodePtr restrict_split_code();
// <eq_El(u,v), F> -> eq_El(u, [v|F])
vm::CodePtr restrict_intro_code();

// Lifting realizer for truth extension: given the n low sets, the number k of
// lifted positions, a stability realizer for the predicate and a realizer of
// the guarded low-level statement, assembles the realizer of the guarded
// statement over El-values in the first k positions.
vm::CodePtr lift_truth_code(const std::vector<EffSetPtr>& low_sets, std::size_t k,
                            const vm::CodePtr& stability, const vm::CodePtr& low_truth);

}  // namespace efftop::effsets
