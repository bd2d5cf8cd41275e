#pragma once

// Denotation of checked syntax into the effective-set layer: types become
// effective sets, terms become elements, formulas become checkable semantic
// formulas. Subset types discharge their stability side condition by running
// the supplied derivation's extracted realizer through the semantic check.

#include <vector>

#include "efftop/effsets/fns.hpp"
#include "efftop/effsets/sets.hpp"
#include "efftop/kernel/ast.hpp"
#include "efftop/logic/check.hpp"

namespace efftop::kernel {

struct DenoteOptions {
  logic::SearchBudget budget;
};

// Effective set denoted by a closed well-formed type.
sem::EffSetPtr denote_type(const TypePtr& t, const DenoteOptions& opt);

// Element denoted by a well-typed term; env supplies one element per context
// entry, outermost first (env.back() interprets variable 0).
sem::ElValue denote_term(const std::vector<CtxEntry>& ctx, const TermPtr& u,
                         const std::vector<sem::ElValue>& env, const DenoteOptions& opt);

// Semantic formula denoted by a well-formed formula under env.
sem::SemFormula denote_form(const std::vector<CtxEntry>& ctx, const FormPtr& f,
                            const std::vector<sem::ElValue>& env, const DenoteOptions& opt);

// The successor operation on El(Nat) used for `s` terms; exposed so callers
// can build numeric elements the same way the denotation does.
const sem::StableFnPtr& succ_el_fn();

}  // namespace efftop::kernel
