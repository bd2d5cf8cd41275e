#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "efftop/kernel/ast.hpp"

// The four judgment checkers. Type, term and formula checking are
// syntax-directed; sequent derivations are verified node by node against the
// rule schemas, recomputing every substitution instance. No search happens
// anywhere: derivations carry all instantiation data.
namespace efftop::kernel {

enum class Errc {
  IllScoped,
  UnboundVariable,
  TypeMismatch,
  MissingStabilityProof,
  RuleMismatch,
  SideConditionFailed,
  SubstitutionMismatch,
};

const char* errc_name(Errc c);

struct KernelError : std::runtime_error {
  Errc code;
  std::string path;    // node location, e.g. "proof.prem[0].prem[1]"
  std::string detail;  // human-readable cause
  KernelError(Errc code, std::string path, std::string detail);
};

// Accepts exactly the printed formation rules; a subset type must carry a
// derivation of its stability sequent (closed context, no hypotheses).
void check_wf_type(const TypePtr& a, const std::string& path = "type");

// Checks u against a target type, with subset subsumption in both printed
// directions (peeling the target; stripping inferred subset layers).
void check_term(const std::vector<CtxEntry>& ctx, const TermPtr& u, const TypePtr& a,
                const std::string& path = "term");
// Structural type inference; subset layers are stripped at elimination
// positions (projections and application heads).
TypePtr infer_term(const std::vector<CtxEntry>& ctx, const TermPtr& u,
                   const std::string& path = "term");

void check_form(const std::vector<CtxEntry>& ctx, const FormPtr& f,
                const std::string& path = "form");

// Verifies the whole derivation tree: rule shapes, premise sequents, side
// conditions, recomputed substitutions, axiom instances.
void check_proof(const DerivPtr& d, const std::string& path = "proof");

// Top-level subset layers removed.
TypePtr strip_subsets(const TypePtr& t);

}  // namespace efftop::kernel
