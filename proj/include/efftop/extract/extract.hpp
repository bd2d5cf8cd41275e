#pragma once

// Program extraction: every checked derivation yields a machine code that
// realizes the denotation of its conclusion. Hypotheses become bound
// variables; axiom schemes come from a fixed realizer table. Also hosts the
// reverse direction: reading a numeric function back off its element-level
// graph, with per-input realizer evidence.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "efftop/kernel/ast.hpp"
#include "efftop/kernel/denote.hpp"
#include "efftop/logic/check.hpp"
#include "efftop/vm/code.hpp"

namespace efftop::extract {

enum class Xerrc {
  UnknownAxiomShape,
  DecodeBoundExceeded,
  NonFunctional,
};
const char* xerrc_name(Xerrc c);

class ExtractError : public std::runtime_error {
 public:
  ExtractError(Xerrc code, const std::string& detail);
  Xerrc code;
};

// Realizer of the conclusion with hypotheses taken from the evaluation
// environment: hypothesis i (oldest first, m total) is variable m-1-i.
vm::CodePtr extract_open(const kernel::DerivPtr& d, const kernel::DenoteOptions& opt);

// Closed realizer: extract_open wrapped in one lambda per hypothesis,
// oldest outermost.
vm::CodePtr extract(const kernel::DerivPtr& d, const kernel::DenoteOptions& opt);

// Table entry for an axiom scheme instantiated at the given component sets;
// throws ExtractError(UnknownAxiomShape) for non-axiom rules.
vm::CodePtr axiom_realizer(kernel::Rule rule, const std::vector<sem::EffSetPtr>& comps);

// forall (elements for the context, raw) . hyp_1 => ... => hyp_m => concl;
// the formula a closed extracted realizer is checked against.
sem::SemFormula adequacy_formula(const kernel::Sequent& s, const kernel::DenoteOptions& opt);

struct NatFnRow {
  std::uint64_t input = 0;
  std::uint64_t output = 0;
  vm::CodePtr realizer;         // verifies element equality image = numeral
  std::uint64_t fuel_spent = 0;  // total fuel across this input's checks
};
struct NatFnTable {
  std::uint64_t search_bound = 0;
  std::uint64_t decode_bound = 0;
  std::vector<NatFnRow> rows;
};

// Reads the graph of f : El(Nat) -> El(Nat) on inputs 0..search_bound by
// verified element equality against numerals up to 2*search_bound+4.
// Throws DecodeBoundExceeded when no numeral verifies (budget signal) and
// NonFunctional when two distinct numerals verify.
NatFnTable extract_nat_function(const sem::StableFnPtr& f, std::uint64_t search_bound,
                                vm::Fuel fuel);

}  // namespace efftop::extract
