#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "efftop/sem.hpp"
#include "efftop/vm/code.hpp"

// Semi-decision procedures for the proposition language. Verdicts are
// three-valued and every answer carries an exactness flag: `exact` is true
// iff every quantifier traversed had a finite, fully enumerated domain and
// no evaluation ran out of fuel. Quantifiers over infinite carriers force
// `exact = false`; implication premises are explored through candidate
// realizers and do not by themselves clear the flag.
namespace efftop::logic {

enum class Verdict { Yes, No, Unknown };

struct CheckResult {
  Verdict verdict = Verdict::Unknown;
  bool exact = false;
  std::string detail;
};

inline CheckResult yes(bool exact, std::string detail = {}) {
  return {Verdict::Yes, exact, std::move(detail)};
}
inline CheckResult no(bool exact, std::string detail = {}) {
  return {Verdict::No, exact, std::move(detail)};
}
inline CheckResult unknown(std::string detail = {}) {
  return {Verdict::Unknown, false, std::move(detail)};
}

const char* verdict_name(Verdict v);

// Extra carrier members to try when sampling a quantifier domain, keyed by
// carrier_key. `complete` asserts the pool lists the whole carrier.
struct PoolEntry {
  std::vector<sem::CarrierValue> members;
  bool complete = false;
};

struct EvalStats {
  std::uint64_t evals = 0;
  std::uint64_t fuel_spent = 0;
  std::uint64_t candidates_tried = 0;
};

struct SearchBudget {
  int max_term_size = 3;
  vm::Fuel fuel = 10000;
  std::uint64_t nat_sample_bound = 20;
  std::vector<vm::CodePtr> hint_realizers;
  std::map<std::string, PoolEntry> pools;
  std::shared_ptr<EvalStats> stats;  // optional accounting sink
};

struct Sample {
  std::vector<sem::CarrierValue> values;
  bool complete = false;
};

// Deterministic sample of a carrier: unit/finite/products of such are
// complete; naturals up to nat_sample_bound, El-expressions (injections of
// the base sample plus pool entries), propositions (a fixed basis plus pool
// entries) and map values (pools only) are not.
Sample carrier_sample(const sem::CarrierPtr& c, const SearchBudget& b);

// Does this machine value realize the proposition?
CheckResult realizes_value(const vm::Value& v, const sem::SemFormula& f, const SearchBudget& b);

// Does this closed code realize it? Everything realizes top by fiat; any
// other proposition requires the code to evaluate, and is then judged by its
// value.
CheckResult realizes(const vm::CodePtr& code, const sem::SemFormula& f, const SearchBudget& b);

// Realizer values extracted from the shape of the formula. Invariant: every
// listed value genuinely realizes the formula; `exact` additionally asserts
// the list is the whole realizer set.
struct ValueSet {
  std::vector<vm::Value> values;
  bool exact = false;
};
ValueSet witness_values(const sem::SemFormula& f, const SearchBudget& b);

// Finite complete refutation: the realizer set is provably empty.
bool exact_empty(const sem::SemFormula& f, const SearchBudget& b);
// Dual: some realizer provably exists (possibly without producing it).
bool provably_inhabited(const sem::SemFormula& f, const SearchBudget& b);

// Candidate realizer codes suggested by the formula shape.
std::vector<vm::CodePtr> synthesize_candidates(const sem::SemFormula& f, const SearchBudget& b);

// All closed codes of the realizer grammar up to the given size, in a fixed
// deterministic order, truncated at `cap`.
std::vector<vm::CodePtr> enumerate_closed_codes(int max_size, std::size_t cap);

struct FoundRealizer {
  vm::CodePtr code;
  CheckResult check;
};

// Searches hints, then formula-derived witnesses, then synthesized
// candidates, then the size-bounded enumeration; first code whose check
// verdict is Yes wins.
std::optional<FoundRealizer> find_realizer(const sem::SemFormula& f, const SearchBudget& b);

struct HoldsResult {
  CheckResult check;
  std::optional<vm::CodePtr> realizer;
};

// Yes with a realizer; No when the realizer set is shown empty (exact when
// the analysis was complete, inexact when every sampled instance was empty);
// Unknown otherwise.
HoldsResult holds(const sem::SemFormula& f, const SearchBudget& b);

}  // namespace efftop::logic
