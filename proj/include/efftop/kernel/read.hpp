#pragma once

#include <string>
#include <vector>

#include "efftop/kernel/ast.hpp"
#include "efftop/sexpr.hpp"

// Reader for the named surface syntax. Binders introduce names; variable
// occurrences are resolved to de Bruijn indices at read time, so structural
// equality of the trees is exactly alpha-equivalence. The grammar is
// documented in docs/formats.md.
namespace efftop::kernel {

TypePtr read_type(const sx::NodePtr& n, const std::vector<std::string>& scope = {});
TermPtr read_term(const sx::NodePtr& n, const std::vector<std::string>& scope = {});
FormPtr read_form(const sx::NodePtr& n, const std::vector<std::string>& scope = {});
Sequent read_sequent(const sx::NodePtr& n);
DerivPtr read_proof(const sx::NodePtr& n);

TypePtr parse_type(const std::string& text);
TermPtr parse_term(const std::string& text);
FormPtr parse_form(const std::string& text);
Sequent parse_sequent(const std::string& text);
DerivPtr parse_proof(const std::string& text);

}  // namespace efftop::kernel
