#pragma once

#include "efftop/sexpr.hpp"
#include "efftop/vm/code.hpp"

// Concrete syntax for Code:
//   (var N) | (lam B) | (app F A) | (nat N) | succ | pred | fst | snd | rec
//   | (pair A B) | (ifz S Z P) | (builtin NAME)
// (app F A B ...) is accepted as sugar for nested binary application.
// print/parse round-trip exactly on the binary form.
namespace efftop::vm {

CodePtr code_from_sexpr(const sx::NodePtr& node);
sx::NodePtr code_to_sexpr(const CodePtr& code);

CodePtr parse_code(const std::string& text);

}  // namespace efftop::vm
