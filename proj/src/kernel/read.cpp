#include "efftop/kernel/read.hpp"

#include <algorithm>

#include "efftop/kernel/check.hpp"

namespace efftop::kernel {

namespace {

using sx::NodePtr;

[[noreturn]] void bad(const NodePtr& n, const std::string& msg) {
  throw sx::ParseError(msg + " " + n->where(), n->pos);
}

bool reserved(const std::string& s) {
  static const std::vector<std::string> words = {
      "unit", "omega", "nat",    "prod",   "arr", "sub",  "star",   "z",    "s",
      "p1",   "p2",    "pair",   "app",    "lam", "el",   "d",      "top",  "bot",
      "and",  "imp",   "forall", "exists", "eq",  "prop", "seq",    "proof", "rule",
      "concl", "prem", "term",   "type",   "types", "stability"};
  return std::find(words.begin(), words.end(), s) != words.end();
}

int resolve(const std::string& name, const std::vector<std::string>& scope, const NodePtr& n) {
  for (std::size_t i = 0; i < scope.size(); ++i) {
    std::size_t j = scope.size() - 1 - i;
    if (scope[j] == name) return static_cast<int>(i);
  }
  throw KernelError(Errc::IllScoped, "read",
                    "unknown variable `" + name + "` " + n->where());
}

// (x TYPE) binder pair
std::pair<std::string, TypePtr> read_binder(const NodePtr& n,
                                            const std::vector<std::string>& scope) {
  if (!n->is_list() || n->items().size() != 2 || !n->items()[0]->is_sym())
    bad(n, "expected a (name type) binder");
  const std::string& name = n->items()[0]->sym();
  if (reserved(name)) bad(n, "binder name `" + name + "` is reserved");
  return {name, read_type(n->items()[1], scope)};
}

std::vector<std::string> with(const std::vector<std::string>& scope, const std::string& name) {
  std::vector<std::string> out = scope;
  out.push_back(name);
  return out;
}

}  // namespace

TypePtr read_type(const NodePtr& n, const std::vector<std::string>& scope) {
  if (n->is_sym()) {
    const std::string& s = n->sym();
    if (s == "unit") return one_ty();
    if (s == "omega") return omega_ty();
    if (s == "nat") return nat_ty();
    bad(n, "unknown type `" + s + "`");
  }
  if (!n->is_list() || n->items().empty() || !n->items()[0]->is_sym())
    bad(n, "expected a type");
  const auto& items = n->items();
  const std::string& head = items[0]->sym();
  if (head == "prod" || head == "arr") {
    if (items.size() != 3) bad(n, head + " takes two types");
    TypePtr a = read_type(items[1], scope);
    TypePtr b = read_type(items[2], scope);
    return head == "prod" ? prod_ty(a, b) : arr_ty(a, b);
  }
  if (head == "sub") {
    if (items.size() != 3 && items.size() != 4) bad(n, "sub takes a binder, a formula and optional evidence");
    auto [name, a] = read_binder(items[1], scope);
    FormPtr f = read_form(items[2], with(scope, name));
    DerivPtr stab;
    if (items.size() == 4) {
      const NodePtr& ev = items[3];
      if (!ev->headed("stability") || ev->items().size() != 2)
        bad(ev, "expected (stability PROOF)");
      stab = read_proof(ev->items()[1]);
    }
    return sub_ty(name, a, f, stab);
  }
  bad(n, "unknown type form `" + head + "`");
}

TermPtr read_term(const NodePtr& n, const std::vector<std::string>& scope) {
  if (n->is_int()) {
    if (n->num() < 0) bad(n, "negative numeral");
    return numeral_tm(static_cast<std::uint64_t>(n->num()));
  }
  if (n->is_sym()) {
    const std::string& s = n->sym();
    if (s == "star") return unit_tm();
    if (s == "z") return zero_tm();
    if (reserved(s)) bad(n, "`" + s + "` is not a term");
    return tvar(resolve(s, scope, n), s);
  }
  if (!n->is_list() || n->items().empty() || !n->items()[0]->is_sym())
    bad(n, "expected a term");
  const auto& items = n->items();
  const std::string& head = items[0]->sym();
  if (head == "s") {
    if (items.size() != 2) bad(n, "s takes one term");
    return succ_tm(read_term(items[1], scope));
  }
  if (head == "p1" || head == "p2") {
    if (items.size() != 2) bad(n, head + " takes one term");
    TermPtr u = read_term(items[1], scope);
    return head == "p1" ? p1_tm(u) : p2_tm(u);
  }
  if (head == "pair" || head == "app") {
    if (items.size() != 3) bad(n, head + " takes two terms");
    TermPtr u = read_term(items[1], scope);
    TermPtr v = read_term(items[2], scope);
    return head == "pair" ? pair_tm(u, v) : app_tm(u, v);
  }
  if (head == "lam") {
    if (items.size() != 3) bad(n, "lam takes a binder and a body");
    auto [name, a] = read_binder(items[1], scope);
    return lam_tm(name, a, read_term(items[2], with(scope, name)));
  }
  if (head == "el") {
    if (items.size() != 2) bad(n, "el takes one formula");
    return el_tm(read_form(items[1], scope));
  }
  if (head == "d") {
    if (items.size() != 3) bad(n, "d takes a binder and a formula");
    auto [name, a] = read_binder(items[1], scope);
    return d_tm(name, a, read_form(items[2], with(scope, name)));
  }
  bad(n, "unknown term form `" + head + "`");
}

FormPtr read_form(const NodePtr& n, const std::vector<std::string>& scope) {
  if (n->is_sym()) {
    const std::string& s = n->sym();
    if (s == "top") return top_fm();
    if (s == "bot") return bot_fm();
    bad(n, "unknown formula `" + s + "`");
  }
  if (!n->is_list() || n->items().empty() || !n->items()[0]->is_sym())
    bad(n, "expected a formula");
  const auto& items = n->items();
  const std::string& head = items[0]->sym();
  if (head == "and" || head == "imp") {
    if (items.size() != 3) bad(n, head + " takes two formulas");
    FormPtr l = read_form(items[1], scope);
    FormPtr r = read_form(items[2], scope);
    return head == "and" ? and_fm(l, r) : imp_fm(l, r);
  }
  if (head == "forall" || head == "exists") {
    if (items.size() != 3) bad(n, head + " takes a binder and a body");
    auto [name, a] = read_binder(items[1], scope);
    FormPtr body = read_form(items[2], with(scope, name));
    return head == "forall" ? all_fm(name, a, body) : ex_fm(name, a, body);
  }
  if (head == "eq") {
    if (items.size() != 4) bad(n, "eq takes a type and two terms");
    TypePtr a = read_type(items[1], scope);
    TermPtr l = read_term(items[2], scope);
    TermPtr r = read_term(items[3], scope);
    return eq_fm(l, a, r);
  }
  if (head == "prop") {
    if (items.size() != 2) bad(n, "prop takes one term");
    return prop_fm(read_term(items[1], scope));
  }
  bad(n, "unknown formula form `" + head + "`");
}

Sequent read_sequent(const NodePtr& n) {
  if (!n->headed("seq") || n->items().size() != 4) bad(n, "expected (seq (ctx..) (hyps..) goal)");
  const auto& items = n->items();
  if (!items[1]->is_list()) bad(items[1], "expected a context list");
  Sequent s;
  std::vector<std::string> scope;
  for (const auto& entry : items[1]->items()) {
    auto [name, a] = read_binder(entry, scope);
    s.ctx.push_back(CtxEntry{name, a});
    scope.push_back(name);
  }
  if (!items[2]->is_list()) bad(items[2], "expected a hypothesis list");
  for (const auto& h : items[2]->items()) s.hyps.push_back(read_form(h, scope));
  s.concl = read_form(items[3], scope);
  return s;
}

DerivPtr read_proof(const NodePtr& n) {
  if (!n->headed("proof")) bad(n, "expected (proof ...)");
  const auto& items = n->items();
  std::string rule_str;
  bool have_concl = false;
  Sequent concl;
  std::vector<DerivPtr> prems;
  const NodePtr* term_node = nullptr;
  std::vector<NodePtr> type_nodes;
  for (std::size_t i = 1; i < items.size(); ++i) {
    const NodePtr& item = items[i];
    if (item->headed("rule")) {
      if (item->items().size() != 2 || !item->items()[1]->is_sym())
        bad(item, "expected (rule NAME)");
      rule_str = item->items()[1]->sym();
    } else if (item->headed("concl")) {
      if (item->items().size() != 2) bad(item, "expected (concl SEQUENT)");
      concl = read_sequent(item->items()[1]);
      have_concl = true;
    } else if (item->headed("prem")) {
      if (item->items().size() != 2) bad(item, "expected (prem PROOF)");
      prems.push_back(read_proof(item->items()[1]));
    } else if (item->headed("term")) {
      if (item->items().size() != 2) bad(item, "expected (term TERM)");
      term_node = &item->items()[1];
    } else if (item->headed("type")) {
      if (item->items().size() != 2) bad(item, "expected (type TYPE)");
      type_nodes.push_back(item->items()[1]);
    } else if (item->headed("types")) {
      if (item->items().size() != 3) bad(item, "expected (types TYPE TYPE)");
      type_nodes.push_back(item->items()[1]);
      type_nodes.push_back(item->items()[2]);
    } else {
      bad(item, "unknown proof item");
    }
  }
  if (rule_str.empty()) bad(n, "proof node carries no rule");
  if (!have_concl) bad(n, "proof node carries no conclusion");
  auto rule = rule_from_name(rule_str);
  if (!rule)
    throw KernelError(Errc::RuleMismatch, "read", "unknown rule `" + rule_str + "` " + n->where());

  std::vector<std::string> scope;
  for (const auto& e : concl.ctx) scope.push_back(e.name);
  TermPtr inst;
  if (term_node) inst = read_term(*term_node, scope);
  std::vector<TypePtr> inst_types;
  for (const auto& tn : type_nodes) inst_types.push_back(read_type(tn, {}));
  return derive(*rule, std::move(concl), std::move(prems), std::move(inst),
                std::move(inst_types));
}

TypePtr parse_type(const std::string& text) { return read_type(sx::parse(text)); }
TermPtr parse_term(const std::string& text) { return read_term(sx::parse(text)); }
FormPtr parse_form(const std::string& text) { return read_form(sx::parse(text)); }
Sequent parse_sequent(const std::string& text) { return read_sequent(sx::parse(text)); }
DerivPtr parse_proof(const std::string& text) { return read_proof(sx::parse(text)); }

}  // namespace efftop::kernel
