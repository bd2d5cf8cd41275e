#include "efftop/vm/code.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace efftop::vm {

namespace {
CodePtr mk(CodeNode n) { return std::make_shared<Code>(std::move(n)); }
}  // namespace

CodePtr var(int index) { return mk(Var{index}); }
CodePtr lam(CodePtr body) { return mk(Lam{std::move(body)}); }
CodePtr app(CodePtr fn, CodePtr arg) { return mk(App{std::move(fn), std::move(arg)}); }
CodePtr app(CodePtr fn, CodePtr a, CodePtr b) { return app(app(std::move(fn), std::move(a)), std::move(b)); }
CodePtr app(CodePtr fn, CodePtr a, CodePtr b, CodePtr c) {
  return app(app(app(std::move(fn), std::move(a)), std::move(b)), std::move(c));
}
CodePtr nat(std::uint64_t value) { return mk(NatLit{value}); }
CodePtr succ_op() {
  static const CodePtr c = mk(SuccOp{});
  return c;
}
CodePtr pred_op() {
  static const CodePtr c = mk(PredOp{});
  return c;
}
CodePtr fst_op() {
  static const CodePtr c = mk(FstOp{});
  return c;
}
CodePtr snd_op() {
  static const CodePtr c = mk(SndOp{});
  return c;
}
CodePtr rec_op() {
  static const CodePtr c = mk(RecOp{});
  return c;
}
CodePtr pair(CodePtr first, CodePtr second) { return mk(PairC{std::move(first), std::move(second)}); }
CodePtr ifz(CodePtr scrut, CodePtr if_zero, CodePtr if_succ) {
  return mk(IfZero{std::move(scrut), std::move(if_zero), std::move(if_succ)});
}
CodePtr builtin(std::string name) { return mk(Builtin{std::move(name)}); }

CodePtr fst_of(CodePtr c) { return app(fst_op(), std::move(c)); }
CodePtr snd_of(CodePtr c) { return app(snd_op(), std::move(c)); }
CodePtr identity() {
  static const CodePtr c = lam(var(0));
  return c;
}
CodePtr const_code(CodePtr c) { return lam(std::move(c)); }

bool structural_equal(const CodePtr& a, const CodePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b->node);
        if constexpr (std::is_same_v<T, Var>) {
          return x.index == y.index;
        } else if constexpr (std::is_same_v<T, Lam>) {
          return structural_equal(x.body, y.body);
        } else if constexpr (std::is_same_v<T, App>) {
          return structural_equal(x.fn, y.fn) && structural_equal(x.arg, y.arg);
        } else if constexpr (std::is_same_v<T, NatLit>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, PairC>) {
          return structural_equal(x.first, y.first) && structural_equal(x.second, y.second);
        } else if constexpr (std::is_same_v<T, IfZero>) {
          return structural_equal(x.scrut, y.scrut) && structural_equal(x.if_zero, y.if_zero) &&
                 structural_equal(x.if_succ, y.if_succ);
        } else if constexpr (std::is_same_v<T, Builtin>) {
          return x.name == y.name;
        } else {
          return true;  // nullary operator nodes
        }
      },
      a->node);
}

int code_size(const CodePtr& c) {
  return std::visit(
      [](const auto& x) -> int {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Lam>) {
          return 1 + code_size(x.body);
        } else if constexpr (std::is_same_v<T, App>) {
          return 1 + code_size(x.fn) + code_size(x.arg);
        } else if constexpr (std::is_same_v<T, PairC>) {
          return 1 + code_size(x.first) + code_size(x.second);
        } else if constexpr (std::is_same_v<T, IfZero>) {
          return 1 + code_size(x.scrut) + code_size(x.if_zero) + code_size(x.if_succ);
        } else {
          return 1;
        }
      },
      c->node);
}

namespace {
int free_bound(const CodePtr& c, int depth) {
  return std::visit(
      [&](const auto& x) -> int {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Var>) {
          return x.index >= depth ? x.index - depth + 1 : 0;
        } else if constexpr (std::is_same_v<T, Lam>) {
          return free_bound(x.body, depth + 1);
        } else if constexpr (std::is_same_v<T, App>) {
          return std::max(free_bound(x.fn, depth), free_bound(x.arg, depth));
        } else if constexpr (std::is_same_v<T, PairC>) {
          return std::max(free_bound(x.first, depth), free_bound(x.second, depth));
        } else if constexpr (std::is_same_v<T, IfZero>) {
          return std::max({free_bound(x.scrut, depth), free_bound(x.if_zero, depth),
                           free_bound(x.if_succ, depth + 1)});
        } else {
          return 0;
        }
      },
      c->node);
}
}  // namespace

int free_var_bound(const CodePtr& c) { return free_bound(c, 0); }

Value Value::num(std::uint64_t n) {
  return Value(std::make_shared<const ValueNode>(ValueNode{NumV{n}}));
}
Value Value::pair(Value a, Value b) {
  return Value(std::make_shared<const ValueNode>(PairV{std::move(a), std::move(b)}));
}
Value Value::closure(CodePtr body, Env env) {
  return Value(std::make_shared<const ValueNode>(
      ClosV{std::move(body), std::make_shared<const Env>(std::move(env))}));
}

std::optional<std::uint64_t> Value::as_num() const {
  if (const auto* n = std::get_if<NumV>(rep_.get())) return n->value;
  return std::nullopt;
}
const PairV* Value::as_pair() const { return std::get_if<PairV>(rep_.get()); }
const ClosV* Value::as_closure() const { return std::get_if<ClosV>(rep_.get()); }

std::string Value::to_string() const {
  if (auto n = as_num()) return std::to_string(*n);
  if (const auto* p = as_pair()) return "<" + p->first.to_string() + ", " + p->second.to_string() + ">";
  return "<closure>";
}

bool value_equal(const Value& a, const Value& b) {
  if (auto n = a.as_num()) {
    auto m = b.as_num();
    return m && *n == *m;
  }
  if (const auto* p = a.as_pair()) {
    const auto* q = b.as_pair();
    return q && value_equal(p->first, q->first) && value_equal(p->second, q->second);
  }
  const auto* ca = a.as_closure();
  const auto* cb = b.as_closure();
  return ca && cb && ca->body == cb->body && ca->env == cb->env;
}

bool is_done(const EvalOutcome& o) { return std::holds_alternative<Done>(o); }
const Value* done_value(const EvalOutcome& o) {
  const auto* d = std::get_if<Done>(&o);
  return d ? &d->value : nullptr;
}

std::string outcome_to_string(const EvalOutcome& o) {
  if (const auto* d = std::get_if<Done>(&o)) return "done " + d->value.to_string();
  if (std::holds_alternative<OutOfFuel>(o)) return "out-of-fuel";
  return "stuck: " + std::get<Stuck>(o).reason;
}

namespace {

const std::map<std::string, CodePtr>& builtin_table() {
  static const auto* table = new std::map<std::string, CodePtr>{
      {"id", identity()},
      {"const0", lam(nat(0))},
      {"swap", lam(pair(snd_of(var(0)), fst_of(var(0))))},
  };
  return *table;
}

// The C++ recursion depth is capped so hostile terms exhaust the budget
// instead of the process stack; every frame also burns fuel, so Done
// results are unaffected and fuel monotonicity is preserved.
constexpr int kMaxDepth = 6000;

EvalOutcome eval_in(CodePtr code, Env env, Fuel& fuel, int depth);

EvalOutcome apply_value_in(const Value& fn, const Value& arg, Fuel& fuel, int depth) {
  if (fuel <= 0 || depth > kMaxDepth) return OutOfFuel{};
  --fuel;
  if (const ClosV* c = fn.as_closure()) {
    Env e = *c->env;
    e.push_back(arg);
    return eval_in(c->body, e, fuel, depth + 1);
  }
  return Stuck{"apply of non-function value " + fn.to_string()};
}

EvalOutcome apply_prim(const CodeNode& prim, const Value& v) {
  if (std::holds_alternative<SuccOp>(prim)) {
    if (auto n = v.as_num()) return Done{Value::num(*n + 1)};
    return Stuck{"succ of non-numeral"};
  }
  if (std::holds_alternative<PredOp>(prim)) {
    if (auto n = v.as_num()) return Done{Value::num(*n == 0 ? 0 : *n - 1)};
    return Stuck{"pred of non-numeral"};
  }
  if (std::holds_alternative<FstOp>(prim)) {
    if (const auto* p = v.as_pair()) return Done{p->first};
    return Stuck{"fst of non-pair"};
  }
  if (const auto* p = v.as_pair()) return Done{p->second};
  return Stuck{"snd of non-pair"};
}

bool is_prim_head(const CodeNode& n) {
  return std::holds_alternative<SuccOp>(n) || std::holds_alternative<PredOp>(n) ||
         std::holds_alternative<FstOp>(n) || std::holds_alternative<SndOp>(n);
}

EvalOutcome run_rec(const Value& spec, const Value& n, Fuel& fuel, int depth) {
  const auto* p = spec.as_pair();
  if (!p) return Stuck{"rec expects a <base, step> pair"};
  auto count = n.as_num();
  if (!count) return Stuck{"rec applied to non-numeral"};
  Value acc = p->first;
  for (std::uint64_t i = 0; i < *count; ++i) {
    EvalOutcome step1 = apply_value_in(p->second, Value::num(i), fuel, depth);
    const Value* f = done_value(step1);
    if (!f) return step1;
    EvalOutcome step2 = apply_value_in(*f, acc, fuel, depth);
    const Value* next = done_value(step2);
    if (!next) return step2;
    acc = *next;
  }
  return Done{acc};
}

// Evaluates with an explicit loop on tail positions (beta bodies, ifz
// branches, builtin expansion) so long reduction chains run in constant
// stack space; only subterm evaluation recurses.
EvalOutcome eval_in(CodePtr code, Env env, Fuel& fuel, int depth) {
  while (true) {
    if (fuel <= 0 || depth > kMaxDepth) return OutOfFuel{};
    --fuel;
    const CodeNode& node = code->node;
    if (const auto* v = std::get_if<Var>(&node)) {
      if (v->index < 0 || static_cast<std::size_t>(v->index) >= env.size())
        return Stuck{"unbound variable " + std::to_string(v->index)};
      return Done{env[env.size() - 1 - static_cast<std::size_t>(v->index)]};
    }
    if (const auto* l = std::get_if<Lam>(&node)) return Done{Value::closure(l->body, env)};
    if (const auto* n = std::get_if<NatLit>(&node)) return Done{Value::num(n->value)};
    if (std::holds_alternative<SuccOp>(node))
      return Done{Value::closure(app(succ_op(), var(0)), {})};
    if (std::holds_alternative<PredOp>(node))
      return Done{Value::closure(app(pred_op(), var(0)), {})};
    if (std::holds_alternative<FstOp>(node))
      return Done{Value::closure(app(fst_op(), var(0)), {})};
    if (std::holds_alternative<SndOp>(node))
      return Done{Value::closure(app(snd_op(), var(0)), {})};
    if (std::holds_alternative<RecOp>(node))
      return Done{Value::closure(app(rec_op(), var(0)), {})};
    if (const auto* b = std::get_if<Builtin>(&node)) {
      auto it = builtin_table().find(b->name);
      if (it == builtin_table().end()) return Stuck{"unknown builtin " + b->name};
      code = it->second;
      env.clear();
      continue;
    }
    if (const auto* p = std::get_if<PairC>(&node)) {
      EvalOutcome a = eval_in(p->first, env, fuel, depth + 1);
      const Value* va = done_value(a);
      if (!va) return a;
      EvalOutcome b = eval_in(p->second, env, fuel, depth + 1);
      const Value* vb = done_value(b);
      if (!vb) return b;
      return Done{Value::pair(*va, *vb)};
    }
    if (const auto* i = std::get_if<IfZero>(&node)) {
      EvalOutcome s = eval_in(i->scrut, env, fuel, depth + 1);
      const Value* vs = done_value(s);
      if (!vs) return s;
      auto n = vs->as_num();
      if (!n) return Stuck{"ifz scrutinee is not a numeral"};
      if (*n == 0) {
        code = i->if_zero;
      } else {
        env.push_back(Value::num(*n - 1));
        code = i->if_succ;
      }
      continue;
    }
    const App& a = std::get<App>(node);
    // Primitive operators are applied directly when they appear in head
    // position; elsewhere they evaluate to eta-expanded closures whose
    // bodies land back here.
    if (is_prim_head(a.fn->node)) {
      EvalOutcome v = eval_in(a.arg, env, fuel, depth + 1);
      const Value* vv = done_value(v);
      if (!vv) return v;
      return apply_prim(a.fn->node, *vv);
    }
    if (std::holds_alternative<RecOp>(a.fn->node)) {
      EvalOutcome v = eval_in(a.arg, env, fuel, depth + 1);
      const Value* vv = done_value(v);
      if (!vv) return v;
      if (!vv->as_pair()) return Stuck{"rec expects a <base, step> pair"};
      return Done{Value::closure(app(rec_op(), var(1), var(0)), {*vv})};
    }
    if (const auto* inner = std::get_if<App>(&a.fn->node);
        inner && std::holds_alternative<RecOp>(inner->fn->node)) {
      EvalOutcome sp = eval_in(inner->arg, env, fuel, depth + 1);
      const Value* vsp = done_value(sp);
      if (!vsp) return sp;
      EvalOutcome n = eval_in(a.arg, env, fuel, depth + 1);
      const Value* vn = done_value(n);
      if (!vn) return n;
      return run_rec(*vsp, *vn, fuel, depth);
    }
    if (const auto* b = std::get_if<Builtin>(&a.fn->node)) {
      auto it = builtin_table().find(b->name);
      if (it == builtin_table().end()) return Stuck{"unknown builtin " + b->name};
      code = app(it->second, a.arg);
      continue;
    }
    EvalOutcome f = eval_in(a.fn, env, fuel, depth + 1);
    const Value* vf = done_value(f);
    if (!vf) return f;
    EvalOutcome v = eval_in(a.arg, env, fuel, depth + 1);
    const Value* vv = done_value(v);
    if (!vv) return v;
    const ClosV* c = vf->as_closure();
    if (!c) return Stuck{"apply of non-function value " + vf->to_string()};
    env = *c->env;
    env.push_back(*vv);
    code = c->body;
  }
}

}  // namespace

EvalOutcome eval(const CodePtr& code, const Env& env, Fuel fuel) {
  return eval_in(code, env, fuel, 0);
}

EvalOutcome eval(const CodePtr& code, const Env& env, Fuel fuel, Fuel* remaining) {
  EvalOutcome r = eval_in(code, env, fuel, 0);
  if (remaining) *remaining = fuel;
  return r;
}

EvalOutcome kapply(const Value& fn, const Value& arg, Fuel fuel) {
  return apply_value_in(fn, arg, fuel, 0);
}

EvalOutcome kapply(const Value& fn, const Value& arg, Fuel fuel, Fuel* remaining) {
  EvalOutcome r = apply_value_in(fn, arg, fuel, 0);
  if (remaining) *remaining = fuel;
  return r;
}

EvalOutcome kapply(const Value& fn, const std::vector<Value>& args, Fuel fuel) {
  Value acc = fn;
  for (const Value& a : args) {
    EvalOutcome r = apply_value_in(acc, a, fuel, 0);
    const Value* v = done_value(r);
    if (!v) return r;
    acc = *v;
  }
  return Done{acc};
}

Value mk_pair(const Value& a, const Value& b) { return Value::pair(a, b); }

std::optional<std::pair<Value, Value>> un_pair(const Value& v) {
  if (const auto* p = v.as_pair()) return std::make_pair(p->first, p->second);
  return std::nullopt;
}

std::optional<std::uint64_t> cantor_view(const Value& v) {
  if (auto n = v.as_num()) return *n;
  if (const auto* p = v.as_pair()) {
    auto k1 = cantor_view(p->first);
    auto k2 = cantor_view(p->second);
    if (!k1 || !k2) return std::nullopt;
    std::uint64_t s = *k1 + *k2;
    return s * (s + 1) / 2 + *k2;
  }
  return std::nullopt;
}

std::optional<CodePtr> reify(const Value& v) {
  if (auto n = v.as_num()) return nat(*n);
  if (const auto* p = v.as_pair()) {
    auto a = reify(p->first);
    auto b = reify(p->second);
    if (!a || !b) return std::nullopt;
    return pair(*a, *b);
  }
  return std::nullopt;
}

}  // namespace efftop::vm
