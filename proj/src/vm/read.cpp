#include "efftop/vm/read.hpp"

#include <stdexcept>

namespace efftop::vm {

namespace {

[[noreturn]] void bad(const sx::NodePtr& n, const std::string& msg) {
  throw std::runtime_error("code syntax: " + msg + " at " + n->where() + " in " + sx::to_string(n));
}

std::int64_t expect_int(const sx::NodePtr& n, const char* what) {
  if (!n->is_int() || n->num() < 0) bad(n, std::string("expected nonnegative integer for ") + what);
  return n->num();
}

}  // namespace

CodePtr code_from_sexpr(const sx::NodePtr& node) {
  if (node->is_sym()) {
    const std::string& s = node->sym();
    if (s == "succ") return succ_op();
    if (s == "pred") return pred_op();
    if (s == "fst") return fst_op();
    if (s == "snd") return snd_op();
    if (s == "rec") return rec_op();
    bad(node, "unknown atom '" + s + "'");
  }
  if (node->is_int()) bad(node, "bare integer (write (nat N) or (var N))");
  const auto& xs = node->items();
  if (xs.empty() || !xs[0]->is_sym()) bad(node, "expected (op ...)");
  const std::string& op = xs[0]->sym();
  auto arity = [&](std::size_t n) {
    if (xs.size() != n + 1) bad(node, op + " expects " + std::to_string(n) + " arguments");
  };
  if (op == "var") {
    arity(1);
    return var(static_cast<int>(expect_int(xs[1], "var")));
  }
  if (op == "lam") {
    arity(1);
    return lam(code_from_sexpr(xs[1]));
  }
  if (op == "app") {
    if (xs.size() < 3) bad(node, "app expects at least 2 arguments");
    CodePtr acc = code_from_sexpr(xs[1]);
    for (std::size_t i = 2; i < xs.size(); ++i) acc = app(acc, code_from_sexpr(xs[i]));
    return acc;
  }
  if (op == "nat") {
    arity(1);
    return nat(static_cast<std::uint64_t>(expect_int(xs[1], "nat")));
  }
  if (op == "pair") {
    arity(2);
    return pair(code_from_sexpr(xs[1]), code_from_sexpr(xs[2]));
  }
  if (op == "ifz") {
    arity(3);
    return ifz(code_from_sexpr(xs[1]), code_from_sexpr(xs[2]), code_from_sexpr(xs[3]));
  }
  if (op == "builtin") {
    arity(1);
    if (!xs[1]->is_sym()) bad(xs[1], "builtin expects a name");
    return builtin(xs[1]->sym());
  }
  bad(node, "unknown operator '" + op + "'");
}

sx::NodePtr code_to_sexpr(const CodePtr& code) {
  using sx::list;
  using sx::num;
  using sx::sym;
  return std::visit(
      [&](const auto& x) -> sx::NodePtr {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Var>) {
          return list({sym("var"), num(x.index)});
        } else if constexpr (std::is_same_v<T, Lam>) {
          return list({sym("lam"), code_to_sexpr(x.body)});
        } else if constexpr (std::is_same_v<T, App>) {
          return list({sym("app"), code_to_sexpr(x.fn), code_to_sexpr(x.arg)});
        } else if constexpr (std::is_same_v<T, NatLit>) {
          return list({sym("nat"), num(static_cast<std::int64_t>(x.value))});
        } else if constexpr (std::is_same_v<T, SuccOp>) {
          return sym("succ");
        } else if constexpr (std::is_same_v<T, PredOp>) {
          return sym("pred");
        } else if constexpr (std::is_same_v<T, FstOp>) {
          return sym("fst");
        } else if constexpr (std::is_same_v<T, SndOp>) {
          return sym("snd");
        } else if constexpr (std::is_same_v<T, RecOp>) {
          return sym("rec");
        } else if constexpr (std::is_same_v<T, PairC>) {
          return list({sym("pair"), code_to_sexpr(x.first), code_to_sexpr(x.second)});
        } else if constexpr (std::is_same_v<T, IfZero>) {
          return list({sym("ifz"), code_to_sexpr(x.scrut), code_to_sexpr(x.if_zero),
                       code_to_sexpr(x.if_succ)});
        } else {
          return list({sym("builtin"), sym(x.name)});
        }
      },
      code->node);
}

CodePtr parse_code(const std::string& text) { return code_from_sexpr(sx::parse(text)); }

std::string code_to_string(const CodePtr& c) { return sx::to_string(code_to_sexpr(c)); }

}  // namespace efftop::vm
