#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

// Closed untyped program terms with de Bruijn variables. These are the
// "programs" of the realizability semantics: a realizer is always a Code
// term, and application is call-by-value evaluation under a fuel bound.
namespace efftop::vm {

struct Code;
using CodePtr = std::shared_ptr<const Code>;

struct Var {
  int index;
};
struct Lam {
  CodePtr body;
};
struct App {
  CodePtr fn;
  CodePtr arg;
};
struct NatLit {
  std::uint64_t value;
};
struct SuccOp {};
struct PredOp {};
struct FstOp {};
struct SndOp {};
struct RecOp {};
struct PairC {
  CodePtr first;
  CodePtr second;
};
// if_succ is evaluated with the predecessor of the scrutinee pushed on the
// environment (it binds one variable).
struct IfZero {
  CodePtr scrut;
  CodePtr if_zero;
  CodePtr if_succ;
};
struct Builtin {
  std::string name;
};

using CodeNode =
    std::variant<Var, Lam, App, NatLit, SuccOp, PredOp, FstOp, SndOp, RecOp, PairC, IfZero, Builtin>;

struct Code {
  CodeNode node;
  explicit Code(CodeNode n) : node(std::move(n)) {}
};

CodePtr var(int index);
CodePtr lam(CodePtr body);
CodePtr app(CodePtr fn, CodePtr arg);
CodePtr app(CodePtr fn, CodePtr a, CodePtr b);
CodePtr app(CodePtr fn, CodePtr a, CodePtr b, CodePtr c);
CodePtr nat(std::uint64_t value);
CodePtr succ_op();
CodePtr pred_op();
CodePtr fst_op();
CodePtr snd_op();
CodePtr rec_op();
CodePtr pair(CodePtr first, CodePtr second);
CodePtr ifz(CodePtr scrut, CodePtr if_zero, CodePtr if_succ);
CodePtr builtin(std::string name);

// Conveniences used all over the realizer builders.
CodePtr fst_of(CodePtr c);  // app(fst, c)
CodePtr snd_of(CodePtr c);  // app(snd, c)
CodePtr identity();         // lam (var 0)
CodePtr const_code(CodePtr c);  // lam (shifted c); c must be closed

bool structural_equal(const CodePtr& a, const CodePtr& b);
int code_size(const CodePtr& c);
// Largest de Bruijn index escaping the term, plus one (0 for closed terms).
int free_var_bound(const CodePtr& c);

// Runtime values. Environments are snapshots captured by closures.
class Value;
using Env = std::vector<Value>;

struct NumV {
  std::uint64_t value;
};
struct ClosV {
  CodePtr body;
  std::shared_ptr<const Env> env;
};
struct PairV;
struct ValueNode;

class Value {
 public:
  static Value num(std::uint64_t n);
  static Value pair(Value a, Value b);
  static Value closure(CodePtr body, Env env);

  const ValueNode& node() const { return *rep_; }
  std::optional<std::uint64_t> as_num() const;
  const PairV* as_pair() const;
  const ClosV* as_closure() const;

  std::string to_string() const;

 private:
  explicit Value(std::shared_ptr<const ValueNode> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const ValueNode> rep_;
};

struct PairV {
  Value first;
  Value second;
};

struct ValueNode : std::variant<NumV, PairV, ClosV> {
  using std::variant<NumV, PairV, ClosV>::variant;
};

// Structural equality; closures never compare equal (no extensional check).
bool value_equal(const Value& a, const Value& b);

struct Done {
  Value value;
};
struct OutOfFuel {};
struct Stuck {
  std::string reason;
};
using EvalOutcome = std::variant<Done, OutOfFuel, Stuck>;

bool is_done(const EvalOutcome& o);
const Value* done_value(const EvalOutcome& o);
std::string outcome_to_string(const EvalOutcome& o);

using Fuel = std::int64_t;

// Call-by-value evaluation; deterministic, and total in the sense that it
// always returns within the fuel bound. Out-of-range variables, applying a
// numeral, projecting a non-pair etc. are Stuck, not exceptions.
EvalOutcome eval(const CodePtr& code, const Env& env, Fuel fuel);
// Variant reporting the fuel left afterwards, for accounting.
EvalOutcome eval(const CodePtr& code, const Env& env, Fuel fuel, Fuel* remaining);
// Applies a function value to an argument value.
EvalOutcome kapply(const Value& fn, const Value& arg, Fuel fuel);
EvalOutcome kapply(const Value& fn, const Value& arg, Fuel fuel, Fuel* remaining);
EvalOutcome kapply(const Value& fn, const std::vector<Value>& args, Fuel fuel);

Value mk_pair(const Value& a, const Value& b);
std::optional<std::pair<Value, Value>> un_pair(const Value& v);

// Numeric view of a first-order value via the Cantor pairing function
// (k1,k2) -> (k1+k2)(k1+k2+1)/2 + k2, applied recursively. Diagnostics only.
std::optional<std::uint64_t> cantor_view(const Value& v);

// Reifies a first-order value (numbers and pairs) back to a closed Code term.
std::optional<CodePtr> reify(const Value& v);

std::string code_to_string(const CodePtr& c);

}  // namespace efftop::vm
