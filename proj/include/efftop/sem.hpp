#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "efftop/vm/code.hpp"

// Shared semantic data layer: propositions as realizer sets, carriers,
// effective sets (carrier + partial equivalence written in the proposition
// language), and the closed grammar of El-values (predicate expressions
// denoting total maps from carrier values to propositions).
namespace efftop::sem {

class SemFormula;
class CarrierValue;
class ElValue;

struct EffSet;
using EffSetPtr = std::shared_ptr<const EffSet>;
struct Carrier;
using CarrierPtr = std::shared_ptr<const Carrier>;
struct StableFn;
using StableFnPtr = std::shared_ptr<const StableFn>;

struct FormulaNode;
struct CVNode;
struct ElNode;
struct FunV;

// ---------------------------------------------------------------- formulas

class SemFormula {
 public:
  static SemFormula top();
  static SemFormula bot();
  static SemFormula conj(SemFormula l, SemFormula r);
  static SemFormula impl(SemFormula l, SemFormula r);
  // iff is definitional: (l => r) and (r => l)
  static SemFormula iff(SemFormula l, SemFormula r);
  static SemFormula forall(CarrierPtr dom, std::function<SemFormula(const CarrierValue&)> body,
                           std::vector<CarrierValue> hints = {});
  static SemFormula exists(CarrierPtr dom, std::function<SemFormula(const CarrierValue&)> body,
                           std::vector<CarrierValue> hints = {});
  static SemFormula eq_in(EffSetPtr set, CarrierValue a, CarrierValue b);
  // primitive equality on the natural-number carrier: realizer set {n} when
  // n == m, empty otherwise
  static SemFormula nat_eq(std::uint64_t n, std::uint64_t m);

  const FormulaNode& node() const { return *rep_; }
  std::string to_string() const;

 private:
  explicit SemFormula(std::shared_ptr<const FormulaNode> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const FormulaNode> rep_;
};

// ---------------------------------------------------------- carrier values

class CarrierValue {
 public:
  static CarrierValue star();
  static CarrierValue natv(std::uint64_t n);
  static CarrierValue label(std::string s);
  static CarrierValue pair(CarrierValue a, CarrierValue b);
  static CarrierValue prop(SemFormula q);
  static CarrierValue pred(ElValue e);
  static CarrierValue fun(std::string name, std::function<ElValue(const ElValue&)> f);

  const CVNode& node() const { return *rep_; }
  std::optional<std::uint64_t> as_nat() const;
  const std::string* as_label() const;
  const std::pair<CarrierValue, CarrierValue>* as_pair() const;
  const SemFormula* as_prop() const;
  const ElValue* as_pred() const;
  const FunV* as_fun() const;
  bool is_star() const;
  std::string to_string() const;

 private:
  explicit CarrierValue(std::shared_ptr<const CVNode> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const CVNode> rep_;
};

// -------------------------------------------------------------- El values

// Closed syntactic predicate expressions; el_apply gives their meaning as a
// total map from carrier values to propositions. Kept syntactic so pools of
// them can be enumerated and printed.
class ElValue {
 public:
  static ElValue inject(EffSetPtr set, CarrierValue x);           // el_X(x)
  static ElValue descr(EffSetPtr set, ElValue pred_over_el);      // d(F)
  static ElValue restrict_by(ElValue base, SemFormula cond);             // [u | F]
  static ElValue extended(StableFnPtr fn, std::size_t lifted, std::vector<CarrierValue> args);
  static ElValue user(std::string name, std::function<SemFormula(const CarrierValue&)> body);

  const ElNode& node() const { return *rep_; }
  std::string to_string() const;

 private:
  explicit ElValue(std::shared_ptr<const ElNode> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const ElNode> rep_;
};

// ----------------------------------------------------------------- fields

struct TopF {};
struct BotF {};
struct AndF {
  SemFormula left;
  SemFormula right;
};
struct ImpF {
  SemFormula left;
  SemFormula right;
};
struct ForAllF {
  CarrierPtr dom;
  std::function<SemFormula(const CarrierValue&)> body;
  std::vector<CarrierValue> hints;  // witness candidates tried first
};
struct ExistsF {
  CarrierPtr dom;
  std::function<SemFormula(const CarrierValue&)> body;
  std::vector<CarrierValue> hints;
};
struct EqInF {
  EffSetPtr set;
  CarrierValue a;
  CarrierValue b;
};
struct NatEqF {
  std::uint64_t n;
  std::uint64_t m;
};

struct FormulaNode : std::variant<TopF, BotF, AndF, ImpF, ForAllF, ExistsF, EqInF, NatEqF> {
  using variant::variant;
};

struct StarV {};
struct NatV {
  std::uint64_t n;
};
struct LabelV {
  std::string s;
};
struct PairV {
  std::pair<CarrierValue, CarrierValue> p;
};
struct PropV {
  SemFormula q;
};
struct PredV {
  ElValue e;
};
struct FunV {
  std::string name;
  std::function<ElValue(const ElValue&)> f;
};

struct CVNode : std::variant<StarV, NatV, LabelV, PairV, PropV, PredV, FunV> {
  using variant::variant;
};

struct InjectEl {
  EffSetPtr set;
  CarrierValue x;
};
struct DescrEl {
  EffSetPtr set;
  ElValue pred;  // predicate over El(set), i.e. an El-value of el_of(set)
};
struct RestrictEl {
  ElValue base;
  SemFormula cond;
};
struct ExtendedEl {
  StableFnPtr fn;
  std::size_t lifted;  // how many leading arguments were lifted to El level
  std::vector<CarrierValue> args;
};
struct UserEl {
  std::string name;
  std::function<SemFormula(const CarrierValue&)> body;
};

struct ElNode : std::variant<InjectEl, DescrEl, RestrictEl, ExtendedEl, UserEl> {
  using variant::variant;
};

// ---------------------------------------------------------------- carriers

struct UnitC {};
struct NatC {};
struct FiniteC {
  std::vector<std::string> labels;
};
struct ProdC {
  CarrierPtr first;
  CarrierPtr second;
};
struct PropC {};
struct ElC {
  EffSetPtr set;
};
struct MapC {
  EffSetPtr from;
  EffSetPtr to;
};

struct Carrier : std::variant<UnitC, NatC, FiniteC, ProdC, PropC, ElC, MapC> {
  using variant::variant;
};

CarrierPtr unit_c();
CarrierPtr nat_c();
CarrierPtr finite_c(std::vector<std::string> labels);
CarrierPtr prod_c(CarrierPtr a, CarrierPtr b);
CarrierPtr prop_c();
CarrierPtr el_c(EffSetPtr set);
CarrierPtr map_c(EffSetPtr from, EffSetPtr to);

// Canonical key used to attach sample pools to carriers.
std::string carrier_key(const CarrierPtr& c);

// --------------------------------------------------------- effective sets

// A set is a carrier together with a partial equivalence written in the
// proposition language. Symmetry/transitivity realizers are carried so
// derived constructions can reuse them when assembling realizer codes.
struct EffSet {
  std::string name;
  CarrierPtr carrier;
  std::function<SemFormula(const CarrierValue&, const CarrierValue&)> eq;
  vm::CodePtr sym_code;    // realizes: forall x y, eq(x,y) => eq(y,x)
  vm::CodePtr trans_code;  // realizes: forall x y z, eq(x,y) => eq(y,z) => eq(x,z)
};

// A stable map between carriers, kept with its profile. `body` takes one
// carrier value per domain entry and yields a codomain carrier value.
struct StableFn {
  std::string name;
  std::vector<EffSetPtr> domain;
  EffSetPtr codomain;
  std::function<CarrierValue(const std::vector<CarrierValue>&)> body;
};

// ------------------------------------------------------------- operations

// Meaning of an El-value at a carrier value.
SemFormula el_apply(const ElValue& u, const CarrierValue& x);

// Carrier values at which the predicate provably holds, extracted from the
// expression's shape; used to seed existential witnesses.
std::vector<CarrierValue> el_witnesses(const ElValue& u);

// Structural comparison (labels/numbers/pairs exact; functions by name,
// formulas shallowly). Used for dedup and table lookups, not semantics.
bool cv_equal(const CarrierValue& a, const CarrierValue& b);

// Shape check: does the value belong to the carrier? (ElC/MapC check the
// node kind only; set membership is semantic, not syntactic.)
bool carrier_admits(const CarrierPtr& c, const CarrierValue& v);

}  // namespace efftop::sem
