#include "efftop/sem.hpp"

#include <sstream>

namespace efftop::sem {

namespace {

template <typename Node, typename... Args>
std::shared_ptr<const Node> mk(Args&&... args) {
  return std::make_shared<const Node>(Node{std::forward<Args>(args)...});
}

}  // namespace

// ---------------------------------------------------------------- formulas

SemFormula SemFormula::top() { return SemFormula(mk<FormulaNode>(TopF{})); }
SemFormula SemFormula::bot() { return SemFormula(mk<FormulaNode>(BotF{})); }
SemFormula SemFormula::conj(SemFormula l, SemFormula r) {
  return SemFormula(mk<FormulaNode>(AndF{std::move(l), std::move(r)}));
}
SemFormula SemFormula::impl(SemFormula l, SemFormula r) {
  return SemFormula(mk<FormulaNode>(ImpF{std::move(l), std::move(r)}));
}
SemFormula SemFormula::iff(SemFormula l, SemFormula r) {
  return conj(impl(l, r), impl(r, l));
}
SemFormula SemFormula::forall(CarrierPtr dom, std::function<SemFormula(const CarrierValue&)> body,
                              std::vector<CarrierValue> hints) {
  return SemFormula(mk<FormulaNode>(ForAllF{std::move(dom), std::move(body), std::move(hints)}));
}
SemFormula SemFormula::exists(CarrierPtr dom, std::function<SemFormula(const CarrierValue&)> body,
                              std::vector<CarrierValue> hints) {
  return SemFormula(mk<FormulaNode>(ExistsF{std::move(dom), std::move(body), std::move(hints)}));
}
SemFormula SemFormula::eq_in(EffSetPtr set, CarrierValue a, CarrierValue b) {
  return SemFormula(mk<FormulaNode>(EqInF{std::move(set), std::move(a), std::move(b)}));
}
SemFormula SemFormula::nat_eq(std::uint64_t n, std::uint64_t m) {
  return SemFormula(mk<FormulaNode>(NatEqF{n, m}));
}

// ---------------------------------------------------------- carrier values

CarrierValue CarrierValue::star() { return CarrierValue(mk<CVNode>(StarV{})); }
CarrierValue CarrierValue::natv(std::uint64_t n) { return CarrierValue(mk<CVNode>(NatV{n})); }
CarrierValue CarrierValue::label(std::string s) {
  return CarrierValue(mk<CVNode>(LabelV{std::move(s)}));
}
CarrierValue CarrierValue::pair(CarrierValue a, CarrierValue b) {
  return CarrierValue(mk<CVNode>(PairV{{std::move(a), std::move(b)}}));
}
CarrierValue CarrierValue::prop(SemFormula q) {
  return CarrierValue(mk<CVNode>(PropV{std::move(q)}));
}
CarrierValue CarrierValue::pred(ElValue e) { return CarrierValue(mk<CVNode>(PredV{std::move(e)})); }
CarrierValue CarrierValue::fun(std::string name, std::function<ElValue(const ElValue&)> f) {
  return CarrierValue(mk<CVNode>(FunV{std::move(name), std::move(f)}));
}

std::optional<std::uint64_t> CarrierValue::as_nat() const {
  if (const auto* v = std::get_if<NatV>(rep_.get())) return v->n;
  return std::nullopt;
}
const std::string* CarrierValue::as_label() const {
  if (const auto* v = std::get_if<LabelV>(rep_.get())) return &v->s;
  return nullptr;
}
const std::pair<CarrierValue, CarrierValue>* CarrierValue::as_pair() const {
  if (const auto* v = std::get_if<PairV>(rep_.get())) return &v->p;
  return nullptr;
}
const SemFormula* CarrierValue::as_prop() const {
  if (const auto* v = std::get_if<PropV>(rep_.get())) return &v->q;
  return nullptr;
}
const ElValue* CarrierValue::as_pred() const {
  if (const auto* v = std::get_if<PredV>(rep_.get())) return &v->e;
  return nullptr;
}
const FunV* CarrierValue::as_fun() const { return std::get_if<FunV>(rep_.get()); }
bool CarrierValue::is_star() const { return std::holds_alternative<StarV>(*rep_); }

// -------------------------------------------------------------- El values

ElValue ElValue::inject(EffSetPtr set, CarrierValue x) {
  return ElValue(mk<ElNode>(InjectEl{std::move(set), std::move(x)}));
}
ElValue ElValue::descr(EffSetPtr set, ElValue pred_over_el) {
  return ElValue(mk<ElNode>(DescrEl{std::move(set), std::move(pred_over_el)}));
}
ElValue ElValue::restrict_by(ElValue base, SemFormula cond) {
  return ElValue(mk<ElNode>(RestrictEl{std::move(base), std::move(cond)}));
}
ElValue ElValue::extended(StableFnPtr fn, std::size_t lifted, std::vector<CarrierValue> args) {
  return ElValue(mk<ElNode>(ExtendedEl{std::move(fn), lifted, std::move(args)}));
}
ElValue ElValue::user(std::string name, std::function<SemFormula(const CarrierValue&)> body) {
  return ElValue(mk<ElNode>(UserEl{std::move(name), std::move(body)}));
}

// ---------------------------------------------------------------- carriers

CarrierPtr unit_c() {
  static const CarrierPtr c = std::make_shared<const Carrier>(Carrier{UnitC{}});
  return c;
}
CarrierPtr nat_c() {
  static const CarrierPtr c = std::make_shared<const Carrier>(Carrier{NatC{}});
  return c;
}
CarrierPtr finite_c(std::vector<std::string> labels) {
  return std::make_shared<const Carrier>(Carrier{FiniteC{std::move(labels)}});
}
CarrierPtr prod_c(CarrierPtr a, CarrierPtr b) {
  return std::make_shared<const Carrier>(Carrier{ProdC{std::move(a), std::move(b)}});
}
CarrierPtr prop_c() {
  static const CarrierPtr c = std::make_shared<const Carrier>(Carrier{PropC{}});
  return c;
}
CarrierPtr el_c(EffSetPtr set) { return std::make_shared<const Carrier>(Carrier{ElC{std::move(set)}}); }
CarrierPtr map_c(EffSetPtr from, EffSetPtr to) {
  return std::make_shared<const Carrier>(Carrier{MapC{std::move(from), std::move(to)}});
}

std::string carrier_key(const CarrierPtr& c) {
  struct V {
    std::string operator()(const UnitC&) const { return "unit"; }
    std::string operator()(const NatC&) const { return "nat"; }
    std::string operator()(const FiniteC& f) const {
      std::string out = "(finite";
      for (const auto& l : f.labels) out += " " + l;
      return out + ")";
    }
    std::string operator()(const ProdC& p) const {
      return "(prod " + carrier_key(p.first) + " " + carrier_key(p.second) + ")";
    }
    std::string operator()(const PropC&) const { return "prop"; }
    std::string operator()(const ElC& e) const { return "(el " + e.set->name + ")"; }
    std::string operator()(const MapC& m) const {
      return "(map " + m.from->name + " " + m.to->name + ")";
    }
  };
  return std::visit(V{}, static_cast<const Carrier::variant&>(*c));
}

// ------------------------------------------------------------- el apply

SemFormula el_apply(const ElValue& u, const CarrierValue& x) {
  struct V {
    const CarrierValue& x;
    SemFormula operator()(const InjectEl& i) const { return i.set->eq(i.x, x); }
    SemFormula operator()(const DescrEl& d) const {
      return el_apply(d.pred, CarrierValue::pred(ElValue::inject(d.set, x)));
    }
    SemFormula operator()(const RestrictEl& k) const {
      return SemFormula::conj(el_apply(k.base, x), k.cond);
    }
    SemFormula operator()(const ExtendedEl& e) const {
      // f-bar(u1..uk, a_{k+1}..)(y) = exists x1..xk, u1(x1) and ... and
      // f(x1..xk, a..)(y); built innermost-first.
      return expand(e, 0, {});
    }
    SemFormula operator()(const UserEl& u) const { return u.body(x); }

    SemFormula expand(const ExtendedEl& e, std::size_t i, std::vector<CarrierValue> bound) const {
      if (i == e.lifted) {
        std::vector<CarrierValue> full = std::move(bound);
        for (std::size_t j = e.lifted; j < e.args.size(); ++j) full.push_back(e.args[j]);
        CarrierValue out = e.fn->body(full);
        if (const ElValue* p = out.as_pred()) return el_apply(*p, x);
        return SemFormula::bot();
      }
      if (!e.args[i].as_pred()) return SemFormula::bot();
      const ElValue& arg = *e.args[i].as_pred();
      CarrierPtr dom = e.fn->domain[i]->carrier;
      const CarrierValue xc = x;
      const ExtendedEl ec = e;
      return SemFormula::exists(
          dom,
          [ec, i, bound, xc](const CarrierValue& v) {
            std::vector<CarrierValue> b2 = bound;
            b2.push_back(v);
            SemFormula rest = V{xc}.expand(ec, i + 1, std::move(b2));
            return SemFormula::conj(el_apply(*ec.args[i].as_pred(), v), std::move(rest));
          },
          el_witnesses(arg));
    }
  };
  return std::visit(V{x}, static_cast<const ElNode::variant&>(u.node()));
}

std::vector<CarrierValue> el_witnesses(const ElValue& u) {
  struct V {
    std::vector<CarrierValue> operator()(const InjectEl& i) const { return {i.x}; }
    std::vector<CarrierValue> operator()(const DescrEl&) const { return {}; }
    // Candidates only (the guard formula may fail); callers verify.
    std::vector<CarrierValue> operator()(const RestrictEl& k) const { return el_witnesses(k.base); }
    std::vector<CarrierValue> operator()(const ExtendedEl& e) const {
      std::vector<CarrierValue> picked;
      for (std::size_t i = 0; i < e.lifted; ++i) {
        if (!e.args[i].as_pred()) return {};
        auto ws = el_witnesses(*e.args[i].as_pred());
        if (ws.empty()) return {};
        picked.push_back(ws.front());
      }
      for (std::size_t j = e.lifted; j < e.args.size(); ++j) picked.push_back(e.args[j]);
      CarrierValue out = e.fn->body(picked);
      if (const ElValue* p = out.as_pred()) return el_witnesses(*p);
      return {};
    }
    std::vector<CarrierValue> operator()(const UserEl&) const { return {}; }
  };
  return std::visit(V{}, static_cast<const ElNode::variant&>(u.node()));
}

// --------------------------------------------------- structural equality

namespace {

bool formula_shallow_equal(const SemFormula& a, const SemFormula& b);

bool el_shallow_equal(const ElValue& a, const ElValue& b) {
  const auto& na = static_cast<const ElNode::variant&>(a.node());
  const auto& nb = static_cast<const ElNode::variant&>(b.node());
  if (na.index() != nb.index()) return false;
  struct V {
    const ElNode::variant& other;
    bool operator()(const InjectEl& x) const {
      const auto& y = std::get<InjectEl>(other);
      return x.set->name == y.set->name && cv_equal(x.x, y.x);
    }
    bool operator()(const DescrEl& x) const {
      const auto& y = std::get<DescrEl>(other);
      return x.set->name == y.set->name && el_shallow_equal(x.pred, y.pred);
    }
    bool operator()(const RestrictEl& x) const {
      const auto& y = std::get<RestrictEl>(other);
      return el_shallow_equal(x.base, y.base) && formula_shallow_equal(x.cond, y.cond);
    }
    bool operator()(const ExtendedEl& x) const {
      const auto& y = std::get<ExtendedEl>(other);
      if (x.fn != y.fn || x.lifted != y.lifted || x.args.size() != y.args.size()) return false;
      for (std::size_t i = 0; i < x.args.size(); ++i)
        if (!cv_equal(x.args[i], y.args[i])) return false;
      return true;
    }
    bool operator()(const UserEl& x) const { return x.name == std::get<UserEl>(other).name; }
  };
  return std::visit(V{nb}, na);
}

bool formula_shallow_equal(const SemFormula& a, const SemFormula& b) {
  const auto& na = static_cast<const FormulaNode::variant&>(a.node());
  const auto& nb = static_cast<const FormulaNode::variant&>(b.node());
  if (&na == &nb) return true;
  if (na.index() != nb.index()) return false;
  struct V {
    const FormulaNode::variant& other;
    bool operator()(const TopF&) const { return true; }
    bool operator()(const BotF&) const { return true; }
    bool operator()(const AndF& x) const {
      const auto& y = std::get<AndF>(other);
      return formula_shallow_equal(x.left, y.left) && formula_shallow_equal(x.right, y.right);
    }
    bool operator()(const ImpF& x) const {
      const auto& y = std::get<ImpF>(other);
      return formula_shallow_equal(x.left, y.left) && formula_shallow_equal(x.right, y.right);
    }
    bool operator()(const ForAllF&) const { return false; }
    bool operator()(const ExistsF&) const { return false; }
    bool operator()(const EqInF& x) const {
      const auto& y = std::get<EqInF>(other);
      return x.set->name == y.set->name && cv_equal(x.a, y.a) && cv_equal(x.b, y.b);
    }
    bool operator()(const NatEqF& x) const {
      const auto& y = std::get<NatEqF>(other);
      return x.n == y.n && x.m == y.m;
    }
  };
  return std::visit(V{nb}, na);
}

}  // namespace

bool cv_equal(const CarrierValue& a, const CarrierValue& b) {
  const auto& na = static_cast<const CVNode::variant&>(a.node());
  const auto& nb = static_cast<const CVNode::variant&>(b.node());
  if (na.index() != nb.index()) return false;
  struct V {
    const CVNode::variant& other;
    bool operator()(const StarV&) const { return true; }
    bool operator()(const NatV& x) const { return x.n == std::get<NatV>(other).n; }
    bool operator()(const LabelV& x) const { return x.s == std::get<LabelV>(other).s; }
    bool operator()(const PairV& x) const {
      const auto& y = std::get<PairV>(other);
      return cv_equal(x.p.first, y.p.first) && cv_equal(x.p.second, y.p.second);
    }
    bool operator()(const PropV& x) const {
      return formula_shallow_equal(x.q, std::get<PropV>(other).q);
    }
    bool operator()(const PredV& x) const { return el_shallow_equal(x.e, std::get<PredV>(other).e); }
    bool operator()(const FunV& x) const { return x.name == std::get<FunV>(other).name; }
  };
  return std::visit(V{nb}, na);
}

// ----------------------------------------------------------------- print

std::string CarrierValue::to_string() const {
  struct V {
    std::string operator()(const StarV&) const { return "star"; }
    std::string operator()(const NatV& v) const { return std::to_string(v.n); }
    std::string operator()(const LabelV& v) const { return v.s; }
    std::string operator()(const PairV& v) const {
      return "(pair " + v.p.first.to_string() + " " + v.p.second.to_string() + ")";
    }
    std::string operator()(const PropV& v) const { return "(prop " + v.q.to_string() + ")"; }
    std::string operator()(const PredV& v) const { return v.e.to_string(); }
    std::string operator()(const FunV& v) const { return "(map-value " + v.name + ")"; }
  };
  return std::visit(V{}, static_cast<const CVNode::variant&>(*rep_));
}

std::string ElValue::to_string() const {
  struct V {
    std::string operator()(const InjectEl& i) const {
      return "(el " + i.set->name + " " + i.x.to_string() + ")";
    }
    std::string operator()(const DescrEl& d) const {
      return "(descr " + d.set->name + " " + d.pred.to_string() + ")";
    }
    std::string operator()(const RestrictEl& k) const {
      return "(restrict " + k.base.to_string() + " " + k.cond.to_string() + ")";
    }
    std::string operator()(const ExtendedEl& e) const {
      std::string out = "(extend " + e.fn->name;
      for (const auto& a : e.args) out += " " + a.to_string();
      return out + ")";
    }
    std::string operator()(const UserEl& u) const { return "(pred " + u.name + ")"; }
  };
  return std::visit(V{}, static_cast<const ElNode::variant&>(*rep_));
}

std::string SemFormula::to_string() const {
  struct V {
    std::string operator()(const TopF&) const { return "top"; }
    std::string operator()(const BotF&) const { return "bot"; }
    std::string operator()(const AndF& f) const {
      return "(and " + f.left.to_string() + " " + f.right.to_string() + ")";
    }
    std::string operator()(const ImpF& f) const {
      return "(imp " + f.left.to_string() + " " + f.right.to_string() + ")";
    }
    std::string operator()(const ForAllF& f) const { return "(forall " + carrier_key(f.dom) + " _)"; }
    std::string operator()(const ExistsF& f) const { return "(exists " + carrier_key(f.dom) + " _)"; }
    std::string operator()(const EqInF& f) const {
      return "(eq " + f.set->name + " " + f.a.to_string() + " " + f.b.to_string() + ")";
    }
    std::string operator()(const NatEqF& f) const {
      return "(nat-eq " + std::to_string(f.n) + " " + std::to_string(f.m) + ")";
    }
  };
  return std::visit(V{}, static_cast<const FormulaNode::variant&>(*rep_));
}

bool carrier_admits(const CarrierPtr& c, const CarrierValue& v) {
  struct V {
    const CarrierValue& v;
    bool operator()(const UnitC&) const { return v.is_star(); }
    bool operator()(const NatC&) const { return v.as_nat().has_value(); }
    bool operator()(const FiniteC& f) const {
      const std::string* s = v.as_label();
      if (!s) return false;
      for (const auto& l : f.labels)
        if (l == *s) return true;
      return false;
    }
    bool operator()(const ProdC& p) const {
      const auto* pr = v.as_pair();
      return pr && carrier_admits(p.first, pr->first) && carrier_admits(p.second, pr->second);
    }
    bool operator()(const PropC&) const { return v.as_prop() != nullptr; }
    bool operator()(const ElC&) const { return v.as_pred() != nullptr; }
    bool operator()(const MapC&) const { return v.as_fun() != nullptr; }
  };
  return std::visit(V{v}, static_cast<const Carrier::variant&>(*c));
}

}  // namespace efftop::sem

