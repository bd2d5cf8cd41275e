#include "efftop/logic/check.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>
#include <utility>

namespace efftop::logic {

using sem::CarrierPtr;
using sem::CarrierValue;
using sem::EffSetPtr;
using sem::SemFormula;

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    default: return "unknown";
  }
}

namespace {

constexpr int kMaxFormulaDepth = 160;
constexpr std::size_t kPairCap = 64;
constexpr std::size_t kUnionCap = 64;
constexpr std::size_t kImpCandidateCap = 24;
constexpr std::size_t kEnumCap = 4000;
constexpr std::size_t kProdSampleCap = 400;

struct Ctx {
  const SearchBudget& b;
  int depth = 0;
  Ctx deeper() const { return Ctx{b, depth + 1}; }
  bool over() const { return depth > kMaxFormulaDepth; }
};

void push_unique_value(std::vector<vm::Value>& out, const vm::Value& v) {
  for (const auto& u : out)
    if (vm::value_equal(u, v)) return;
  out.push_back(v);
}

void push_unique_cv(std::vector<CarrierValue>& out, const CarrierValue& v) {
  for (const auto& u : out)
    if (sem::cv_equal(u, v)) return;
  out.push_back(v);
}

vm::EvalOutcome eval_code(const Ctx& c, const vm::CodePtr& code) {
  vm::Fuel rem = 0;
  vm::EvalOutcome r = vm::eval(code, {}, c.b.fuel, &rem);
  if (c.b.stats) {
    ++c.b.stats->evals;
    c.b.stats->fuel_spent += static_cast<std::uint64_t>(c.b.fuel - rem);
  }
  return r;
}

vm::EvalOutcome apply_value(const Ctx& c, const vm::Value& fn, const vm::Value& arg) {
  vm::Fuel rem = 0;
  vm::EvalOutcome r = vm::kapply(fn, arg, c.b.fuel, &rem);
  if (c.b.stats) {
    ++c.b.stats->evals;
    c.b.stats->fuel_spent += static_cast<std::uint64_t>(c.b.fuel - rem);
  }
  return r;
}

struct DomainSample {
  std::vector<CarrierValue> values;
  bool complete = false;
};

DomainSample quantifier_domain(const CarrierPtr& dom, const std::vector<CarrierValue>& hints,
                               const SearchBudget& b) {
  Sample s = carrier_sample(dom, b);
  DomainSample out;
  out.complete = s.complete;
  for (const auto& h : hints) push_unique_cv(out.values, h);
  for (const auto& v : s.values) push_unique_cv(out.values, v);
  return out;
}

CheckResult realizes_value_in(const vm::Value& v, const SemFormula& f, Ctx c);
ValueSet witness_values_in(const SemFormula& f, Ctx c);
int empty_level_in(const SemFormula& f, Ctx c);
bool exact_empty_in(const SemFormula& f, Ctx c);
bool provably_inhabited_in(const SemFormula& f, Ctx c);
std::vector<vm::CodePtr> synth_in(const SemFormula& f, Ctx c);

CheckResult check_imp(const vm::Value& v, const sem::ImpF& f, Ctx c) {
  bool any_unknown = false;
  bool all_exact = true;
  // Returns a result only when the candidate settles the question.
  auto run = [&](const vm::Value& a, bool certain) -> std::optional<CheckResult> {
    vm::EvalOutcome out = apply_value(c, v, a);
    if (std::holds_alternative<vm::OutOfFuel>(out)) {
      any_unknown = true;
      all_exact = false;
      return std::nullopt;
    }
    if (const auto* st = std::get_if<vm::Stuck>(&out))
      return no(certain, "application stuck on premise value " + a.to_string() + " (" +
                             st->reason + ")");
    const vm::Value& w = std::get<vm::Done>(out).value;
    CheckResult r = realizes_value_in(w, f.right, c.deeper());
    if (r.verdict == Verdict::No)
      return no(certain && r.exact, "fails on premise value " + a.to_string() + ": " + r.detail);
    if (r.verdict == Verdict::Unknown) any_unknown = true;
    all_exact = all_exact && r.exact;
    return std::nullopt;
  };

  ValueSet ws = witness_values_in(f.left, c.deeper());
  if (ws.exact) {
    if (ws.values.empty()) return yes(true, "vacuous: premise set is empty");
    for (const auto& a : ws.values)
      if (auto r = run(a, true)) return *r;
    if (any_unknown) return unknown("undetermined on a premise value");
    return yes(all_exact, "checked on the full premise set");
  }

  // The premise set is not finitely enumerable as values, but may still be
  // provably empty (for instance an El-equality whose equivalence clause
  // pairs inhabited with empty instances).
  if (exact_empty_in(f.left, c.deeper()))
    return yes(true, "vacuous: premise realizer set is provably empty");

  // Otherwise sample genuine members from the formula shape, then realizer
  // codes that check into the premise.
  std::vector<std::pair<vm::Value, bool>> cands;
  auto add_cand = [&](const vm::Value& a, bool certain) {
    if (cands.size() >= kImpCandidateCap) return;
    for (const auto& known : cands)
      if (vm::value_equal(known.first, a)) return;
    cands.emplace_back(a, certain);
  };
  for (const auto& a : ws.values) add_cand(a, true);
  auto consider_code = [&](const vm::CodePtr& code) {
    if (cands.size() >= kImpCandidateCap) return;
    vm::EvalOutcome out = eval_code(c, code);
    const vm::Value* val = vm::done_value(out);
    if (!val) return;
    CheckResult m = realizes_value_in(*val, f.left, c.deeper());
    if (m.verdict == Verdict::Yes) add_cand(*val, m.exact);
  };
  for (const auto& code : c.b.hint_realizers) consider_code(code);
  for (const auto& code : synth_in(f.left, c.deeper())) consider_code(code);
  if (cands.size() < kImpCandidateCap) {
    for (const auto& code : enumerate_closed_codes(c.b.max_term_size, kEnumCap)) {
      if (cands.size() >= kImpCandidateCap) break;
      consider_code(code);
    }
  }
  if (cands.empty()) return unknown("no candidate values for the premise");
  for (const auto& [a, certain] : cands)
    if (auto r = run(a, certain)) return *r;
  if (any_unknown) return unknown("undetermined on a sampled premise value");
  // Exactness tracks quantifier completeness and fuel, not premise-candidate
  // coverage: premise realizer sets are closed under observational equivalence,
  // so candidate search is the decidable approximation everywhere.
  return yes(all_exact, "holds on the premise candidates");
}

CheckResult check_forall(const vm::Value& v, const sem::ForAllF& f, Ctx c) {
  DomainSample dom = quantifier_domain(f.dom, f.hints, c.b);
  if (dom.values.empty()) return unknown("no sample for domain " + sem::carrier_key(f.dom));
  bool any_unknown = false;
  bool all_exact = true;
  for (const auto& x : dom.values) {
    CheckResult r = realizes_value_in(v, f.body(x), c.deeper());
    if (r.verdict == Verdict::No)
      return no(r.exact, "fails at " + x.to_string() + ": " + r.detail);
    if (r.verdict == Verdict::Unknown) any_unknown = true;
    all_exact = all_exact && r.exact;
  }
  if (any_unknown) return unknown("undetermined at some domain value");
  return yes(dom.complete && all_exact, dom.complete ? "" : "sampled domain only");
}

CheckResult check_exists(const vm::Value& v, const sem::ExistsF& f, Ctx c) {
  DomainSample dom = quantifier_domain(f.dom, f.hints, c.b);
  if (dom.values.empty()) return unknown("no sample for domain " + sem::carrier_key(f.dom));
  bool any_unknown = false;
  bool all_exact = true;
  for (const auto& x : dom.values) {
    CheckResult r = realizes_value_in(v, f.body(x), c.deeper());
    if (r.verdict == Verdict::Yes) return yes(r.exact, "witness " + x.to_string());
    if (r.verdict == Verdict::Unknown) any_unknown = true;
    if (r.verdict == Verdict::No) all_exact = all_exact && r.exact;
  }
  if (any_unknown) return unknown("undetermined at some domain value");
  return no(dom.complete && all_exact, "no witness in the domain sample");
}

CheckResult realizes_value_in(const vm::Value& v, const SemFormula& f, Ctx c) {
  if (c.over()) return unknown("formula depth guard");
  struct V {
    const vm::Value& v;
    Ctx c;
    CheckResult operator()(const sem::TopF&) const { return yes(true); }
    CheckResult operator()(const sem::BotF&) const { return no(true, "no value realizes bottom"); }
    CheckResult operator()(const sem::NatEqF& f) const {
      if (f.n != f.m) return no(true, "distinct numerals");
      auto n = v.as_num();
      if (n && *n == f.n) return yes(true);
      return no(true, "realizer of a numeric equation must be the numeral itself");
    }
    CheckResult operator()(const sem::EqInF& f) const {
      return realizes_value_in(v, f.set->eq(f.a, f.b), c.deeper());
    }
    CheckResult operator()(const sem::AndF& f) const {
      const auto* p = v.as_pair();
      if (!p) return no(true, "conjunction realizer must be a pair");
      CheckResult r1 = realizes_value_in(p->first, f.left, c.deeper());
      if (r1.verdict == Verdict::No) return no(r1.exact, "left: " + r1.detail);
      CheckResult r2 = realizes_value_in(p->second, f.right, c.deeper());
      if (r2.verdict == Verdict::No) return no(r2.exact, "right: " + r2.detail);
      if (r1.verdict == Verdict::Yes && r2.verdict == Verdict::Yes)
        return yes(r1.exact && r2.exact);
      return unknown(r1.verdict == Verdict::Unknown ? r1.detail : r2.detail);
    }
    CheckResult operator()(const sem::ImpF& f) const { return check_imp(v, f, c); }
    CheckResult operator()(const sem::ForAllF& f) const { return check_forall(v, f, c); }
    CheckResult operator()(const sem::ExistsF& f) const { return check_exists(v, f, c); }
  };
  return std::visit(V{v, c}, static_cast<const sem::FormulaNode::variant&>(f.node()));
}

ValueSet witness_values_in(const SemFormula& f, Ctx c) {
  if (c.over()) return {{}, false};
  struct V {
    Ctx c;
    ValueSet operator()(const sem::TopF&) const { return {{}, false}; }
    ValueSet operator()(const sem::BotF&) const { return {{}, true}; }
    ValueSet operator()(const sem::NatEqF& f) const {
      if (f.n == f.m) return {{vm::Value::num(f.n)}, true};
      return {{}, true};
    }
    ValueSet operator()(const sem::EqInF& f) const {
      return witness_values_in(f.set->eq(f.a, f.b), c.deeper());
    }
    ValueSet operator()(const sem::AndF& f) const {
      ValueSet l = witness_values_in(f.left, c.deeper());
      if (l.exact && l.values.empty()) return {{}, true};
      ValueSet r = witness_values_in(f.right, c.deeper());
      if (r.exact && r.values.empty()) return {{}, true};
      ValueSet out;
      bool capped = false;
      for (const auto& a : l.values) {
        for (const auto& b : r.values) {
          if (out.values.size() >= kPairCap) {
            capped = true;
            break;
          }
          push_unique_value(out.values, vm::Value::pair(a, b));
        }
      }
      out.exact = l.exact && r.exact && !capped;
      return out;
    }
    ValueSet operator()(const sem::ImpF& f) const {
      // Can never be exact, but constant maps into the conclusion are
      // genuine realizers, and everything realizes an implication whose
      // premise is provably empty.
      ValueSet out;
      ValueSet r = witness_values_in(f.right, c.deeper());
      std::size_t taken = 0;
      for (const auto& g : r.values) {
        if (taken >= 3) break;
        if (auto code = vm::reify(g)) {
          out.values.push_back(vm::Value::closure(*code, {}));
          ++taken;
        }
      }
      if (exact_empty_in(f.left, c.deeper())) {
        push_unique_value(out.values, vm::Value::closure(vm::var(0), {}));
        push_unique_value(out.values, vm::Value::num(0));
      }
      out.exact = false;
      return out;
    }
    ValueSet operator()(const sem::ForAllF& f) const {
      DomainSample dom = quantifier_domain(f.dom, f.hints, c.b);
      // A single provably-empty instance empties the whole intersection.
      std::vector<ValueSet> per;
      for (const auto& x : dom.values) {
        ValueSet s = witness_values_in(f.body(x), c.deeper());
        if (s.exact && s.values.empty()) return {{}, true};
        per.push_back(std::move(s));
      }
      if (!dom.complete || per.empty()) return {{}, false};
      for (const auto& s : per)
        if (!s.exact) return {{}, false};
      ValueSet out;
      out.exact = true;
      for (const auto& v : per.front().values) {
        bool everywhere = true;
        for (std::size_t i = 1; i < per.size() && everywhere; ++i) {
          bool found = false;
          for (const auto& u : per[i].values)
            if (vm::value_equal(u, v)) {
              found = true;
              break;
            }
          everywhere = found;
        }
        if (everywhere) push_unique_value(out.values, v);
      }
      return out;
    }
    ValueSet operator()(const sem::ExistsF& f) const {
      DomainSample dom = quantifier_domain(f.dom, f.hints, c.b);
      if (dom.values.empty()) return {{}, false};
      ValueSet out;
      bool all_exact = true;
      bool capped = false;
      for (const auto& x : dom.values) {
        ValueSet s = witness_values_in(f.body(x), c.deeper());
        all_exact = all_exact && s.exact;
        for (const auto& v : s.values) {
          if (out.values.size() >= kUnionCap) {
            capped = true;
            break;
          }
          push_unique_value(out.values, v);
        }
      }
      out.exact = dom.complete && all_exact && !capped;
      return out;
    }
  };
  return std::visit(V{c}, static_cast<const sem::FormulaNode::variant&>(f.node()));
}

// Emptiness evidence level: 0 = not shown empty, 1 = empty as far as the
// sampled instances show, 2 = empty by complete finite analysis.
int empty_level_in(const SemFormula& f, Ctx c) {
  if (c.over()) return 0;
  struct V {
    Ctx c;
    int operator()(const sem::TopF&) const { return 0; }
    int operator()(const sem::BotF&) const { return 2; }
    int operator()(const sem::NatEqF& f) const { return f.n != f.m ? 2 : 0; }
    int operator()(const sem::EqInF& f) const {
      return empty_level_in(f.set->eq(f.a, f.b), c.deeper());
    }
    int operator()(const sem::AndF& f) const {
      return std::max(empty_level_in(f.left, c.deeper()), empty_level_in(f.right, c.deeper()));
    }
    int operator()(const sem::ImpF& f) const {
      if (!provably_inhabited_in(f.left, c.deeper())) return 0;
      return empty_level_in(f.right, c.deeper());
    }
    int operator()(const sem::ForAllF& f) const {
      // Raw product semantics: one empty instance empties the intersection.
      DomainSample dom = quantifier_domain(f.dom, f.hints, c.b);
      int best = 0;
      for (const auto& x : dom.values)
        best = std::max(best, empty_level_in(f.body(x), c.deeper()));
      return best;
    }
    int operator()(const sem::ExistsF& f) const {
      DomainSample dom = quantifier_domain(f.dom, f.hints, c.b);
      if (dom.values.empty()) return 0;
      int worst = 2;
      for (const auto& x : dom.values)
        worst = std::min(worst, empty_level_in(f.body(x), c.deeper()));
      if (worst == 0) return 0;
      return dom.complete ? worst : 1;
    }
  };
  return std::visit(V{c}, static_cast<const sem::FormulaNode::variant&>(f.node()));
}

bool exact_empty_in(const SemFormula& f, Ctx c) { return empty_level_in(f, c) == 2; }

bool provably_inhabited_in(const SemFormula& f, Ctx c) {
  if (c.over()) return false;
  struct V {
    Ctx c;
    const SemFormula& whole;
    bool operator()(const sem::TopF&) const { return true; }
    bool operator()(const sem::BotF&) const { return false; }
    bool operator()(const sem::NatEqF& f) const { return f.n == f.m; }
    bool operator()(const sem::EqInF& f) const {
      return provably_inhabited_in(f.set->eq(f.a, f.b), c.deeper());
    }
    bool operator()(const sem::AndF& f) const {
      return provably_inhabited_in(f.left, c.deeper()) &&
             provably_inhabited_in(f.right, c.deeper());
    }
    bool operator()(const sem::ImpF& f) const {
      return provably_inhabited_in(f.right, c.deeper()) || exact_empty_in(f.left, c.deeper());
    }
    bool operator()(const sem::ForAllF&) const {
      return !witness_values_in(whole, c.deeper()).values.empty();
    }
    bool operator()(const sem::ExistsF& f) const {
      DomainSample dom = quantifier_domain(f.dom, f.hints, c.b);
      for (const auto& x : dom.values)
        if (provably_inhabited_in(f.body(x), c.deeper())) return true;
      return false;
    }
  };
  return std::visit(V{c, f}, static_cast<const sem::FormulaNode::variant&>(f.node()));
}

std::vector<vm::CodePtr> synth_in(const SemFormula& f, Ctx c) {
  std::vector<vm::CodePtr> out;
  if (c.over()) return out;
  auto add = [&](const vm::CodePtr& code) {
    if (out.size() >= 12) return;
    for (const auto& u : out)
      if (vm::structural_equal(u, code)) return;
    out.push_back(code);
  };
  struct V {
    Ctx c;
    decltype(add)& push;
    void operator()(const sem::TopF&) const { push(vm::nat(0)); }
    void operator()(const sem::BotF&) const {}
    void operator()(const sem::NatEqF& f) const {
      if (f.n == f.m) push(vm::nat(f.n));
    }
    void operator()(const sem::EqInF& f) const {
      for (const auto& code : synth_in(f.set->eq(f.a, f.b), c.deeper())) push(code);
    }
    void operator()(const sem::AndF& f) const {
      auto ls = synth_in(f.left, c.deeper());
      auto rs = synth_in(f.right, c.deeper());
      for (std::size_t i = 0; i < ls.size() && i < 2; ++i)
        for (std::size_t j = 0; j < rs.size() && j < 2; ++j) push(vm::pair(ls[i], rs[j]));
    }
    void operator()(const sem::ImpF& f) const {
      auto rs = synth_in(f.right, c.deeper());
      for (std::size_t i = 0; i < rs.size() && i < 3; ++i) push(vm::lam(rs[i]));
      push(vm::identity());
    }
    void operator()(const sem::ForAllF& f) const {
      DomainSample dom = quantifier_domain(f.dom, f.hints, c.b);
      for (std::size_t i = 0; i < dom.values.size() && i < 2; ++i)
        for (const auto& code : synth_in(f.body(dom.values[i]), c.deeper())) push(code);
    }
    void operator()(const sem::ExistsF& f) const {
      DomainSample dom = quantifier_domain(f.dom, f.hints, c.b);
      for (std::size_t i = 0; i < dom.values.size() && i < 3; ++i)
        for (const auto& code : synth_in(f.body(dom.values[i]), c.deeper())) push(code);
    }
  };
  std::visit(V{c, add}, static_cast<const sem::FormulaNode::variant&>(f.node()));
  return out;
}

}  // namespace

// -------------------------------------------------------------- sampling

Sample carrier_sample(const CarrierPtr& c, const SearchBudget& b) {
  Sample out;
  struct V {
    const SearchBudget& b;
    Sample& out;
    void operator()(const sem::UnitC&) const {
      out.values.push_back(CarrierValue::star());
      out.complete = true;
    }
    void operator()(const sem::NatC&) const {
      for (std::uint64_t i = 0; i <= b.nat_sample_bound; ++i)
        out.values.push_back(CarrierValue::natv(i));
      out.complete = false;
    }
    void operator()(const sem::FiniteC& f) const {
      for (const auto& l : f.labels) out.values.push_back(CarrierValue::label(l));
      out.complete = true;
    }
    void operator()(const sem::ProdC& p) const {
      Sample a = carrier_sample(p.first, b);
      Sample bs = carrier_sample(p.second, b);
      bool capped = false;
      for (const auto& x : a.values) {
        for (const auto& y : bs.values) {
          if (out.values.size() >= kProdSampleCap) {
            capped = true;
            break;
          }
          out.values.push_back(CarrierValue::pair(x, y));
        }
      }
      out.complete = a.complete && bs.complete && !capped;
    }
    void operator()(const sem::PropC&) const {
      out.values.push_back(CarrierValue::prop(SemFormula::top()));
      out.values.push_back(CarrierValue::prop(SemFormula::bot()));
      out.values.push_back(
          CarrierValue::prop(SemFormula::conj(SemFormula::top(), SemFormula::bot())));
      out.values.push_back(
          CarrierValue::prop(SemFormula::impl(SemFormula::bot(), SemFormula::bot())));
      out.values.push_back(
          CarrierValue::prop(SemFormula::impl(SemFormula::top(), SemFormula::bot())));
      out.complete = false;
    }
    void operator()(const sem::ElC& e) const {
      Sample inner = carrier_sample(e.set->carrier, b);
      for (const auto& x : inner.values)
        out.values.push_back(CarrierValue::pred(sem::ElValue::inject(e.set, x)));
      // The expression carrier is never finitely enumerated.
      out.complete = false;
    }
    void operator()(const sem::MapC&) const { out.complete = false; }
  };
  std::visit(V{b, out}, static_cast<const sem::Carrier::variant&>(*c));
  auto it = b.pools.find(sem::carrier_key(c));
  if (it != b.pools.end()) {
    for (const auto& v : it->second.members) push_unique_cv(out.values, v);
    if (it->second.complete) out.complete = true;
  }
  return out;
}

// ----------------------------------------------------------- enumeration

std::vector<vm::CodePtr> enumerate_closed_codes(int max_size, std::size_t cap) {
  std::map<std::pair<int, int>, std::vector<vm::CodePtr>> memo;
  // All terms of exactly `size` whose free variables are below `depth`.
  std::function<const std::vector<vm::CodePtr>&(int, int)> gen =
      [&](int size, int depth) -> const std::vector<vm::CodePtr>& {
    auto key = std::make_pair(size, depth);
    auto found = memo.find(key);
    if (found != memo.end()) return found->second;
    std::vector<vm::CodePtr> out;
    if (size == 1) {
      for (int k = 0; k < depth; ++k) out.push_back(vm::var(k));
      for (std::uint64_t n = 0; n <= 3; ++n) out.push_back(vm::nat(n));
      out.push_back(vm::succ_op());
      out.push_back(vm::pred_op());
      out.push_back(vm::fst_op());
      out.push_back(vm::snd_op());
      out.push_back(vm::rec_op());
    } else if (size > 1) {
      for (const auto& body : gen(size - 1, depth + 1)) out.push_back(vm::lam(body));
      for (int i = 1; i <= size - 2; ++i) {
        for (const auto& fn : gen(i, depth))
          for (const auto& arg : gen(size - 1 - i, depth)) out.push_back(vm::app(fn, arg));
      }
      for (int i = 1; i <= size - 2; ++i) {
        for (const auto& a : gen(i, depth))
          for (const auto& bb : gen(size - 1 - i, depth)) out.push_back(vm::pair(a, bb));
      }
      for (int i = 1; i <= size - 3; ++i) {
        for (int j = 1; j <= size - 2 - i; ++j) {
          int k = size - 1 - i - j;
          if (k < 1) continue;
          for (const auto& s : gen(i, depth))
            for (const auto& z : gen(j, depth))
              for (const auto& p : gen(k, depth + 1)) out.push_back(vm::ifz(s, z, p));
        }
      }
    }
    return memo.emplace(key, std::move(out)).first->second;
  };
  std::vector<vm::CodePtr> all;
  for (int s = 1; s <= max_size; ++s) {
    for (const auto& code : gen(s, 0)) {
      if (all.size() >= cap) return all;
      all.push_back(code);
    }
  }
  return all;
}

// -------------------------------------------------------------- checking

CheckResult realizes_value(const vm::Value& v, const SemFormula& f, const SearchBudget& b) {
  return realizes_value_in(v, f, Ctx{b, 0});
}

CheckResult realizes(const vm::CodePtr& code, const SemFormula& f, const SearchBudget& b) {
  Ctx c{b, 0};
  SemFormula cur = f;
  for (int guard = 0; guard < kMaxFormulaDepth; ++guard) {
    const auto& node = static_cast<const sem::FormulaNode::variant&>(cur.node());
    if (std::holds_alternative<sem::TopF>(node)) return yes(true, "every code realizes top");
    const auto* e = std::get_if<sem::EqInF>(&node);
    if (!e) break;
    cur = e->set->eq(e->a, e->b);
  }
  vm::EvalOutcome out = eval_code(c, code);
  if (std::holds_alternative<vm::OutOfFuel>(out)) return unknown("evaluation ran out of fuel");
  if (const auto* st = std::get_if<vm::Stuck>(&out))
    return no(true, "evaluation stuck: " + st->reason);
  return realizes_value_in(std::get<vm::Done>(out).value, cur, c);
}

ValueSet witness_values(const SemFormula& f, const SearchBudget& b) {
  return witness_values_in(f, Ctx{b, 0});
}

bool exact_empty(const SemFormula& f, const SearchBudget& b) {
  return exact_empty_in(f, Ctx{b, 0});
}

bool provably_inhabited(const SemFormula& f, const SearchBudget& b) {
  return provably_inhabited_in(f, Ctx{b, 0});
}

std::vector<vm::CodePtr> synthesize_candidates(const SemFormula& f, const SearchBudget& b) {
  return synth_in(f, Ctx{b, 0});
}

std::optional<FoundRealizer> find_realizer(const SemFormula& f, const SearchBudget& b) {
  std::unordered_set<std::string> seen;
  auto consider = [&](const vm::CodePtr& code) -> std::optional<FoundRealizer> {
    if (!seen.insert(vm::code_to_string(code)).second) return std::nullopt;
    if (b.stats) ++b.stats->candidates_tried;
    CheckResult r = realizes(code, f, b);
    if (r.verdict == Verdict::Yes) return FoundRealizer{code, r};
    return std::nullopt;
  };
  for (const auto& code : b.hint_realizers)
    if (auto hit = consider(code)) return hit;
  for (const auto& v : witness_values(f, b).values) {
    std::optional<vm::CodePtr> code = vm::reify(v);
    if (!code) {
      if (const auto* cl = v.as_closure(); cl && cl->env->empty()) code = vm::lam(cl->body);
    }
    if (code)
      if (auto hit = consider(*code)) return hit;
  }
  for (const auto& code : synthesize_candidates(f, b))
    if (auto hit = consider(code)) return hit;
  for (const auto& code : enumerate_closed_codes(b.max_term_size, kEnumCap))
    if (auto hit = consider(code)) return hit;
  return std::nullopt;
}

HoldsResult holds(const SemFormula& f, const SearchBudget& b) {
  if (auto fr = find_realizer(f, b)) return {fr->check, fr->code};
  int lvl = empty_level_in(f, Ctx{b, 0});
  if (lvl == 2) return {no(true, "realizer set is provably empty"), std::nullopt};
  if (lvl == 1) return {no(false, "realizer set is empty on every sampled instance"), std::nullopt};
  return {unknown("no realizer found within the search budget"), std::nullopt};
}

}  // namespace efftop::logic
