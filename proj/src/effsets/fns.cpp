#include "efftop/effsets/fns.hpp"

#include <stdexcept>
#include <utility>

namespace efftop::effsets {

namespace {

using sem::CarrierValue;
using sem::ElValue;
using sem::SemFormula;

ElValue empty_el() {
  return ElValue::user("empty", [](const CarrierValue&) { return SemFormula::bot(); });
}

// Unwrap a body result to the El-value it denotes; junk collapses to the
// empty predicate so malformed applications refute rather than crash.
ElValue as_el(const CarrierValue& v) {
  if (const ElValue* p = v.as_pred()) return *p;
  return empty_el();
}

// forall x1..xn over raw carriers, with premises chained inside.
SemFormula forall_raw_chain(const std::vector<EffSetPtr>& sets,
                            std::function<SemFormula(const std::vector<CarrierValue>&)> body,
                            std::vector<CarrierValue> picked = {}) {
  if (picked.size() == sets.size()) return body(picked);
  const EffSetPtr& s = sets[picked.size()];
  return SemFormula::forall(s->carrier, [sets, body, picked](const CarrierValue& v) {
    std::vector<CarrierValue> next = picked;
    next.push_back(v);
    return forall_raw_chain(sets, body, std::move(next));
  });
}

// forall x1..xn, each guarded by self-equality in its set.
SemFormula forall_guarded_chain(const std::vector<EffSetPtr>& sets,
                                std::function<SemFormula(const std::vector<CarrierValue>&)> body,
                                std::vector<CarrierValue> picked = {}) {
  if (picked.size() == sets.size()) return body(picked);
  const EffSetPtr& s = sets[picked.size()];
  return forall_in(s, [sets, body, picked](const CarrierValue& v) {
    std::vector<CarrierValue> next = picked;
    next.push_back(v);
    return forall_guarded_chain(sets, body, std::move(next));
  });
}

}  // namespace

StableFnPtr make_fn(std::string name, std::vector<EffSetPtr> domain, EffSetPtr codomain,
                    std::function<CarrierValue(const std::vector<CarrierValue>&)> body) {
  if (domain.empty()) throw std::invalid_argument("function " + name + " needs at least one slot");
  return std::make_shared<const sem::StableFn>(
      sem::StableFn{std::move(name), std::move(domain), std::move(codomain), std::move(body)});
}

StableFnPtr morphism(std::string name, const EffSetPtr& x, const EffSetPtr& y,
                     std::function<ElValue(const ElValue&)> body) {
  return make_fn(std::move(name), {el_of(x)}, el_of(y),
                 [body](const std::vector<CarrierValue>& args) {
                   if (args.size() != 1 || !args[0].as_pred())
                     return CarrierValue::pred(empty_el());
                   return CarrierValue::pred(body(*args[0].as_pred()));
                 });
}

CarrierValue apply_fn(const StableFnPtr& f, const std::vector<CarrierValue>& args) {
  if (args.size() != f->domain.size())
    throw std::invalid_argument("arity mismatch applying " + f->name);
  return f->body(args);
}

ElValue apply_morphism(const StableFnPtr& f, const ElValue& u) {
  return as_el(apply_fn(f, {CarrierValue::pred(u)}));
}

SemFormula stability_formula(const StableFnPtr& f) {
  std::vector<EffSetPtr> doubled = f->domain;
  for (const auto& s : f->domain) doubled.push_back(s);
  auto fn = f;
  return forall_raw_chain(doubled, [fn](const std::vector<CarrierValue>& all) {
    const std::size_t n = fn->domain.size();
    std::vector<CarrierValue> xs(all.begin(), all.begin() + n);
    std::vector<CarrierValue> ys(all.begin() + n, all.end());
    SemFormula concl = fn->codomain->eq(fn->body(xs), fn->body(ys));
    for (std::size_t i = n; i-- > 0;)
      concl = SemFormula::impl(fn->domain[i]->eq(xs[i], ys[i]), std::move(concl));
    return concl;
  });
}

logic::HoldsResult check_stability(const StableFnPtr& f, const logic::SearchBudget& budget,
                                   std::vector<vm::CodePtr> extra_hints) {
  logic::SearchBudget b = budget;
  for (auto& h : extra_hints) b.hint_realizers.push_back(std::move(h));
  return logic::holds(stability_formula(f), b);
}

SemFormula approx_formula(const StableFnPtr& f, const StableFnPtr& g) {
  if (f->domain.size() != g->domain.size())
    throw std::invalid_argument("arity mismatch comparing " + f->name + " and " + g->name);
  for (std::size_t i = 0; i < f->domain.size(); ++i)
    if (f->domain[i]->name != g->domain[i]->name)
      throw std::invalid_argument("domain mismatch comparing " + f->name + " and " + g->name);
  if (f->codomain->name != g->codomain->name)
    throw std::invalid_argument("codomain mismatch comparing " + f->name + " and " + g->name);
  auto ff = f;
  auto gg = g;
  return forall_guarded_chain(f->domain, [ff, gg](const std::vector<CarrierValue>& xs) {
    return ff->codomain->eq(ff->body(xs), gg->body(xs));
  });
}

logic::HoldsResult approx_equal(const StableFnPtr& f, const StableFnPtr& g,
                                const logic::SearchBudget& budget,
                                std::vector<vm::CodePtr> extra_hints) {
  logic::SearchBudget b = budget;
  for (auto& h : extra_hints) b.hint_realizers.push_back(std::move(h));
  return logic::holds(approx_formula(f, g), b);
}

StableFnPtr extend(const StableFnPtr& f, std::size_t k) {
  if (k == 0 || k > f->domain.size())
    throw std::invalid_argument("bad lift count extending " + f->name);
  std::vector<EffSetPtr> domain;
  for (std::size_t i = 0; i < f->domain.size(); ++i)
    domain.push_back(i < k ? el_of(f->domain[i]) : f->domain[i]);
  auto base = f;
  std::string name = "(ext " + std::to_string(k) + " " + f->name + ")";
  return std::make_shared<const sem::StableFn>(sem::StableFn{
      std::move(name), std::move(domain), base->codomain,
      [base, k](const std::vector<CarrierValue>& args) {
        return CarrierValue::pred(ElValue::extended(base, k, args));
      }});
}

SemFormula extension_agreement_formula(const StableFnPtr& g, const StableFnPtr& f,
                                       std::size_t k) {
  if (g->domain.size() != f->domain.size() || k > f->domain.size())
    throw std::invalid_argument("shape mismatch between " + g->name + " and " + f->name);
  auto gg = g;
  auto ff = f;
  return forall_guarded_chain(f->domain, [gg, ff, k](const std::vector<CarrierValue>& xs) {
    std::vector<CarrierValue> lifted;
    for (std::size_t i = 0; i < xs.size(); ++i)
      lifted.push_back(i < k ? CarrierValue::pred(ElValue::inject(ff->domain[i], xs[i]))
                             : xs[i]);
    return ff->codomain->eq(gg->body(lifted), ff->body(xs));
  });
}

StableFnPtr compose(const StableFnPtr& g, const StableFnPtr& f) {
  if (f->domain.size() != 1 || g->domain.size() != 1)
    throw std::invalid_argument("composition needs unary maps");
  if (g->domain[0]->name != f->codomain->name)
    throw std::invalid_argument("composition mismatch: " + g->name + " after " + f->name);
  auto gg = g;
  auto ff = f;
  return make_fn("(comp " + g->name + " " + f->name + ")", f->domain, g->codomain,
                 [gg, ff](const std::vector<CarrierValue>& args) {
                   return gg->body({ff->body(args)});
                 });
}

StableFnPtr identity_morphism(const EffSetPtr& x) {
  return morphism("(id " + x->name + ")", x, x, [](const ElValue& u) { return u; });
}

ProductOps product_ops(const EffSetPtr& a, const EffSetPtr& b) {
  ProductOps ops;
  ops.prod = prod_set(a, b);
  EffSetPtr prod = ops.prod;
  ops.p1_low = make_fn("p1", {prod}, el_of(a), [a](const std::vector<CarrierValue>& args) {
    const auto* p = args.at(0).as_pair();
    if (!p) return CarrierValue::pred(empty_el());
    return CarrierValue::pred(ElValue::inject(a, p->first));
  });
  ops.p2_low = make_fn("p2", {prod}, el_of(b), [b](const std::vector<CarrierValue>& args) {
    const auto* p = args.at(0).as_pair();
    if (!p) return CarrierValue::pred(empty_el());
    return CarrierValue::pred(ElValue::inject(b, p->second));
  });
  ops.cons_low =
      make_fn("cons", {a, b}, el_of(prod), [prod](const std::vector<CarrierValue>& args) {
        return CarrierValue::pred(
            ElValue::inject(prod, CarrierValue::pair(args.at(0), args.at(1))));
      });
  ops.p1 = extend(ops.p1_low, 1);
  ops.p2 = extend(ops.p2_low, 1);
  ops.cons = extend(ops.cons_low, 2);
  return ops;
}

ClosureOps closure_ops(const EffSetPtr& a, const EffSetPtr& b) {
  ClosureOps ops;
  ops.maps = closure_set(a, b);
  ops.app_low = make_fn("app", {ops.maps, el_of(a)}, el_of(b),
                        [](const std::vector<CarrierValue>& args) {
                          const sem::FunV* f = args.at(0).as_fun();
                          const ElValue* u = args.at(1).as_pred();
                          if (!f || !u) return CarrierValue::pred(empty_el());
                          return CarrierValue::pred(f->f(*u));
                        });
  ops.app = extend(ops.app_low, 1);
  return ops;
}

ElValue lam_el(const EffSetPtr& a, const EffSetPtr& b, std::string name,
               std::function<ElValue(const ElValue&)> f) {
  return ElValue::inject(closure_set(a, b), CarrierValue::fun(name, std::move(f)));
}

ClassifierOps classifier_ops() {
  ClassifierOps ops;
  ops.omega = omega_set();
  EffSetPtr omega = ops.omega;
  ops.truth = make_fn("true", {el_of(one_set())}, el_of(omega),
                      [omega](const std::vector<CarrierValue>&) {
                        return CarrierValue::pred(
                            ElValue::inject(omega, CarrierValue::prop(SemFormula::top())));
                      });
  return ops;
}

SemFormula prop_of(const ElValue& u) {
  return sem::el_apply(u, CarrierValue::prop(SemFormula::top()));
}

StableFnPtr star_fn(const EffSetPtr& x) {
  return make_fn("star", {el_of(x)}, el_of(one_set()), [](const std::vector<CarrierValue>&) {
    return CarrierValue::pred(ElValue::inject(one_set(), CarrierValue::star()));
  });
}

StableFnPtr chi_fn(const StableFnPtr& m) {
  if (m->domain.size() != 1)
    throw std::invalid_argument("classifier needs a unary inclusion, got " + m->name);
  EffSetPtr dom = m->domain[0];
  EffSetPtr cod = m->codomain;
  EffSetPtr omega = omega_set();
  auto mm = m;
  return make_fn(
      "(chi " + m->name + ")", {cod}, el_of(omega),
      [mm, dom, cod, omega](const std::vector<CarrierValue>& args) {
        CarrierValue v = args.at(0);
        SemFormula hit = exists_in(dom, [mm, cod, v](const CarrierValue& u) {
          return cod->eq(mm->body({u}), v);
        });
        return CarrierValue::pred(ElValue::inject(omega, CarrierValue::prop(std::move(hit))));
      });
}

}  // namespace efftop::effsets
