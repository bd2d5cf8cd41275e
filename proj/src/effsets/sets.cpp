#include "efftop/effsets/sets.hpp"

#include <map>
#include <utility>

namespace efftop::effsets {

namespace {

using sem::CarrierPtr;
using sem::EffSet;
using vm::app;
using vm::CodePtr;
using vm::fst_of;
using vm::lam;
using vm::pair;
using vm::snd_of;
using vm::var;

// Accessors into the right-nested El-equality 4-tuple
// <stability, <unicity, <existence, <fwd, bwd>>>>.
CodePtr cS(CodePtr r) { return fst_of(std::move(r)); }
CodePtr cU(CodePtr r) { return fst_of(snd_of(std::move(r))); }
CodePtr cE(CodePtr r) { return fst_of(snd_of(snd_of(std::move(r)))); }
CodePtr cQ(CodePtr r) { return snd_of(snd_of(snd_of(std::move(r)))); }
CodePtr cF(CodePtr r) { return fst_of(cQ(std::move(r))); }
CodePtr cB(CodePtr r) { return snd_of(cQ(std::move(r))); }
CodePtr tuple4(CodePtr s, CodePtr u, CodePtr e, CodePtr q) {
  return pair(std::move(s), pair(std::move(u), pair(std::move(e), std::move(q))));
}

EffSetPtr mk_set(std::string name, CarrierPtr carrier,
                 std::function<SemFormula(const CarrierValue&, const CarrierValue&)> eq,
                 CodePtr sym, CodePtr trans) {
  return std::make_shared<const EffSet>(
      EffSet{std::move(name), std::move(carrier), std::move(eq), std::move(sym), std::move(trans)});
}

void merge_hint(std::vector<CarrierValue>& into, const CarrierValue& v) {
  for (const auto& known : into)
    if (sem::cv_equal(known, v)) return;
  into.push_back(v);
}

}  // namespace

// ------------------------------------------------------------ law formulas

SemFormula symmetry_formula(const EffSetPtr& x) {
  CarrierPtr c = x->carrier;
  auto eq = x->eq;
  return SemFormula::forall(c, [c, eq](const CarrierValue& a) {
    return SemFormula::forall(c, [eq, a](const CarrierValue& b) {
      return SemFormula::impl(eq(a, b), eq(b, a));
    });
  });
}

SemFormula transitivity_formula(const EffSetPtr& x) {
  CarrierPtr c = x->carrier;
  auto eq = x->eq;
  return SemFormula::forall(c, [c, eq](const CarrierValue& a) {
    return SemFormula::forall(c, [c, eq, a](const CarrierValue& b) {
      return SemFormula::forall(c, [eq, a, b](const CarrierValue& z) {
        return SemFormula::impl(eq(a, b), SemFormula::impl(eq(b, z), eq(a, z)));
      });
    });
  });
}

// ---------------------------------------------------------- canonical sets

EffSetPtr one_set() {
  static const EffSetPtr s = mk_set(
      "one", sem::unit_c(),
      [](const CarrierValue&, const CarrierValue&) { return SemFormula::top(); }, vm::identity(),
      lam(lam(var(0))));
  return s;
}

EffSetPtr omega_set() {
  // trans = \p.\r. <\x. fst r (fst p x), \y. snd p (snd r y)>
  static const CodePtr trans =
      lam(lam(pair(lam(app(fst_of(var(1)), app(fst_of(var(2)), var(0)))),
                   lam(app(snd_of(var(2)), app(snd_of(var(1)), var(0)))))));
  static const CodePtr sym = lam(pair(snd_of(var(0)), fst_of(var(0))));
  static const EffSetPtr s = mk_set(
      "omega", sem::prop_c(),
      [](const CarrierValue& a, const CarrierValue& b) {
        const SemFormula* qa = a.as_prop();
        const SemFormula* qb = b.as_prop();
        if (!qa || !qb) return SemFormula::bot();
        return SemFormula::iff(*qa, *qb);
      },
      sym, trans);
  return s;
}

EffSetPtr nat_set() {
  static const EffSetPtr s = mk_set(
      "nat", sem::nat_c(),
      [](const CarrierValue& a, const CarrierValue& b) {
        auto na = a.as_nat();
        auto nb = b.as_nat();
        if (!na || !nb) return SemFormula::bot();
        return SemFormula::nat_eq(*na, *nb);
      },
      vm::identity(), lam(lam(var(0))));
  return s;
}

EffSetPtr finite_set(const FiniteSpec& spec, const logic::SearchBudget& budget) {
  if (spec.labels.empty()) throw SetConstructionError("finite set needs at least one label");
  for (std::size_t i = 0; i < spec.labels.size(); ++i)
    for (std::size_t j = i + 1; j < spec.labels.size(); ++j)
      if (spec.labels[i] == spec.labels[j])
        throw SetConstructionError("duplicate label " + spec.labels[i]);
  auto known = [&](const std::string& l) {
    for (const auto& s : spec.labels)
      if (s == l) return true;
    return false;
  };
  auto table = std::make_shared<std::map<std::pair<std::string, std::string>, SemFormula>>();
  for (const auto& row : spec.rows) {
    if (!known(row.left) || !known(row.right))
      throw SetConstructionError("equality row mentions unknown label");
    table->insert({{row.left, row.right}, row.when});
  }
  auto eq = [table](const CarrierValue& a, const CarrierValue& b) {
    const std::string* la = a.as_label();
    const std::string* lb = b.as_label();
    if (!la || !lb) return SemFormula::bot();
    auto it = table->find({*la, *lb});
    if (it == table->end()) return SemFormula::bot();
    return it->second;
  };

  EffSetPtr probe = mk_set(spec.name, sem::finite_c(spec.labels), eq, vm::identity(),
                           lam(lam(var(0))));
  logic::SearchBudget b = budget;
  static const std::vector<CodePtr> standard = {
      vm::identity(),
      lam(lam(var(0))),
      lam(lam(var(1))),
      lam(pair(snd_of(var(0)), fst_of(var(0)))),
      lam(lam(pair(fst_of(var(1)), snd_of(var(0))))),
      lam(lam(pair(lam(app(fst_of(var(1)), app(fst_of(var(2)), var(0)))),
                   lam(app(snd_of(var(2)), app(snd_of(var(1)), var(0))))))),
      lam(vm::nat(0)),
      lam(lam(vm::nat(0))),
  };
  for (const auto& h : standard) b.hint_realizers.push_back(h);

  logic::HoldsResult sym = logic::holds(symmetry_formula(probe), b);
  if (sym.check.verdict != logic::Verdict::Yes || !sym.realizer)
    throw SetConstructionError("symmetry check failed for " + spec.name + ": " +
                               sym.check.detail);
  logic::HoldsResult trans = logic::holds(transitivity_formula(probe), b);
  if (trans.check.verdict != logic::Verdict::Yes || !trans.realizer)
    throw SetConstructionError("transitivity check failed for " + spec.name + ": " +
                               trans.check.detail);
  return mk_set(spec.name, sem::finite_c(spec.labels), eq, *sym.realizer, *trans.realizer);
}

EffSetPtr prod_set(const EffSetPtr& a, const EffSetPtr& b) {
  auto eq = [a, b](const CarrierValue& x, const CarrierValue& y) {
    const auto* px = x.as_pair();
    const auto* py = y.as_pair();
    if (!px || !py) return SemFormula::bot();
    return SemFormula::conj(a->eq(px->first, py->first), b->eq(px->second, py->second));
  };
  CodePtr sym = lam(pair(app(a->sym_code, fst_of(var(0))), app(b->sym_code, snd_of(var(0)))));
  CodePtr trans = lam(lam(pair(app(a->trans_code, fst_of(var(1)), fst_of(var(0))),
                               app(b->trans_code, snd_of(var(1)), snd_of(var(0))))));
  return mk_set("(prod " + a->name + " " + b->name + ")",
                sem::prod_c(a->carrier, b->carrier), eq, sym, trans);
}

EffSetPtr closure_set(const EffSetPtr& a, const EffSetPtr& b) {
  EffSetPtr ela = el_of(a);
  EffSetPtr elb = el_of(b);
  auto eq = [ela, elb](const CarrierValue& f, const CarrierValue& g) {
    const sem::FunV* ff = f.as_fun();
    const sem::FunV* gg = g.as_fun();
    if (!ff || !gg) return SemFormula::bot();
    auto fb = ff->f;
    auto gb = gg->f;
    return SemFormula::forall(ela->carrier, [ela, elb, fb, gb](const CarrierValue& u) {
      return SemFormula::forall(ela->carrier, [ela, elb, fb, gb, u](const CarrierValue& u2) {
        SemFormula prem = ela->eq(u, u2);
        if (!u.as_pred() || !u2.as_pred())
          return SemFormula::impl(SemFormula::bot(), SemFormula::top());
        SemFormula concl = elb->eq(CarrierValue::pred(fb(*u.as_pred())),
                                   CarrierValue::pred(gb(*u2.as_pred())));
        return SemFormula::impl(std::move(prem), std::move(concl));
      });
    });
  };
  // sym: \r.\e. el_sym (r (el_sym e))
  CodePtr sym = lam(lam(app(el_sym_code(), app(var(1), app(el_sym_code(), var(0))))));
  // trans: \r.\s.\e. el_trans (r (el_trans e (el_sym e))) (s e)
  CodePtr trans = lam(lam(lam(
      app(el_trans_code(), app(var(2), app(el_trans_code(), var(0), app(el_sym_code(), var(0)))),
          app(var(1), var(0))))));
  return mk_set("(map " + a->name + " " + b->name + ")", sem::map_c(a, b), eq, sym, trans);
}

SemFormula el_predicate_stability_formula(const EffSetPtr& a, const ElPredicate& f) {
  EffSetPtr ela = el_of(a);
  auto at = f.at;
  return SemFormula::forall(ela->carrier, [ela, at](const CarrierValue& u) {
    return SemFormula::forall(ela->carrier, [ela, at, u](const CarrierValue& u2) {
      if (!u.as_pred() || !u2.as_pred()) return SemFormula::impl(SemFormula::bot(), SemFormula::top());
      return SemFormula::impl(ela->eq(u, u2),
                              SemFormula::impl(at(*u.as_pred()), at(*u2.as_pred())));
    });
  });
}

std::optional<StabilityEvidence> check_el_predicate_stability(
    const EffSetPtr& a, const ElPredicate& f, const logic::SearchBudget& budget,
    std::vector<vm::CodePtr> extra_hints) {
  logic::SearchBudget b = budget;
  for (const auto& h : extra_hints) b.hint_realizers.push_back(h);
  // Transport shapes that cover predicates written with El-equality or plain
  // membership (the forward clause of the equality tuple moves members).
  b.hint_realizers.push_back(lam(lam(var(0))));
  b.hint_realizers.push_back(lam(lam(app(cF(var(1)), var(0)))));
  b.hint_realizers.push_back(
      lam(lam(app(el_trans_code(), app(el_sym_code(), var(1)), var(0)))));
  b.hint_realizers.push_back(lam(lam(app(el_trans_code(), var(1), var(0)))));
  logic::HoldsResult r = logic::holds(el_predicate_stability_formula(a, f), b);
  if (r.check.verdict != logic::Verdict::Yes || !r.realizer) return std::nullopt;
  return StabilityEvidence{*r.realizer, r.check, "checked"};
}

EffSetPtr subset_set(const std::string& name, const EffSetPtr& a, const ElPredicate& f,
                     const StabilityEvidence& ev) {
  if (ev.check.verdict != logic::Verdict::Yes)
    throw SetConstructionError("subset " + name + " lacks a Yes stability check: " +
                               ev.check.detail);
  auto at = f.at;
  auto eq = [a, at](const CarrierValue& x, const CarrierValue& y) {
    if (!sem::carrier_admits(a->carrier, x)) return SemFormula::bot();
    return SemFormula::conj(a->eq(x, y), at(ElValue::inject(a, x)));
  };
  // sym: \r. <sym_a (fst r), st (inject_cong (fst r)) (snd r)>
  CodePtr sym = lam(pair(app(a->sym_code, fst_of(var(0))),
                         app(ev.realizer, app(inject_cong_code(a), fst_of(var(0))),
                             snd_of(var(0)))));
  // trans: \r.\s. <trans_a (fst r) (fst s), snd r>
  CodePtr trans =
      lam(lam(pair(app(a->trans_code, fst_of(var(1)), fst_of(var(0))), snd_of(var(1)))));
  return mk_set(name, a->carrier, eq, sym, trans);
}

// ----------------------------------------------------------------- El layer

SemFormula el_eq(const EffSetPtr& x, const ElValue& u, const ElValue& v) {
  CarrierPtr c = x->carrier;
  auto eq = x->eq;
  std::vector<CarrierValue> hints = sem::el_witnesses(u);
  for (const auto& w : sem::el_witnesses(v)) merge_hint(hints, w);
  auto u_at = [u](const CarrierValue& a) { return sem::el_apply(u, a); };
  auto v_at = [v](const CarrierValue& a) { return sem::el_apply(v, a); };

  SemFormula stab = SemFormula::forall(
      c,
      [c, eq, u_at, hints](const CarrierValue& a) {
        return SemFormula::forall(
            c,
            [eq, u_at, a](const CarrierValue& b) {
              return SemFormula::impl(u_at(a), SemFormula::impl(eq(a, b), u_at(b)));
            },
            hints);
      },
      hints);
  SemFormula unic = SemFormula::forall(
      c,
      [c, eq, u_at, hints](const CarrierValue& a) {
        return SemFormula::forall(
            c,
            [eq, u_at, a](const CarrierValue& b) {
              return SemFormula::impl(u_at(a), SemFormula::impl(u_at(b), eq(a, b)));
            },
            hints);
      },
      hints);
  SemFormula exist = SemFormula::exists(c, u_at, hints);
  SemFormula equiv = SemFormula::forall(
      c, [u_at, v_at](const CarrierValue& a) { return SemFormula::iff(u_at(a), v_at(a)); },
      hints);
  return SemFormula::conj(std::move(stab),
                          SemFormula::conj(std::move(unic),
                                           SemFormula::conj(std::move(exist), std::move(equiv))));
}

EffSetPtr el_of(const EffSetPtr& x) {
  auto eq = [x](const CarrierValue& a, const CarrierValue& b) {
    const ElValue* u = a.as_pred();
    const ElValue* v = b.as_pred();
    if (!u || !v) return SemFormula::bot();
    return el_eq(x, *u, *v);
  };
  return mk_set("(el " + x->name + ")", sem::el_c(x), eq, el_sym_code(), el_trans_code());
}

ElValue el_inject(const EffSetPtr& x, const CarrierValue& v) {
  if (!sem::carrier_admits(x->carrier, v))
    throw std::invalid_argument("value " + v.to_string() + " outside carrier of " + x->name);
  return ElValue::inject(x, v);
}

SemFormula self_eq(const EffSetPtr& x, const CarrierValue& v) { return x->eq(v, v); }

ElValue description(const EffSetPtr& a, const ElPredicate& f) {
  auto at = f.at;
  ElValue pred = ElValue::user(f.name, [at](const CarrierValue& u) {
    if (!u.as_pred()) return SemFormula::bot();
    return at(*u.as_pred());
  });
  return ElValue::descr(a, pred);
}

ElValue restrict_el(const ElValue& u, const SemFormula& cond) {
  return ElValue::restrict_by(u, cond);
}

SemFormula forall_in(const EffSetPtr& x, std::function<SemFormula(const CarrierValue&)> body,
                     std::vector<CarrierValue> hints) {
  auto eq = x->eq;
  return SemFormula::forall(
      x->carrier,
      [eq, body](const CarrierValue& v) { return SemFormula::impl(eq(v, v), body(v)); },
      std::move(hints));
}

SemFormula exists_in(const EffSetPtr& x, std::function<SemFormula(const CarrierValue&)> body,
                     std::vector<CarrierValue> hints) {
  auto eq = x->eq;
  return SemFormula::exists(
      x->carrier,
      [eq, body](const CarrierValue& v) { return SemFormula::conj(eq(v, v), body(v)); },
      std::move(hints));
}

// ------------------------------------------------ mechanical realizer codes

vm::CodePtr el_sym_code() {
  // \r. <\p.\e. F (S (B p) e), <\p.\q. U (B p) (B q), <F E, <B, F>>>>
  static const CodePtr c = lam(tuple4(
      lam(lam(app(cF(var(2)), app(cS(var(2)), app(cB(var(2)), var(1)), var(0))))),
      lam(lam(app(cU(var(2)), app(cB(var(2)), var(1)), app(cB(var(2)), var(0))))),
      app(cF(var(0)), cE(var(0))), pair(cB(var(0)), cF(var(0)))));
  return c;
}

vm::CodePtr el_trans_code() {
  // \r.\s. <S_r, <U_r, <E_r, <\p. F_s (F_r p), \q. B_r (B_s q)>>>>
  static const CodePtr c = lam(lam(
      tuple4(cS(var(1)), cU(var(1)), cE(var(1)),
             pair(lam(app(cF(var(1)), app(cF(var(2)), var(0)))),
                  lam(app(cB(var(2)), app(cB(var(1)), var(0))))))));
  return c;
}

vm::CodePtr el_left_self_code() {
  // \r. el_trans r (el_sym r)
  static const CodePtr c =
      lam(app(el_trans_code(), var(0), app(el_sym_code(), var(0))));
  return c;
}

vm::CodePtr el_eq_patch_equiv_code() {
  // \t.\e. <S_t, <U_t, <E_t, e>>>
  static const CodePtr c = lam(lam(tuple4(cS(var(1)), cU(var(1)), cE(var(1)), var(0))));
  return c;
}

vm::CodePtr el_eq_from_inclusion_code() {
  // \tu.\tv.\e. <S_tu, <U_tu, <E_tu, <e, \q. S_tu E_tu (U_tv (e E_tu) q)>>>>
  static const CodePtr c = lam(lam(lam(tuple4(
      cS(var(2)), cU(var(2)), cE(var(2)),
      pair(var(0), lam(app(cS(var(3)), cE(var(3)),
                           app(cU(var(2)), app(var(1), cE(var(3))), var(0)))))))));
  return c;
}

vm::CodePtr el_eq_split_member_code(const EffSetPtr& x) {
  // \r. <el_trans r (el_sym r), S_r E_r (sym_x (F_r E_r))>
  return lam(pair(app(el_trans_code(), var(0), app(el_sym_code(), var(0))),
                  app(cS(var(0)), cE(var(0)),
                      app(x->sym_code, app(cF(var(0)), cE(var(0)))))));
}

vm::CodePtr el_eq_join_member_code() {
  // \w. <S_t, <U_t, <E_t, <\p. U_t px p, \e. S_t px e>>>>   (t = fst w, px = snd w)
  static const CodePtr c = lam(tuple4(
      cS(fst_of(var(0))), cU(fst_of(var(0))), cE(fst_of(var(0))),
      pair(lam(app(cU(fst_of(var(1))), snd_of(var(1)), var(0))),
           lam(app(cS(fst_of(var(1))), snd_of(var(1)), var(0))))));
  return c;
}

vm::CodePtr inject_cong_code(const EffSetPtr& x) {
  const CodePtr& t = x->trans_code;
  const CodePtr& y = x->sym_code;
  // \e. <\p.\q. T p q, <\p.\q. T (Y p) q, <e, <\p. T (Y e) p, \p. T e p>>>>
  return lam(tuple4(lam(lam(app(t, var(1), var(0)))),
                    lam(lam(app(t, app(y, var(1)), var(0)))), var(0),
                    pair(lam(app(t, app(y, var(1)), var(0))),
                         lam(app(t, var(1), var(0))))));
}

vm::CodePtr inject_reflect_code(const EffSetPtr& x) {
  // \r. T E_r (Y (F_r E_r))
  return lam(app(x->trans_code, cE(var(0)),
                 app(x->sym_code, app(cF(var(0)), cE(var(0))))));
}

vm::CodePtr self_to_inject_eq_code() {
  // \t. join <t, E_t>
  static const CodePtr c = lam(app(el_eq_join_member_code(), pair(var(0), cE(var(0)))));
  return c;
}

vm::CodePtr self_from_inject_eq_code() { return el_left_self_code(); }

vm::CodePtr member_self_code() {
  // \r.\p. U_r p p
  static const CodePtr c = lam(lam(app(cU(var(1)), var(0), var(0))));
  return c;
}

vm::CodePtr restrict_split_code() {
  // \r. < <S_r, <U_r, <E_r, <\p. fst (F_r p),
  //                          \e. B_r <e, snd (F_r E_r)>>>>>,
  //        snd (F_r E_r) >
  static const CodePtr c = lam(pair(
      tuple4(cS(var(0)), cU(var(0)), cE(var(0)),
             pair(lam(fst_of(app(cF(var(1)), var(0)))),
                  lam(app(cB(var(1)),
                          pair(var(0), snd_of(app(cF(var(1)), cE(var(1))))))))),
      snd_of(app(cF(var(0)), cE(var(0))))));
  return c;
}

vm::CodePtr restrict_intro_code() {
  // \w. <S_t, <U_t, <E_t, <\p. <F_t p, pf>, \q. B_t (fst q)>>>>
  // with t = fst w and pf = snd w.
  static const CodePtr c = lam(tuple4(
      cS(fst_of(var(0))), cU(fst_of(var(0))), cE(fst_of(var(0))),
      pair(lam(pair(app(cF(fst_of(var(1))), var(0)), snd_of(var(1)))),
           lam(app(cB(fst_of(var(1))), fst_of(var(0)))))));
  return c;
}

vm::CodePtr lift_truth_code(const std::vector<EffSetPtr>& low_sets, std::size_t k,
                            const vm::CodePtr& stability, const vm::CodePtr& low_truth) {
  const std::size_t n = low_sets.size();
  if (k > n) throw std::invalid_argument("lift count exceeds arity");
  auto t_arg = [n](std::size_t i) { return var(static_cast<int>(n - 1 - i)); };
  // For a lifted position: from t_i realizing eq_El(u_i, u_i) recover the
  // injected witness equality, its inverse, and the low self-equality.
  CodePtr applied_st = stability;
  CodePtr applied_truth = low_truth;
  for (std::size_t i = 0; i < n; ++i) {
    if (i < k) {
      CodePtr ri = app(self_to_inject_eq_code(), t_arg(i));     // eq_El(u_i, el x_i)
      CodePtr si = app(el_sym_code(), ri);                      // eq_El(el x_i, u_i)
      CodePtr di = app(el_trans_code(), si, ri);                // eq_El(el x_i, el x_i)
      CodePtr ei = app(inject_reflect_code(low_sets[i]), di);   // eq(x_i, x_i)
      applied_st = app(applied_st, si);
      applied_truth = app(applied_truth, ei);
    } else {
      applied_st = app(applied_st, t_arg(i));
      applied_truth = app(applied_truth, t_arg(i));
    }
  }
  CodePtr body = app(applied_st, applied_truth);
  for (std::size_t i = 0; i < n; ++i) body = lam(body);
  return body;
}

}  // namespace efftop::effsets
