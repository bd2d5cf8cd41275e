#include "efftop/effsets/sets.hpp"
#include "efftop/extract/extract.hpp"

// Realizer table for the equality axiom schemes. Element equality evidence
// is the five-part tuple <S,<U,<E,<F,B>>>> (stability, unicity, existence,
// forward and backward pointwise inclusion); the builders below assemble the
// conclusion tuple from the premise tuples and the carrier-level symmetry
// and transitivity codes of the component sets.

namespace efftop::extract {

namespace {

using effsets::EffSetPtr;
using kernel::Rule;
using vm::app;
using vm::CodePtr;
using vm::fst_of;
using vm::lam;
using vm::nat;
using vm::pair;
using vm::snd_of;
using vm::var;

CodePtr cS(CodePtr r) { return fst_of(std::move(r)); }
CodePtr cU(CodePtr r) { return fst_of(snd_of(std::move(r))); }
CodePtr cE(CodePtr r) { return fst_of(snd_of(snd_of(std::move(r)))); }
CodePtr cQ(CodePtr r) { return snd_of(snd_of(snd_of(std::move(r)))); }
CodePtr cF(CodePtr r) { return fst_of(cQ(std::move(r))); }
CodePtr cB(CodePtr r) { return snd_of(cQ(std::move(r))); }
CodePtr t4(CodePtr s, CodePtr u, CodePtr e, CodePtr f, CodePtr b) {
  return pair(std::move(s),
              pair(std::move(u), pair(std::move(e), pair(std::move(f), std::move(b)))));
}
CodePtr ident() { return lam(var(0)); }
const CodePtr& T(const EffSetPtr& s) { return s->trans_code; }
const CodePtr& Y(const EffSetPtr& s) { return s->sym_code; }
// eq(x,y) -> eq(y,y)
CodePtr self_right(const EffSetPtr& s, const CodePtr& r) { return app(T(s), app(Y(s), r), r); }

// Stability and unicity of an injected element: membership evidence is a
// carrier equality, so both reduce to transitivity chains.
CodePtr inj_stab(const EffSetPtr& s) { return lam(lam(app(T(s), var(1), var(0)))); }
CodePtr inj_unic(const EffSetPtr& s) { return lam(lam(app(T(s), app(Y(s), var(1)), var(0)))); }

// |<> = <>|: every clause is trivial over the one-point carrier.
CodePtr unit_refl() {
  return t4(lam(lam(nat(0))), lam(lam(nat(0))), nat(0), lam(nat(0)), lam(nat(0)));
}

// |u=u| => |v=v| => |u=v| over the one-point carrier: reuse the left
// premise's clauses; the inclusions swap in the other existence witness.
CodePtr unit_connect() {
  return lam(lam(t4(cS(var(1)), cU(var(1)), cE(var(1)), lam(cE(var(1))), lam(cE(var(2))))));
}

// |p_i(g) = p_i(g)| => |g = g|: a projection member carries a whole-pair
// membership in its first component.
CodePtr proj_refl(const EffSetPtr& a, const EffSetPtr& b) {
  EffSetPtr ab = effsets::prod_set(a, b);
  return lam(t4(inj_stab(ab), inj_unic(ab), fst_of(cE(var(0))), ident(), ident()));
}

// |g = g'| => |p1(g) = p1(g')| (and the p2 mirror). A p_i member is
// <whole-pair membership, component equality to the value>.
CodePtr proj_cong(const EffSetPtr& c, bool first) {
  auto comp = [first](CodePtr r) {
    return first ? fst_of(std::move(r)) : snd_of(std::move(r));
  };
  CodePtr s = lam(lam(pair(fst_of(var(1)), app(T(c), snd_of(var(1)), var(0)))));
  CodePtr u = lam(lam(app(
      T(c), app(Y(c), app(T(c), comp(fst_of(var(1))), snd_of(var(1)))),
      app(T(c), comp(fst_of(var(0))), snd_of(var(0))))));
  CodePtr e = pair(cE(var(0)), self_right(c, comp(cE(var(0)))));
  CodePtr f = lam(pair(app(cF(var(1)), fst_of(var(0))), snd_of(var(0))));
  CodePtr b = lam(pair(app(cB(var(1)), fst_of(var(0))), snd_of(var(0))));
  return lam(t4(std::move(s), std::move(u), std::move(e), std::move(f), std::move(b)));
}

// |<u,v> = <u,v>| => |u=u| and |v=v|: a pairing member nests the component
// memberships in its first two slots.
CodePtr pair_refl(const EffSetPtr& a, const EffSetPtr& b) {
  return lam(pair(t4(inj_stab(a), inj_unic(a), fst_of(cE(var(0))), ident(), ident()),
                  t4(inj_stab(b), inj_unic(b), fst_of(snd_of(cE(var(0)))), ident(), ident())));
}

// |u=u'| => |v=v'| => |<u,v> = <u',v'>|.
CodePtr pair_cong(const EffSetPtr& a, const EffSetPtr& b) {
  EffSetPtr ab = effsets::prod_set(a, b);
  // member r of <u,v> at z: <in u, <in v, componentwise eq to z>>
  CodePtr s = lam(lam(pair(
      fst_of(var(1)),
      pair(fst_of(snd_of(var(1))), app(T(ab), snd_of(snd_of(var(1))), var(0))))));
  CodePtr u = lam(lam(app(
      T(ab), app(Y(ab), snd_of(snd_of(var(1)))),
      app(T(ab),
          pair(app(cU(var(3)), fst_of(var(1)), fst_of(var(0))),
               app(cU(var(2)), fst_of(snd_of(var(1))), fst_of(snd_of(var(0))))),
          snd_of(snd_of(var(0)))))));
  CodePtr sa = app(cU(var(1)), cE(var(1)), cE(var(1)));
  CodePtr sb = app(cU(var(0)), cE(var(0)), cE(var(0)));
  CodePtr e = pair(cE(var(1)), pair(cE(var(0)), pair(std::move(sa), std::move(sb))));
  CodePtr f = lam(pair(app(cF(var(2)), fst_of(var(0))),
                       pair(app(cF(var(1)), fst_of(snd_of(var(0)))), snd_of(snd_of(var(0))))));
  CodePtr b2 = lam(pair(app(cB(var(2)), fst_of(var(0))),
                        pair(app(cB(var(1)), fst_of(snd_of(var(0)))), snd_of(snd_of(var(0))))));
  return lam(lam(t4(std::move(s), std::move(u), std::move(e), std::move(f), std::move(b2))));
}

// |u=u| => |v=v| => |p1<u,v> = u| (first=true) and the p2 mirror. A member
// of p_i<u,v> at w is <pairing member, eq(component, w)>; chain recovers
// eq(original component value, w).
CodePtr proj_beta(const EffSetPtr& a, const EffSetPtr& b, bool first) {
  const EffSetPtr& c = first ? a : b;
  auto memb = [first](CodePtr r) {  // component membership inside a pairing member
    return first ? fst_of(fst_of(std::move(r))) : fst_of(snd_of(fst_of(std::move(r))));
  };
  auto meq = [first](CodePtr r) {  // component equality inside the pairing member
    CodePtr m = snd_of(snd_of(fst_of(std::move(r))));
    return first ? fst_of(std::move(m)) : snd_of(std::move(m));
  };
  auto chain = [&](CodePtr r) {  // eq(component value, w)
    CodePtr rr = r;
    return app(T(c), meq(std::move(r)), snd_of(std::move(rr)));
  };
  // premise indices at tuple depth: p (u=u) var 1, q (v=v) var 0
  const int prem = first ? 3 : 2;  // premise for the projected component, under two lams
  CodePtr s = lam(lam(pair(fst_of(var(1)), app(T(c), snd_of(var(1)), var(0)))));
  CodePtr u = lam(lam(app(T(c), app(Y(c), chain(var(1))),
                          app(T(c), app(cU(var(prem)), memb(var(1)), memb(var(0))),
                              chain(var(0))))));
  CodePtr sa = app(cU(var(1)), cE(var(1)), cE(var(1)));
  CodePtr sb = app(cU(var(0)), cE(var(0)), cE(var(0)));
  CodePtr star = pair(cE(var(1)), pair(cE(var(0)), pair(sa, sb)));
  CodePtr e = pair(std::move(star), first ? sa : sb);
  const int prem1 = first ? 2 : 1;  // same premise under one lam
  CodePtr f = lam(app(cS(var(prem1)), memb(var(0)), chain(var(0))));
  CodePtr b2;
  if (first) {
    CodePtr sa0 = app(cU(var(2)), var(0), var(0));
    CodePtr sb0 = app(cU(var(1)), cE(var(1)), cE(var(1)));
    b2 = lam(pair(pair(var(0), pair(cE(var(1)), pair(sa0, sb0))), sa0));
  } else {
    CodePtr sa0 = app(cU(var(2)), cE(var(2)), cE(var(2)));
    CodePtr sb0 = app(cU(var(1)), var(0), var(0));
    b2 = lam(pair(pair(cE(var(2)), pair(var(0), pair(sa0, sb0))), sb0));
  }
  return lam(lam(t4(std::move(s), std::move(u), std::move(e), std::move(f), std::move(b2))));
}

// |p1 g = p1 g'| => |p2 g = p2 g'| => |g = g'|: push a whole-pair membership
// through the projection inclusions and recombine the component equalities.
CodePtr pair_eta(const EffSetPtr& a, const EffSetPtr& b) {
  EffSetPtr ab = effsets::prod_set(a, b);
  auto dir = [&](bool fwd) {
    auto incl = [&](int idx) { return fwd ? cF(var(idx)) : cB(var(idx)); };
    CodePtr j = app(incl(2), pair(var(0), self_right(a, fst_of(var(0)))));
    CodePtr j2 = app(incl(2), pair(var(0), self_right(a, fst_of(var(0)))));
    CodePtr ea = app(T(a), fst_of(fst_of(std::move(j))), snd_of(std::move(j2)));
    CodePtr k = app(incl(1), pair(var(0), self_right(b, snd_of(var(0)))));
    CodePtr k2 = app(incl(1), pair(var(0), self_right(b, snd_of(var(0)))));
    CodePtr eb = app(T(b), snd_of(fst_of(std::move(k))), snd_of(std::move(k2)));
    return lam(pair(std::move(ea), std::move(eb)));
  };
  return lam(lam(t4(inj_stab(ab), inj_unic(ab), fst_of(cE(var(1))), dir(true), dir(false))));
}

}  // namespace

CodePtr axiom_realizer(Rule rule, const std::vector<EffSetPtr>& comps) {
  auto need = [&](std::size_t n) {
    if (comps.size() != n)
      throw ExtractError(Xerrc::UnknownAxiomShape,
                         std::string(kernel::rule_name(rule)) + ": expected " +
                             std::to_string(n) + " component sets, got " +
                             std::to_string(comps.size()));
  };
  switch (rule) {
    case Rule::AxSym: need(1); return effsets::el_sym_code();
    case Rule::AxTrans: need(1); return effsets::el_trans_code();
    case Rule::AxUnitRefl: need(0); return unit_refl();
    case Rule::AxUnitConnect: need(0); return unit_connect();
    case Rule::AxP1Refl: need(2); return proj_refl(comps[0], comps[1]);
    case Rule::AxP2Refl: need(2); return proj_refl(comps[0], comps[1]);
    case Rule::AxP1Cong: need(2); return proj_cong(comps[0], true);
    case Rule::AxP2Cong: need(2); return proj_cong(comps[1], false);
    case Rule::AxPairRefl: need(2); return pair_refl(comps[0], comps[1]);
    case Rule::AxPairCong: need(2); return pair_cong(comps[0], comps[1]);
    case Rule::AxP1Beta: need(2); return proj_beta(comps[0], comps[1], true);
    case Rule::AxP2Beta: need(2); return proj_beta(comps[0], comps[1], false);
    case Rule::AxPairEta: need(2); return pair_eta(comps[0], comps[1]);
    default:
      throw ExtractError(Xerrc::UnknownAxiomShape,
                         std::string(kernel::rule_name(rule)) + " is not an axiom scheme");
  }
}

}  // namespace efftop::extract
