#include <cstdio>

#include "efftop/kernel/ast.hpp"

using namespace efftop::kernel;

int main() {
  auto one = one_ty();
  auto nat = nat_ty();
  auto show = [](const char* label, Rule r, std::vector<TypePtr> ts) {
    std::printf("%s:\n%s\n\n", label, to_string(axiom_formula(r, ts)).c_str());
  };
  show("ax-sym nat", Rule::AxSym, {nat});
  show("ax-trans unit", Rule::AxTrans, {one});
  show("ax-unit-refl", Rule::AxUnitRefl, {});
  show("ax-unit-connect", Rule::AxUnitConnect, {});
  show("ax-p1-beta unit nat", Rule::AxP1Beta, {one, nat});
  show("ax-pair-eta unit nat", Rule::AxPairEta, {one, nat});
  show("ax-p1-cong nat unit", Rule::AxP1Cong, {nat, one});
  show("ax-pair-refl unit nat", Rule::AxPairRefl, {one, nat});
  return 0;
}
