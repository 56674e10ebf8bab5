// Evaluates the closed form for a parameter ideal of a 3-dimensional regular
// ring and checks it against the staircase oracle.

#include "hkrees/hkrees.hpp"

#include <iostream>

int main() {
  using namespace hkrees;
  const ReesInstanceMonomial inst({1, 1, 1});
  for (int s = 1; s <= 4; ++s) {
    const ExactInt formula = cm_sop_hk(inst.d(), inst.e0(), s);
    const ExactInt oracle = rees_colength_monomial(inst, s);
    std::cout << "s=" << s << "  formula=" << formula << "  oracle=" << oracle
              << (formula == oracle ? "  ok" : "  MISMATCH") << "\n";
  }
  std::cout << "eventual polynomial: " << cm_sop_hk_polynomial(3, 1).to_string("s") << "\n";
  std::cout << "e_HK = " << to_string(ehk_cm_sop(3, 1)) << "\n";
}
