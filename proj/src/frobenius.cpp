#include "tanghom/frobenius.hpp"

namespace tanghom::frob {

Combo mult(Basis x, Basis y) {
  Combo r;
  if (x == Basis::X && y == Basis::X) return r;  // X*X = 0
  r.add(x == Basis::X || y == Basis::X ? Mask{1} : Mask{0}, 1);
  return r;
}

Combo comult(Basis x) {
  Combo r;
  if (x == Basis::X) {
    r.add(Mask{3}, 1);  // X@X
  } else {
    r.add(Mask{2}, 1);  // One@X
    r.add(Mask{1}, 1);  // X@One
  }
  return r;
}

Basis unit() { return Basis::One; }

long long counit(Basis x) { return x == Basis::X ? 1 : 0; }

}  // namespace tanghom::frob
