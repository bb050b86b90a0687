#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tanghom/frobenius.hpp"

using namespace tanghom::frob;

namespace {

// multiply two one-circle combos via the structure constants
Combo combo_mult(const Combo& a, const Combo& b) {
  Combo out;
  for (auto& [ma, ca] : a.t)
    for (auto& [mb, cb] : b.t) {
      Combo p = mult(ma ? Basis::X : Basis::One, mb ? Basis::X : Basis::One);
      out.add(p, ca * cb);
    }
  return out;
}

}  // namespace

TEST_CASE("multiplication table") {
  CHECK(mult(Basis::One, Basis::One) == Combo(0));
  CHECK(mult(Basis::One, Basis::X) == Combo(1));
  CHECK(mult(Basis::X, Basis::One) == Combo(1));
  CHECK(mult(Basis::X, Basis::X).zero());
}

TEST_CASE("comultiplication") {
  Combo dx = comult(Basis::X);
  CHECK(dx.t == std::map<Mask, long long>{{3, 1}});
  Combo d1 = comult(Basis::One);
  CHECK(d1.t == std::map<Mask, long long>{{1, 1}, {2, 1}});
}

TEST_CASE("unit and counit") {
  CHECK(unit() == Basis::One);
  CHECK(counit(Basis::X) == 1);
  CHECK(counit(Basis::One) == 0);
}

TEST_CASE("counit axiom (eps (x) id) Delta = id") {
  for (Basis b : {Basis::One, Basis::X}) {
    Combo d = comult(b);
    Combo out;
    for (auto& [m, c] : d.t) {
      long long e = counit((m & 1) ? Basis::X : Basis::One);
      if (e) out.add((m >> 1) & 1, c * e);
    }
    CHECK(out == Combo(b == Basis::X ? 1 : 0));
  }
}

TEST_CASE("associativity over the basis") {
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z) {
        Combo xy = mult(Basis(x), Basis(y));
        Combo yz = mult(Basis(y), Basis(z));
        Combo lhs = combo_mult(xy, Combo(z));
        Combo rhs = combo_mult(Combo(x), yz);
        CHECK(lhs == rhs);
      }
}

TEST_CASE("frobenius condition Delta m = (m (x) id)(id (x) Delta)") {
  // on basis pairs (x,y): lhs = Delta(xy); rhs = sum over Delta(y) of x*y' (x) y''
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      Combo lhs;
      for (auto& [m, c] : mult(Basis(x), Basis(y)).t) lhs.add(comult(m ? Basis::X : Basis::One), c);
      Combo rhs;
      for (auto& [m, c] : comult(Basis(y)).t) {
        int y1 = m & 1, y2 = (m >> 1) & 1;
        for (auto& [p, cp] : mult(Basis(x), Basis(y1)).t)
          rhs.add((Mask)(p | (Mask(y2) << 1)), c * cp);
      }
      CHECK(lhs == rhs);
    }
}

TEST_CASE("degrees") {
  CHECK(degree(Basis::One) == -1);
  CHECK(degree(Basis::X) == 1);
  // deg m = +1: check on all pairs with nonzero product
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (auto& [m, c] : mult(Basis(x), Basis(y)).t) {
        (void)c;
        CHECK(degree(m ? Basis::X : Basis::One) ==
              degree(Basis(x)) + degree(Basis(y)) + 1);
      }
  // deg Delta = +1
  for (int x = 0; x < 2; ++x)
    for (auto& [m, c] : comult(Basis(x)).t) {
      (void)c;
      CHECK(mask_degree(m, 2) == degree(Basis(x)) + 1);
    }
}
