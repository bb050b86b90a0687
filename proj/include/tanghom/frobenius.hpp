#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace tanghom::frob {

// Rank-2 Frobenius algebra V = Z<One, X>, deg One = -1, deg X = +1.
// mult and comult raise degree by one, unit and counit lower it by one.
enum class Basis : uint8_t { One = 0, X = 1 };

inline int degree(Basis b) { return b == Basis::X ? 1 : -1; }

// A pure tensor over k ordered circles, packed as a bitmask: bit c set
// means circle c carries X, clear means One.
using Mask = uint64_t;

inline int mask_degree(Mask m, int k) {
  int d = 0;
  for (int c = 0; c < k; ++c) d += (m >> c) & 1 ? 1 : -1;
  return d;
}

// Z-linear combination of pure tensors, kept normalized (no zero terms).
struct Combo {
  std::map<Mask, long long> t;

  Combo() = default;
  explicit Combo(Mask m, long long c = 1) { add(m, c); }

  void add(Mask m, long long c) {
    if (c == 0) return;
    auto it = t.find(m);
    if (it == t.end()) {
      t.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) t.erase(it);
    }
  }
  void add(const Combo& o, long long scale = 1) {
    for (auto& [m, c] : o.t) add(m, c * scale);
  }
  bool zero() const { return t.empty(); }
  bool operator==(const Combo& o) const { return t == o.t; }
};

// m(x,y): One is the unit, X*X = 0.
Combo mult(Basis x, Basis y);
// Delta(One) = One@X + X@One, Delta(X) = X@X; factor order is immaterial
// since V is cocommutative.  Masks use bit 0 / bit 1 for the two factors.
Combo comult(Basis x);
Basis unit();
long long counit(Basis x);

// Structure maps on mask-level states, used by the saddle engine.
//
// merge_bits: value of the merged circle, or -1 when the term dies (X*X).
inline int merge_bits(int bx, int by) { return (bx & by) ? -1 : (bx | by); }
// split_bits: the comultiplication of a single bit as (bit0, bit1) pairs.
inline const std::vector<std::pair<int, int>>& split_bits(int bx) {
  static const std::vector<std::pair<int, int>> one = {{0, 1}, {1, 0}};
  static const std::vector<std::pair<int, int>> x = {{1, 1}};
  return bx ? x : one;
}

}  // namespace tanghom::frob
