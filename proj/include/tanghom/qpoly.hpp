#pragma once

#include <map>
#include <stdexcept>
#include <string>

namespace tanghom {

// Laurent polynomial in q with integer coefficients, as exponent -> coeff.
using QPoly = std::map<int, long long>;

inline void qp_add(QPoly& a, const QPoly& b, long long scale = 1) {
  for (auto& [e, c] : b) {
    a[e] += c * scale;
    if (a[e] == 0) a.erase(e);
  }
}

inline QPoly qp_mul(const QPoly& a, const QPoly& b) {
  QPoly out;
  for (auto& [ea, ca] : a)
    for (auto& [eb, cb] : b) {
      out[ea + eb] += ca * cb;
      if (out[ea + eb] == 0) out.erase(ea + eb);
    }
  return out;
}

inline QPoly qp_shift(const QPoly& a, int d) {
  QPoly out;
  for (auto& [e, c] : a) out[e + d] = c;
  return out;
}

// exact division; throws when the remainder is nonzero
inline QPoly qp_div_exact(QPoly a, const QPoly& b) {
  QPoly out;
  while (!a.empty()) {
    auto [ea, ca] = *a.begin();
    auto [eb, cb] = *b.begin();
    if (ca % cb != 0) throw std::runtime_error("qp_div_exact: inexact division");
    long long q = ca / cb;
    int e = ea - eb;
    out[e] = q;
    QPoly t;
    t[e] = -q;
    qp_add(a, qp_mul(t, b));
  }
  return out;
}

inline std::string qp_str(const QPoly& p) {
  if (p.empty()) return "0";
  std::string s;
  for (auto& [e, c] : p) {
    if (!s.empty()) s += " + ";
    if (c != 1 || e == 0) s += std::to_string(c);
    if (e != 0) {
      if (c != 1) s += "*";
      s += "q";
      if (e != 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

}  // namespace tanghom
