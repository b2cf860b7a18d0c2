#pragma once

// Commutative q = 1 cluster mutation in the fraction field Q(x_1..x_n), with
// no shared code beyond plain integers. Fractions are unreduced pairs of
// polynomials and are compared by cross-multiplication.

#include <map>
#include <vector>

namespace classical {

using Mono = std::vector<int>;
using Poly = std::map<Mono, long long>;

inline Poly mono(int n, const Mono& e, long long c = 1) {
  Poly p;
  if (c != 0) p[e.empty() ? Mono(n, 0) : e] = c;
  return p;
}

inline Poly add(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [e, c] : b) {
    r[e] += c;
    if (r[e] == 0) r.erase(e);
  }
  return r;
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Mono e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      r[e] += ca * cb;
      if (r[e] == 0) r.erase(e);
    }
  }
  return r;
}

struct Frac {
  Poly num, den;
};

inline Frac mul(const Frac& a, const Frac& b) { return {mul(a.num, b.num), mul(a.den, b.den)}; }
inline Frac add(const Frac& a, const Frac& b) { return {add(mul(a.num, b.den), mul(b.num, a.den)), mul(a.den, b.den)}; }
inline Frac inv(const Frac& a) { return {a.den, a.num}; }
inline bool equal(const Frac& a, const Frac& b) { return mul(a.num, b.den) == mul(b.num, a.den); }

struct Seed {
  int n = 0;
  std::vector<int> ex;               // exchangeable indices
  std::vector<std::vector<int>> b;   // n x |ex|
  std::vector<Frac> x;

  static Seed initial(int n, std::vector<int> ex, std::vector<std::vector<int>> b) {
    Seed s{n, std::move(ex), std::move(b), {}};
    for (int i = 0; i < n; ++i) {
      Mono e(n, 0);
      e[i] = 1;
      s.x.push_back({mono(n, e), mono(n, Mono(n, 0))});
    }
    return s;
  }

  int col(int k) const {
    for (std::size_t c = 0; c < ex.size(); ++c) {
      if (ex[c] == k) return static_cast<int>(c);
    }
    return -1;
  }

  // x_k' x_k = prod x_i^{[b_ik]+} + prod x_i^{[-b_ik]+}; Fomin-Zelevinsky matrix rule.
  Seed mutate(int k) const {
    const int kc = col(k);
    Frac plus{mono(n, Mono(n, 0)), mono(n, Mono(n, 0))}, minus = plus;
    for (int i = 0; i < n; ++i) {
      for (int r = 0; r < b[i][kc]; ++r) plus = mul(plus, x[i]);
      for (int r = 0; r < -b[i][kc]; ++r) minus = mul(minus, x[i]);
    }
    Seed s = *this;
    s.x[k] = mul(add(plus, minus), inv(x[k]));
    for (int i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < ex.size(); ++j) {
        const int bik = b[i][kc];
        if (i == k || static_cast<int>(j) == kc) {
          s.b[i][j] = -b[i][j];
        } else {
          const int bkj = b[k][j];
          const int prod = bik * bkj;
          s.b[i][j] = b[i][j] + (prod > 0 ? (bik > 0 ? prod : -prod) : 0);
        }
      }
    }
    return s;
  }
};

}  // namespace classical
