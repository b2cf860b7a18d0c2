#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qfrob/cyclotomic.hpp"
#include "qfrob/laurent.hpp"
#include "qfrob/ratfunc.hpp"

namespace qfrob {

// Coefficient rings for TorusElement. Each supplies the arithmetic and the
// action of v = q^{1/2} used by the monomial rule.

struct LaurentRing {
  using Coeff = IntLaurent;
  Coeff zero() const { return {}; }
  Coeff one() const { return IntLaurent(1); }
  Coeff from_int(long c) const { return IntLaurent(Int(c)); }
  static bool is_zero(const Coeff& c) { return c.is_zero(); }
  void add(Coeff& a, const Coeff& b) const { a += b; }
  Coeff neg(const Coeff& a) const { return -a; }
  Coeff mul(const Coeff& a, const Coeff& b) const { return a * b; }
  Coeff vpow(Coeff c, long m) const {
    c.shift(static_cast<int>(m));
    return c;
  }
  Coeff vmul(const Coeff& a, const Coeff& b, long m) const {
    if (a.is_monomial() && b.is_monomial()) return IntLaurent::monomial(a.lead() * b.lead(), a.low() + b.low() + static_cast<int>(m));
    return vpow(a * b, m);
  }
  std::optional<Coeff> divexact(const Coeff& a, const Coeff& b) const { return a.divexact(b); }
  std::string str(const Coeff& c) const { return c.to_string(); }
  bool operator==(const LaurentRing&) const = default;
};

struct RatFuncRing {
  using Coeff = RatFunc;
  Coeff zero() const { return {}; }
  Coeff one() const { return RatFunc(1); }
  Coeff from_int(long c) const { return RatFunc(IntLaurent(Int(c))); }
  static bool is_zero(const Coeff& c) { return c.is_zero(); }
  void add(Coeff& a, const Coeff& b) const { a += b; }
  Coeff neg(const Coeff& a) const { return -a; }
  Coeff mul(const Coeff& a, const Coeff& b) const { return a * b; }
  Coeff vpow(const Coeff& c, long m) const { return c.shifted(static_cast<int>(m)); }
  Coeff vmul(const Coeff& a, const Coeff& b, long m) const { return vpow(a * b, m); }
  std::optional<Coeff> divexact(const Coeff& a, const Coeff& b) const { return a / b; }
  std::string str(const Coeff& c) const { return c.to_string(); }
  bool operator==(const RatFuncRing&) const = default;
};

// Z[eps] after specializing at ONE (v -> 1) or EPS (v -> eps^{(l+1)/2}).
struct CycloRing {
  int l = 3;
  Point point = Point::EPS;
  using Coeff = CycloInt;
  Coeff zero() const { return CycloInt(l); }
  Coeff one() const { return CycloInt(l, 1); }
  Coeff from_int(long c) const { return CycloInt(l, Int(c)); }
  static bool is_zero(const Coeff& c) { return c.is_zero(); }
  void add(Coeff& a, const Coeff& b) const { a += b; }
  Coeff neg(const Coeff& a) const { return -a; }
  Coeff mul(const Coeff& a, const Coeff& b) const { return a * b; }
  Coeff vpow(Coeff c, long m) const {
    if (point == Point::EPS) c.mul_eps(eps_exponent(m, l));
    return c;
  }
  Coeff vmul(const Coeff& a, const Coeff& b, long m) const {
    if (point == Point::ONE) return a * b;
    return a * b * CycloInt::eps_pow(l, eps_exponent(m, l));
  }
  std::optional<Coeff> divexact(const Coeff&, const Coeff&) const { return std::nullopt; }
  std::string str(const Coeff& c) const { return c.to_string(); }
  bool operator==(const CycloRing&) const = default;
};

// Prime field F_p; the torus over it is commutative, so v acts trivially.
struct ModpRing {
  uint64_t p = 3;
  using Coeff = uint64_t;
  Coeff zero() const { return 0; }
  Coeff one() const { return 1 % p; }
  Coeff from_int(long c) const {
    long r = c % static_cast<long>(p);
    return static_cast<uint64_t>(r < 0 ? r + static_cast<long>(p) : r);
  }
  static bool is_zero(Coeff c) { return c == 0; }
  void add(Coeff& a, Coeff b) const { a = (a + b) % p; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p - a; }
  Coeff mul(Coeff a, Coeff b) const { return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p); }
  Coeff vpow(Coeff c, long) const { return c; }
  Coeff vmul(Coeff a, Coeff b, long) const { return mul(a, b); }
  std::optional<Coeff> divexact(Coeff a, Coeff b) const {
    if (b == 0) return std::nullopt;
    // b^{p-2}
    Coeff inv = 1, base = b;
    for (uint64_t e = p - 2; e; e >>= 1) {
      if (e & 1) inv = mul(inv, base);
      base = mul(base, base);
    }
    return mul(a, inv);
  }
  std::string str(Coeff c) const { return std::to_string(c); }
  bool operator==(const ModpRing&) const = default;
};

}  // namespace qfrob
