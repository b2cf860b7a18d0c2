#pragma once

#include <string>

#include "qfrob/laurent.hpp"

namespace qfrob {

// Primitive gcd in Z[v, v^{-1}], normalized to lowest exponent 0 and positive
// leading coefficient. gcd(0, 0) = 0.
IntLaurent poly_gcd(const IntLaurent& a, const IntLaurent& b);

// Element of Q(v). The stored fraction is reduced, and the denominator has
// lowest exponent 0 and positive leading coefficient, so equal values are
// stored identically.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(int c) : num_(c), den_(1) {}
  RatFunc(const IntLaurent& p) : num_(p), den_(1) { normalize(); }
  RatFunc(const IntLaurent& num, const IntLaurent& den);

  const IntLaurent& num() const noexcept { return num_; }
  const IntLaurent& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_laurent() const noexcept { return den_.is_one(); }

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { a += b; return a; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { a -= b; return a; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { a *= b; return a; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { a /= b; return a; }
  RatFunc operator-() const;
  RatFunc inverse() const;
  RatFunc shifted(int m) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  void normalize();

  IntLaurent num_;
  IntLaurent den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

}  // namespace qfrob
