#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qfrob/laurent.hpp"

namespace qfrob {

// Coefficients of the l-th cyclotomic polynomial, lowest degree first.
std::vector<Int> cyclotomic_poly(int l);

// Reduction data for Z[x]/Phi_l, shared by all elements with the same l.
struct CycloContext {
  int l = 0;
  int phi = 0;
  // xpow[k] = x^k mod Phi_l, each of length phi, for 0 <= k < max(l, 2 phi - 1).
  std::vector<std::vector<Int>> xpow;

  static std::shared_ptr<const CycloContext> get(int l);
};

// Element of Z[eps] = Z[x]/Phi_l(x), stored as phi(l) coefficients.
class CycloInt {
 public:
  CycloInt() = default;
  explicit CycloInt(int l);
  CycloInt(int l, const Int& c);
  // eps^k for any integer k.
  static CycloInt eps_pow(int l, long k);
  // Reduce an arbitrary polynomial in eps (lowest degree first).
  static CycloInt from_poly(int l, const std::vector<Int>& p);

  int l() const noexcept { return ctx_ ? ctx_->l : 0; }
  const std::vector<Int>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  CycloInt& operator+=(const CycloInt& o);
  CycloInt& operator-=(const CycloInt& o);
  CycloInt& operator*=(const CycloInt& o);
  friend CycloInt operator+(CycloInt a, const CycloInt& b) { a += b; return a; }
  friend CycloInt operator-(CycloInt a, const CycloInt& b) { a -= b; return a; }
  friend CycloInt operator*(const CycloInt& a, const CycloInt& b);
  CycloInt operator-() const;
  // this *= eps^k
  CycloInt& mul_eps(long k);
  // this += a * b
  void add_mul(const CycloInt& a, const CycloInt& b);

  friend bool operator==(const CycloInt& a, const CycloInt& b) noexcept;

  std::string to_string() const;

 private:
  void check_compatible(const CycloInt& o) const;

  std::shared_ptr<const CycloContext> ctx_;
  std::vector<Int> c_;
};

std::ostream& operator<<(std::ostream& os, const CycloInt& x);

enum class Point { ONE, EPS };

const char* to_string(Point p);

// Exponent of eps that v^m maps to at EPS: m (l+1)/2 mod l, in [0, l).
int eps_exponent(long m, int l);

// Ring map Z[v, v^{-1}] -> Z[eps]: v -> 1 (ONE) or v -> eps^{(l+1)/2} (EPS).
CycloInt specialize(const IntLaurent& f, int l, Point p);

}  // namespace qfrob
