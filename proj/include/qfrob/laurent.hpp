#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qfrob/integer.hpp"

namespace qfrob {

// Laurent polynomial in v = q^{1/2} with integer coefficients.
//
// Stored densely: coefficient of v^(low_ + k) is coeffs_[k]. The zero
// polynomial has no coefficients; otherwise the first and last stored
// coefficients are nonzero, so two equal polynomials are stored identically.
class IntLaurent {
 public:
  IntLaurent() = default;
  IntLaurent(int c) : IntLaurent(Int(c)) {}
  IntLaurent(const Int& c);
  IntLaurent(int low, std::vector<Int> coeffs);

  static IntLaurent monomial(const Int& c, int exp);
  // v^exp
  static IntLaurent v(int exp) { return monomial(Int(1), exp); }
  // q^exp = v^(2 exp)
  static IntLaurent q(int exp) { return monomial(Int(1), 2 * exp); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return low_ == 0 && coeffs_.size() == 1 && coeffs_[0].is_one(); }
  bool is_monomial() const noexcept { return coeffs_.size() == 1; }
  // Lowest / highest exponent with nonzero coefficient. Zero polynomial: 0.
  int low() const noexcept { return low_; }
  int high() const noexcept { return coeffs_.empty() ? 0 : low_ + static_cast<int>(coeffs_.size()) - 1; }
  const Int& lead() const { return coeffs_.back(); }
  const Int& trail() const { return coeffs_.front(); }
  Int coeff(int exp) const;
  const std::vector<Int>& dense() const noexcept { return coeffs_; }
  // Nonzero (exponent, coefficient) pairs in increasing exponent order.
  std::vector<std::pair<int, Int>> terms() const;
  std::size_t num_terms() const;

  IntLaurent& operator+=(const IntLaurent& o);
  IntLaurent& operator-=(const IntLaurent& o);
  IntLaurent& operator*=(const IntLaurent& o);
  // this += a * b
  void add_mul(const IntLaurent& a, const IntLaurent& b);
  friend IntLaurent operator+(IntLaurent a, const IntLaurent& b) { a += b; return a; }
  friend IntLaurent operator-(IntLaurent a, const IntLaurent& b) { a -= b; return a; }
  friend IntLaurent operator*(const IntLaurent& a, const IntLaurent& b);
  IntLaurent operator-() const;

  IntLaurent& scale(const Int& c);
  // Multiply by v^m.
  IntLaurent shifted(int m) const;
  IntLaurent& shift(int m) { if (!coeffs_.empty()) low_ += m; return *this; }
  // v -> v^{-1}
  IntLaurent bar() const;
  // v -> v^k, k != 0
  IntLaurent substitute(int k) const;
  // Value at v = 1.
  Int at_one() const;
  Int content() const;

  // Exact quotient in Z[v, v^{-1}] if it exists.
  std::optional<IntLaurent> divexact(const IntLaurent& d) const;

  friend bool operator==(const IntLaurent& a, const IntLaurent& b) noexcept {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string(const char* var = "v") const;
  std::size_t hash() const noexcept;

 private:
  void trim();

  int low_ = 0;
  std::vector<Int> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntLaurent& f);

// Balanced quantum integer [n] in q^d, i.e. (q^{dn} - q^{-dn}) / (q^d - q^{-d})
// expressed in v = q^{1/2}. Requires n >= 0.
IntLaurent qint(int n, int d);
// Same formula extended to negative n: [-n] = -[n].
IntLaurent qint_signed(int n, int d);
// [n]! in q^d.
IntLaurent qfactorial(int n, int d);
// Gaussian binomial [n choose k] in q^d; throws std::invalid_argument unless 0 <= k <= n.
IntLaurent qbinom(int n, int k, int d);

}  // namespace qfrob
