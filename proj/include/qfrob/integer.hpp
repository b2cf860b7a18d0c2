#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>

namespace qfrob {

// Arbitrary-precision integer. Values that fit in int64 are kept inline;
// anything larger lives in a GMP integer. Every operation is exact.
class Int {
 public:
  Int() noexcept = default;
  Int(int v) noexcept : small_(v) {}
  Int(long v) noexcept : small_(v) {}
  Int(long long v) noexcept : small_(static_cast<int64_t>(v)) {}
  explicit Int(const mpz_class& z);

  Int(const Int& o) : small_(o.small_), big_(o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr) {}
  Int(Int&&) noexcept = default;
  Int& operator=(const Int& o);
  Int& operator=(Int&&) noexcept = default;

  static Int parse(const std::string& s);

  bool is_small() const noexcept { return !big_; }
  // Only meaningful when is_small().
  int64_t small() const noexcept { return small_; }
  mpz_class to_mpz() const;
  bool fits_int64() const noexcept { return !big_; }

  int sign() const noexcept;
  bool is_zero() const noexcept { return !big_ && small_ == 0; }
  bool is_one() const noexcept { return !big_ && small_ == 1; }

  Int& operator+=(const Int& o);
  Int& operator-=(const Int& o);
  Int& operator*=(const Int& o);
  // this += a * b
  void add_mul(const Int& a, const Int& b);
  // this -= a * b
  void sub_mul(const Int& a, const Int& b);
  void negate();

  friend Int operator+(Int a, const Int& b) { a += b; return a; }
  friend Int operator-(Int a, const Int& b) { a -= b; return a; }
  friend Int operator*(Int a, const Int& b) { a *= b; return a; }
  Int operator-() const { Int r(*this); r.negate(); return r; }

  // Floor-style remainder in [0, |m|).
  Int mod(const Int& m) const;
  // Truncating quotient; divisor must be nonzero.
  Int tdiv(const Int& d) const;
  bool divisible_by(const Int& d) const;
  // Requires d | *this.
  Int divexact(const Int& d) const;
  Int abs() const;

  friend Int gcd(const Int& a, const Int& b);

  friend bool operator==(const Int& a, const Int& b) noexcept;
  friend std::strong_ordering operator<=>(const Int& a, const Int& b) noexcept;

  std::string to_string() const;
  std::size_t hash() const noexcept;

 private:
  void assign(const mpz_class& z);

  int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Int& x);

}  // namespace qfrob
