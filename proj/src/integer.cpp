#include "qfrob/integer.hpp"

#include <limits>
#include <stdexcept>

namespace qfrob {

namespace {

mpz_class make_mpz(int64_t v) { return mpz_class(static_cast<long>(v)); }

}  // namespace

Int::Int(const mpz_class& z) { assign(z); }

Int& Int::operator=(const Int& o) {
  if (this != &o) {
    small_ = o.small_;
    big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
  }
  return *this;
}

Int Int::parse(const std::string& s) {
  mpz_class z;
  if (z.set_str(s, 10) != 0) throw std::invalid_argument("not an integer: " + s);
  return Int(z);
}

void Int::assign(const mpz_class& z) {
  if (z.fits_slong_p()) {
    small_ = z.get_si();
    big_.reset();
  } else {
    small_ = 0;
    if (big_) {
      *big_ = z;
    } else {
      big_ = std::make_unique<mpz_class>(z);
    }
  }
}

mpz_class Int::to_mpz() const { return big_ ? *big_ : make_mpz(small_); }

int Int::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (small_ > 0) - (small_ < 0);
}

Int& Int::operator+=(const Int& o) {
  if (!big_ && !o.big_) {
    int64_t r;
    if (!__builtin_add_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  assign(to_mpz() + o.to_mpz());
  return *this;
}

Int& Int::operator-=(const Int& o) {
  if (!big_ && !o.big_) {
    int64_t r;
    if (!__builtin_sub_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  assign(to_mpz() - o.to_mpz());
  return *this;
}

Int& Int::operator*=(const Int& o) {
  if (!big_ && !o.big_) {
    int64_t r;
    if (!__builtin_mul_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  assign(to_mpz() * o.to_mpz());
  return *this;
}

void Int::add_mul(const Int& a, const Int& b) {
  if (!big_ && !a.big_ && !b.big_) {
    int64_t p, r;
    if (!__builtin_mul_overflow(a.small_, b.small_, &p) && !__builtin_add_overflow(small_, p, &r)) {
      small_ = r;
      return;
    }
  }
  mpz_class z = to_mpz();
  mpz_addmul(z.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  assign(z);
}

void Int::sub_mul(const Int& a, const Int& b) {
  if (!big_ && !a.big_ && !b.big_) {
    int64_t p, r;
    if (!__builtin_mul_overflow(a.small_, b.small_, &p) && !__builtin_sub_overflow(small_, p, &r)) {
      small_ = r;
      return;
    }
  }
  mpz_class z = to_mpz();
  mpz_submul(z.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  assign(z);
}

void Int::negate() {
  if (!big_ && small_ != std::numeric_limits<int64_t>::min()) {
    small_ = -small_;
    return;
  }
  assign(-to_mpz());
}

Int Int::mod(const Int& m) const {
  if (m.is_zero()) throw std::domain_error("Int::mod by zero");
  if (!big_ && !m.big_ && m.small_ != -1 && m.small_ != std::numeric_limits<int64_t>::min()) {
    int64_t am = m.small_ < 0 ? -m.small_ : m.small_;
    int64_t r = small_ % am;
    if (r < 0) r += am;
    return Int(r);
  }
  mpz_class r;
  mpz_class mm = ::abs(m.to_mpz());
  mpz_fdiv_r(r.get_mpz_t(), to_mpz().get_mpz_t(), mm.get_mpz_t());
  return Int(r);
}

Int Int::tdiv(const Int& d) const {
  if (d.is_zero()) throw std::domain_error("Int::tdiv by zero");
  if (!big_ && !d.big_ && !(small_ == std::numeric_limits<int64_t>::min() && d.small_ == -1)) {
    return Int(small_ / d.small_);
  }
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), to_mpz().get_mpz_t(), d.to_mpz().get_mpz_t());
  return Int(q);
}

bool Int::divisible_by(const Int& d) const {
  if (d.is_zero()) return is_zero();
  if (!big_ && !d.big_) {
    if (d.small_ == -1) return true;
    return small_ % d.small_ == 0;
  }
  return mpz_divisible_p(to_mpz().get_mpz_t(), d.to_mpz().get_mpz_t()) != 0;
}

Int Int::divexact(const Int& d) const {
  if (d.is_zero()) throw std::domain_error("Int::divexact by zero");
  if (!big_ && !d.big_ && !(small_ == std::numeric_limits<int64_t>::min() && d.small_ == -1)) {
    return Int(small_ / d.small_);
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), to_mpz().get_mpz_t(), d.to_mpz().get_mpz_t());
  return Int(q);
}

Int Int::abs() const { return sign() < 0 ? -*this : *this; }

Int gcd(const Int& a, const Int& b) {
  if (a.is_small() && b.is_small() && a.small_ != std::numeric_limits<int64_t>::min() &&
      b.small_ != std::numeric_limits<int64_t>::min()) {
    int64_t x = a.small_ < 0 ? -a.small_ : a.small_;
    int64_t y = b.small_ < 0 ? -b.small_ : b.small_;
    while (y != 0) {
      int64_t t = x % y;
      x = y;
      y = t;
    }
    return Int(x);
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Int(g);
}

bool operator==(const Int& a, const Int& b) noexcept {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  // Canonical form: a value that fits in int64 is never stored big.
  if (!a.big_ || !b.big_) return false;
  return *a.big_ == *b.big_;
}

std::strong_ordering operator<=>(const Int& a, const Int& b) noexcept {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  int c = cmp(a.to_mpz(), b.to_mpz());
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string Int::to_string() const { return big_ ? big_->get_str() : std::to_string(small_); }

std::size_t Int::hash() const noexcept {
  if (!big_) return std::hash<int64_t>{}(small_);
  return std::hash<std::string>{}(big_->get_str(16));
}

std::ostream& operator<<(std::ostream& os, const Int& x) { return os << x.to_string(); }

}  // namespace qfrob
