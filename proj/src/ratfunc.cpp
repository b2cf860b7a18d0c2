#include "qfrob/ratfunc.hpp"

#include <sstream>
#include <stdexcept>

namespace qfrob {

namespace {

// Shift to lowest exponent 0 and divide out the content; sign positive lead.
IntLaurent primitive_part(const IntLaurent& a) {
  if (a.is_zero()) return a;
  IntLaurent p = a.shifted(-a.low());
  Int c = p.content();
  if (p.lead().sign() < 0) c.negate();
  if (!c.is_one()) p = *p.divexact(IntLaurent(c));
  return p;
}

// Pseudo-remainder of a by b, both ordinary polynomials (low() == 0).
IntLaurent pseudo_rem(const IntLaurent& a, const IntLaurent& b) {
  std::vector<Int> r = a.dense();
  const auto& d = b.dense();
  const Int& lb = d.back();
  std::size_t nb = d.size();
  while (r.size() >= nb) {
    Int lr = r.back();
    std::size_t shift = r.size() - nb;
    for (auto& c : r) c *= lb;
    for (std::size_t j = 0; j < nb; ++j) r[shift + j].sub_mul(lr, d[j]);
    r.pop_back();
    while (!r.empty() && r.back().is_zero()) r.pop_back();
  }
  return IntLaurent(0, std::move(r));
}

}  // namespace

IntLaurent poly_gcd(const IntLaurent& a, const IntLaurent& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  IntLaurent x = primitive_part(a), y = primitive_part(b);
  Int cont = gcd(a.content(), b.content());
  if (x.high() < y.high()) std::swap(x, y);
  while (!y.is_zero()) {
    IntLaurent r = pseudo_rem(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  x.scale(cont);
  return x;
}

RatFunc::RatFunc(const IntLaurent& num, const IntLaurent& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = IntLaurent(1);
    return;
  }
  IntLaurent g = poly_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = *num_.divexact(g);
    den_ = *den_.divexact(g);
  }
  int s = den_.low();
  num_.shift(-s);
  den_.shift(-s);
  if (den_.lead().sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::operator-() const {
  RatFunc r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw std::domain_error("RatFunc: inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::shifted(int m) const {
  RatFunc r(*this);
  r.num_.shift(m);
  return r;
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::ostringstream os;
  os << "(" << num_ << ")/(" << den_ << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

}  // namespace qfrob
