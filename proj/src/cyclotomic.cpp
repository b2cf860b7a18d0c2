#include "qfrob/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qfrob {

std::vector<Int> cyclotomic_poly(int l) {
  if (l < 1) throw std::invalid_argument("cyclotomic_poly: l must be positive");
  std::vector<Int> xl(static_cast<std::size_t>(l) + 1);
  xl[0] = Int(-1);
  xl[static_cast<std::size_t>(l)] = Int(1);
  IntLaurent p(0, xl);
  for (int d = 1; d < l; ++d) {
    if (l % d != 0) continue;
    p = *p.divexact(IntLaurent(0, cyclotomic_poly(d)));
  }
  return p.dense();
}

std::shared_ptr<const CycloContext> CycloContext::get(int l) {
  if (l < 2) throw std::invalid_argument("CycloContext: l must be at least 2");
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CycloContext>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(l);
  if (it != cache.end()) return it->second;

  auto ctx = std::make_shared<CycloContext>();
  ctx->l = l;
  std::vector<Int> phi_poly = cyclotomic_poly(l);
  ctx->phi = static_cast<int>(phi_poly.size()) - 1;
  const std::size_t n = static_cast<std::size_t>(ctx->phi);
  const int count = std::max(l, 2 * ctx->phi - 1);
  std::vector<Int> cur(n);
  cur[0] = Int(1);
  for (int k = 0; k < count; ++k) {
    ctx->xpow.push_back(cur);
    // multiply by x, then eliminate x^phi with the monic Phi_l
    Int top = cur[n - 1];
    for (std::size_t j = n - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = Int(0);
    if (!top.is_zero()) {
      for (std::size_t j = 0; j < n; ++j) cur[j].sub_mul(top, phi_poly[j]);
    }
  }
  cache.emplace(l, ctx);
  return ctx;
}

CycloInt::CycloInt(int l) : ctx_(CycloContext::get(l)), c_(static_cast<std::size_t>(ctx_->phi)) {}

CycloInt::CycloInt(int l, const Int& c) : CycloInt(l) { c_[0] = c; }

CycloInt CycloInt::eps_pow(int l, long k) {
  CycloInt r(l);
  long m = ((k % l) + l) % l;
  r.c_ = r.ctx_->xpow[static_cast<std::size_t>(m)];
  return r;
}

CycloInt CycloInt::from_poly(int l, const std::vector<Int>& p) {
  CycloInt r(l);
  const auto& ctx = *r.ctx_;
  const std::size_t n = static_cast<std::size_t>(ctx.phi);
  // fold exponents mod l first, then reduce each surviving power
  std::vector<Int> folded(static_cast<std::size_t>(l));
  for (std::size_t k = 0; k < p.size(); ++k) folded[k % static_cast<std::size_t>(l)] += p[k];
  for (std::size_t k = 0; k < folded.size(); ++k) {
    if (folded[k].is_zero()) continue;
    if (k < n) {
      r.c_[k] += folded[k];
    } else {
      const auto& row = ctx.xpow[k];
      for (std::size_t j = 0; j < n; ++j) r.c_[j].add_mul(folded[k], row[j]);
    }
  }
  return r;
}

bool CycloInt::is_zero() const noexcept {
  for (const auto& c : c_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool CycloInt::is_one() const noexcept {
  if (c_.empty() || !c_[0].is_one()) return false;
  for (std::size_t k = 1; k < c_.size(); ++k) {
    if (!c_[k].is_zero()) return false;
  }
  return true;
}

void CycloInt::check_compatible(const CycloInt& o) const {
  if (ctx_ && o.ctx_ && ctx_->l != o.ctx_->l) throw std::invalid_argument("CycloInt: mismatched l");
}

CycloInt& CycloInt::operator+=(const CycloInt& o) {
  check_compatible(o);
  if (!o.ctx_) return *this;
  if (!ctx_) {
    *this = o;
    return *this;
  }
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

CycloInt& CycloInt::operator-=(const CycloInt& o) {
  check_compatible(o);
  if (!o.ctx_) return *this;
  if (!ctx_) {
    *this = -o;
    return *this;
  }
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

CycloInt operator*(const CycloInt& a, const CycloInt& b) {
  a.check_compatible(b);
  if (!a.ctx_) return a;
  if (!b.ctx_) return b;
  const auto& ctx = *a.ctx_;
  const std::size_t n = static_cast<std::size_t>(ctx.phi);
  std::vector<Int> prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) prod[i + j].add_mul(a.c_[i], b.c_[j]);
  }
  CycloInt r;
  r.ctx_ = a.ctx_;
  r.c_.assign(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(n));
  for (std::size_t k = n; k < prod.size(); ++k) {
    if (prod[k].is_zero()) continue;
    const auto& row = ctx.xpow[k];
    for (std::size_t j = 0; j < n; ++j) r.c_[j].add_mul(prod[k], row[j]);
  }
  return r;
}

CycloInt& CycloInt::operator*=(const CycloInt& o) {
  *this = *this * o;
  return *this;
}

void CycloInt::add_mul(const CycloInt& a, const CycloInt& b) { *this += a * b; }

CycloInt CycloInt::operator-() const {
  CycloInt r(*this);
  for (auto& c : r.c_) c.negate();
  return r;
}

CycloInt& CycloInt::mul_eps(long k) {
  if (!ctx_) return *this;
  const int l = ctx_->l;
  long m = ((k % l) + l) % l;
  if (m == 0) return *this;
  *this = *this * eps_pow(l, m);
  return *this;
}

bool operator==(const CycloInt& a, const CycloInt& b) noexcept {
  if (a.ctx_ && b.ctx_) return a.ctx_->l == b.ctx_->l && a.c_ == b.c_;
  // an element without context is the zero of every Z[eps]
  if (!a.ctx_ && !b.ctx_) return true;
  return a.ctx_ ? a.is_zero() : b.is_zero();
}

std::string CycloInt::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Int& c = c_[k];
    if (c.is_zero()) continue;
    Int mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << "*";
    os << "e";
    if (k != 1) os << "^" << k;
  }
  return first ? "0" : os.str();
}

std::ostream& operator<<(std::ostream& os, const CycloInt& x) { return os << x.to_string(); }

const char* to_string(Point p) { return p == Point::ONE ? "ONE" : "EPS"; }

int eps_exponent(long m, int l) {
  long half = (l + 1) / 2;
  long r = (m % l) * half % l;
  if (r < 0) r += l;
  return static_cast<int>(r);
}

CycloInt specialize(const IntLaurent& f, int l, Point p) {
  if (l < 3 || l % 2 == 0) throw std::invalid_argument("specialize: l must be odd and at least 3");
  if (p == Point::ONE) return CycloInt(l, f.at_one());
  std::vector<Int> folded(static_cast<std::size_t>(l));
  const auto& d = f.dense();
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k].is_zero()) continue;
    folded[static_cast<std::size_t>(eps_exponent(f.low() + static_cast<long>(k), l))] += d[k];
  }
  return CycloInt::from_poly(l, folded);
}

}  // namespace qfrob
