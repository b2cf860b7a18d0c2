#include "qfrob/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qfrob {

IntLaurent::IntLaurent(const Int& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

IntLaurent::IntLaurent(int low, std::vector<Int> coeffs) : low_(low), coeffs_(std::move(coeffs)) { trim(); }

IntLaurent IntLaurent::monomial(const Int& c, int exp) {
  IntLaurent r(c);
  if (!r.is_zero()) r.low_ = exp;
  return r;
}

void IntLaurent::trim() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first].is_zero()) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1].is_zero()) --last;
  if (first > 0 || last < coeffs_.size()) {
    coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(last), coeffs_.end());
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
    low_ += static_cast<int>(first);
  }
}

Int IntLaurent::coeff(int exp) const {
  if (coeffs_.empty() || exp < low_ || exp > high()) return Int(0);
  return coeffs_[static_cast<std::size_t>(exp - low_)];
}

std::vector<std::pair<int, Int>> IntLaurent::terms() const {
  std::vector<std::pair<int, Int>> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) out.emplace_back(low_ + static_cast<int>(k), coeffs_[k]);
  }
  return out;
}

std::size_t IntLaurent::num_terms() const {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return !c.is_zero(); }));
}

namespace {

// acc += sign * o, where acc may be reallocated to cover o's range.
void accumulate(int& low, std::vector<Int>& acc, const IntLaurent& o, bool subtract) {
  if (o.is_zero()) return;
  if (acc.empty()) {
    low = o.low();
    acc = o.dense();
    if (subtract) {
      for (auto& c : acc) c.negate();
    }
    return;
  }
  int new_low = std::min(low, o.low());
  int new_high = std::max(low + static_cast<int>(acc.size()) - 1, o.high());
  if (new_low < low || new_high > low + static_cast<int>(acc.size()) - 1) {
    std::vector<Int> grown(static_cast<std::size_t>(new_high - new_low + 1));
    for (std::size_t k = 0; k < acc.size(); ++k) grown[static_cast<std::size_t>(low - new_low) + k] = std::move(acc[k]);
    acc = std::move(grown);
    low = new_low;
  }
  const auto& od = o.dense();
  std::size_t off = static_cast<std::size_t>(o.low() - low);
  for (std::size_t k = 0; k < od.size(); ++k) {
    if (subtract) {
      acc[off + k] -= od[k];
    } else {
      acc[off + k] += od[k];
    }
  }
}

}  // namespace

IntLaurent& IntLaurent::operator+=(const IntLaurent& o) {
  accumulate(low_, coeffs_, o, false);
  trim();
  return *this;
}

IntLaurent& IntLaurent::operator-=(const IntLaurent& o) {
  accumulate(low_, coeffs_, o, true);
  trim();
  return *this;
}

IntLaurent operator*(const IntLaurent& a, const IntLaurent& b) {
  if (a.is_zero() || b.is_zero()) return IntLaurent();
  std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j].add_mul(a.coeffs_[i], b.coeffs_[j]);
  }
  return IntLaurent(a.low_ + b.low_, std::move(out));
}

IntLaurent& IntLaurent::operator*=(const IntLaurent& o) {
  *this = *this * o;
  return *this;
}

void IntLaurent::add_mul(const IntLaurent& a, const IntLaurent& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (a.is_monomial() && b.is_monomial()) {
    *this += monomial(a.coeffs_[0] * b.coeffs_[0], a.low_ + b.low_);
    return;
  }
  *this += a * b;
}

IntLaurent IntLaurent::operator-() const {
  IntLaurent r(*this);
  for (auto& c : r.coeffs_) c.negate();
  return r;
}

IntLaurent& IntLaurent::scale(const Int& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

IntLaurent IntLaurent::shifted(int m) const {
  IntLaurent r(*this);
  r.shift(m);
  return r;
}

IntLaurent IntLaurent::bar() const {
  if (is_zero()) return {};
  std::vector<Int> rev(coeffs_.rbegin(), coeffs_.rend());
  return IntLaurent(-high(), std::move(rev));
}

IntLaurent IntLaurent::substitute(int k) const {
  if (k == 0) throw std::invalid_argument("IntLaurent::substitute: k must be nonzero");
  IntLaurent r;
  for (auto& [e, c] : terms()) r += monomial(c, e * k);
  return r;
}

Int IntLaurent::at_one() const {
  Int s(0);
  for (const auto& c : coeffs_) s += c;
  return s;
}

Int IntLaurent::content() const {
  Int g(0);
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) g = gcd(g, c);
  }
  return g;
}

std::optional<IntLaurent> IntLaurent::divexact(const IntLaurent& d) const {
  if (d.is_zero()) throw std::domain_error("IntLaurent::divexact by zero");
  if (is_zero()) return IntLaurent();
  if (d.is_monomial()) {
    IntLaurent r;
    r.low_ = low_ - d.low_;
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
      if (!c.divisible_by(d.coeffs_[0])) return std::nullopt;
      r.coeffs_.push_back(c.divexact(d.coeffs_[0]));
    }
    return r;
  }
  // Both stored with nonzero constant term after the implicit shift, so
  // Laurent divisibility is ordinary polynomial divisibility.
  const std::size_t na = coeffs_.size();
  const std::size_t nd = d.coeffs_.size();
  if (na < nd) return std::nullopt;
  std::vector<Int> rem = coeffs_;
  std::vector<Int> quot(na - nd + 1);
  const Int& lead = d.coeffs_.back();
  for (std::size_t k = na; k-- >= nd;) {
    if (rem[k].is_zero()) continue;
    if (!rem[k].divisible_by(lead)) return std::nullopt;
    Int qk = rem[k].divexact(lead);
    std::size_t shift = k - (nd - 1);
    for (std::size_t j = 0; j < nd; ++j) rem[shift + j].sub_mul(qk, d.coeffs_[j]);
    quot[shift] = std::move(qk);
    if (k == nd - 1) break;
  }
  for (const auto& r : rem) {
    if (!r.is_zero()) return std::nullopt;
  }
  return IntLaurent(low_ - d.low_, std::move(quot));
}

std::string IntLaurent::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Int& c = coeffs_[k];
    if (c.is_zero()) continue;
    int e = low_ + static_cast<int>(k);
    Int mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::size_t IntLaurent::hash() const noexcept {
  std::size_t h = std::hash<int>{}(low_);
  for (const auto& c : coeffs_) h = h * 1000003u ^ c.hash();
  return h;
}

std::ostream& operator<<(std::ostream& os, const IntLaurent& f) { return os << f.to_string(); }

IntLaurent qint_signed(int n, int d) {
  if (d <= 0) throw std::invalid_argument("qint: d must be positive");
  if (n < 0) return -qint_signed(-n, d);
  // sum_{j=0}^{n-1} q^{d(n-1-2j)} with q = v^2
  IntLaurent r;
  for (int j = 0; j < n; ++j) r += IntLaurent::v(2 * d * (n - 1 - 2 * j));
  return r;
}

IntLaurent qint(int n, int d) {
  if (n < 0) throw std::invalid_argument("qint: n must be nonnegative");
  return qint_signed(n, d);
}

IntLaurent qfactorial(int n, int d) {
  if (n < 0) throw std::invalid_argument("qfactorial: n must be nonnegative");
  IntLaurent r(1);
  for (int k = 2; k <= n; ++k) r *= qint(k, d);
  return r;
}

IntLaurent qbinom(int n, int k, int d) {
  if (k < 0 || k > n) throw std::invalid_argument("qbinom: need 0 <= k <= n");
  k = std::min(k, n - k);
  IntLaurent num(1), den(1);
  for (int j = 0; j < k; ++j) {
    num *= qint(n - j, d);
    den *= qint(j + 1, d);
  }
  auto r = num.divexact(den);
  if (!r) throw std::logic_error("qbinom: non-exact division");
  return *r;
}

}  // namespace qfrob
