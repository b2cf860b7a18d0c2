#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qfrob/exponent.hpp"
#include "qfrob/rings.hpp"
#include "qfrob/rootdatum.hpp"

namespace qfrob {

// Skew-symmetric integer form on Z^J.
class SkewForm {
 public:
  SkewForm() = default;
  explicit SkewForm(IMat m);
  static SkewForm zero(int n) { return SkewForm(IMat(n, IVec(n, 0))); }

  int size() const noexcept { return static_cast<int>(m_.size()); }
  int operator()(int i, int j) const { return m_[i][j]; }
  const IMat& matrix() const noexcept { return m_; }
  long eval(const ExpVec& a, const ExpVec& b) const;
  // a^T Lambda as a row, so eval(a, b) = dot(row(a), b).
  std::vector<long> row(const ExpVec& a) const;

  friend bool operator==(const SkewForm& a, const SkewForm& b) = default;

 private:
  IMat m_;
};

inline long dot(const std::vector<long>& row, const ExpVec& b) {
  long s = 0;
  for (int k = 0; k < b.size(); ++k) s += row[k] * b[k];
  return s;
}

struct NonExactDivision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class Ring>
struct TorusSpace {
  SkewForm form;
  Ring ring;
  int rank() const { return form.size(); }
};

// Finite sum of c_a x^a with x^a x^b = v^{Lambda(a,b)} x^{a+b}. Terms are
// kept sorted by exponent (lexicographic) with nonzero coefficients.
template <class Ring>
class TorusElement {
 public:
  using Coeff = typename Ring::Coeff;
  using Space = TorusSpace<Ring>;
  using Term = std::pair<ExpVec, Coeff>;

  TorusElement() = default;
  explicit TorusElement(std::shared_ptr<const Space> sp) : sp_(std::move(sp)) {}

  static TorusElement monomial(std::shared_ptr<const Space> sp, const ExpVec& a, Coeff c) {
    TorusElement r(std::move(sp));
    if (!Ring::is_zero(c)) r.terms_.emplace_back(a, std::move(c));
    return r;
  }
  static TorusElement monomial(std::shared_ptr<const Space> sp, const ExpVec& a) {
    Coeff one = sp->ring.one();
    return monomial(std::move(sp), a, one);
  }
  static TorusElement one(std::shared_ptr<const Space> sp) {
    int n = sp->rank();
    return monomial(std::move(sp), ExpVec(n));
  }
  // Build from unsorted terms; equal exponents are summed.
  static TorusElement from_terms(std::shared_ptr<const Space> sp, std::vector<Term> terms) {
    TorusElement r(std::move(sp));
    r.terms_ = std::move(terms);
    r.canonicalize();
    return r;
  }

  const std::shared_ptr<const Space>& space() const noexcept { return sp_; }
  const Ring& ring() const { return sp_->ring; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  const Term& leading() const { return terms_.back(); }
  Coeff coeff(const ExpVec& a) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), a, [](const Term& t, const ExpVec& x) { return t.first < x; });
    if (it != terms_.end() && it->first == a) return it->second;
    return ring().zero();
  }

  TorusElement& operator+=(const TorusElement& o) { return merge(o, false); }
  TorusElement& operator-=(const TorusElement& o) { return merge(o, true); }
  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }

  friend TorusElement operator*(const TorusElement& f, const TorusElement& g) {
    f.check_space(g);
    TorusElement r(f.sp_);
    if (f.is_zero() || g.is_zero()) return r;
    const Ring& R = f.ring();
    r.terms_.reserve(f.terms_.size() * g.terms_.size());
    for (const auto& [a, ca] : f.terms_) {
      std::vector<long> row = f.sp_->form.row(a);
      for (const auto& [b, cb] : g.terms_) r.terms_.emplace_back(a + b, R.vmul(ca, cb, dot(row, b)));
    }
    // A single-term factor keeps the order, so no sort is needed.
    if (f.terms_.size() == 1 || g.terms_.size() == 1) {
      r.drop_zeros();
    } else {
      r.canonicalize();
    }
    return r;
  }
  TorusElement& operator*=(const TorusElement& o) { return *this = *this * o; }

  TorusElement scaled(const Coeff& c) const {
    TorusElement r(sp_);
    for (const auto& [a, x] : terms_) {
      Coeff y = ring().mul(x, c);
      if (!Ring::is_zero(y)) r.terms_.emplace_back(a, std::move(y));
    }
    return r;
  }
  // Multiply every coefficient by v^m.
  TorusElement vshifted(long m) const {
    TorusElement r(sp_);
    for (const auto& [a, x] : terms_) r.terms_.emplace_back(a, ring().vpow(x, m));
    return r;
  }

  TorusElement pow(int n) const {
    if (n < 0) throw std::invalid_argument("TorusElement::pow: negative exponent");
    TorusElement r = one(sp_), base = *this;
    while (n) {
      if (n & 1) r *= base;
      n >>= 1;
      if (n) base *= base;
    }
    return r;
  }

  friend bool operator==(const TorusElement& a, const TorusElement& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k) {
      if (!(a.terms_[k].first == b.terms_[k].first) || !(a.terms_[k].second == b.terms_[k].second)) return false;
    }
    return true;
  }

  // Same terms, different space (e.g. a different form or a specialization).
  template <class Ring2, class F>
  TorusElement<Ring2> map(std::shared_ptr<const TorusSpace<Ring2>> sp, F&& f) const {
    std::vector<typename TorusElement<Ring2>::Term> out;
    out.reserve(terms_.size());
    for (const auto& [a, x] : terms_) {
      auto y = f(a, x);
      if (y) out.push_back(std::move(*y));
    }
    return TorusElement<Ring2>::from_terms(std::move(sp), std::move(out));
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t k = terms_.size(); k-- > 0;) {
      if (k + 1 != terms_.size()) os << " + ";
      os << "(" << ring().str(terms_[k].second) << ")*x^" << terms_[k].first.to_string();
    }
    return os.str();
  }

 private:
  template <class R2>
  friend class TorusElement;

  void check_space(const TorusElement& o) const {
    if (sp_ != o.sp_ && !(sp_->form == o.sp_->form && sp_->ring == o.sp_->ring)) {
      throw std::invalid_argument("torus elements over different spaces");
    }
  }

  void drop_zeros() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const Term& t) { return Ring::is_zero(t.second); }), terms_.end());
  }

  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    const Ring& R = ring();
    for (auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first) {
        R.add(out.back().second, t.second);
      } else {
        if (!out.empty() && Ring::is_zero(out.back().second)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && Ring::is_zero(out.back().second)) out.pop_back();
    terms_ = std::move(out);
  }

  TorusElement& merge(const TorusElement& o, bool subtract) {
    if (!sp_) sp_ = o.sp_;
    if (o.is_zero()) return *this;
    check_space(o);
    const Ring& R = ring();
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
        out.push_back(std::move(terms_[i++]));
      } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
        out.emplace_back(o.terms_[j].first, subtract ? R.neg(o.terms_[j].second) : o.terms_[j].second);
        ++j;
      } else {
        Coeff c = std::move(terms_[i].second);
        R.add(c, subtract ? R.neg(o.terms_[j].second) : o.terms_[j].second);
        if (!Ring::is_zero(c)) out.emplace_back(terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  std::shared_ptr<const Space> sp_;
  std::vector<Term> terms_;
};

template <class Ring>
std::shared_ptr<const TorusSpace<Ring>> make_space(SkewForm form, Ring ring = Ring{}) {
  return std::make_shared<const TorusSpace<Ring>>(TorusSpace<Ring>{std::move(form), std::move(ring)});
}

// Whether x_i x_j = v^{2 lam(i,j)} x_j x_i for all pairs.
template <class Ring>
bool q_commute(const std::vector<TorusElement<Ring>>& vars, const SkewForm& lam) {
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = i + 1; j < vars.size(); ++j) {
      if (!(vars[i] * vars[j] == (vars[j] * vars[i]).vshifted(2L * lam(static_cast<int>(i), static_cast<int>(j))))) return false;
    }
  }
  return true;
}

// x^a = v^{sum_{i>j} a_i a_j lam_ij} x_1^{a_1} ... x_n^{a_n} for a q-commuting
// tuple; a must be nonnegative. `order` is the product order (default 0..n-1).
template <class Ring>
TorusElement<Ring> normal_product_unchecked(const std::vector<TorusElement<Ring>>& vars, const SkewForm& lam, const ExpVec& a,
                                            const std::vector<int>& order = {}) {
  if (!a.is_nonnegative()) throw std::invalid_argument("normal_product: exponents must be nonnegative");
  const int n = a.size();
  std::vector<int> ord = order;
  if (ord.empty()) {
    for (int i = 0; i < n; ++i) ord.push_back(i);
  }
  long pre = 0;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < x; ++y) pre += static_cast<long>(a[ord[x]]) * a[ord[y]] * lam(ord[x], ord[y]);
  }
  TorusElement<Ring> r = TorusElement<Ring>::one(vars.at(0).space());
  for (int i : ord) {
    if (a[i] > 0) r *= vars[i].pow(a[i]);
  }
  return r.vshifted(pre);
}

template <class Ring>
TorusElement<Ring> normal_product(const std::vector<TorusElement<Ring>>& vars, const SkewForm& lam, const ExpVec& a,
                                  const std::vector<int>& order = {}) {
  if (!q_commute(vars, lam)) throw std::invalid_argument("normal_product: variables do not q-commute under the given form");
  return normal_product_unchecked(vars, lam, a, order);
}

// h with h * f = g, by repeatedly cancelling the lex-leading term of the
// remainder. Throws NonExactDivision if no such Laurent h exists.
template <class Ring>
TorusElement<Ring> exact_right_divide(const TorusElement<Ring>& g, const TorusElement<Ring>& f) {
  using Elt = TorusElement<Ring>;
  if (f.is_zero()) throw std::invalid_argument("exact_right_divide: division by zero");
  if (g.is_zero()) return Elt(f.space());
  const auto& sp = f.space();
  const Ring& R = sp->ring;
  const int n = sp->rank();

  ExpVec lo(n), hi(n);
  auto bounds = [n](const Elt& e, ExpVec& mn, ExpVec& mx) {
    mn = mx = e.terms().front().first;
    for (const auto& [a, c] : e.terms()) {
      for (int k = 0; k < n; ++k) {
        mn[k] = std::min(mn[k], a[k]);
        mx[k] = std::max(mx[k], a[k]);
      }
    }
  };
  ExpVec gmin, gmax, fmin, fmax;
  bounds(g, gmin, gmax);
  bounds(f, fmin, fmax);
  lo = gmin - fmax;
  hi = gmax - fmin;

  const auto& [b, d] = f.leading();
  std::vector<long> brow = sp->form.row(b);
  std::map<ExpVec, typename Ring::Coeff> rem;
  for (const auto& [a, c] : g.terms()) rem.emplace(a, c);
  std::vector<typename Elt::Term> quot;

  while (!rem.empty()) {
    auto it = std::prev(rem.end());
    ExpVec e = it->first - b;
    for (int k = 0; k < n; ++k) {
      if (e[k] < lo[k] || e[k] > hi[k]) throw NonExactDivision("exact_right_divide: quotient leaves the exponent box");
    }
    // x^e x^b = v^{Lambda(e,b)} x^{e+b} = v^{-dot(brow, e)} x^{e+b}
    auto c = R.divexact(R.vpow(it->second, dot(brow, e)), d);
    if (!c) throw NonExactDivision("exact_right_divide: leading coefficient not divisible");
    Elt term = Elt::monomial(sp, e, *c);
    Elt prod = term * f;
    for (const auto& [a, x] : prod.terms()) {
      auto [pos, inserted] = rem.try_emplace(a, R.neg(x));
      if (!inserted) {
        R.add(pos->second, R.neg(x));
        if (Ring::is_zero(pos->second)) rem.erase(pos);
      }
    }
    quot.emplace_back(e, std::move(*c));
  }
  return Elt::from_terms(sp, std::move(quot));
}

}  // namespace qfrob
