#include "qfrob/frobsplit.hpp"

#include <sstream>

namespace qfrob {

namespace {

template <class Ring>
std::string first_difference(const TorusElement<Ring>& x, const TorusElement<Ring>& y) {
  TorusElement<Ring> d = x - y;
  if (d.is_zero()) return {};
  const ExpVec& a = d.leading().first;
  return "x^" + a.to_string() + " lhs=" + x.ring().str(x.coeff(a)) + " rhs=" + y.ring().str(y.coeff(a));
}

}  // namespace

std::shared_ptr<const CycloTorus> spec_space(const SkewForm& form, int l, Point p) {
  if (l < 3 || l % 2 == 0) throw std::invalid_argument("specialization needs an odd l >= 3");
  return make_space<CycloRing>(form, CycloRing{l, p});
}

CElt spec_torus(const LElt& f, const std::shared_ptr<const CycloTorus>& sp) {
  if (f.space() && !(f.space()->form == sp->form)) throw std::invalid_argument("spec_torus: forms differ");
  const int l = sp->ring.l;
  const Point p = sp->ring.point;
  return f.map(sp, [&](const ExpVec& a, const IntLaurent& c) { return std::optional<CElt::Term>(CElt::Term{a, specialize(c, l, p)}); });
}

CElt fr_star(const CElt& f, const std::shared_ptr<const CycloTorus>& eps) {
  if (f.space()->ring.point != Point::ONE || eps->ring.point != Point::EPS) throw std::invalid_argument("fr_star maps ONE to EPS");
  const int l = eps->ring.l;
  return f.map(eps, [&](const ExpVec& a, const CycloInt& c) { return std::optional<CElt::Term>(CElt::Term{a.scaled(l), c}); });
}

CElt frp_star(const CElt& f, const std::shared_ptr<const CycloTorus>& one) {
  if (f.space()->ring.point != Point::EPS || one->ring.point != Point::ONE) throw std::invalid_argument("frp_star maps EPS to ONE");
  const int l = one->ring.l;
  return f.map(one, [&](const ExpVec& a, const CycloInt& c) -> std::optional<CElt::Term> {
    if (!a.divisible_by(l)) return std::nullopt;
    return CElt::Term{a.divided(l), c};
  });
}

PElt reduce_modp(const CElt& f, const std::shared_ptr<const ModpTorus>& sp) {
  if (f.space()->ring.point != Point::ONE) throw std::invalid_argument("reduce_modp: element must be specialized at ONE");
  const ModpRing& R = sp->ring;
  return f.map(sp, [&](const ExpVec& a, const CycloInt& c) -> std::optional<PElt::Term> {
    const auto& k = c.coeffs();
    for (std::size_t i = 1; i < k.size(); ++i) {
      if (!k[i].is_zero()) throw std::logic_error("reduce_modp: coefficient is not an integer");
    }
    uint64_t r = k.empty() ? 0 : static_cast<uint64_t>(k[0].mod(Int(static_cast<long>(R.p))).small());
    if (r == 0) return std::nullopt;
    return PElt::Term{a, r};
  });
}

PElt reduce_modp(const LElt& f, const std::shared_ptr<const ModpTorus>& sp) {
  const ModpRing& R = sp->ring;
  return f.map(sp, [&](const ExpVec& a, const IntLaurent& c) -> std::optional<PElt::Term> {
    uint64_t r = static_cast<uint64_t>(c.at_one().mod(Int(static_cast<long>(R.p))).small());
    if (r == 0) return std::nullopt;
    return PElt::Term{a, r};
  });
}

PElt modp_split(const PElt& f) {
  const int p = static_cast<int>(f.space()->ring.p);
  return f.map(f.space(), [&](const ExpVec& a, uint64_t c) -> std::optional<PElt::Term> {
    if (!a.divisible_by(p)) return std::nullopt;
    return PElt::Term{a.divided(p), c};
  });
}

PElt embed(const PElt& f, const std::shared_ptr<const ModpTorus>& big) {
  const int n = big->rank();
  if (f.space()->rank() > n) throw std::invalid_argument("embed: target space is smaller");
  return f.map(big, [&](const ExpVec& a, uint64_t c) {
    ExpVec b(n);
    for (int k = 0; k < a.size(); ++k) b[k] = a[k];
    return std::optional<PElt::Term>(PElt::Term{b, c});
  });
}

IVec monomial_weight(const std::vector<IVec>& weights, const ExpVec& a) {
  IVec w(weights.empty() ? 0 : weights[0].size(), 0);
  for (int t = 0; t < a.size(); ++t) {
    for (std::size_t k = 0; k < w.size(); ++k) w[k] += a[t] * weights[t][k];
  }
  return w;
}

std::vector<IVec> initial_weights(const CartanData& cd, const Word& word) {
  std::vector<IVec> out;
  for (int t = 0; t < static_cast<int>(word.size()); ++t) out.push_back(minor_weight(cd, word, t));
  return out;
}

TheoremVerifier::TheoremVerifier(const QuantumSeed& seed, int l) : l_(l), n_(seed.rank()), lam_(seed.pair.lam) {
  const SkewForm& form = seed.initial->form;
  one_ = spec_space(form, l, Point::ONE);
  eps_ = spec_space(form, l, Point::EPS);
  for (const LElt& x : seed.vars) {
    var_one_.push_back(spec_torus(x, one_));
    var_eps_.push_back(spec_torus(x, eps_));
    var_eps_l_.push_back(var_eps_.back().pow(l));
  }
  pow_one_.resize(n_);
  pow_eps_.resize(n_);
  pow_eps_l_.resize(n_);
}

const CElt& TheoremVerifier::power(std::vector<std::vector<CElt>>& cache, const std::vector<CElt>& base, int i, int k) {
  auto& c = cache[i];
  if (c.empty()) c.push_back(CElt::one(base[i].space()));
  while (static_cast<int>(c.size()) <= k) c.push_back(c.back() * base[i]);
  return c[k];
}

long TheoremVerifier::prefactor(const ExpVec& a) const {
  long pre = 0;
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < x; ++y) pre += static_cast<long>(a[x]) * a[y] * lam_(x, y);
  }
  return pre;
}

CElt TheoremVerifier::at_one(const ExpVec& a) {
  if (!a.is_nonnegative()) throw std::invalid_argument("cluster monomials need nonnegative exponents");
  CElt r = CElt::one(one_);
  for (int i = 0; i < n_; ++i) r *= power(pow_one_, var_one_, i, a[i]);
  return r.vshifted(prefactor(a));
}

CElt TheoremVerifier::at_eps(const ExpVec& a) {
  if (!a.is_nonnegative()) throw std::invalid_argument("cluster monomials need nonnegative exponents");
  CElt r = CElt::one(eps_);
  for (int i = 0; i < n_; ++i) r *= power(pow_eps_, var_eps_, i, a[i]);
  return r.vshifted(prefactor(a));
}

template <class F>
void TheoremVerifier::for_each(std::vector<std::vector<CElt>>& cache, const std::vector<CElt>& base, int bound, long scale, F&& visit) {
  ExpVec a(n_);
  std::vector<CElt> prefix(n_ + 1);
  prefix[0] = CElt::one(base.at(0).space());
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n_) {
      visit(a, prefix[n_].vshifted(scale * scale * prefactor(a)));
      return;
    }
    for (int k = 0; k <= bound; ++k) {
      a[i] = k;
      prefix[i + 1] = k == 0 ? prefix[i] : prefix[i] * power(cache, base, i, k);
      self(self, i + 1);
    }
    a[i] = 0;
  };
  rec(rec, 0);
}

TheoremVerdict TheoremVerifier::run(int bound, bool split) {
  TheoremVerdict v;
  if (n_ == 0) return v;
  std::map<ExpVec, CElt> ones;
  for_each(pow_one_, var_one_, bound, 1, [&](const ExpVec& a, CElt x) { ones.emplace(a, std::move(x)); });
  v.checked = static_cast<long>(ones.size());

  auto fail = [&](const ExpVec& a, const std::string& what, const std::string& diff) {
    if (!v.pass) return;
    v.pass = false;
    v.witness = "a=" + a.to_string() + " " + what + " " + diff;
  };

  // Fr*(1x^a) = ex^{la}: the EPS side is the product of the l-th powers
  for_each(pow_eps_l_, var_eps_l_, bound, l_, [&](const ExpVec& a, const CElt& x) {
    CElt lhs = fr_star(ones.at(a), eps_);
    if (!(lhs == x)) fail(a, "Fr*", first_difference(lhs, x));
  });

  CElt zero(one_);
  for_each(pow_eps_, var_eps_, bound, 1, [&](const ExpVec& a, const CElt& x) {
    CElt lhs = frp_star(x, one_);
    const CElt& rhs = a.divisible_by(l_) ? ones.at(a.divided(l_)) : zero;
    if (!lhs.is_zero()) ++v.nonzero_frp;
    if (!(lhs == rhs)) fail(a, "Fr'*", first_difference(lhs, rhs));
  });

  if (split) {
    v.split_checked = true;
    auto sp = make_space<ModpRing>(SkewForm::zero(n_), ModpRing{static_cast<uint64_t>(l_)});
    PElt pzero(sp);
    for (const auto& [a, x] : ones) {
      PElt lhs = modp_split(reduce_modp(x, sp));
      PElt rhs = a.divisible_by(l_) ? reduce_modp(ones.at(a.divided(l_)), sp) : pzero;
      if (!(lhs == rhs) && v.split_pass) {
        v.split_pass = false;
        v.split_witness = "a=" + a.to_string() + " " + first_difference(lhs, rhs);
      }
    }
  }
  return v;
}

TheoremVerdict TheoremVerifier::run(const std::vector<ExpVec>& as, bool split) {
  TheoremVerdict v;
  auto sp = make_space<ModpRing>(SkewForm::zero(n_), ModpRing{static_cast<uint64_t>(l_)});
  CElt zero(one_);
  for (const ExpVec& a : as) {
    if (a.size() != n_) throw std::invalid_argument("exponent vector has the wrong length");
    ++v.checked;
    CElt one_a = at_one(a);
    CElt lhs = fr_star(one_a, eps_);
    CElt rhs = at_eps(a.scaled(l_));
    if (!(lhs == rhs) && v.pass) {
      v.pass = false;
      v.witness = "a=" + a.to_string() + " Fr* " + first_difference(lhs, rhs);
    }
    const bool div = a.divisible_by(l_);
    CElt lhs2 = frp_star(at_eps(a), one_);
    CElt rhs2 = div ? at_one(a.divided(l_)) : zero;
    if (!lhs2.is_zero()) ++v.nonzero_frp;
    if (!(lhs2 == rhs2) && v.pass) {
      v.pass = false;
      v.witness = "a=" + a.to_string() + " Fr'* " + first_difference(lhs2, rhs2);
    }
    if (split) {
      v.split_checked = true;
      PElt l3 = modp_split(reduce_modp(one_a, sp));
      PElt r3 = div ? reduce_modp(at_one(a.divided(l_)), sp) : PElt(sp);
      if (!(l3 == r3) && v.split_pass) {
        v.split_pass = false;
        v.split_witness = "a=" + a.to_string() + " " + first_difference(l3, r3);
      }
    }
  }
  return v;
}

TheoremVerdict verify_theorem(const QuantumSeed& initial, const std::vector<int>& sequence, int bound, int l, bool split) {
  QuantumSeed s = mutate_along(initial, sequence);
  return TheoremVerifier(s, l).run(bound, split);
}

bool reduction_commutes(const CartanData& cd, const Word& word_w, int prefix_len, const std::vector<PElt>& samples, std::string* witness) {
  if (!is_reduced(cd, word_w)) throw std::invalid_argument("reduction_commutes: word not reduced");
  if (prefix_len < 0 || prefix_len > static_cast<int>(word_w.size())) throw std::invalid_argument("reduction_commutes: bad prefix length");
  for (const PElt& f : samples) {
    if (f.space()->rank() != prefix_len) throw std::invalid_argument("reduction_commutes: sample has the wrong rank");
    auto big = make_space<ModpRing>(SkewForm::zero(static_cast<int>(word_w.size())), f.space()->ring);
    PElt lhs = embed(modp_split(f), big);
    PElt rhs = modp_split(embed(f, big));
    if (!(lhs == rhs)) {
      if (witness) *witness = first_difference(lhs, rhs);
      return false;
    }
  }
  return true;
}

CycloInt random_cyclo(int l, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<Int> c(CycloContext::get(l)->phi);
  for (auto& x : c) x = Int(d(rng));
  return CycloInt::from_poly(l, c);
}

}  // namespace qfrob
