#include "qfrob/functional.hpp"

#include <sstream>

namespace qfrob {

namespace {

using MaskState = std::map<uint64_t, IntLaurent>;

uint64_t full_mask(std::size_t m) {
  if (m >= 64) throw std::invalid_argument("f-word longer than 63 letters");
  return (uint64_t{1} << m) - 1;
}

// e_i applied to sum c * (F restricted to mask) v_lambda. The commutator
// [e_i, f_i] acts on weight mu by [<h_i, mu>]_i.
MaskState e_on_masks(const CartanData& cd, const IVec& lambda, const Word& f, int i, const MaskState& st) {
  MaskState out;
  for (const auto& [mask, c] : st) {
    long h = lambda[i];
    for (std::size_t p = f.size(); p-- > 0;) {
      if (!(mask >> p & 1U)) continue;
      if (f[p] == i) {
        IntLaurent k = qint_signed(static_cast<int>(h), cd.t(i));
        if (!k.is_zero()) out[mask & ~(uint64_t{1} << p)].add_mul(c, k);
      }
      h -= cd.a(i, f[p]);
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

Word restrict(const Word& w, uint64_t mask, bool keep) {
  Word r;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (((mask >> p) & 1U) == keep) r.push_back(w[p]);
  }
  return r;
}

void check_weight_dim(const CartanData& cd, const IVec& v, const char* what) {
  if (static_cast<int>(v.size()) != cd.rank()) throw std::invalid_argument(std::string(what) + " has the wrong length");
}

IVec scaled(IVec v, int l) {
  for (int& x : v) x *= l;
  return v;
}

std::string show(const CycloInt& c) { return c.to_string(); }

}  // namespace

ModuleVec highest_vector(const IVec& lambda) {
  ModuleVec u{lambda, {}};
  u.terms.emplace(Word{}, RatFunc(1));
  return u;
}

ModuleVec apply_f(int i, const ModuleVec& u) {
  ModuleVec r{u.lambda, {}};
  for (const auto& [w, c] : u.terms) {
    Word x{i};
    x.insert(x.end(), w.begin(), w.end());
    r.terms.emplace(std::move(x), c);
  }
  return r;
}

ModuleVec apply_e(const CartanData& cd, int i, const ModuleVec& u) {
  ModuleVec r{u.lambda, {}};
  for (const auto& [w, c] : u.terms) {
    MaskState st = e_on_masks(cd, u.lambda, w, i, {{full_mask(w.size()), IntLaurent(1)}});
    for (const auto& [mask, k] : st) {
      RatFunc& slot = r.terms[restrict(w, mask, true)];
      slot += c * RatFunc(k);
    }
  }
  std::erase_if(r.terms, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}

IntLaurent fword_form(const CartanData& cd, const IVec& lambda, const Word& f1, const Word& f2) {
  if (f1.size() != f2.size() || word_weight(f1, cd.rank()) != word_weight(f2, cd.rank())) return IntLaurent();
  MaskState st{{full_mask(f2.size()), IntLaurent(1)}};
  // (f_j u, w) = (u, e_j w): peel f1 from the left
  for (int j : f1) {
    st = e_on_masks(cd, lambda, f2, j, st);
    if (st.empty()) return IntLaurent();
  }
  auto it = st.find(0);
  return it == st.end() ? IntLaurent() : it->second;
}

RatFunc module_form(const CartanData& cd, const ModuleVec& u, const ModuleVec& w) {
  if (u.lambda != w.lambda) throw std::invalid_argument("module_form: vectors of different modules");
  RatFunc s;
  for (const auto& [a, ca] : u.terms) {
    for (const auto& [b, cb] : w.terms) {
      IntLaurent f = fword_form(cd, u.lambda, a, b);
      if (!f.is_zero()) s += ca * cb * RatFunc(f);
    }
  }
  return s;
}

bool module_is_zero(const CartanData& cd, const ModuleVec& u) {
  std::map<IVec, ModuleVec> parts;
  for (const auto& [w, c] : u.terms) {
    auto [it, fresh] = parts.try_emplace(word_weight(w, cd.rank()), ModuleVec{u.lambda, {}});
    it->second.terms.emplace(w, c);
  }
  for (const auto& [gamma, part] : parts) {
    for (const Word& g : words_of_weight(gamma)) {
      RatFunc s;
      for (const auto& [w, c] : part.terms) {
        IntLaurent f = fword_form(cd, u.lambda, w, g);
        if (!f.is_zero()) s += c * RatFunc(f);
      }
      if (!s.is_zero()) return false;
    }
  }
  return true;
}

bool module_equal(const CartanData& cd, const ModuleVec& a, const ModuleVec& b) {
  if (a.lambda != b.lambda) return false;
  ModuleVec d = a;
  for (const auto& [w, c] : b.terms) {
    RatFunc& slot = d.terms[w];
    slot -= c;
  }
  std::erase_if(d.terms, [](const auto& kv) { return kv.second.is_zero(); });
  return module_is_zero(cd, d);
}

IVec extremal_exponents(const CartanData& cd, const IVec& lambda, const Word& word) {
  check_weight_dim(cd, lambda, "lambda");
  IVec a(word.size());
  IVec mu = lambda;
  for (std::size_t t = word.size(); t-- > 0;) {
    a[t] = mu[word[t]];
    mu = cd.reflect(word[t], mu);
  }
  return a;
}

ModuleVec extremal_vector(const CartanData& cd, const IVec& lambda, const Word& word) {
  if (!cd.is_dominant(lambda)) throw std::invalid_argument("extremal_vector: lambda is not dominant");
  if (!is_reduced(cd, word)) throw std::invalid_argument("extremal_vector: word not reduced");
  IVec a = extremal_exponents(cd, lambda, word);
  Word f;
  IntLaurent den(1);
  for (std::size_t t = 0; t < word.size(); ++t) {
    f.insert(f.end(), a[t], word[t]);
    den *= qfactorial(a[t], cd.t(word[t]));
  }
  ModuleVec u{lambda, {}};
  u.terms.emplace(f, RatFunc(IntLaurent(1), den));
  return u;
}

std::vector<WeightSpace> build_module(const CartanData& cd, const IVec& lambda, const IVec& depth) {
  check_weight_dim(cd, lambda, "lambda");
  check_weight_dim(cd, depth, "depth");
  if (!cd.is_dominant(lambda)) throw std::invalid_argument("build_module: lambda is not dominant");
  std::vector<IVec> gammas;
  IVec g(cd.rank(), 0);
  auto rec = [&](auto&& self, int k) -> void {
    if (k == cd.rank()) {
      gammas.push_back(g);
      return;
    }
    for (int x = 0; x <= depth[k]; ++x) {
      g[k] = x;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  auto height = [](const IVec& v) {
    long s = 0;
    for (int x : v) s += x;
    return s;
  };
  std::stable_sort(gammas.begin(), gammas.end(), [&](const IVec& a, const IVec& b) { return height(a) < height(b); });

  std::vector<WeightSpace> out;
  for (const IVec& gamma : gammas) {
    WeightSpace ws;
    ws.gamma = gamma;
    ws.words = words_of_weight(gamma);
    ws.gram.assign(ws.words.size(), std::vector<IntLaurent>(ws.words.size()));
    for (std::size_t i = 0; i < ws.words.size(); ++i) {
      for (std::size_t j = 0; j < ws.words.size(); ++j) ws.gram[i][j] = fword_form(cd, lambda, ws.words[i], ws.words[j]);
    }
    ws.dim = laurent_rank(ws.gram);
    out.push_back(std::move(ws));
  }
  return out;
}

Functional Functional::counit(int rank) {
  Functional f;
  f.weight.assign(rank, 0);
  f.values.emplace(Word{}, IntLaurent(1));
  return f;
}

IntLaurent Functional::operator()(const Word& w) const {
  auto it = values.find(w);
  return it == values.end() ? IntLaurent() : it->second;
}

Functional quantum_minor(const CartanData& cd, const IVec& lambda, const Word& word) {
  if (!cd.is_dominant(lambda)) throw std::invalid_argument("quantum_minor: lambda is not dominant");
  IVec a = extremal_exponents(cd, lambda, word);
  Word f;
  IntLaurent den(1);
  for (std::size_t t = 0; t < word.size(); ++t) {
    f.insert(f.end(), a[t], word[t]);
    den *= qfactorial(a[t], cd.t(word[t]));
  }
  Functional out;
  out.weight = word_weight(f, cd.rank());
  const int m = static_cast<int>(f.size());
  Word x(m);
  IVec rest = out.weight;
  // x acts on v_{w lambda} last letter first, so words are built from the end
  // and share the states of common suffixes.
  auto rec = [&](auto&& self, int pos, const MaskState& st) -> void {
    if (st.empty()) return;
    if (pos == 0) {
      auto q = st.begin()->second.divexact(den);
      if (!q) throw std::logic_error("quantum_minor: non-integral value");
      out.values.emplace(x, std::move(*q));
      return;
    }
    for (int i = 0; i < cd.rank(); ++i) {
      if (rest[i] == 0) continue;
      --rest[i];
      x[pos - 1] = i;
      self(self, pos - 1, e_on_masks(cd, lambda, f, i, st));
      ++rest[i];
    }
  };
  rec(rec, m, MaskState{{full_mask(f.size()), IntLaurent(1)}});
  return out;
}

Functional unipotent_minor(const CartanData& cd, const Word& word, int t) {
  if (t < 0 || t >= static_cast<int>(word.size())) throw std::out_of_range("unipotent_minor: position out of range");
  if (!is_reduced(cd, word)) throw std::invalid_argument("unipotent_minor: word not reduced");
  return quantum_minor(cd, cd.fundamental(word[t]), Word(word.begin(), word.begin() + t + 1));
}

Functional functional_mul(const CartanData& cd, const Functional& phi, const Functional& psi) {
  Functional out;
  out.weight = phi.weight;
  for (std::size_t k = 0; k < out.weight.size(); ++k) out.weight[k] += psi.weight[k];
  if (phi.values.empty() || psi.values.empty()) return out;
  for (const Word& x : words_of_weight(out.weight)) {
    const std::size_t m = x.size();
    IntLaurent total;
    IVec need = phi.weight;
    // choose the positions going to phi, with letter counts phi.weight
    auto rec = [&](auto&& self, std::size_t p, uint64_t mask, std::size_t left) -> void {
      if (p == m) {
        IntLaurent a = phi(restrict(x, mask, true));
        if (a.is_zero()) return;
        IntLaurent b = psi(restrict(x, mask, false));
        if (b.is_zero()) return;
        total += (a * b).shifted(static_cast<int>(coproduct_vexp(cd, x, mask)));
        return;
      }
      if (need[x[p]] > 0) {
        --need[x[p]];
        self(self, p + 1, mask | (uint64_t{1} << p), left - 1);
        ++need[x[p]];
      }
      if (m - p > left) self(self, p + 1, mask, left);
    };
    std::size_t left = 0;
    for (int c : phi.weight) left += c;
    rec(rec, 0, 0, left);
    if (!total.is_zero()) out.values.emplace(x, std::move(total));
  }
  return out;
}

Functional functional_pow(const CartanData& cd, const Functional& phi, int n) {
  if (n < 0) throw std::invalid_argument("functional_pow: negative exponent");
  Functional r = Functional::counit(cd.rank());
  for (int k = 0; k < n; ++k) r = k == 0 ? phi : functional_mul(cd, r, phi);
  return r;
}

RatFunc evaluate(const CartanData&, const Functional& phi, const FreeElt& x) {
  RatFunc s;
  for (const auto& [w, c] : x.terms()) {
    IntLaurent v = phi(w);
    if (!v.is_zero()) s += c * RatFunc(v);
  }
  return s;
}

std::optional<IntLaurent> evaluate_divided(const CartanData& cd, const Functional& phi, const DividedWord& w) {
  IntLaurent v = phi(expand_word(w));
  if (v.is_zero()) return v;
  return v.divexact(divided_denominator(cd, w));
}

SkewForm commutation_matrix(const CartanData& cd, const Word& word) {
  if (!is_reduced(cd, word)) throw std::invalid_argument("commutation_matrix: word not reduced");
  const int r = static_cast<int>(word.size());
  std::vector<Functional> d;
  for (int t = 0; t < r; ++t) d.push_back(unipotent_minor(cd, word, t));
  IMat lam(r, IVec(r, 0));
  for (int t = 0; t < r; ++t) {
    for (int k = t + 1; k < r; ++k) {
      Functional p = functional_mul(cd, d[t], d[k]);
      Functional q = functional_mul(cd, d[k], d[t]);
      std::ostringstream where;
      where << "D_" << t + 1 << " and D_" << k + 1;
      if (p.values.size() != q.values.size() || p.values.empty()) throw NotQCommuting(where.str() + " have different supports");
      const int s = q.values.begin()->second.low() - p.values.begin()->second.low();
      for (const auto& [x, v] : p.values) {
        if (!(q(x) == v.shifted(s))) throw NotQCommuting(where.str() + " do not q-commute");
      }
      if (s % 2 != 0) throw NotQCommuting(where.str() + " commute up to an odd power of q^{1/2}");
      lam[t][k] = s / 2;
      lam[k][t] = -s / 2;
    }
  }
  return SkewForm(lam);
}

Verdict check_prop_le1_base(const CartanData& cd, const Word& word, int t, int l, Point rhs) {
  Functional dt = unipotent_minor(cd, word, t);
  Functional dl = functional_pow(cd, dt, l);
  Verdict v;
  for (const DividedWord& f : divided_words_of_weight(scaled(dt.weight, l))) {
    ++v.checked;
    auto fr = fr_divided(f, l);
    std::optional<IntLaurent> a = fr ? evaluate_divided(cd, dt, *fr) : std::optional<IntLaurent>(IntLaurent());
    std::optional<IntLaurent> b = evaluate_divided(cd, dl, f);
    if (!a || !b) {
      v.pass = false;
      v.witness = "f=" + divided_word_to_string(f) + " non-integral value";
      return v;
    }
    CycloInt x = specialize(*a, l, Point::ONE), y = specialize(*b, l, rhs);
    if (!(x == y)) {
      v.pass = false;
      v.witness = "f=" + divided_word_to_string(f) + " lhs=" + show(x) + " rhs=" + show(y);
      return v;
    }
  }
  return v;
}

Verdict check_kkko_power(const CartanData& cd, const Word& word, int t, int l) {
  if (l < 1) throw std::invalid_argument("check_kkko_power: l must be positive");
  Functional dt = unipotent_minor(cd, word, t);
  Functional lhs = functional_pow(cd, dt, l);
  const int i = word[t];
  Functional big = quantum_minor(cd, scaled(cd.fundamental(i), l), Word(word.begin(), word.begin() + t + 1));
  // (varpi_i, gamma) = gamma_i t_i, and q = v^2
  const long vexp = -static_cast<long>(l) * (l - 1) * dt.weight[i] * cd.t(i);
  Verdict v;
  if (lhs.weight != big.weight) {
    v.pass = false;
    v.witness = "weights differ";
    return v;
  }
  for (const Word& x : words_of_weight(lhs.weight)) {
    ++v.checked;
    IntLaurent a = lhs(x), b = big(x).shifted(static_cast<int>(vexp));
    if (!(a == b)) {
      v.pass = false;
      v.witness = "x=" + word_to_string(x) + " lhs=" + a.to_string() + " rhs=" + b.to_string();
      return v;
    }
  }
  return v;
}

}  // namespace qfrob
