#include "qfrob/uqn.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace qfrob {

IVec word_weight(const Word& w, int rank) {
  IVec g(rank, 0);
  for (int i : w) ++g[i];
  return g;
}

std::vector<Word> words_of_weight(const IVec& gamma) {
  Word w;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (gamma[i] < 0) return {};
    w.insert(w.end(), gamma[i], static_cast<int>(i));
  }
  std::vector<Word> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

FreeElt FreeElt::word(const Word& w, const RatFunc& c) {
  FreeElt r;
  r.add_term(w, c);
  return r;
}

FreeElt FreeElt::divided_power(const CartanData& cd, int i, int n) {
  return word(Word(n, i), RatFunc(IntLaurent(1), qfactorial(n, cd.t(i))));
}

void FreeElt::add_term(const Word& w, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FreeElt& FreeElt::operator+=(const FreeElt& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

FreeElt& FreeElt::operator-=(const FreeElt& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

FreeElt operator*(const FreeElt& a, const FreeElt& b) {
  FreeElt r;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  }
  return r;
}

FreeElt FreeElt::scaled(const RatFunc& c) const {
  FreeElt r;
  for (const auto& [w, x] : terms_) r.add_term(w, x * c);
  return r;
}

TensorElt TensorElt::pure(const Word& a, const Word& b, const RatFunc& c) {
  TensorElt t;
  t.add_term({a, b}, c);
  return t;
}

void TensorElt::add_term(const Key& k, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElt& TensorElt::operator+=(const TensorElt& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

TensorElt TensorElt::mul(const CartanData& cd, const TensorElt& o) const {
  TensorElt r;
  for (const auto& [ka, ca] : terms_) {
    IVec wx2 = word_weight(ka.second, cd.rank());
    for (const auto& [kb, cb] : o.terms_) {
      long e = -cd.root_pairing(wx2, word_weight(kb.first, cd.rank()));
      Word l = ka.first, rr = ka.second;
      l.insert(l.end(), kb.first.begin(), kb.first.end());
      rr.insert(rr.end(), kb.second.begin(), kb.second.end());
      r.add_term({l, rr}, (ca * cb).shifted(static_cast<int>(2 * e)));
    }
  }
  return r;
}

long coproduct_vexp(const CartanData& cd, const Word& w, unsigned long left) {
  long s = 0;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (left >> p & 1UL) continue;
    for (std::size_t pp = p + 1; pp < w.size(); ++pp) {
      if (left >> pp & 1UL) s += cd.root_form(w[p], w[pp]);
    }
  }
  return -2 * s;
}

TensorElt coproduct(const CartanData& cd, const FreeElt& x) {
  TensorElt r;
  for (const auto& [w, c] : x.terms()) {
    if (w.size() >= 8 * sizeof(unsigned long)) throw std::invalid_argument("coproduct: word too long");
    const unsigned long count = 1UL << w.size();
    for (unsigned long mask = 0; mask < count; ++mask) {
      Word l, rr;
      for (std::size_t p = 0; p < w.size(); ++p) (mask >> p & 1UL ? l : rr).push_back(w[p]);
      r.add_term({l, rr}, c.shifted(static_cast<int>(coproduct_vexp(cd, w, mask))));
    }
  }
  return r;
}

IntLaurent word_form_numerator(const CartanData& cd, const Word& w1, const Word& w2) {
  if (w1.size() != w2.size() || word_weight(w1, cd.rank()) != word_weight(w2, cd.rank())) return IntLaurent();
  const std::size_t m = w1.size();
  if (m >= 8 * sizeof(unsigned long)) throw std::invalid_argument("word_form: word too long");
  // N(mask) pairs the w1 letters in mask with the prefix of w2 of the same length.
  std::unordered_map<unsigned long, IntLaurent> memo;
  auto rec = [&](auto&& self, unsigned long mask) -> IntLaurent {
    if (mask == 0) return IntLaurent(1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    const int len = __builtin_popcountl(mask);
    const int j = w2[static_cast<std::size_t>(len) - 1];
    IntLaurent total;
    long after = 0;  // sum over later positions p' in mask of (alpha_j, alpha_{w1[p']})
    for (std::size_t p = m; p-- > 0;) {
      if (!(mask >> p & 1UL)) continue;
      if (w1[p] == j) {
        IntLaurent sub = self(self, mask & ~(1UL << p));
        if (!sub.is_zero()) total += sub.shifted(static_cast<int>(-2 * after));
      }
      after += cd.root_form(j, w1[p]);
    }
    memo.emplace(mask, total);
    return total;
  };
  return rec(rec, m == 0 ? 0UL : (m == 8 * sizeof(unsigned long) ? ~0UL : (1UL << m) - 1));
}

IntLaurent word_form_denominator(const CartanData& cd, const IVec& gamma) {
  IntLaurent d(1);
  for (int j = 0; j < cd.rank(); ++j) {
    IntLaurent f = IntLaurent(1) - IntLaurent::v(4 * cd.t(j));
    for (int c = 0; c < gamma[j]; ++c) d *= f;
  }
  return d;
}

RatFunc word_form(const CartanData& cd, const Word& w1, const Word& w2) {
  IntLaurent n = word_form_numerator(cd, w1, w2);
  if (n.is_zero()) return RatFunc();
  return RatFunc(n, word_form_denominator(cd, word_weight(w1, cd.rank())));
}

RatFunc lusztig_form(const CartanData& cd, const FreeElt& x, const FreeElt& y) {
  RatFunc s;
  for (const auto& [wx, cx] : x.terms()) {
    for (const auto& [wy, cy] : y.terms()) {
      RatFunc f = word_form(cd, wx, wy);
      if (!f.is_zero()) s += cx * cy * f;
    }
  }
  return s;
}

bool is_zero(const CartanData& cd, const FreeElt& x) {
  std::map<IVec, FreeElt> parts;
  for (const auto& [w, c] : x.terms()) parts[word_weight(w, cd.rank())] += FreeElt::word(w, c);
  for (const auto& [gamma, part] : parts) {
    // a common denominator per weight, so only numerators matter
    for (const Word& y : words_of_weight(gamma)) {
      RatFunc s;
      for (const auto& [w, c] : part.terms()) {
        IntLaurent n = word_form_numerator(cd, w, y);
        if (!n.is_zero()) s += c * RatFunc(n);
      }
      if (!s.is_zero()) return false;
    }
  }
  return true;
}

int laurent_rank(std::vector<std::vector<IntLaurent>> m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  IntLaurent prev(1);
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        IntLaurent v = m[i][j] * m[rank][c] - m[i][c] * m[rank][j];
        auto q = v.divexact(prev);
        if (!q) throw std::logic_error("laurent_rank: inexact Bareiss step");
        m[i][j] = std::move(*q);
      }
      m[i][c] = IntLaurent();
    }
    prev = m[rank][c];
    ++rank;
  }
  return static_cast<int>(rank);
}

std::string divided_word_to_string(const DividedWord& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (const auto& [i, n] : w) {
    os << "e" << i + 1;
    if (n != 1) os << "^(" << n << ")";
  }
  return os.str();
}

IVec divided_weight(const DividedWord& w, int rank) {
  IVec g(rank, 0);
  for (const auto& [i, n] : w) g[i] += n;
  return g;
}

Word expand_word(const DividedWord& w) {
  Word out;
  for (const auto& [i, n] : w) out.insert(out.end(), n, i);
  return out;
}

IntLaurent divided_denominator(const CartanData& cd, const DividedWord& w) {
  IntLaurent d(1);
  for (const auto& [i, n] : w) d *= qfactorial(n, cd.t(i));
  return d;
}

FreeElt divided_to_free(const CartanData& cd, const DividedWord& w) {
  return FreeElt::word(expand_word(w), RatFunc(IntLaurent(1), divided_denominator(cd, w)));
}

std::vector<DividedWord> divided_words_of_weight(const IVec& gamma) {
  std::vector<DividedWord> out;
  DividedWord cur;
  IVec rest = gamma;
  auto rec = [&](auto&& self) -> void {
    bool done = true;
    for (int x : rest) done = done && x == 0;
    if (done) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = 0; i < rest.size(); ++i) {
      for (int n = 1; n <= rest[i]; ++n) {
        rest[i] -= n;
        cur.emplace_back(static_cast<int>(i), n);
        self(self);
        cur.pop_back();
        rest[i] += n;
      }
    }
  };
  for (int x : gamma) {
    if (x < 0) return {};
  }
  rec(rec);
  return out;
}

std::optional<DividedWord> fr_divided(const DividedWord& w, int l) {
  DividedWord r;
  for (const auto& [i, n] : w) {
    if (n % l != 0) return std::nullopt;
    r.emplace_back(i, n / l);
  }
  return r;
}

DividedWord frp_divided(const DividedWord& w, int l) {
  DividedWord r;
  for (const auto& [i, n] : w) r.emplace_back(i, n * l);
  return r;
}

}  // namespace qfrob
