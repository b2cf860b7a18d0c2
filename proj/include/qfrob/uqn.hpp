#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qfrob/laurent.hpp"
#include "qfrob/ratfunc.hpp"
#include "qfrob/rootdatum.hpp"

namespace qfrob {

// Weight of a word: letter counts in the simple-root basis.
IVec word_weight(const Word& w, int rank);
// All distinct words with the given letter counts, in lexicographic order.
std::vector<Word> words_of_weight(const IVec& gamma);

// Element of the free algebra on e_i with Q(q) coefficients. U_q(n) is its
// quotient by the radical of the Lusztig form.
class FreeElt {
 public:
  FreeElt() = default;
  static FreeElt word(const Word& w, const RatFunc& c = RatFunc(1));
  static FreeElt one() { return word({}); }
  static FreeElt gen(int i) { return word({i}); }
  // e_i^n / [n]_i!
  static FreeElt divided_power(const CartanData& cd, int i, int n);

  const std::map<Word, RatFunc>& terms() const noexcept { return terms_; }
  bool is_zero_element() const noexcept { return terms_.empty(); }

  FreeElt& operator+=(const FreeElt& o);
  FreeElt& operator-=(const FreeElt& o);
  friend FreeElt operator+(FreeElt a, const FreeElt& b) { return a += b; }
  friend FreeElt operator-(FreeElt a, const FreeElt& b) { return a -= b; }
  friend FreeElt operator*(const FreeElt& a, const FreeElt& b);
  FreeElt scaled(const RatFunc& c) const;
  friend bool operator==(const FreeElt&, const FreeElt&) = default;

 private:
  void add_term(const Word& w, const RatFunc& c);
  std::map<Word, RatFunc> terms_;
};

// Element of U_q(n) (x) U_q(n) on word pairs, with the twisted product
// (x1 (x) x2)(y1 (x) y2) = q^{-(wt x2, wt y1)} x1 y1 (x) x2 y2.
class TensorElt {
 public:
  using Key = std::pair<Word, Word>;
  TensorElt() = default;
  static TensorElt pure(const Word& a, const Word& b, const RatFunc& c = RatFunc(1));

  const std::map<Key, RatFunc>& terms() const noexcept { return terms_; }
  TensorElt& operator+=(const TensorElt& o);
  void add_term(const Key& k, const RatFunc& c);
  TensorElt mul(const CartanData& cd, const TensorElt& o) const;
  friend bool operator==(const TensorElt&, const TensorElt&) = default;

 private:
  std::map<Key, RatFunc> terms_;
};

// v-exponent of the coproduct coefficient for splitting `w` with the
// positions in `left` (bitmask) going to the left factor:
//   q^{-sum_{p<p', p not in left, p' in left} (alpha_{w_p}, alpha_{w_p'})}.
long coproduct_vexp(const CartanData& cd, const Word& w, unsigned long left);

TensorElt coproduct(const CartanData& cd, const FreeElt& x);

// Numerator of the form on words: (w1, w2) = N(w1, w2) / prod_j (1 - q_j^2)^{c_j}
// where c_j counts letter j. N is a Laurent polynomial in v.
IntLaurent word_form_numerator(const CartanData& cd, const Word& w1, const Word& w2);
// prod_j (1 - q_j^2)^{c_j}
IntLaurent word_form_denominator(const CartanData& cd, const IVec& gamma);
RatFunc word_form(const CartanData& cd, const Word& w1, const Word& w2);
RatFunc lusztig_form(const CartanData& cd, const FreeElt& x, const FreeElt& y);

// x lies in the radical of the form (each weight component checked).
bool is_zero(const CartanData& cd, const FreeElt& x);

// Rank of a square matrix over Z[v, v^{-1}] by fraction-free elimination.
int laurent_rank(std::vector<std::vector<IntLaurent>> m);

// Divided word e_{i_1}^{(n_1)} e_{i_2}^{(n_2)} ..., each n >= 1.
using DividedWord = std::vector<std::pair<int, int>>;

std::string divided_word_to_string(const DividedWord& w);
IVec divided_weight(const DividedWord& w, int rank);
// The underlying word and the product of [n_j]_{i_j}! it is divided by.
Word expand_word(const DividedWord& w);
IntLaurent divided_denominator(const CartanData& cd, const DividedWord& w);
FreeElt divided_to_free(const CartanData& cd, const DividedWord& w);
// Every divided word of weight gamma (adjacent equal letters allowed).
std::vector<DividedWord> divided_words_of_weight(const IVec& gamma);

// Fr: e_i^{(n)} -> e_i^{(n/l)} or zero; Fr': e_i^{(n)} -> e_i^{(nl)}.
std::optional<DividedWord> fr_divided(const DividedWord& w, int l);
DividedWord frp_divided(const DividedWord& w, int l);

}  // namespace qfrob
