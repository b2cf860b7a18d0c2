#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qfrob {

using IVec = std::vector<int>;
using IMat = std::vector<IVec>;
// Letters are 0-based generator indices; letter i_1 is word[0].
using Word = std::vector<int>;

// Symmetrizable generalized Cartan matrix with symmetrizers t_i.
// Weights are IVec in the fundamental-weight basis; roots are IVec in the
// simple-root basis.
class CartanData {
 public:
  // Validates the axioms; throws std::invalid_argument with the reason.
  CartanData(IMat a, IVec t, std::string name = "custom");
  // A1, A2, A3, B2, G2.
  static CartanData preset(const std::string& name);

  const std::string& name() const noexcept { return name_; }
  int rank() const noexcept { return static_cast<int>(a_.size()); }
  int a(int i, int j) const { return a_[i][j]; }
  int t(int i) const { return t_[i]; }
  const IMat& matrix() const noexcept { return a_; }
  const IVec& symmetrizers() const noexcept { return t_; }
  bool invertible() const noexcept { return invertible_; }

  // (alpha_i, alpha_j) = t_i a_ij
  int root_form(int i, int j) const { return t_[i] * a_[i][j]; }
  // (beta, gamma) for roots in the simple-root basis.
  long root_pairing(const IVec& beta, const IVec& gamma) const;
  // (lambda, mu) for weights; requires an invertible matrix.
  mpq_class pairing(const IVec& lambda, const IVec& mu) const;

  IVec fundamental(int i) const;
  // alpha_i as a weight: column i of A.
  IVec simple_root_weight(int i) const;
  IVec root_to_weight(const IVec& beta) const;
  // Throws if lambda is not in the root lattice.
  IVec weight_to_root(const IVec& lambda) const;

  // s_i(lambda) = lambda - <h_i, lambda> alpha_i
  IVec reflect(int i, const IVec& lambda) const;
  IVec reflect_root(int i, const IVec& beta) const;
  bool is_dominant(const IVec& lambda) const;

 private:
  std::string name_;
  IMat a_;
  IVec t_;
  bool invertible_ = false;
  std::vector<std::vector<mpq_class>> inv_;
};

bool is_positive_root_vector(const IVec& beta);

bool is_reduced(const CartanData& cd, const Word& word);
// beta_k = s_{i_1} ... s_{i_{k-1}} (alpha_{i_k}); throws on non-reduced words.
std::vector<IVec> beta_sequence(const CartanData& cd, const Word& word);
// lambda_t = s_{i_1} ... s_{i_t} (varpi_{i_t}); throws on non-reduced words.
std::vector<IVec> lambda_sequence(const CartanData& cd, const Word& word);
// s_{i_1} ... s_{i_r} (lambda): the last letter acts first.
IVec weyl_act(const CartanData& cd, const Word& word, const IVec& lambda);

struct FrozenSplit {
  std::vector<int> ex;  // 0-based positions whose letter recurs later
  std::vector<int> fz;
};
FrozenSplit frozen_split(const Word& word);

// varpi_{i_t} - lambda_t in the simple-root basis: the weight of the minor D_t.
IVec minor_weight(const CartanData& cd, const Word& word, int t);

std::string word_to_string(const Word& word);

}  // namespace qfrob
