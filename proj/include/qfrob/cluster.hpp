#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qfrob/rootdatum.hpp"
#include "qfrob/torus.hpp"

namespace qfrob {

// J x J_ex integer matrix. Column c belongs to the exchangeable index ex[c].
struct ExchangeMatrix {
  IMat b;
  std::vector<int> ex;
  std::vector<int> fz;

  int rows() const { return static_cast<int>(b.size()); }
  int cols() const { return static_cast<int>(ex.size()); }
  // Column position of exchangeable index k, or -1.
  int column_of(int k) const;
  ExpVec column(int c) const;
  friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;
};

struct CompatiblePair {
  SkewForm lam;
  ExchangeMatrix bt;
  IVec d;
  friend bool operator==(const CompatiblePair&, const CompatiblePair&) = default;
};

struct Compatibility {
  bool ok = false;
  IVec d;
  // First violated entry of B^T Lambda (exchangeable index, index), when !ok.
  int i = -1;
  int j = -1;
  std::string reason;
};

// B^T Lambda must be [diag(d) | 0] with all d_j > 0.
Compatibility check_compatible(const SkewForm& lam, const ExchangeMatrix& bt);

// Mutation mu_k(B) = E B F, mu_k(Lambda) = E^T Lambda E; k is an index in J.
CompatiblePair mutate_pair(const CompatiblePair& pair, int k);

ExchangeMatrix btilde_from_word(const CartanData& cd, const Word& word);

// d_k = 2 t_{i_k} for k in J_ex.
IVec expected_skew_symmetrizer(const CartanData& cd, const Word& word);

struct IncompatibleLambda : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using LaurentTorus = TorusSpace<LaurentRing>;
using LElt = TorusElement<LaurentRing>;

struct QuantumSeed {
  CompatiblePair pair;
  // Current cluster variables expanded in the initial torus.
  std::vector<LElt> vars;
  std::vector<int> history;
  std::shared_ptr<const LaurentTorus> initial;

  int rank() const { return static_cast<int>(vars.size()); }
};

// Initial seed x_t = v^{gamma_t} x^{e_t}; gamma defaults to 0. Throws
// IncompatibleLambda unless (lam, B_w) is compatible with d_k = 2 t_{i_k}.
QuantumSeed seed_from_word(const CartanData& cd, const Word& word, const SkewForm& lam, const IVec& gamma = {});
QuantumSeed seed_from_pair(const CompatiblePair& pair, const IVec& gamma = {});

QuantumSeed mutate_seed(const QuantumSeed& seed, int k);
QuantumSeed mutate_along(const QuantumSeed& seed, const std::vector<int>& sequence);

// Normalized product of the seed's variables, expanded in the initial torus.
LElt cluster_monomial(const QuantumSeed& seed, const ExpVec& a);

// Mutation sequences of length <= depth over J_ex. With pruning, no index is
// repeated twice in a row. Sequences are listed by length, then lexicographically.
std::vector<std::vector<int>> enumerate_sequences(const std::vector<int>& ex, int depth, bool prune_back = true);

std::string sequence_to_string(const std::vector<int>& seq);

}  // namespace qfrob
