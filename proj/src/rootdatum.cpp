#include "qfrob/rootdatum.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qfrob {

CartanData::CartanData(IMat a, IVec t, std::string name) : name_(std::move(name)), a_(std::move(a)), t_(std::move(t)) {
  const std::size_t n = a_.size();
  if (n == 0) throw std::invalid_argument("Cartan matrix is empty");
  if (t_.size() != n) throw std::invalid_argument("need one symmetrizer per row of the Cartan matrix");
  int g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a_[i].size() != n) throw std::invalid_argument("Cartan matrix is not square");
    if (t_[i] <= 0) throw std::invalid_argument("symmetrizers must be positive");
    g = std::gcd(g, t_[i]);
    if (a_[i][i] != 2) throw std::invalid_argument("Cartan matrix needs a_ii = 2");
  }
  if (g != 1) throw std::invalid_argument("symmetrizers must be relatively prime");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a_[i][j] > 0) throw std::invalid_argument("Cartan matrix needs a_ij <= 0 off the diagonal");
      if ((a_[i][j] == 0) != (a_[j][i] == 0)) throw std::invalid_argument("Cartan matrix needs a_ij = 0 iff a_ji = 0");
      if (t_[i] * a_[i][j] != t_[j] * a_[j][i]) throw std::invalid_argument("diag(t) A is not symmetric");
    }
  }

  // Gauss-Jordan over Q
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a_[i][j];
    m[i][n + i] = 1;
  }
  invertible_ = true;
  for (std::size_t c = 0; c < n && invertible_; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) {
      invertible_ = false;
      break;
    }
    std::swap(m[p], m[c]);
    mpq_class piv = m[c][c];
    for (auto& x : m[c]) x /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      mpq_class f = m[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  if (invertible_) {
    inv_.assign(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) inv_[i][j] = m[i][n + j];
    }
  }
}

CartanData CartanData::preset(const std::string& name) {
  if (name == "A1") return CartanData({{2}}, {1}, name);
  if (name == "A2") return CartanData({{2, -1}, {-1, 2}}, {1, 1}, name);
  if (name == "A3") return CartanData({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {1, 1, 1}, name);
  if (name == "B2") return CartanData({{2, -2}, {-1, 2}}, {1, 2}, name);
  if (name == "G2") return CartanData({{2, -1}, {-3, 2}}, {3, 1}, name);
  throw std::invalid_argument("unknown Cartan preset: " + name);
}

long CartanData::root_pairing(const IVec& beta, const IVec& gamma) const {
  long s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (beta[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) s += static_cast<long>(beta[i]) * gamma[j] * root_form(i, j);
  }
  return s;
}

mpq_class CartanData::pairing(const IVec& lambda, const IVec& mu) const {
  if (!invertible_) throw std::domain_error("weight pairing needs an invertible Cartan matrix");
  // (varpi_i, varpi_j) = (A^{-1})_{ji} t_j
  mpq_class s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (lambda[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) {
      if (mu[j] == 0) continue;
      s += mpq_class(lambda[i]) * mu[j] * inv_[j][i] * t_[j];
    }
  }
  return s;
}

IVec CartanData::fundamental(int i) const {
  IVec w(rank(), 0);
  w[i] = 1;
  return w;
}

IVec CartanData::simple_root_weight(int i) const {
  IVec w(rank());
  for (int j = 0; j < rank(); ++j) w[j] = a_[j][i];
  return w;
}

IVec CartanData::root_to_weight(const IVec& beta) const {
  IVec w(rank(), 0);
  for (int j = 0; j < rank(); ++j) {
    for (int i = 0; i < rank(); ++i) w[i] += a_[i][j] * beta[j];
  }
  return w;
}

IVec CartanData::weight_to_root(const IVec& lambda) const {
  if (!invertible_) throw std::domain_error("weight_to_root needs an invertible Cartan matrix");
  IVec beta(rank());
  for (int i = 0; i < rank(); ++i) {
    mpq_class s = 0;
    for (int j = 0; j < rank(); ++j) s += inv_[i][j] * lambda[j];
    if (s.get_den() != 1) throw std::invalid_argument("weight is not in the root lattice");
    beta[i] = static_cast<int>(s.get_num().get_si());
  }
  return beta;
}

IVec CartanData::reflect(int i, const IVec& lambda) const {
  IVec r = lambda;
  int c = lambda[i];
  for (int j = 0; j < rank(); ++j) r[j] -= c * a_[j][i];
  return r;
}

IVec CartanData::reflect_root(int i, const IVec& beta) const {
  IVec r = beta;
  int c = 0;
  for (int j = 0; j < rank(); ++j) c += a_[i][j] * beta[j];
  r[i] -= c;
  return r;
}

bool CartanData::is_dominant(const IVec& lambda) const {
  for (int x : lambda) {
    if (x < 0) return false;
  }
  return true;
}

bool is_positive_root_vector(const IVec& beta) {
  bool nonzero = false;
  for (int x : beta) {
    if (x < 0) return false;
    if (x != 0) nonzero = true;
  }
  return nonzero;
}

namespace {

void check_letters(const CartanData& cd, const Word& word) {
  for (int i : word) {
    if (i < 0 || i >= cd.rank()) throw std::invalid_argument("word letter out of range");
  }
}

std::vector<IVec> raw_betas(const CartanData& cd, const Word& word) {
  check_letters(cd, word);
  std::vector<IVec> out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    IVec b(cd.rank(), 0);
    b[word[k]] = 1;
    for (std::size_t s = k; s-- > 0;) b = cd.reflect_root(word[s], b);
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace

bool is_reduced(const CartanData& cd, const Word& word) {
  for (const auto& b : raw_betas(cd, word)) {
    if (!is_positive_root_vector(b)) return false;
  }
  return true;
}

std::vector<IVec> beta_sequence(const CartanData& cd, const Word& word) {
  auto betas = raw_betas(cd, word);
  for (const auto& b : betas) {
    if (!is_positive_root_vector(b)) throw std::invalid_argument("word not reduced");
  }
  return betas;
}

IVec weyl_act(const CartanData& cd, const Word& word, const IVec& lambda) {
  check_letters(cd, word);
  IVec r = lambda;
  for (std::size_t s = word.size(); s-- > 0;) r = cd.reflect(word[s], r);
  return r;
}

std::vector<IVec> lambda_sequence(const CartanData& cd, const Word& word) {
  if (!is_reduced(cd, word)) throw std::invalid_argument("word not reduced");
  std::vector<IVec> out;
  for (std::size_t t = 0; t < word.size(); ++t) {
    Word prefix(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(t) + 1);
    out.push_back(weyl_act(cd, prefix, cd.fundamental(word[t])));
  }
  return out;
}

FrozenSplit frozen_split(const Word& word) {
  FrozenSplit fs;
  for (std::size_t k = 0; k < word.size(); ++k) {
    bool recurs = false;
    for (std::size_t s = k + 1; s < word.size(); ++s) recurs = recurs || word[s] == word[k];
    (recurs ? fs.ex : fs.fz).push_back(static_cast<int>(k));
  }
  return fs;
}

IVec minor_weight(const CartanData& cd, const Word& word, int t) {
  // varpi_i - s_{i_1}...s_{i_t} varpi_i telescopes to the beta_s with i_s = i
  auto betas = beta_sequence(cd, Word(word.begin(), word.begin() + t + 1));
  IVec w(cd.rank(), 0);
  for (int s = 0; s <= t; ++s) {
    if (word[s] != word[t]) continue;
    for (int i = 0; i < cd.rank(); ++i) w[i] += betas[s][i];
  }
  return w;
}

std::string word_to_string(const Word& word) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < word.size(); ++k) os << (k ? "," : "") << word[k] + 1;
  os << ")";
  return os.str();
}

}  // namespace qfrob
