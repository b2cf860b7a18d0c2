#include "qfrob/cluster.hpp"

#include <sstream>

namespace qfrob {

int ExchangeMatrix::column_of(int k) const {
  for (int c = 0; c < cols(); ++c) {
    if (ex[c] == k) return c;
  }
  return -1;
}

ExpVec ExchangeMatrix::column(int c) const {
  ExpVec v(rows());
  for (int i = 0; i < rows(); ++i) v[i] = b[i][c];
  return v;
}

Compatibility check_compatible(const SkewForm& lam, const ExchangeMatrix& bt) {
  Compatibility res;
  const int n = lam.size();
  if (bt.rows() != n) {
    res.reason = "dimension mismatch between Lambda and B";
    return res;
  }
  for (int c = 0; c < bt.cols(); ++c) {
    const int j = bt.ex[c];
    for (int i = 0; i < n; ++i) {
      long s = 0;
      for (int k = 0; k < n; ++k) s += static_cast<long>(bt.b[k][c]) * lam(k, i);
      bool bad = i == j ? s <= 0 : s != 0;
      if (bad) {
        res.i = j;
        res.j = i;
        std::ostringstream os;
        os << "(B^T Lambda)[" << j + 1 << "][" << i + 1 << "] = " << s;
        res.reason = os.str();
        return res;
      }
      if (i == j) res.d.push_back(static_cast<int>(s));
    }
  }
  res.ok = true;
  return res;
}

CompatiblePair mutate_pair(const CompatiblePair& pair, int k) {
  const ExchangeMatrix& bt = pair.bt;
  const int kc = bt.column_of(k);
  if (kc < 0) throw std::invalid_argument("mutate_pair: index is not exchangeable");
  const int n = bt.rows(), m = bt.cols();

  IMat e(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j != k) {
        e[i][j] = i == j;
      } else {
        e[i][j] = i == k ? -1 : std::max(-bt.b[i][kc], 0);
      }
    }
  }
  IMat f(m, IVec(m, 0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i != kc) {
        f[i][j] = i == j;
      } else {
        f[i][j] = j == kc ? -1 : std::max(bt.b[k][j], 0);
      }
    }
  }

  IMat eb(n, IVec(m, 0));
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < n; ++a) {
      if (e[i][a] == 0) continue;
      for (int c = 0; c < m; ++c) eb[i][c] += e[i][a] * bt.b[a][c];
    }
  }
  CompatiblePair out;
  out.bt = bt;
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < m; ++c) {
      int s = 0;
      for (int a = 0; a < m; ++a) s += eb[i][a] * f[a][c];
      out.bt.b[i][c] = s;
    }
  }

  IMat lam(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      long s = 0;
      for (int a = 0; a < n; ++a) {
        if (e[a][i] == 0) continue;
        for (int b = 0; b < n; ++b) s += static_cast<long>(e[a][i]) * pair.lam(a, b) * e[b][j];
      }
      lam[i][j] = static_cast<int>(s);
    }
  }
  out.lam = SkewForm(lam);
  out.d = pair.d;
  return out;
}

ExchangeMatrix btilde_from_word(const CartanData& cd, const Word& word) {
  if (!is_reduced(cd, word)) throw std::invalid_argument("word not reduced");
  const int r = static_cast<int>(word.size());
  auto plus = [&](int t) {
    for (int k = t + 1; k < r; ++k) {
      if (word[k] == word[t]) return k;
    }
    return r;
  };
  auto minus = [&](int t) {
    for (int k = t - 1; k >= 0; --k) {
      if (word[k] == word[t]) return k;
    }
    return -1;
  };
  FrozenSplit fs = frozen_split(word);
  ExchangeMatrix bt;
  bt.ex = fs.ex;
  bt.fz = fs.fz;
  bt.b.assign(r, IVec(fs.ex.size(), 0));
  for (std::size_t c = 0; c < fs.ex.size(); ++c) {
    const int k = fs.ex[c];
    const int kp = plus(k), km = minus(k);
    for (int t = 0; t < r; ++t) {
      const int tp = plus(t);
      int v = 0;
      if (t == km) {
        v = 1;
      } else if (t == kp) {
        v = -1;
      } else if (t < k && k < tp && tp < kp) {
        v = cd.a(word[t], word[k]);
      } else if (k < t && t < kp && kp < tp) {
        v = -cd.a(word[t], word[k]);
      }
      bt.b[t][c] = v;
    }
  }
  return bt;
}

IVec expected_skew_symmetrizer(const CartanData& cd, const Word& word) {
  IVec d;
  for (int k : frozen_split(word).ex) d.push_back(2 * cd.t(word[k]));
  return d;
}

QuantumSeed seed_from_pair(const CompatiblePair& pair, const IVec& gamma) {
  const int n = pair.lam.size();
  if (!gamma.empty() && static_cast<int>(gamma.size()) != n) throw std::invalid_argument("gamma has the wrong length");
  QuantumSeed seed;
  seed.pair = pair;
  seed.initial = make_space<LaurentRing>(pair.lam);
  for (int t = 0; t < n; ++t) {
    int g = gamma.empty() ? 0 : gamma[t];
    seed.vars.push_back(LElt::monomial(seed.initial, ExpVec::unit(n, t), IntLaurent::v(g)));
  }
  return seed;
}

QuantumSeed seed_from_word(const CartanData& cd, const Word& word, const SkewForm& lam, const IVec& gamma) {
  ExchangeMatrix bt = btilde_from_word(cd, word);
  if (lam.size() != bt.rows()) throw IncompatibleLambda("Lambda has the wrong size for this word");
  Compatibility c = check_compatible(lam, bt);
  if (!c.ok) throw IncompatibleLambda("Lambda is not compatible with B_w: " + c.reason);
  IVec want = expected_skew_symmetrizer(cd, word);
  if (c.d != want) throw IncompatibleLambda("skew-symmetrizer differs from 2 t_{i_k}");
  return seed_from_pair(CompatiblePair{lam, bt, c.d}, gamma);
}

QuantumSeed mutate_seed(const QuantumSeed& seed, int k) {
  const ExchangeMatrix& bt = seed.pair.bt;
  const int kc = bt.column_of(k);
  if (kc < 0) throw std::invalid_argument("mutate_seed: index is not exchangeable");
  const SkewForm& lam = seed.pair.lam;
  const int n = seed.rank();
  ExpVec b = bt.column(kc);
  ExpVec bp = b.positive_part(), bm = (-b).positive_part();
  ExpVec ek = ExpVec::unit(n, k);
  // x''_k x_k = v^{Lambda(b+, e_k)} x^{b+} + v^{Lambda(b-, e_k)} x^{b-}
  LElt rhs = normal_product_unchecked(seed.vars, lam, bp).vshifted(lam.eval(bp, ek)) +
             normal_product_unchecked(seed.vars, lam, bm).vshifted(lam.eval(bm, ek));
  QuantumSeed out;
  out.pair = mutate_pair(seed.pair, k);
  out.vars = seed.vars;
  out.vars[k] = exact_right_divide(rhs, seed.vars[k]);
  out.history = seed.history;
  out.history.push_back(k);
  out.initial = seed.initial;
  return out;
}

QuantumSeed mutate_along(const QuantumSeed& seed, const std::vector<int>& sequence) {
  QuantumSeed s = seed;
  for (int k : sequence) s = mutate_seed(s, k);
  return s;
}

LElt cluster_monomial(const QuantumSeed& seed, const ExpVec& a) {
  if (a.size() != seed.rank()) throw std::invalid_argument("cluster_monomial: wrong exponent length");
  if (!a.is_nonnegative()) throw std::invalid_argument("cluster_monomial: exponents must be nonnegative");
  return normal_product_unchecked(seed.vars, seed.pair.lam, a);
}

std::vector<std::vector<int>> enumerate_sequences(const std::vector<int>& ex, int depth, bool prune_back) {
  std::vector<std::vector<int>> out{{}};
  std::vector<std::vector<int>> frontier{{}};
  for (int len = 1; len <= depth; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& s : frontier) {
      for (int k : ex) {
        if (prune_back && !s.empty() && s.back() == k) continue;
        auto t = s;
        t.push_back(k);
        next.push_back(std::move(t));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

std::string sequence_to_string(const std::vector<int>& seq) {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < seq.size(); ++k) os << (k ? "," : "") << seq[k] + 1;
  os << "]";
  return os.str();
}

}  // namespace qfrob
