#pragma once

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qfrob/cluster.hpp"
#include "qfrob/functional.hpp"

namespace qfrob {

using CycloTorus = TorusSpace<CycloRing>;
using CElt = TorusElement<CycloRing>;
using ModpTorus = TorusSpace<ModpRing>;
using PElt = TorusElement<ModpRing>;

std::shared_ptr<const CycloTorus> spec_space(const SkewForm& form, int l, Point p);
// Coefficientwise specialization into `sp`, whose form must match f's.
CElt spec_torus(const LElt& f, const std::shared_ptr<const CycloTorus>& sp);

// x^a -> x^{la}; f must live at ONE, `eps` is the target space at EPS.
CElt fr_star(const CElt& f, const std::shared_ptr<const CycloTorus>& eps);
// x^a -> x^{a/l}, or dropped when a is not in lZ^J; f at EPS, `one` at ONE.
CElt frp_star(const CElt& f, const std::shared_ptr<const CycloTorus>& one);

// Reduction mod p of an element at ONE (whose coefficients are integers).
PElt reduce_modp(const CElt& f, const std::shared_ptr<const ModpTorus>& sp);
PElt reduce_modp(const LElt& f, const std::shared_ptr<const ModpTorus>& sp);
// x^a -> x^{a/p}, or dropped.
PElt modp_split(const PElt& f);
// Pad exponent vectors with zeros into the larger space.
PElt embed(const PElt& f, const std::shared_ptr<const ModpTorus>& big);

// Weight of x^a given the weights of the coordinates.
IVec monomial_weight(const std::vector<IVec>& weights, const ExpVec& a);
// Common weight of all terms, or nullopt if f is not homogeneous (or zero).
template <class Ring>
std::optional<IVec> element_weight(const TorusElement<Ring>& f, const std::vector<IVec>& weights) {
  std::optional<IVec> w;
  for (const auto& [a, c] : f.terms()) {
    IVec x = monomial_weight(weights, a);
    if (w && *w != x) return std::nullopt;
    w = std::move(x);
  }
  return w;
}

// Weights of the initial variables D_t: varpi_{i_t} - lambda_t.
std::vector<IVec> initial_weights(const CartanData& cd, const Word& word);

struct TheoremVerdict {
  bool pass = true;
  long checked = 0;
  // Number of a where Fr'* of the EPS monomial is nonzero.
  long nonzero_frp = 0;
  std::string witness;
  // Only when the mod-p splitting was also checked.
  bool split_checked = false;
  bool split_pass = true;
  std::string split_witness;
};

// Checks Fr*(1x^a) = ex^{la} and Fr'*(ex^a) = 1x^{a/l} for every cluster
// monomial of one seed, by specializing its variables first and multiplying
// in the specialized tori.
class TheoremVerifier {
 public:
  TheoremVerifier(const QuantumSeed& seed, int l);

  int l() const noexcept { return l_; }
  // Specialized cluster monomials x^a at ONE and at EPS.
  CElt at_one(const ExpVec& a);
  CElt at_eps(const ExpVec& a);

  // All a with 0 <= a_t <= bound. With split, also checks that the cluster
  // splitting mod p = l divides cluster-monomial degrees by p.
  TheoremVerdict run(int bound, bool split = false);
  // Same checks for an explicit list of exponent vectors.
  TheoremVerdict run(const std::vector<ExpVec>& as, bool split = false);

  const std::shared_ptr<const CycloTorus>& one_space() const noexcept { return one_; }
  const std::shared_ptr<const CycloTorus>& eps_space() const noexcept { return eps_; }

 private:
  const CElt& power(std::vector<std::vector<CElt>>& cache, const std::vector<CElt>& base, int i, int k);
  long prefactor(const ExpVec& a) const;
  template <class F>
  void for_each(std::vector<std::vector<CElt>>& cache, const std::vector<CElt>& base, int bound, long scale, F&& visit);

  int l_;
  int n_;
  SkewForm lam_;
  std::shared_ptr<const CycloTorus> one_, eps_;
  std::vector<CElt> var_one_, var_eps_, var_eps_l_;
  std::vector<std::vector<CElt>> pow_one_, pow_eps_, pow_eps_l_;
};

TheoremVerdict verify_theorem(const QuantumSeed& initial, const std::vector<int>& sequence, int bound, int l, bool split = false);

// Whether embed(phi_v(f)) == phi_w(embed(f)) for every sample.
bool reduction_commutes(const CartanData& cd, const Word& word_w, int prefix_len, const std::vector<PElt>& samples,
                        std::string* witness = nullptr);

// Random element with `terms` monomials, exponents in [lo, hi] and small
// coefficients drawn through `coeff`.
template <class Ring, class Coeff>
TorusElement<Ring> random_element(const std::shared_ptr<const TorusSpace<Ring>>& sp, std::mt19937_64& rng, int terms, int lo, int hi,
                                  Coeff&& coeff) {
  std::uniform_int_distribution<int> ex(lo, hi);
  std::vector<typename TorusElement<Ring>::Term> out;
  for (int k = 0; k < terms; ++k) {
    ExpVec a(sp->rank());
    for (int i = 0; i < sp->rank(); ++i) a[i] = ex(rng);
    out.emplace_back(a, coeff(rng));
  }
  return TorusElement<Ring>::from_terms(sp, std::move(out));
}

CycloInt random_cyclo(int l, std::mt19937_64& rng);

}  // namespace qfrob
