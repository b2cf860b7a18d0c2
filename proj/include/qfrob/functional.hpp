#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qfrob/cyclotomic.hpp"
#include "qfrob/torus.hpp"
#include "qfrob/uqn.hpp"

namespace qfrob {

// sum c * f_{j1} ... f_{jm} v_lambda, read in the Verma module over V(lambda).
// Two vectors are equal in V(lambda) iff their difference pairs to zero with
// every f-word (module_is_zero).
struct ModuleVec {
  IVec lambda;
  std::map<Word, RatFunc> terms;
};

ModuleVec highest_vector(const IVec& lambda);
ModuleVec apply_f(int i, const ModuleVec& u);
ModuleVec apply_e(const CartanData& cd, int i, const ModuleVec& u);

// (F1 v_lambda, F2 v_lambda)_lambda for undivided f-words.
IntLaurent fword_form(const CartanData& cd, const IVec& lambda, const Word& f1, const Word& f2);
RatFunc module_form(const CartanData& cd, const ModuleVec& u, const ModuleVec& w);
bool module_is_zero(const CartanData& cd, const ModuleVec& u);
bool module_equal(const CartanData& cd, const ModuleVec& a, const ModuleVec& b);

// a_t = <h_{i_t}, s_{i_{t+1}} ... s_{i_r} lambda>
IVec extremal_exponents(const CartanData& cd, const IVec& lambda, const Word& word);
// f_{i_1}^{(a_1)} ... f_{i_r}^{(a_r)} v_lambda
ModuleVec extremal_vector(const CartanData& cd, const IVec& lambda, const Word& word);

struct WeightSpace {
  IVec gamma;  // the weight is lambda - gamma
  std::vector<Word> words;
  std::vector<std::vector<IntLaurent>> gram;
  int dim = 0;
};

// Weight spaces lambda - gamma for all 0 <= gamma <= depth, with gamma in
// graded-lex order. Throws unless lambda is dominant.
std::vector<WeightSpace> build_module(const CartanData& cd, const IVec& lambda, const IVec& depth);

// Linear form on the words of one weight; absent words evaluate to zero.
// Values on plain words are integral.
struct Functional {
  IVec weight;
  std::map<Word, IntLaurent> values;

  static Functional counit(int rank);
  IntLaurent operator()(const Word& w) const;
  friend bool operator==(const Functional&, const Functional&) = default;
};

// D(w lambda, lambda) with w = s_{i_1} ... s_{i_r} from `word`.
Functional quantum_minor(const CartanData& cd, const IVec& lambda, const Word& word);
// D_t = D(lambda_t, varpi_{i_t}) for the reduced word, t 0-based.
Functional unipotent_minor(const CartanData& cd, const Word& word, int t);

// (phi psi)(x) = (phi (x) psi)(r(x))
Functional functional_mul(const CartanData& cd, const Functional& phi, const Functional& psi);
Functional functional_pow(const CartanData& cd, const Functional& phi, int n);
RatFunc evaluate(const CartanData& cd, const Functional& phi, const FreeElt& x);
// Value on a divided word; nullopt if it is not in Z[v, v^{-1}].
std::optional<IntLaurent> evaluate_divided(const CartanData& cd, const Functional& phi, const DividedWord& w);

struct NotQCommuting : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// lambda_tk with D_k D_t = q^{lambda_tk} D_t D_k; throws NotQCommuting.
SkewForm commutation_matrix(const CartanData& cd, const Word& word);

struct Verdict {
  bool pass = true;
  long checked = 0;
  std::string witness;
};

// specialize(D_t(Fr f), ONE) == specialize(D_t^l (f), rhs) over every divided
// word f of weight l wt(D_t). rhs = ONE is the negative control.
Verdict check_prop_le1_base(const CartanData& cd, const Word& word, int t, int l, Point rhs = Point::EPS);
// D_t^l == q^{-l(l-1)/2 (varpi, varpi - lambda_t)} D(l lambda_t, l varpi) on all words.
Verdict check_kkko_power(const CartanData& cd, const Word& word, int t, int l);

}  // namespace qfrob
