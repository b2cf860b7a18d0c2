#include <gtest/gtest.h>

#include <random>

#include "qfrob/functional.hpp"

using namespace qfrob;

namespace {

Word random_word(std::mt19937_64& rng, int rank, int len) {
  std::uniform_int_distribution<int> d(0, rank - 1);
  Word w(len);
  for (int& x : w) x = d(rng);
  return w;
}

RatFunc inv(const IntLaurent& d) { return RatFunc(IntLaurent(1), d); }

}  // namespace

TEST(Coproduct, Generators) {
  auto a2 = CartanData::preset("A2");
  EXPECT_EQ(coproduct(a2, FreeElt::one()), TensorElt::pure({}, {}));
  TensorElt e1 = TensorElt::pure({0}, {});
  e1 += TensorElt::pure({}, {0});
  EXPECT_EQ(coproduct(a2, FreeElt::gen(0)), e1);
}

TEST(Coproduct, IsTwistedHomomorphism) {
  std::mt19937_64 rng(3);
  for (const char* type : {"A2", "B2"}) {
    auto cd = CartanData::preset(type);
    for (int trial = 0; trial < 30; ++trial) {
      FreeElt x = FreeElt::word(random_word(rng, 2, 1 + trial % 3));
      FreeElt y = FreeElt::word(random_word(rng, 2, 1 + trial % 4));
      EXPECT_EQ(coproduct(cd, x * y), coproduct(cd, x).mul(cd, coproduct(cd, y)));
    }
  }
}

TEST(Coproduct, DividedPowers) {
  auto b2 = CartanData::preset("B2");
  for (int i = 0; i < 2; ++i) {
    const int t = b2.t(i);
    for (int n = 1; n <= 4; ++n) {
      TensorElt expect;
      for (int s = 0; s <= n; ++s) {
        RatFunc c = inv(qfactorial(s, t) * qfactorial(n - s, t)).shifted(-2 * t * s * (n - s));
        expect.add_term({Word(s, i), Word(n - s, i)}, c);
        // the eq. coefficients are symmetric under s -> n - s
        EXPECT_EQ(c, inv(qfactorial(n - s, t) * qfactorial(s, t)).shifted(-2 * t * (n - s) * s));
      }
      EXPECT_EQ(coproduct(b2, FreeElt::divided_power(b2, i, n)), expect) << "i=" << i << " n=" << n;
    }
  }
}

TEST(Form, Examples) {
  auto a2 = CartanData::preset("A2");
  EXPECT_EQ(lusztig_form(a2, FreeElt::one(), FreeElt::one()), RatFunc(1));
  EXPECT_TRUE(lusztig_form(a2, FreeElt::gen(0), FreeElt::gen(1)).is_zero());
  EXPECT_EQ(lusztig_form(a2, FreeElt::gen(0), FreeElt::gen(0)), inv(IntLaurent(1) - IntLaurent::q(2)));
  auto b2 = CartanData::preset("B2");
  for (int i = 0; i < 2; ++i) {
    for (int n = 1; n <= 3; ++n) {
      IntLaurent d(1);
      for (int s = 1; s <= n; ++s) d *= IntLaurent(1) - IntLaurent::q(2 * b2.t(i) * s);
      auto x = FreeElt::divided_power(b2, i, n);
      EXPECT_EQ(lusztig_form(b2, x, x), inv(d));
    }
  }
  // (e1 e1, e1 e1) = [2]_1! (e1^(2), e1^(2)) [2]_1!
  auto ee = FreeElt::word({0, 0});
  EXPECT_EQ(lusztig_form(a2, ee, ee), RatFunc(qfactorial(2, 1) * qfactorial(2, 1)) * inv((IntLaurent(1) - IntLaurent::q(2)) * (IntLaurent(1) - IntLaurent::q(4))));
}

TEST(Form, Symmetric) {
  std::mt19937_64 rng(5);
  for (const char* type : {"A2", "B2", "G2"}) {
    auto cd = CartanData::preset(type);
    for (int trial = 0; trial < 40; ++trial) {
      Word a = random_word(rng, 2, 4);
      Word b = a;
      std::shuffle(b.begin(), b.end(), rng);
      EXPECT_EQ(word_form(cd, a, b), word_form(cd, b, a)) << type;
    }
  }
}

TEST(Radical, Serre) {
  for (const char* type : {"A2", "B2", "G2"}) {
    auto cd = CartanData::preset(type);
    for (int i = 0; i < 2; ++i) {
      const int j = 1 - i, n = 1 - cd.a(i, j);
      FreeElt s;
      for (int k = 0; k <= n; ++k) {
        Word w(n - k, i);
        w.push_back(j);
        w.insert(w.end(), k, i);
        IntLaurent c = qbinom(n, k, cd.t(i));
        s += FreeElt::word(w, RatFunc(k % 2 ? -c : c));
      }
      EXPECT_TRUE(is_zero(cd, s)) << type << " i=" << i;
    }
  }
  auto a2 = CartanData::preset("A2");
  EXPECT_FALSE(is_zero(a2, FreeElt::gen(0)));
  EXPECT_FALSE(is_zero(a2, FreeElt::word({0, 1}) - FreeElt::word({1, 0})));
  std::vector<std::vector<IntLaurent>> g;
  for (const Word& x : words_of_weight({1, 1})) {
    g.emplace_back();
    for (const Word& y : words_of_weight({1, 1})) g.back().push_back(word_form_numerator(a2, x, y));
  }
  EXPECT_EQ(laurent_rank(g), 2);
  // weight 2a1 + a2 has three words and one Serre relation
  g.clear();
  for (const Word& x : words_of_weight({2, 1})) {
    g.emplace_back();
    for (const Word& y : words_of_weight({2, 1})) g.back().push_back(word_form_numerator(a2, x, y));
  }
  EXPECT_EQ(laurent_rank(g), 2);
}

TEST(Frobenius, DividedWords) {
  EXPECT_EQ(fr_divided({{0, 3}, {1, 6}}, 3), (DividedWord{{0, 1}, {1, 2}}));
  EXPECT_FALSE(fr_divided({{0, 2}}, 3).has_value());
  EXPECT_EQ(frp_divided({{0, 1}}, 3), (DividedWord{{0, 3}}));
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(1, 4), letter(0, 2);
  for (int trial = 0; trial < 50; ++trial) {
    DividedWord w;
    for (int k = 0; k < 1 + trial % 4; ++k) w.emplace_back(letter(rng), d(rng));
    for (int l : {3, 5}) EXPECT_EQ(fr_divided(frp_divided(w, l), l), w);
  }
  EXPECT_EQ(divided_word_to_string({{0, 3}, {1, 1}}), "e1^(3)e2");
  EXPECT_EQ(divided_words_of_weight({2, 0}).size(), 2u);
  EXPECT_EQ(divided_words_of_weight({1, 1}).size(), 2u);
}

TEST(Frobenius, TensorTwistVanishesOnLWeights) {
  for (const char* type : {"A2", "B2"}) {
    auto cd = CartanData::preset(type);
    for (int l : {3, 5}) {
      for (const IVec& mu : {IVec{1, 0}, IVec{1, 1}, IVec{2, 1}}) {
        for (const IVec& nu : {IVec{0, 1}, IVec{1, 2}}) {
          IVec lm = mu, ln = nu;
          for (int& x : lm) x *= l;
          for (int& x : ln) x *= l;
          Word x2 = words_of_weight(lm).front(), y1 = words_of_weight(ln).front();
          TensorElt prod = TensorElt::pure({}, x2).mul(cd, TensorElt::pure(y1, {}));
          ASSERT_EQ(prod.terms().size(), 1u);
          const RatFunc& c = prod.terms().begin()->second;
          ASSERT_TRUE(c.is_laurent());
          EXPECT_TRUE(specialize(c.num(), l, Point::EPS).is_one());
        }
      }
    }
  }
}

TEST(Module, WeightSpacesOfVector) {
  auto a2 = CartanData::preset("A2");
  auto spaces = build_module(a2, {1, 0}, {2, 1});
  std::map<IVec, int> dim;
  for (const auto& ws : spaces) dim[ws.gamma] = ws.dim;
  EXPECT_EQ(dim.at({0, 0}), 1);
  EXPECT_EQ(dim.at({1, 0}), 1);
  EXPECT_EQ(dim.at({1, 1}), 1);
  EXPECT_EQ(dim.at({0, 1}), 0);
  EXPECT_EQ(dim.at({2, 0}), 0);
  EXPECT_EQ(dim.at({2, 1}), 0);
  EXPECT_EQ(spaces.front().gram[0][0], IntLaurent(1));
  for (const auto& ws : spaces) {
    for (std::size_t i = 0; i < ws.words.size(); ++i) {
      for (std::size_t j = 0; j < ws.words.size(); ++j) EXPECT_EQ(ws.gram[i][j], ws.gram[j][i]);
    }
  }
  // adjoint of A2: 8 dimensional
  int total = 0;
  for (const auto& ws : build_module(a2, {1, 1}, {2, 2})) total += ws.dim;
  EXPECT_EQ(total, 8);
  EXPECT_THROW(build_module(a2, {-1, 0}, {1, 1}), std::invalid_argument);
}

TEST(Module, RankOneForm) {
  for (const char* type : {"A2", "B2"}) {
    auto cd = CartanData::preset(type);
    for (int i = 0; i < 2; ++i) {
      for (int m = 0; m <= 3; ++m) {
        IVec lam(2, 0);
        lam[i] = m;
        for (int n = 0; n <= m + 1; ++n) {
          ModuleVec u = highest_vector(lam);
          for (int k = 0; k < n; ++k) u = apply_f(i, u);
          RatFunc c = inv(qfactorial(n, cd.t(i)));
          for (auto& [w, x] : u.terms) x *= c;
          RatFunc expect = n <= m ? RatFunc(qbinom(m, n, cd.t(i))) : RatFunc();
          EXPECT_EQ(module_form(cd, u, u), expect) << type << " i=" << i << " m=" << m << " n=" << n;
        }
      }
    }
  }
}

TEST(Module, ExtremalVectors) {
  auto a2 = CartanData::preset("A2");
  EXPECT_TRUE(module_equal(a2, extremal_vector(a2, {1, 0}, {}), highest_vector({1, 0})));
  EXPECT_EQ(extremal_exponents(a2, {1, 0}, {0}), (IVec{1}));
  EXPECT_TRUE(module_equal(a2, extremal_vector(a2, {1, 0}, {0}), apply_f(0, highest_vector({1, 0}))));
  for (const IVec& lam : {IVec{1, 0}, IVec{0, 1}, IVec{1, 1}, IVec{2, 1}}) {
    ModuleVec a = extremal_vector(a2, lam, {0, 1, 0}), b = extremal_vector(a2, lam, {1, 0, 1});
    EXPECT_TRUE(module_equal(a2, a, b));
    EXPECT_FALSE(module_is_zero(a2, a));
    EXPECT_EQ(module_form(a2, a, a), RatFunc(1));
  }
  auto b2 = CartanData::preset("B2");
  EXPECT_TRUE(module_equal(b2, extremal_vector(b2, {1, 1}, {0, 1, 0, 1}), extremal_vector(b2, {1, 1}, {1, 0, 1, 0})));
  // f_i v = 0 when <h_i, lambda> = 0
  EXPECT_TRUE(module_is_zero(a2, apply_f(1, highest_vector({1, 0}))));
  // e_i f_i v = [<h_i, lambda>]_i v
  ModuleVec efv = apply_e(b2, 1, apply_f(1, highest_vector({0, 2})));
  ASSERT_EQ(efv.terms.size(), 1u);
  EXPECT_EQ(efv.terms.begin()->second, RatFunc(qint(2, 2)));
}

TEST(Minor, Examples) {
  auto a2 = CartanData::preset("A2");
  Functional id = quantum_minor(a2, {1, 0}, {});
  EXPECT_EQ(id(Word{}), IntLaurent(1));
  Functional d1 = unipotent_minor(a2, {0, 1, 0}, 0);
  EXPECT_EQ(d1.weight, (IVec{1, 0}));
  EXPECT_FALSE(d1(Word{0}).is_zero());
  EXPECT_TRUE(d1(Word{1}).is_zero());
  for (const char* type : {"A2", "B2", "A3"}) {
    auto cd = CartanData::preset(type);
    Word w = std::string(type) == "A2" ? Word{0, 1, 0} : std::string(type) == "B2" ? Word{0, 1, 0, 1} : Word{0, 1, 0, 2, 1, 0};
    for (int t = 0; t < static_cast<int>(w.size()); ++t) {
      Functional d = unipotent_minor(cd, w, t);
      EXPECT_EQ(d.weight, minor_weight(cd, w, t));
      for (const DividedWord& f : divided_words_of_weight(d.weight)) EXPECT_TRUE(evaluate_divided(cd, d, f).has_value()) << divided_word_to_string(f);
    }
  }
}

TEST(Minor, VanishingBeyondHighestWeight) {
  auto a2 = CartanData::preset("A2");
  Functional d = quantum_minor(a2, {1, 1}, {0, 1, 0});
  EXPECT_EQ(d.weight, (IVec{2, 2}));
  int nonzero = 0;
  for (const Word& x : words_of_weight(d.weight)) {
    if (!d(x).is_zero()) ++nonzero;
    if (x[0] == x[1]) EXPECT_TRUE(d(x).is_zero()) << word_to_string(x);
  }
  EXPECT_GT(nonzero, 0);
}

TEST(Functional, ProductAgreesWithCoproduct) {
  auto b2 = CartanData::preset("B2");
  Word w{0, 1, 0, 1};
  Functional a = unipotent_minor(b2, w, 1), b = unipotent_minor(b2, w, 3);
  Functional ab = functional_mul(b2, a, b);
  for (const Word& x : words_of_weight(ab.weight)) {
    RatFunc s;
    TensorElt r = coproduct(b2, FreeElt::word(x));
    for (const auto& [k, c] : r.terms()) s += c * RatFunc(a(k.first) * b(k.second));
    EXPECT_EQ(RatFunc(ab(x)), s) << word_to_string(x);
  }
}

TEST(Functional, UnitAndAssociativity) {
  auto a2 = CartanData::preset("A2");
  Word w{0, 1, 0};
  std::vector<Functional> d;
  for (int t = 0; t < 3; ++t) d.push_back(unipotent_minor(a2, w, t));
  Functional e = Functional::counit(2);
  EXPECT_EQ(functional_mul(a2, d[1], e), d[1]);
  EXPECT_EQ(functional_mul(a2, e, d[1]), d[1]);
  EXPECT_EQ(functional_mul(a2, functional_mul(a2, d[0], d[1]), d[2]), functional_mul(a2, d[0], functional_mul(a2, d[1], d[2])));
  EXPECT_TRUE(d[0](Word{0, 1}).is_zero());
  EXPECT_EQ(functional_pow(a2, d[0], 0), e);
}

TEST(Functional, CommutationMatrix) {
  auto a2 = CartanData::preset("A2");
  SkewForm lam = commutation_matrix(a2, {0, 1, 0});
  EXPECT_EQ(lam.matrix(), (IMat{{0, -1, 1}, {1, 0, 0}, {-1, 0, 0}}));
  EXPECT_THROW(commutation_matrix(a2, {0, 0}), std::invalid_argument);
  for (const char* type : {"B2", "A3"}) {
    auto cd = CartanData::preset(type);
    Word w = std::string(type) == "B2" ? Word{0, 1, 0, 1} : Word{0, 1, 0, 2, 1, 0};
    SkewForm l = commutation_matrix(cd, w);
    for (int t = 0; t < l.size(); ++t) EXPECT_EQ(l(t, t), 0);
  }
}

TEST(Functional, BaseCaseAndKkko) {
  auto a2 = CartanData::preset("A2");
  Word w{0, 1, 0};
  for (int t = 0; t < 3; ++t) {
    Verdict v = check_prop_le1_base(a2, w, t, 3);
    EXPECT_TRUE(v.pass) << v.witness;
    EXPECT_GT(v.checked, 0);
    Verdict neg = check_prop_le1_base(a2, w, t, 3, Point::ONE);
    EXPECT_FALSE(neg.pass);
    EXPECT_FALSE(neg.witness.empty());
    EXPECT_TRUE(check_kkko_power(a2, w, t, 3).pass);
    EXPECT_TRUE(check_kkko_power(a2, w, t, 1).pass);
  }
  // the base weight for t = 1 is 3 alpha_1: e1^(3), e1^(2)e1, e1 e1^(2), e1 e1 e1
  EXPECT_EQ(check_prop_le1_base(a2, w, 0, 3).checked, 4);
  auto b2 = CartanData::preset("B2");
  EXPECT_TRUE(check_kkko_power(b2, {0, 1, 0, 1}, 0, 3).pass);
  EXPECT_TRUE(check_prop_le1_base(b2, {0, 1, 0, 1}, 1, 3).pass);
}
