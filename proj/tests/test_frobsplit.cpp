#include <gtest/gtest.h>

#include <random>

#include "qfrob/frobsplit.hpp"

using namespace qfrob;

namespace {

QuantumSeed seed_for(const char* type, const Word& w) {
  auto cd = CartanData::preset(type);
  return seed_from_word(cd, w, commutation_matrix(cd, w));
}

const Word kA2{0, 1, 0};
const Word kA3{0, 1, 0, 2, 1, 0};

CElt random_c(const std::shared_ptr<const CycloTorus>& sp, std::mt19937_64& rng, int terms = 4) {
  const int l = sp->ring.l;
  const bool one = sp->ring.point == Point::ONE;
  return random_element(sp, rng, terms, -3, 3, [&](std::mt19937_64& r) {
    if (one) return CycloInt(l, Int(std::uniform_int_distribution<int>(-4, 4)(r)));
    return random_cyclo(l, r);
  });
}

PElt random_p(const std::shared_ptr<const ModpTorus>& sp, std::mt19937_64& rng, int terms = 4) {
  const long p = static_cast<long>(sp->ring.p);
  return random_element(sp, rng, terms, 0, 4, [&](std::mt19937_64& r) { return sp->ring.from_int(std::uniform_int_distribution<long>(0, p - 1)(r)); });
}

}  // namespace

TEST(SpecTorus, Examples) {
  auto s = seed_for("A2", kA2);
  for (Point p : {Point::ONE, Point::EPS}) {
    auto sp = spec_space(s.initial->form, 3, p);
    EXPECT_EQ(spec_torus(LElt::one(s.initial), sp), CElt::one(sp));
  }
  auto eps = spec_space(s.initial->form, 3, Point::EPS);
  LElt f = LElt::monomial(s.initial, ExpVec{1, 1, 0}, IntLaurent::v(1));
  EXPECT_EQ(spec_torus(f, eps), CElt::monomial(eps, ExpVec{1, 1, 0}, CycloInt::eps_pow(3, 2)));
  EXPECT_THROW(spec_space(s.initial->form, 4, Point::EPS), std::invalid_argument);
  auto one = spec_space(s.initial->form, 5, Point::ONE);
  auto m = mutate_seed(s, 0);
  CElt x = spec_torus(m.vars[0], one);
  for (const auto& [a, c] : m.vars[0].terms()) EXPECT_EQ(x.coeff(a), CycloInt(5, c.at_one()));
}

TEST(SpecTorus, Multiplicative) {
  std::mt19937_64 rng(1);
  for (const Word& w : {kA2, kA3}) {
    auto s = seed_for(w.size() == 3 ? "A2" : "A3", w);
    for (int l : {3, 5}) {
      for (Point p : {Point::ONE, Point::EPS}) {
        auto sp = spec_space(s.initial->form, l, p);
        for (int trial = 0; trial < 20; ++trial) {
          auto coeff = [](std::mt19937_64& r) { return IntLaurent::monomial(Int(std::uniform_int_distribution<int>(-3, 3)(r)), std::uniform_int_distribution<int>(-4, 4)(r)); };
          LElt f = random_element(s.initial, rng, 3, -2, 2, coeff), g = random_element(s.initial, rng, 3, -2, 2, coeff);
          EXPECT_EQ(spec_torus(f * g, sp), spec_torus(f, sp) * spec_torus(g, sp));
        }
      }
    }
  }
}

TEST(FrobeniusStar, Properties) {
  std::mt19937_64 rng(2);
  for (const Word& w : {kA2, kA3}) {
    auto s = seed_for(w.size() == 3 ? "A2" : "A3", w);
    for (int l : {3, 5}) {
      auto one = spec_space(s.initial->form, l, Point::ONE), eps = spec_space(s.initial->form, l, Point::EPS);
      ExpVec a = ExpVec::unit(s.rank(), 1);
      EXPECT_EQ(fr_star(CElt::monomial(one, a), eps), CElt::monomial(eps, a.scaled(l)));
      EXPECT_EQ(fr_star(CElt::one(one), eps), CElt::one(eps));
      EXPECT_TRUE(frp_star(CElt::monomial(eps, a), one).is_zero());
      EXPECT_THROW(fr_star(CElt::one(eps), eps), std::invalid_argument);
      for (int trial = 0; trial < 25; ++trial) {
        CElt f = random_c(one, rng), g = random_c(one, rng), h = random_c(eps, rng), k = random_c(eps, rng);
        EXPECT_EQ(fr_star(f * g, eps), fr_star(f, eps) * fr_star(g, eps));
        EXPECT_EQ(frp_star(fr_star(f, eps), one), f);
        EXPECT_EQ(frp_star(fr_star(f, eps) * h, one), f * frp_star(h, one));
        EXPECT_EQ(frp_star(h * k, one), frp_star(k * h, one));
        // the trace property needs terms whose sum lies in lZ^J
        CElt hl = h * fr_star(f, eps);
        EXPECT_EQ(frp_star(hl * k, one), frp_star(k * hl, one));
      }
    }
  }
}

TEST(FrobeniusStar, Grading) {
  auto cd = CartanData::preset("A3");
  auto s0 = seed_for("A3", kA3);
  auto weights = initial_weights(cd, kA3);
  for (const auto& seq : enumerate_sequences(s0.pair.bt.ex, 2)) {
    TheoremVerifier v(mutate_along(s0, seq), 3);
    for (const ExpVec& a : {ExpVec{1, 0, 0, 1, 0, 0}, ExpVec{3, 0, 3, 0, 0, 3}, ExpVec{0, 2, 1, 0, 1, 0}}) {
      CElt e = v.at_eps(a), o = v.at_one(a);
      auto mu = element_weight(e, weights);
      ASSERT_TRUE(mu.has_value()) << sequence_to_string(seq);
      auto lmu = element_weight(fr_star(o, v.eps_space()), weights);
      ASSERT_TRUE(lmu.has_value());
      for (std::size_t k = 0; k < mu->size(); ++k) EXPECT_EQ((*lmu)[k], 3 * (*mu)[k]);
      CElt down = frp_star(e, v.one_space());
      if (!down.is_zero()) {
        auto m3 = element_weight(down, weights);
        ASSERT_TRUE(m3.has_value());
        for (std::size_t k = 0; k < mu->size(); ++k) EXPECT_EQ(3 * (*m3)[k], (*mu)[k]);
      }
    }
  }
}

TEST(Theorem, A2Examples) {
  auto s = seed_for("A2", kA2);
  TheoremVerifier v0(s, 3);
  CElt down = frp_star(v0.at_eps(ExpVec{3, 0, 0}), v0.one_space());
  EXPECT_EQ(down, CElt::monomial(v0.one_space(), ExpVec{1, 0, 0}));
  TheoremVerifier v1(mutate_seed(s, 0), 3);
  EXPECT_TRUE(frp_star(v1.at_eps(ExpVec{1, 0, 0}), v1.one_space()).is_zero());
  EXPECT_EQ(fr_star(v1.at_one(ExpVec{3, 3, 0}), v1.eps_space()), v1.at_eps(ExpVec{9, 9, 0}));
  EXPECT_EQ(frp_star(v1.at_eps(ExpVec{3, 3, 0}), v1.one_space()), v1.at_one(ExpVec{1, 1, 0}));
  for (int l : {3, 5}) {
    for (const auto& seq : enumerate_sequences(s.pair.bt.ex, 4)) {
      TheoremVerdict r = verify_theorem(s, seq, l, l, true);
      EXPECT_TRUE(r.pass) << r.witness;
      EXPECT_TRUE(r.split_pass) << r.split_witness;
      EXPECT_EQ(r.checked, (l + 1) * (l + 1) * (l + 1));
      EXPECT_EQ(r.nonzero_frp, 8);
    }
  }
}

TEST(Theorem, DetectsPerturbedSeed) {
  auto s = mutate_seed(seed_for("A2", kA2), 0);
  QuantumSeed bad = s;
  bad.vars[0] = s.vars[0] + LElt::one(s.initial);
  TheoremVerdict r = TheoremVerifier(bad, 3).run(3);
  EXPECT_FALSE(r.pass);
  EXPECT_NE(r.witness.find("a="), std::string::npos);
}

TEST(Splitting, Axioms) {
  std::mt19937_64 rng(4);
  for (uint64_t p : {3u, 5u}) {
    auto sp = make_space<ModpRing>(SkewForm::zero(3), ModpRing{p});
    EXPECT_EQ(modp_split(PElt::one(sp)), PElt::one(sp));
    for (int trial = 0; trial < 50; ++trial) {
      PElt f = random_p(sp, rng), g = random_p(sp, rng);
      EXPECT_EQ(modp_split(f.pow(static_cast<int>(p)) * g), f * modp_split(g));
      EXPECT_EQ(modp_split(f.pow(static_cast<int>(p))), f);
    }
    // frozen divisor: phi(x_t g) stays in x_t times the nonnegative span
    for (int trial = 0; trial < 50; ++trial) {
      PElt g = random_p(sp, rng);
      PElt h = modp_split(PElt::monomial(sp, ExpVec::unit(3, 2)) * g);
      for (const auto& [a, c] : h.terms()) EXPECT_GE(a[2], 1);
    }
  }
}

TEST(Splitting, ReductionCommutes) {
  auto a3 = CartanData::preset("A3");
  std::mt19937_64 rng(6);
  auto small = make_space<ModpRing>(SkewForm::zero(3), ModpRing{3});
  std::vector<PElt> samples{PElt::one(small), PElt::monomial(small, ExpVec{3, 6, 1})};
  for (int k = 0; k < 30; ++k) samples.push_back(random_p(small, rng, 6));
  std::string why;
  EXPECT_TRUE(reduction_commutes(a3, kA3, 3, samples, &why)) << why;
  EXPECT_THROW(reduction_commutes(a3, {0, 0}, 1, samples), std::invalid_argument);
  auto a2 = CartanData::preset("A2");
  EXPECT_THROW(reduction_commutes(a2, kA2, 2, samples), std::invalid_argument);
}

TEST(Splitting, ReductionOfLaurent) {
  auto s = seed_for("A2", kA2);
  auto sp = make_space<ModpRing>(SkewForm::zero(3), ModpRing{3});
  LElt f = LElt::monomial(s.initial, ExpVec{1, 0, 0}, IntLaurent(4) + IntLaurent::v(3)) + LElt::monomial(s.initial, ExpVec{0, 1, 0}, IntLaurent(3));
  EXPECT_EQ(reduce_modp(f, sp), PElt::monomial(sp, ExpVec{1, 0, 0}, 2));
}
