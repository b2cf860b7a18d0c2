#include <gtest/gtest.h>

#include <random>

#include "qfrob/torus.hpp"

using namespace qfrob;

namespace {

using Elt = TorusElement<LaurentRing>;

SkewForm random_form(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> d(-3, 3);
  IMat m(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      m[i][j] = d(rng);
      m[j][i] = -m[i][j];
    }
  }
  return SkewForm(m);
}

ExpVec random_exp(std::mt19937_64& rng, int n, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  ExpVec a(n);
  for (int k = 0; k < n; ++k) a[k] = d(rng);
  return a;
}

Elt random_elt(std::mt19937_64& rng, const std::shared_ptr<const TorusSpace<LaurentRing>>& sp, int max_terms = 4) {
  std::uniform_int_distribution<int> nt(1, max_terms), c(-3, 3), e(-4, 4);
  std::vector<Elt::Term> terms;
  int k = nt(rng);
  for (int i = 0; i < k; ++i) {
    int cc = c(rng);
    if (cc == 0) cc = 1;
    terms.emplace_back(random_exp(rng, sp->rank()), IntLaurent::monomial(Int(cc), e(rng)) + IntLaurent::v(e(rng)));
  }
  return Elt::from_terms(sp, terms);
}

}  // namespace

TEST(SkewForm, EvalExamples) {
  SkewForm lam({{0, 1}, {-1, 0}});
  EXPECT_EQ(lam.eval(ExpVec{1, 0}, ExpVec{0, 1}), 1);
  EXPECT_EQ(lam.eval(ExpVec{3, -2}, ExpVec{3, -2}), 0);
  EXPECT_THROW(lam.eval(ExpVec{1, 0, 0}, ExpVec{0, 1}), std::invalid_argument);
  EXPECT_THROW(SkewForm({{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST(SkewForm, BilinearAndCocycle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + trial % 5;
    SkewForm lam = random_form(rng, n);
    ExpVec a = random_exp(rng, n), b = random_exp(rng, n), c = random_exp(rng, n);
    EXPECT_EQ(lam.eval(a + b, c), lam.eval(a, c) + lam.eval(b, c));
    EXPECT_EQ(lam.eval(a, b), -lam.eval(b, a));
    EXPECT_EQ(lam.eval(a, b) + lam.eval(a + b, c), lam.eval(b, c) + lam.eval(a, b + c));
  }
}

TEST(Torus, MonomialRule) {
  auto sp = make_space<LaurentRing>(SkewForm({{0, 1}, {-1, 0}}));
  Elt x1 = Elt::monomial(sp, ExpVec{1, 0}), x2 = Elt::monomial(sp, ExpVec{0, 1});
  EXPECT_EQ(x1 * x2, Elt::monomial(sp, ExpVec{1, 1}, IntLaurent::v(1)));
  EXPECT_EQ(x2 * x1, Elt::monomial(sp, ExpVec{1, 1}, IntLaurent::v(-1)));
  ExpVec a{2, -5};
  EXPECT_EQ(Elt::monomial(sp, a) * Elt::monomial(sp, -a), Elt::one(sp));
  Elt s = x1 + x2;
  Elt expect = Elt::monomial(sp, ExpVec{2, 0}) + Elt::monomial(sp, ExpVec{1, 1}, IntLaurent::v(1) + IntLaurent::v(-1)) +
               Elt::monomial(sp, ExpVec{0, 2});
  EXPECT_EQ(s * s, expect);
  EXPECT_EQ(s.pow(2), expect);
}

TEST(Torus, AssociativeDistributiveDomain) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 2 + trial % 4;
    auto sp = make_space<LaurentRing>(random_form(rng, n));
    Elt f = random_elt(rng, sp), g = random_elt(rng, sp), h = random_elt(rng, sp);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_EQ(Elt::one(sp) * f, f);
    if (!f.is_zero() && !g.is_zero()) EXPECT_FALSE((f * g).is_zero());
    EXPECT_TRUE((f - f).is_zero());
  }
}

TEST(Torus, DivisionRoundTrip) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 2 + trial % 4;
    auto sp = make_space<LaurentRing>(random_form(rng, n));
    Elt f = random_elt(rng, sp), g = random_elt(rng, sp);
    if (g.is_zero()) continue;
    EXPECT_EQ(exact_right_divide(f * g, g), f);
  }
}

TEST(Torus, DivisionExamples) {
  auto sp = make_space<LaurentRing>(SkewForm({{0, 1, -1}, {-1, 0, 0}, {1, 0, 0}}));
  Elt x1 = Elt::monomial(sp, ExpVec{1, 0, 0}), x2 = Elt::monomial(sp, ExpVec{0, 1, 0}), x3 = Elt::monomial(sp, ExpVec{0, 0, 1});
  Elt f = x1 + x2;
  EXPECT_EQ(exact_right_divide(f, f), Elt::one(sp));
  // monomials are units of the torus
  Elt g = x1 + x2;
  Elt h = exact_right_divide(g, x1);
  EXPECT_EQ(h * x1, g);
  EXPECT_THROW(exact_right_divide(x1 + x2, x1 + Elt::one(sp)), NonExactDivision);
  EXPECT_THROW(exact_right_divide(x2 + x3, x1 + x2), NonExactDivision);
  EXPECT_THROW(exact_right_divide(Elt::monomial(sp, ExpVec{0, 0, 0}, IntLaurent(3)), Elt::monomial(sp, ExpVec{0, 0, 0}, IntLaurent(2))),
               NonExactDivision);
}

TEST(Torus, NormalProduct) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3;
    SkewForm lam = random_form(rng, n);
    auto sp = make_space<LaurentRing>(lam);
    std::vector<Elt> vars;
    for (int k = 0; k < n; ++k) vars.push_back(Elt::monomial(sp, ExpVec::unit(n, k)));
    ExpVec zero(n);
    EXPECT_EQ(normal_product(vars, lam, zero), Elt::one(sp));
    EXPECT_EQ(normal_product(vars, lam, ExpVec::unit(n, 1)), vars[1]);
    ExpVec a = random_exp(rng, n, 0, 3);
    // initial variables: the normalized product is the single monomial x^a
    EXPECT_EQ(normal_product(vars, lam, a), Elt::monomial(sp, a));
    EXPECT_EQ(normal_product(vars, lam, ExpVec{1, 1, 1}), normal_product(vars, lam, ExpVec{1, 1, 1}, {2, 0, 1}));
    EXPECT_EQ(normal_product(vars, lam, a), normal_product(vars, lam, a, {1, 2, 0}));
  }
  SkewForm lam({{0, 1}, {-1, 0}});
  auto sp = make_space<LaurentRing>(lam);
  std::vector<Elt> vars{Elt::monomial(sp, ExpVec{1, 0}), Elt::monomial(sp, ExpVec{0, 1})};
  EXPECT_THROW(normal_product(vars, SkewForm::zero(2), ExpVec{1, 1}), std::invalid_argument);
}

TEST(Torus, OverOtherRings) {
  auto sp = make_space<CycloRing>(SkewForm({{0, 1}, {-1, 0}}), CycloRing{3, Point::EPS});
  using C = TorusElement<CycloRing>;
  C x1 = C::monomial(sp, ExpVec{1, 0}), x2 = C::monomial(sp, ExpVec{0, 1});
  EXPECT_EQ(x1 * x2, C::monomial(sp, ExpVec{1, 1}, CycloInt::eps_pow(3, 2)));
  auto spm = make_space<ModpRing>(SkewForm({{0, 1}, {-1, 0}}), ModpRing{3});
  using M = TorusElement<ModpRing>;
  M y = M::monomial(spm, ExpVec{1, 0}) + M::monomial(spm, ExpVec{0, 1});
  // (y1 + y2)^3 = y1^3 + y2^3 in characteristic 3
  EXPECT_EQ(y.pow(3), M::monomial(spm, ExpVec{3, 0}) + M::monomial(spm, ExpVec{0, 3}));
}
