#include "hkrees/binomial_groebner.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

using namespace hkrees;

namespace {

std::vector<Monomial> cube(int q) {
  return {Monomial{q, 0, 0}, Monomial{0, q, 0}, Monomial{0, 0, q}};
}

}  // namespace

TEST(BinomialRelation, Validation) {
  EXPECT_THROW(BinomialRelation(3, 1, 0, 5), std::invalid_argument);
  EXPECT_THROW(BinomialRelation(2, 0, 2, 5), std::invalid_argument);
  EXPECT_THROW(BinomialRelation(2, 0, 1, 1), std::invalid_argument);
  const BinomialRelation rel(3, 0, 1, 5);
  EXPECT_EQ(rel.lead(), (Monomial{5, 0, 0}));
  EXPECT_EQ(rel.tail(), (Monomial{0, 5, 0}));
}

TEST(Buchberger, FermatCubeEight) {
  const BinomialRelation rel(3, 0, 1, 5);
  const auto gb = buchberger(rel, cube(8));
  EXPECT_TRUE(gb.complete);
  EXPECT_EQ(MonomialIdeal(3, gb.monomials), MonomialIdeal(3, {Monomial{8, 0, 0}, Monomial{0, 8, 0}, Monomial{0, 0, 8},
                                                               Monomial{3, 5, 0}}));
  EXPECT_EQ(initial_ideal(gb), parse_monomial_ideal("5,0,0;3,5,0;0,8,0;0,0,8"));
  EXPECT_EQ(quotient_colength(rel, cube(8)), 272);
}

TEST(Buchberger, SmallCube) {
  const BinomialRelation rel(3, 0, 1, 5);
  EXPECT_EQ(quotient_colength(rel, cube(4)), 64);
  EXPECT_EQ(quotient_colength(BinomialRelation(2, 0, 1, 2), {Monomial{1, 0}, Monomial{0, 1}}), 1);
}

TEST(Buchberger, RejectsBadInput) {
  const BinomialRelation rel(3, 0, 1, 5);
  EXPECT_THROW(buchberger(rel, {}), std::invalid_argument);
  EXPECT_THROW(buchberger(rel, {Monomial{1, 1}}), std::invalid_argument);
}

TEST(Buchberger, IncompleteBasisRejected) {
  const BinomialRelation rel(3, 0, 1, 5);
  EXPECT_FALSE(verify_complete(rel, cube(8)));
  GroebnerBasisBM partial{rel, cube(8), false};
  EXPECT_THROW(initial_ideal(partial), std::invalid_argument);
}

TEST(Buchberger, OutputIsComplete) {
  for (int a = 2; a <= 5; ++a)
    for (int q = 1; q <= 20; ++q) {
      const BinomialRelation rel(3, 0, 1, a);
      const auto gb = buchberger(rel, cube(q));
      EXPECT_TRUE(verify_complete(rel, gb.monomials, true)) << a << "," << q;
    }
}

TEST(Buchberger, FermatInitialIdealForPowersOfTwo) {
  const BinomialRelation rel(3, 0, 1, 5);
  for (int q : {4, 8, 16, 32}) {
    const auto in = initial_ideal(buchberger(rel, cube(q)));
    // the X-exponent steps down by 5 from q, each step paying 5 more in Y
    std::vector<Monomial> expected{Monomial{0, q, 0}, Monomial{0, 0, q}};
    int x = q, y = 0;
    while (x >= 5) {
      x -= 5;
      y += 5;
      if (y >= q) break;
      expected.push_back(Monomial{x, y, 0});
    }
    expected.push_back(Monomial{std::min(q, 5), 0, 0});
    EXPECT_EQ(in, MonomialIdeal(3, expected)) << q;
  }
}

TEST(Buchberger, ColengthMatchesLinearAlgebra) {
  for (int a = 2; a <= 5; ++a)
    for (int q = 1; q <= 24; ++q) {
      const ExactInt two = oracle::two_variable_length(a, MonomialIdeal::parameter({q, q}));
      EXPECT_EQ(quotient_colength(BinomialRelation(2, 0, 1, a), {Monomial{q, 0}, Monomial{0, q}}), two)
          << a << "," << q;
      EXPECT_EQ(quotient_colength(BinomialRelation(3, 0, 1, a), cube(q)), two * q) << a << "," << q;
    }
}

TEST(Buchberger, RandomIdealsMatchLinearAlgebra) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> a_dist(2, 4);
  for (int trial = 0; trial < 60; ++trial) {
    const auto M = oracle::random_primary_ideal(rng, 2, 9, 3);
    const int a = a_dist(rng);
    EXPECT_EQ(quotient_colength(BinomialRelation(2, 0, 1, a), M), oracle::two_variable_length(a, M))
        << a << " / " << M.to_string();
  }
}

TEST(ReduceMonomial, ConfluentAcrossPreferences) {
  const BinomialRelation rel(3, 0, 1, 5);
  const auto gb = buchberger(rel, cube(11));
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> e(0, 14);
  for (int trial = 0; trial < 100; ++trial) {
    const Monomial t{e(rng), e(rng), e(rng)};
    const auto first = reduce_monomial(rel, gb.monomials, t, ReductionPreference::monomials_first);
    const auto second = reduce_monomial(rel, gb.monomials, t, ReductionPreference::binomial_first);
    EXPECT_EQ(first.has_value(), second.has_value()) << t.to_string();
    if (first && second) EXPECT_EQ(*first, *second);
    if (first) EXPECT_FALSE(initial_ideal(gb).contains(*first));
  }
}
