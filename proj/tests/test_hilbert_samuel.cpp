#include "hkrees/hilbert_samuel.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace hkrees;

TEST(HilbertH, Values) {
  EXPECT_EQ(hilbert_H({2, 1}, 3), 6);
  EXPECT_EQ(hilbert_H({3, 2}, 1), 2);
  EXPECT_EQ(hilbert_H({3, 1}, 5), 35);
  EXPECT_EQ(hilbert_H({3, 1}, 0), 0);
  EXPECT_EQ(hilbert_H({3, 1}, -4), 0);
}

TEST(HilbertH, MatchesStaircaseOfMaximalIdealPowers) {
  for (int d = 2; d <= 4; ++d) {
    const auto m = MonomialIdeal::variables(static_cast<std::size_t>(d));
    for (int n = 1; n <= 8; ++n) EXPECT_EQ(hilbert_H({d, 1}, n), m.power(n).colength()) << d << "," << n;
  }
}

TEST(HilbertF, Examples) {
  EXPECT_EQ(hilbert_F({2, 1}, 2, 1), 2);
  EXPECT_EQ(hilbert_F({2, 1}, 2, 2), 6);
  EXPECT_EQ(hilbert_F({4, 1}, 3, 4), 134);
  EXPECT_EQ(hilbert_F({4, 1}, 3, 0), 0);
}

TEST(HilbertF, ExampleValuesAgreeWithStaircaseOracle) {
  EXPECT_EQ(oracle::F_by_staircase({1, 1}, 2, 1), 2);
  EXPECT_EQ(oracle::F_by_staircase({1, 1}, 2, 2), 6);
  EXPECT_EQ(oracle::F_by_staircase({1, 1, 1, 1}, 3, 4), 134);
}

TEST(HilbertF, RejectsBadArguments) {
  EXPECT_THROW(hilbert_F({1, 1}, 2, 3), std::invalid_argument);
  EXPECT_THROW(hilbert_F({3, 1}, 0, 3), std::invalid_argument);
}

TEST(HilbertF, MatchesStaircaseOracle) {
  const std::vector<std::vector<int>> instances = {{1, 1}, {1, 2}, {2, 2}, {1, 1, 1}, {1, 2, 1}, {2, 2, 2}, {2, 1, 2}};
  for (const auto& exps : instances) {
    ExactInt e0 = 1;
    for (int a : exps) e0 *= a;
    const int d = static_cast<int>(exps.size());
    for (int s = 1; s <= 4; ++s)
      for (int n = 1; n <= d * s; ++n)
        EXPECT_EQ(hilbert_F({d, e0}, s, n), oracle::F_by_staircase(exps, s, n))
            << "exps size " << d << " e0 " << e0 << " s " << s << " n " << n;
  }
}

TEST(HilbertF, RefinedSplitAgreesWithOriginalSplit) {
  for (int d = 2; d <= 6; ++d)
    for (int s = 1; s <= 6; ++s)
      for (int n = 1; n <= d * s + 2; ++n)
        EXPECT_EQ(hilbert_F({d, 3}, s, n), oracle::F_original_split({d, 3}, s, n)) << d << "," << s << "," << n;
}

TEST(HilbertF, BoundaryIdentity) {
  for (int d = 2; d <= 6; ++d)
    for (int s = 2; s <= 6; ++s) {
      const HilbertContext ctx(d, 1);
      for (int n = s * (d - 1) - d + 1; n <= s * (d - 1); ++n) {
        ExactInt middle = 0;
        for (int i = 1; i <= d - 1; ++i) {
          ExactInt t = binomial(d, i) * hilbert_H(ctx, n - (i - 1) * s);
          middle += (i % 2 == 1) ? t : ExactInt(-t);
        }
        EXPECT_EQ(middle, hilbert_H(ctx, n + s) - ipow(ExactInt(s), static_cast<unsigned>(d))) << d << "," << s << "," << n;
      }
    }
}

TEST(HilbertF, FirstAndLastRangesAgreeWhereTheyOverlap) {
  for (int d = 2; d <= 6; ++d)
    for (int s = 1; s <= 6; ++s) {
      const HilbertContext ctx(d, 1);
      for (int n = std::max(1, s * (d - 1) - d + 1); n <= s; ++n)
        EXPECT_EQ(ExactInt(d) * hilbert_H(ctx, n), hilbert_H(ctx, n + s) - ipow(ExactInt(s), static_cast<unsigned>(d)));
    }
}

TEST(HilbertF, NondecreasingInN) {
  for (int d = 2; d <= 6; ++d)
    for (int s = 1; s <= 8; ++s)
      for (int n = 1; n < 40; ++n) EXPECT_LE(hilbert_F({d, 2}, s, n), hilbert_F({d, 2}, s, n + 1));
}

TEST(ReductionNumber, Values) {
  EXPECT_EQ(reduction_number_power(3, 5), 2);
  EXPECT_EQ(reduction_number_power(4, 2), 2);
  EXPECT_EQ(reduction_number_power(3, 2), 1);
  for (int d = 2; d <= 10; ++d)
    for (int s = d; s <= 30; ++s) EXPECT_EQ(reduction_number_power(d, s), d - 1);
}

// I^[s] is a minimal reduction of I^s, so I^[s] I^{rs} = I^{(r+1)s} exactly
// at r = r(I^s) and not before.
TEST(ReductionNumber, MatchesMonomialComputation) {
  for (int d = 2; d <= 4; ++d) {
    const auto m = MonomialIdeal::variables(static_cast<std::size_t>(d));
    for (int s = 1; s <= 4; ++s) {
      const auto bracket = m.frobenius(s);
      int r = 0;
      while (!(bracket * m.power(r * s) == m.power((r + 1) * s))) ++r;
      EXPECT_EQ(r, reduction_number_power(d, s)) << d << "," << s;
    }
  }
}

TEST(CofD, Values) {
  EXPECT_EQ(c_of_d(2), ExactRat(4, 3));
  EXPECT_EQ(c_of_d(3), ExactRat(13, 8));
  EXPECT_EQ(c_of_d(1), 1);
  EXPECT_EQ(c_of_d(4), ExactRat(61, 30));
}

TEST(Asymptotic, Coefficients) {
  const auto c3 = asymptotic_coefficients({3, 1});
  EXPECT_EQ(c3.c_lead, ExactRat(13, 8));
  EXPECT_EQ(c3.c_sub, ExactRat(-1, 4));
  EXPECT_EQ(c3.c_subsub, ExactRat(-1, 8));

  // For d = 2 the s^{d-1} coefficient is the coefficient of s in 4/3 s^3 - 1/3 s.
  const auto c2 = asymptotic_coefficients({2, 1});
  EXPECT_EQ(c2.c_lead, ExactRat(4, 3));
  EXPECT_EQ(c2.c_sub, 0);
  EXPECT_EQ(c2.c_subsub, ExactRat(-1, 3));

  EXPECT_EQ(asymptotic_coefficients({2, 7}).c_lead, ExactRat(28, 3));
  EXPECT_THROW(asymptotic_coefficients({1, 1}), std::invalid_argument);
}
