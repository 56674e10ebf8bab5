#include "hkrees/hk_formulas.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace hkrees;

namespace {

Dim1Input fermat5() {
  Dim1Input in;
  in.e0 = 5;
  in.e1 = 10;
  in.r = 4;
  in.lengths = {0, 1, 3, 6};
  in.alpha = {PeriodicSequence{-4, -6}, PeriodicSequence{-3, -5}, PeriodicSequence{-2, -3}, PeriodicSequence{-1}};
  in.p = 2;
  return in;
}

ExactInt q_of(int p, int e) { return ipow(ExactInt(p), static_cast<unsigned>(e)); }

}  // namespace

TEST(Dim1, FermatQuinticByParity) {
  const auto hk = dim1_hk(fermat5());
  EXPECT_EQ(hk.period(), 2);
  EXPECT_EQ(hk.degree(), 2);
  for (int e = 2; e <= 10; ++e) {
    const ExactInt q = q_of(2, e);
    const ExactInt expected = e % 2 == 0 ? ExactInt(5 * q * q) : ExactInt(5 * q * q - 10);
    EXPECT_EQ(hk.evaluate(e), ExactRat(expected)) << e;
  }
}

TEST(Dim1, FermatMatchesGradedSum) {
  const auto in = fermat5();
  const auto hk = dim1_hk(in);
  for (int e = 2; e <= 9; ++e) EXPECT_EQ(hk.evaluate(e), ExactRat(oracle::dim1_graded_sum(in, e))) << e;
}

TEST(Dim1, ReductionNumberZero) {
  Dim1Input in;
  in.e0 = 7;
  in.r = 0;
  in.p = 3;
  const auto hk = dim1_hk(in);
  for (int e = 0; e <= 5; ++e) {
    const ExactInt q = q_of(3, e);
    EXPECT_EQ(hk.evaluate(e), ExactRat(7 * q * q));
  }
}

TEST(Dim1, PostulationBeyondReductionMatchesGradedSum) {
  // rho + 1 > r takes the second closed form
  Dim1Input in;
  in.e0 = 3;
  in.e1 = 2;
  in.r = 1;
  in.rho = 2;
  in.lengths = {0, 2, 5};
  in.alpha = {PeriodicSequence{-1, 0, -2}};
  in.p = 3;
  const auto hk = dim1_hk(in);
  EXPECT_EQ(hk.period(), 3);
  for (int e = 1; e <= 6; ++e) EXPECT_EQ(hk.evaluate(e), ExactRat(oracle::dim1_graded_sum(in, e))) << e;
}

TEST(Dim1, RandomInputsMatchGradedSum) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> small(0, 3);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 40; ++trial) {
    Dim1Input in;
    in.e0 = 1 + small(rng);
    in.e1 = small(rng);
    in.r = small(rng);
    const int rho = std::max(0, in.r - 1 + small(rng) - 1);
    in.rho = rho;
    in.lengths = {0};
    // free values up to rho, then the Hilbert-Samuel polynomial
    for (int n = 1; n <= std::max(in.r - 1, rho); ++n)
      in.lengths.push_back(n <= rho ? ExactInt(in.lengths.back() + 1 + small(rng)) : ExactInt(in.e0 * n - in.e1));
    for (int n = 0; n < in.r; ++n) {
      std::vector<ExactInt> vals;
      const int period = 1 + small(rng) % 2;
      for (int k = 0; k < period; ++k) vals.push_back(-small(rng));
      in.alpha.emplace_back(vals);
    }
    in.p = 2;
    QuasiPolynomialHK hk({RatPoly{}}, 2);
    try {
      hk = dim1_hk(in);
    } catch (const std::invalid_argument&) {
      continue;
    }
    ++checked;
    for (int e = 3; e <= 7; ++e) EXPECT_EQ(hk.evaluate(e), ExactRat(oracle::dim1_graded_sum(in, e))) << trial;
  }
  EXPECT_GE(checked, 40);
}

TEST(Dim1, Validation) {
  auto in = fermat5();
  in.alpha.pop_back();
  EXPECT_THROW(dim1_hk(in), std::invalid_argument);
  in = fermat5();
  in.lengths = {0, 1, 3};
  EXPECT_THROW(dim1_hk(in), std::invalid_argument);
  in = fermat5();
  in.lengths = {1, 1, 3, 6};
  EXPECT_THROW(dim1_hk(in), std::invalid_argument);
  in = fermat5();
  in.e0 = 0;
  EXPECT_THROW(dim1_hk(in), std::invalid_argument);
}

TEST(Dim1, CohenMacaulayVariantIgnoresRho) {
  auto in = fermat5();
  in.rho = 0;
  EXPECT_EQ(cordim1_hk(in), dim1_hk(fermat5()));
}

TEST(SopDim1, Examples) {
  const auto hk = sop_dim1_hk(5, PeriodicSequence{-4, -6}, 2);
  EXPECT_EQ(hk.evaluate(2), ExactRat(5 * 16 - 4 * 4));
  EXPECT_EQ(hk.evaluate(3), ExactRat(5 * 64 - 6 * 8));
  EXPECT_EQ(ehk_rees_dim1(5), 5);
  EXPECT_THROW(ehk_rees_dim1(0), std::invalid_argument);
}

TEST(CmSop, DimensionThreeValues) {
  const std::vector<long> expected{1, 23, 123, 397, 980};
  for (int s = 1; s <= 5; ++s) EXPECT_EQ(cm_sop_hk(3, 1, s), expected[s - 1]) << s;
}

TEST(CmSop, DimensionTwoValues) {
  const std::vector<long> expected{1, 10, 35, 84, 165, 286};
  for (int s = 1; s <= 6; ++s) EXPECT_EQ(cm_sop_hk(2, 1, s), expected[s - 1]) << s;
  EXPECT_EQ(cm_sop_hk(2, 5, 1), 5);
}

TEST(CmSop, LinearInMultiplicity) {
  for (int d = 2; d <= 6; ++d)
    for (int s = 1; s <= 12; ++s)
      for (int e0 : {2, 3, 7}) EXPECT_EQ(cm_sop_hk(d, e0, s), e0 * cm_sop_hk(d, 1, s));
}

TEST(CmSop, PolynomialFromDimensionOn) {
  for (int d = 2; d <= 6; ++d) {
    const auto poly = cm_sop_hk_polynomial(d, 1);
    EXPECT_EQ(poly.degree(), d + 1);
    for (int s = d; s <= 30; ++s) EXPECT_EQ(poly(ExactRat(s)), ExactRat(cm_sop_hk(d, 1, s))) << d << "," << s;
  }
}

TEST(CmSop, PolynomialStrings) {
  EXPECT_EQ(cm_sop_hk_polynomial(3, 1).to_string("s"), "13/8*s^4 - 1/4*s^3 - 1/8*s^2 - 1/4*s");
}

TEST(CmSop, LeadingCoefficientIsMultiplicity) {
  for (int d = 2; d <= 8; ++d)
    for (int e0 : {1, 4}) EXPECT_EQ(cm_sop_hk_polynomial(d, e0).leading(), ehk_cm_sop(d, e0)) << d;
}

TEST(CmSop, Branches) {
  const PiecewiseHKFormula f(4, 1);
  EXPECT_EQ(f.branch(2), PiecewiseHKFormula::Branch::below_d_exact);
  EXPECT_EQ(f.branch(3), PiecewiseHKFormula::Branch::below_d_remainder);
  EXPECT_EQ(f.branch(4), PiecewiseHKFormula::Branch::at_least_d);
  EXPECT_THROW(f(0), std::invalid_argument);
}

TEST(Multiplicity, Examples) {
  EXPECT_EQ(ehk_cm_sop(3, 4), ExactRat(13, 2));
  EXPECT_EQ(ehk_cm_sop(2, 3), ExactRat(4));
  EXPECT_EQ(stanley_reisner_ehk(2, 3), ExactRat(4));
  EXPECT_EQ(stanley_reisner_ehk(3, 1), ExactRat(13, 8));
  EXPECT_EQ(stanley_reisner_ehk(3, 8), ExactRat(13));
  EXPECT_THROW(stanley_reisner_ehk(1, 3), std::invalid_argument);
}

TEST(EtoYoshida, Verdicts) {
  EXPECT_EQ(check_eto_yoshida(ExactRat(4, 3), 2, 1), BoundVerdict::equal);
  EXPECT_EQ(check_eto_yoshida(ExactRat(1), 2, 1), BoundVerdict::below);
  EXPECT_EQ(check_eto_yoshida(ExactRat(2), 2, 1), BoundVerdict::violation);
  EXPECT_STREQ(to_string(BoundVerdict::equal), "equal");
  for (int d = 2; d <= 6; ++d) EXPECT_EQ(check_eto_yoshida(ehk_cm_sop(d, 3), d, 3), BoundVerdict::equal);
}
