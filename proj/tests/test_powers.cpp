#include <gtest/gtest.h>

#include "mconj/errors.hpp"
#include "mconj/powers.hpp"
#include "oracles.hpp"

using namespace mconj;

namespace {

LinearFit fit(std::vector<long> v) { return fit_linear(v); }

}  // namespace

TEST(FitLinear, Examples) {
  const auto a = fit({2, 4, 6, 8});
  EXPECT_TRUE(a.exact);
  EXPECT_EQ(a.q, 2);
  EXPECT_EQ(a.c, 0);
  EXPECT_EQ(a.k0, 1U);
  const auto b = fit({3, 4, 6, 8, 10});
  EXPECT_TRUE(b.exact);
  EXPECT_EQ(b.q, 2);
  EXPECT_EQ(b.k0, 2U);
  EXPECT_EQ(b.c, 0);
  EXPECT_FALSE(fit({1, 2, 4, 8, 16}).exact);
  EXPECT_FALSE(fit({1, 2}).exact);
}

TEST(PowerScan, MaximalIdealInTwoVariables) {
  const auto scan = power_scan(parse_ideal("x1, x2", 2), 5);
  ASSERT_EQ(scan.steps.size(), 5U);
  EXPECT_FALSE(scan.truncated);
  for (const auto& st : scan.steps) {
    const long k = st.k;
    EXPECT_EQ(st.e, k * (k + 1) / 2);
    EXPECT_EQ(st.M, (std::vector<int>{int(k), int(k + 1)}));
    EXPECT_EQ(st.ratio, Rational(1));
  }
  const auto slopes = slope_equality_check(scan);
  EXPECT_EQ(slopes.status, ScanStatus::Consistent);
  EXPECT_EQ(slopes.q0, 1);
  const auto asym = asymptotic_multiplicity(scan);
  EXPECT_EQ(asym.e_IS, 1);
  EXPECT_EQ(asym.q, 1);
  EXPECT_TRUE(asym.bound_holds);
  const auto limit = limit_ratio_report(scan);
  EXPECT_EQ(*limit.fitted_limit, Rational(1));
  EXPECT_TRUE(limit.tail_at_most_one);
}

TEST(PowerScan, MixedIdeal) {
  const auto scan = power_scan(parse_ideal("x1^2, x1*x2", 2), 5);
  EXPECT_EQ(scan.s, 1U);
  for (const auto& st : scan.steps) {
    EXPECT_EQ(st.e, st.k);
    EXPECT_EQ(st.M.front(), int(2 * st.k));
    EXPECT_EQ(st.ratio, Rational(1, 2));
  }
  const auto asym = asymptotic_multiplicity(scan);
  EXPECT_EQ(asym.e_IS, 1);
  EXPECT_EQ(asym.q, 2);
  EXPECT_EQ(*limit_ratio_report(scan).fitted_limit, Rational(1, 2));
  EXPECT_EQ(slope_equality_check(scan).status, ScanStatus::Consistent);
}

TEST(PowerScan, CompleteIntersection) {
  const auto scan = power_scan(parse_ideal("x1^2, x2^2", 2), 6);
  const auto slopes = slope_equality_check(scan);
  EXPECT_EQ(slopes.status, ScanStatus::Consistent);
  for (const auto& f : slopes.fits) EXPECT_EQ(f.q, 2);
  const auto asym = asymptotic_multiplicity(scan);
  EXPECT_EQ(asym.e_IS, 4);
  EXPECT_EQ(asym.q_power_s, 4);
  const auto limit = limit_ratio_report(scan);
  EXPECT_EQ(*limit.fitted_limit, Rational(1));
  EXPECT_TRUE(limit.all_at_most_one);
}

TEST(PowerScan, MaximalIdealMultiplicities) {
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto scan = power_scan(MonomialIdeal::maximal(n), 4);
    for (const auto& st : scan.steps) {
      EXPECT_EQ(st.e, binomial(n + st.k - 1, n));
      EXPECT_EQ(st.e, oracle::multiplicity(power(MonomialIdeal::maximal(n), st.k)));
      EXPECT_EQ(st.M, st.m);
    }
  }
}

TEST(PowerScan, TruncatesOnResourceCap) {
  ResourceCaps caps;
  caps.max_generators = 7;
  const auto scan = power_scan(MonomialIdeal::maximal(3), 6, caps);
  EXPECT_TRUE(scan.truncated);
  EXPECT_EQ(scan.steps.size(), 2U);
  EXPECT_NE(scan.truncation_reason.find("max_generators"), std::string::npos);
  EXPECT_EQ(slope_equality_check(scan).status, ScanStatus::Inconclusive);
  EXPECT_EQ(asymptotic_multiplicity(scan).status, ScanStatus::Inconclusive);
}

TEST(PowerScan, Preconditions) {
  EXPECT_THROW(power_scan(parse_ideal("x1", 2), 2), InputError);
  EXPECT_THROW(power_scan(MonomialIdeal::unit(2), 4), InputError);
  EXPECT_THROW(power_scan(MonomialIdeal::zero(2), 4), InputError);
}

TEST(PowerScan, StableIdealsStayWithinBounds) {
  const char* ideals[] = {"x1^2, x1*x2, x2^3", "x1^2, x1*x2, x1*x3, x2^2", "x1, x2^2", "x1^3, x1^2*x2, x1*x2^2"};
  for (const char* text : ideals) {
    const auto scan = power_scan(parse_ideal(text, 3), 5);
    const auto slopes = slope_equality_check(scan);
    EXPECT_TRUE(slopes.regularity_monotone) << text;
    EXPECT_NE(slopes.status, ScanStatus::Violated) << text;
    EXPECT_NE(asymptotic_multiplicity(scan).status, ScanStatus::Violated) << text;
    EXPECT_TRUE(limit_ratio_report(scan).all_at_most_one) << text;
  }
}
