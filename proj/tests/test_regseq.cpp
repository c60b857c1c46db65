#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "mconj/errors.hpp"
#include "mconj/hilbert.hpp"
#include "mconj/regseq.hpp"
#include "oracles.hpp"

using namespace mconj;

namespace {

ShiftProfile profile(int s, std::vector<long> M, std::vector<long> m, long e) {
  ShiftProfile p;
  p.s = s;
  p.M = std::move(M);
  p.m = std::move(m);
  p.e = e;
  return p;
}

}  // namespace

TEST(ExtendShifts, Examples) {
  const auto tight = extend_shifts(profile(2, {2, 4}, {2, 4}, 4), 2);
  EXPECT_EQ(tight.M, (std::vector<long>{2, 4, 6}));
  EXPECT_EQ(tight.m, (std::vector<long>{2, 4, 6}));
  EXPECT_EQ(tight.e, 8);
  EXPECT_EQ(tight.s, 3);
  EXPECT_TRUE(tight.upper_tight());

  const auto koszul = extend_shifts(profile(1, {1}, {1}, 1), 1);
  EXPECT_EQ(koszul.M, (std::vector<long>{1, 2}));
  EXPECT_EQ(koszul.e, 1);

  // (x^2, y^3) extended by z^4: the Koszul complex on degrees 2, 3, 4.
  const auto ci = extend_shifts(profile(2, {3, 5}, {2, 5}, 6), 4);
  EXPECT_EQ(ci.M, (std::vector<long>{4, 7, 9}));
  EXPECT_EQ(ci.m, (std::vector<long>{2, 5, 9}));
  EXPECT_EQ(ci.e, 24);
  const auto direct = shifts(betti_table(parse_ideal("x1^2, x2^3, x3^4", 3)));
  EXPECT_EQ(std::vector<long>(direct.M.begin(), direct.M.end()), ci.M);
  EXPECT_EQ(std::vector<long>(direct.m.begin(), direct.m.end()), ci.m);

  EXPECT_THROW(extend_shifts(profile(1, {1}, {1}, 1), 0), InputError);
}

TEST(ExtendShifts, FromTrivialProfile) {
  for (long d = 1; d <= 4; ++d) {
    const auto p = extend_shifts(profile(0, {}, {}, 1), d);
    EXPECT_EQ(p.M, (std::vector<long>{d}));
    EXPECT_TRUE(p.upper_tight() && p.lower_tight());
  }
}

TEST(ExtendShifts, OrderOfDegreesDoesNotMatter) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    ShiftProfile p = profile(2, {2 + long(rng() % 3), 6 + long(rng() % 3)}, {2, 4}, 3);
    std::vector<long> degrees{1 + long(rng() % 4), 1 + long(rng() % 4), 1 + long(rng() % 4)};
    ShiftProfile a = p;
    for (long d : degrees) a = extend_shifts(a, d);
    std::shuffle(degrees.begin(), degrees.end(), rng);
    ShiftProfile b = p;
    for (long d : degrees) b = extend_shifts(b, d);
    EXPECT_EQ(a, b);
  }
}

TEST(ExtendShifts, MatchesResolutionWithExtraVariable) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    const auto ideal = oracle::random_ideal(rng, n, 3, 4);
    const long d = 1 + static_cast<long>(rng() % 3);
    const HilbertData h = hilbert_data(ideal);
    const ShiftProfile p = profile_of(shifts(betti_table(ideal)), static_cast<int>(h.codim), h.multiplicity);
    const auto extended = sum(with_extra_vars(ideal, 1), minimalize({Monomial::variable(n + 1, n + 1, d)}, n + 1));
    const ShiftSummary direct = shifts(betti_table(extended));
    const ShiftProfile predicted = extend_shifts(p, d);
    EXPECT_EQ(std::vector<long>(direct.M.begin(), direct.M.end()), predicted.M) << format(ideal);
    EXPECT_EQ(std::vector<long>(direct.m.begin(), direct.m.end()), predicted.m) << format(ideal);
    EXPECT_EQ(multiplicity(extended), predicted.e);
    EXPECT_EQ(codimension(extended), static_cast<std::size_t>(predicted.s));
  }
}

TEST(VerifyExtension, TraceAndPreconditions) {
  const std::vector<long> degrees{2, 2};
  const auto trace = verify_extension(profile(2, {2, 4}, {2, 4}, 4), degrees);
  EXPECT_TRUE(trace.ok);
  EXPECT_EQ(trace.steps.size(), 3U);
  EXPECT_TRUE(trace.steps.back().upper_tight());
  EXPECT_THROW(verify_extension(profile(2, {2, 4}, {2, 4}, 5), degrees), InputError);
  const std::vector<long> bad{0};
  EXPECT_THROW(verify_extension(profile(1, {1}, {1}, 1), bad), InputError);
  EXPECT_THROW(profile(1, {1}, {2}, 1).validate(), InputError);
}

TEST(InequalityStar, Examples) {
  const std::vector<long> one{1};
  EXPECT_TRUE(inequality_star(1, 1, one));
  const std::vector<long> two_four{2, 4};
  EXPECT_TRUE(inequality_star(2, 2, two_four));
  const std::vector<long> three_five{3, 5};
  EXPECT_TRUE(inequality_star(2, 1, three_five));
}

TEST(InequalityStar, HoldsOnIncreasingShifts) {
  for (long a = 1; a <= 8; ++a) {
    for (long b = a + 1; b <= 9; ++b) {
      for (long c = b + 1; c <= 10; ++c) {
        const std::vector<long> M{a, b, c};
        for (long d = 1; d <= 5; ++d) {
          for (int s = 0; s <= 3; ++s) EXPECT_TRUE(inequality_star(s, d, M));
        }
      }
    }
  }
}

TEST(Tightness, Examples) {
  const auto p = profile(2, {2, 4}, {2, 4}, 4);
  const std::vector<long> twos{2, 2};
  EXPECT_TRUE(tightness_condition(p, twos));
  const auto q = profile(2, {3, 5}, {2, 5}, 6);
  const std::vector<long> two{2};
  EXPECT_FALSE(tightness_condition(q, two));
  EXPECT_FALSE(verify_extension(q, two).steps.back().upper_tight());
  const auto koszul = profile(3, {1, 2, 3}, {1, 2, 3}, 1);
  const std::vector<long> ones{1, 1, 1};
  EXPECT_TRUE(tightness_condition(koszul, ones));
  EXPECT_TRUE(verify_extension(koszul, ones).steps.back().upper_tight());
}
