#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "singrr/rr_core.hpp"
#include "support/reference.hpp"

namespace singrr {
namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

TEST(Residue, Examples) {
  EXPECT_EQ(residue(0, 5), 0);
  EXPECT_EQ(residue(-1, 6), 5);
  EXPECT_EQ(residue(7, 6), 1);
  EXPECT_EQ(residue(-12, 6), 0);
  EXPECT_EQ(residue(-13, 6), 5);
  EXPECT_EQ(residue(123, 1), 0);
}

TEST(Residue, RejectsNonPositiveModulus) {
  EXPECT_THROW(residue(3, 0), std::invalid_argument);
  EXPECT_THROW(residue(3, -4), std::invalid_argument);
}

TEST(CyclicQuotient, Validation) {
  EXPECT_NO_THROW(CyclicQuotient(2, 1));
  EXPECT_NO_THROW(CyclicQuotient(6, 5));
  EXPECT_THROW(CyclicQuotient(1, 1), std::invalid_argument);
  EXPECT_THROW(CyclicQuotient(6, 0), std::invalid_argument);
  EXPECT_THROW(CyclicQuotient(6, 6), std::invalid_argument);
  EXPECT_THROW(CyclicQuotient(6, 2), std::invalid_argument);
  EXPECT_THROW(CyclicQuotient(9, 3), std::invalid_argument);
}

TEST(BValue, Examples) {
  EXPECT_EQ(b_value(2, 1), q(1, 4));
  EXPECT_EQ(b_value(8, 4), q(1));
  EXPECT_EQ(b_value(6, 1), q(5, 12));
  EXPECT_EQ(b_value(6, 3), q(3, 4));
  for (std::int64_t r = 2; r <= 12; ++r) EXPECT_EQ(b_value(r, 0), q(0)) << r;
}

TEST(BValue, RejectsSmallR) {
  EXPECT_THROW(b_value(1, 0), std::invalid_argument);
  EXPECT_THROW(b_value(0, 3), std::invalid_argument);
}

TEST(BValue, Range) {
  for (std::int64_t r = 2; r <= 30; ++r)
    for (std::int64_t i = -r; i <= r; ++i) {
      EXPECT_GE(b_value(r, i), 0);
      EXPECT_LE(b_value(r, i), q(r, 8));
    }
}

TEST(AValue, Examples) {
  EXPECT_EQ(a_value({2, 1}, 0), q(0));
  EXPECT_EQ(a_value({2, 1}, 1), q(-1, 8));
  EXPECT_EQ(a_value({3, 2}, 2), q(-1, 9));
  // Frozen from a fraction-by-fraction evaluation of the defining sum.
  EXPECT_EQ(a_value({6, 5}, 3), q(-3, 8));
  EXPECT_EQ(a_value({7, 3}, 5), q(-1, 7));
  EXPECT_EQ(a_value({7, 3}, -2), q(-1, 7));
}

TEST(AValue, ResidueOneHasEmptySum) {
  for (std::int64_t r = 2; r <= 20; ++r)
    for (std::int64_t b = 1; b < r; ++b) {
      if (reference::gcd_loop(b, r) != 1) continue;
      EXPECT_EQ(a_value({r, b}, 1), -make_rational(r * r - 1, 12 * r));
      EXPECT_EQ(a_value({r, b}, 1 + r), a_value({r, b}, 1));
    }
}

TEST(AValue, MatchesDefinitionExhaustively) {
  for (std::int64_t r = 2; r <= 16; ++r)
    for (std::int64_t b = 1; b < r; ++b) {
      if (reference::gcd_loop(b, r) != 1) continue;
      for (std::int64_t i = -2 * r; i <= 2 * r; ++i)
        ASSERT_EQ(a_value({r, b}, i), reference::slow_a(r, b, i)) << r << " " << b << " " << i;
    }
}

TEST(AValue, DenominatorDivides12r) {
  for (std::int64_t r = 2; r <= 20; ++r)
    for (std::int64_t b = 1; b < r; ++b) {
      if (reference::gcd_loop(b, r) != 1) continue;
      for (std::int64_t i = 0; i < r; ++i) {
        EXPECT_EQ(BigInt(12 * r) % denominator(a_value({r, b}, i)), 0);
        EXPECT_EQ(BigInt(2 * r) % denominator(b_value(r, i)), 0);
      }
    }
}

TEST(CContribution, Examples) {
  EXPECT_EQ(c_contribution({2, 1}, 1), q(-1, 8));
  EXPECT_EQ(c_contribution({2, 1}, 2), q(0));
  EXPECT_EQ(c_contribution({3, 2}, 2), q(-1, 9));
}

TEST(BasketCContribution, Examples) {
  EXPECT_EQ(basket_c_contribution(std::vector<CyclicQuotient>{}, 5), q(0));
  const std::vector<CyclicQuotient> two_halves{{2, 1}, {2, 1}};
  EXPECT_EQ(basket_c_contribution(two_halves, 1), q(-1, 4));
  const std::vector<CyclicQuotient> single{{3, 2}};
  EXPECT_EQ(basket_c_contribution(single, 2), q(-1, 9));
}

TEST(CheckedArithmetic, ThrowsOnOverflow) {
  EXPECT_THROW(checked_mul(std::int64_t{1} << 40, std::int64_t{1} << 40), std::overflow_error);
  EXPECT_THROW(checked_sub(std::numeric_limits<std::int64_t>::min(), 1), std::overflow_error);
  EXPECT_EQ(checked_mul(-3, 7), -21);
}

TEST(Rational, FormattingAndParsing) {
  EXPECT_EQ(to_string(q(-3, 24)), "-1/8");
  EXPECT_EQ(to_string(q(4, 2)), "2");
  EXPECT_EQ(to_string(q(0, 7)), "0");
  EXPECT_EQ(parse_rational("1/4"), q(1, 4));
  EXPECT_EQ(parse_rational("-2/4"), q(-1, 2));
  EXPECT_EQ(parse_rational("3/-6"), q(-1, 2));
  EXPECT_EQ(parse_rational("2"), q(2));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/"), std::invalid_argument);
  EXPECT_THROW(parse_rational("0.5"), std::invalid_argument);
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

}  // namespace
}  // namespace singrr
