#include <gtest/gtest.h>

#include "hrp/errors.hpp"
#include "hrp/numeric.hpp"

using namespace hrp;

TEST(Numeric, ModFloorIsNonNegative) {
  EXPECT_EQ(mod_floor(Integer(-5), Integer(2)), 1);
  EXPECT_EQ(mod_floor(Integer(-5), Integer(-3)), 1);
  EXPECT_EQ(mod_floor(Integer(7), Integer(3)), 1);
  EXPECT_EQ(mod_floor(Integer(0), Integer(5)), 0);
}

TEST(Numeric, IntegerSquareRoots) {
  for (long n = 0; n < 2000; ++n) {
    const Integer f = isqrt_floor(Integer(n)), c = isqrt_ceil(Integer(n));
    EXPECT_LE(f * f, n);
    EXPECT_GT((f + 1) * (f + 1), n);
    EXPECT_GE(c * c, n);
    if (c > 0) EXPECT_LT((c - 1) * (c - 1), n);
  }
}

TEST(Numeric, RationalSquareRootBounds) {
  const Rational two(2);
  const Rational up = sqrt_upper(two, 100), lo = sqrt_lower(two, 100);
  EXPECT_GE(up * up, two);
  EXPECT_LE(lo * lo, two);
  EXPECT_LE(up - lo, ldexp(Rational(1), -99));
  EXPECT_EQ(sqrt_upper(Rational(9, 4), 20), Rational(3, 2));
  EXPECT_EQ(sqrt_lower(Rational(0), 20), 0);
}

TEST(Numeric, CeilFloor) {
  EXPECT_EQ(ceil(Rational(7, 2)), 4);
  EXPECT_EQ(floor(Rational(7, 2)), 3);
  EXPECT_EQ(ceil(Rational(-7, 2)), -3);
  EXPECT_EQ(floor(Rational(-7, 2)), -4);
  EXPECT_EQ(ceil(Rational(3)), 3);
  EXPECT_EQ(ceil_div(Integer(7), Integer(2)), 4);
  EXPECT_EQ(floor_div(Integer(-7), Integer(2)), -4);
}

TEST(Numeric, Ldexp) {
  EXPECT_EQ(ldexp(Rational(3), 4), 48);
  EXPECT_EQ(ldexp(Rational(3), -2), Rational(3, 4));
}

TEST(Numeric, FixedFormatting) {
  EXPECT_EQ(to_fixed(Rational(1, 3), 4), "0.3333");
  EXPECT_EQ(to_fixed(Rational(2, 3), 4), "0.6667");
  EXPECT_EQ(to_fixed(Rational(1, 3), 4, Rounding::Up), "0.3334");
  EXPECT_EQ(to_fixed(Rational(-1, 3), 2), "-0.33");
  EXPECT_EQ(to_fixed(Rational(5), 2), "5.00");
  EXPECT_EQ(to_fixed(Rational(5), 0), "5");
}

TEST(Numeric, ScientificFormatting) {
  EXPECT_EQ(to_scientific(Rational(12345), 3), "1.23e+04");
  EXPECT_EQ(to_scientific(Rational(1, 1000), 2), "1.0e-03");
  EXPECT_EQ(to_scientific(Rational(0), 3), "0.00e+00");
  EXPECT_EQ(to_scientific(Rational(999, 100), 2), "1.0e+01");
  EXPECT_EQ(to_scientific(Rational(-3, 2), 2), "-1.5e+00");
}

TEST(Numeric, FractionFormatting) {
  EXPECT_EQ(to_fraction(Rational(6, 4)), "3/2");
  EXPECT_EQ(to_fraction(Rational(-4, 2)), "-2");
}

TEST(Numeric, ParseRational) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-1.25"), Rational(-5, 4));
  EXPECT_EQ(parse_rational("1e-9"), Rational(1, 1000000000));
  EXPECT_EQ(parse_rational("2.5E+3"), 2500);
  EXPECT_EQ(parse_rational("7"), 7);
  EXPECT_THROW(parse_rational("abc"), InputError);
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational(""), InputError);
}

TEST(Numeric, HashSeparatesSmallValues) {
  EXPECT_NE(hash_value(Integer(1)), hash_value(Integer(-1)));
  EXPECT_NE(hash_value(Integer(0)), hash_value(Integer(1)));
  EXPECT_EQ(hash_value(Integer("123456789012345678901234567890")),
            hash_value(Integer("123456789012345678901234567890")));
}
