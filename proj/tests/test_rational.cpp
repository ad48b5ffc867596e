#include <gtest/gtest.h>

#include "tiltwall/error.hpp"
#include "tiltwall/rational.hpp"

using namespace tiltwall;

namespace {
Rational Q(const char* s) { return Rational::parse(s); }
}

TEST(Rational, ParsesAndReduces) {
  EXPECT_EQ(Q("6/8"), Rational(3, 4));
  EXPECT_EQ(Q(" -12 "), Rational(-12));
  EXPECT_EQ(Q("3/-6"), Rational(-1, 2));
  EXPECT_EQ(Q("+5/10").to_string(), "1/2");
  EXPECT_THROW(Q("1/0"), Error);
  EXPECT_THROW(Q("abc"), Error);
  EXPECT_THROW(Q("1.5"), Error);
  EXPECT_THROW(Q(""), Error);
}

TEST(Rational, IntegersPrintWithoutDenominator) {
  EXPECT_EQ(Rational(10, 5).to_string(), "2");
  EXPECT_EQ(Rational(-26, 5).to_string(), "-26/5");
  EXPECT_EQ(Rational(0).to_string(), "0");
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Q("1/2") + Q("1/3"), Q("5/6"));
  EXPECT_EQ(Q("1/2") - Q("1/3"), Q("1/6"));
  EXPECT_EQ(Q("-2/3") * Q("9/4"), Q("-3/2"));
  EXPECT_EQ(Q("1/2") / Q("-1/4"), Rational(-2));
  EXPECT_EQ(-Q("7/3"), Q("-7/3"));
  EXPECT_EQ(pow(Q("-2/3"), 3), Q("-8/27"));
  EXPECT_EQ(pow(Q("5/7"), 0), Rational(1));
}

TEST(Rational, DivisionByZeroThrows) {
  try {
    (void)(Rational(1) / Rational(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
  }
}

TEST(Rational, FloorCeilFrac) {
  EXPECT_EQ(Q("-26/5").floor(), -6);
  EXPECT_EQ(Q("-26/5").ceil(), -5);
  EXPECT_EQ(Q("7/2").floor(), 3);
  EXPECT_EQ(Rational(4).ceil(), 4);
  EXPECT_EQ(Q("-26/5").frac(), Q("4/5"));
  EXPECT_EQ(Q("7/3").frac(), Q("1/3"));
  EXPECT_EQ(Rational(-3).frac(), Rational(0));
}

TEST(Rational, Ordering) {
  EXPECT_LT(Q("-1/2"), Q("-1/3"));
  EXPECT_GT(Q("2/3"), Q("3/5"));
  EXPECT_EQ(Q("2/4") <=> Q("1/2"), std::strong_ordering::equal);
}

TEST(Rational, DecimalRendering) {
  EXPECT_EQ(Q("1/3").to_decimal(5), "0.33333");
  EXPECT_EQ(Q("2/3").to_decimal(5), "0.66667");
  EXPECT_EQ(Q("-2/3").to_decimal(3), "-0.667");
  EXPECT_EQ(Q("1/8").to_decimal(2), "0.13");
  EXPECT_EQ(Q("-1/8").to_decimal(2), "-0.13");
  EXPECT_EQ(Q("-26/5").to_decimal(0), "-5");
  EXPECT_EQ(Rational(7).to_decimal(2), "7.00");
  EXPECT_EQ(Q("-1/1000").to_decimal(2), "0.00");
}

TEST(Rational, SquareRoots) {
  Rational root;
  EXPECT_TRUE(rational_sqrt(Q("49/4"), root));
  EXPECT_EQ(root, Q("7/2"));
  EXPECT_FALSE(rational_sqrt(Q("2"), root));
  EXPECT_FALSE(rational_sqrt(Q("-4"), root));
  EXPECT_TRUE(rational_sqrt(Rational(0), root));
  EXPECT_EQ(root, Rational(0));
}

TEST(Rational, Int64Conversion) {
  EXPECT_TRUE(Rational(-42).fits_int64());
  EXPECT_EQ(Rational(-42).to_int64(), -42);
  EXPECT_FALSE(Q("1/2").fits_int64());
  EXPECT_FALSE(Q("100000000000000000000000").fits_int64());
}
