#include "varphragmen/number.hpp"

#include <gtest/gtest.h>

using varphragmen::format_decimal;
using varphragmen::parse_fraction;
using varphragmen::parse_number;
using varphragmen::Rational;

TEST(ParseFraction, IntegersAndRatios) {
    EXPECT_EQ(*parse_fraction("9"), Rational(9));
    EXPECT_EQ(*parse_fraction(" 3/4 "), Rational(3, 4));
    EXPECT_EQ(*parse_fraction("6/8"), Rational(3, 4));
    EXPECT_EQ(*parse_fraction("-2/5"), Rational(-2, 5));
}

TEST(ParseFraction, Rejects) {
    EXPECT_FALSE(parse_fraction(""));
    EXPECT_FALSE(parse_fraction("1/0"));
    EXPECT_FALSE(parse_fraction("1.5"));
    EXPECT_FALSE(parse_fraction("a"));
    EXPECT_FALSE(parse_fraction("1/-2"));
    EXPECT_FALSE(parse_fraction("/2"));
}

TEST(ParseNumber, DecimalsAreExact) {
    EXPECT_EQ(*parse_number("0.376"), Rational(47, 125));
    EXPECT_EQ(*parse_number(".5"), Rational(1, 2));
    EXPECT_EQ(*parse_number("1."), Rational(1));
    EXPECT_EQ(*parse_number("-0.25"), Rational(-1, 4));
    EXPECT_EQ(*parse_number("2/3"), Rational(2, 3));
    EXPECT_FALSE(parse_number("."));
    EXPECT_FALSE(parse_number("0.3.1"));
    EXPECT_FALSE(parse_number("1/2.0"));
}

TEST(FormatDecimal, FourDecimalCells) {
    EXPECT_EQ(format_decimal(Rational(1, 10), 4), "0.1000");
    EXPECT_EQ(format_decimal(Rational(1, 9), 4), "0.1111");
    EXPECT_EQ(format_decimal(Rational(47, 400), 4), "0.1175");
    EXPECT_EQ(format_decimal(Rational(-23, 400), 4), "-0.0575");
    EXPECT_EQ(format_decimal(Rational(0), 4), "0.0000");
    EXPECT_EQ(format_decimal(Rational(53, 60), 4), "0.8833");
    EXPECT_EQ(format_decimal(Rational(7, 2), 1), "3.5");
}

TEST(FormatDecimal, HalfToEven) {
    EXPECT_EQ(format_decimal(Rational(1, 20000), 4), "0.0000");  // 0.00005
    EXPECT_EQ(format_decimal(Rational(3, 20000), 4), "0.0002");  // 0.00015
    EXPECT_EQ(format_decimal(Rational(5, 20000), 4), "0.0002");  // 0.00025
    EXPECT_EQ(format_decimal(Rational(-3, 20000), 4), "-0.0002");
    EXPECT_EQ(format_decimal(Rational(-1, 20000), 4), "0.0000"); // no negative zero
    EXPECT_EQ(format_decimal(Rational(25, 10), 1), "2.5");
    EXPECT_EQ(format_decimal(Rational(5, 4), 1), "1.2");
    EXPECT_EQ(format_decimal(Rational(7, 4), 1), "1.8");
}

TEST(FormatDecimal, DoublesRoundThroughExactValue) {
    EXPECT_EQ(format_decimal(0.1, 4), "0.1000");
    EXPECT_EQ(format_decimal(0.125, 2), "0.12");
    EXPECT_EQ(format_decimal(-1.5, 3), "-1.500");
}

TEST(ParseFraction, LeadingZerosAreDecimal) {
    EXPECT_EQ(*parse_fraction("010"), Rational(10));
    EXPECT_EQ(*parse_fraction("09/012"), Rational(3, 4));
    EXPECT_EQ(*parse_number("0.0376"), Rational(47, 1250));
    EXPECT_EQ(*parse_number("00.5"), Rational(1, 2));
}
