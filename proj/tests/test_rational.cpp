#include <gtest/gtest.h>

#include "hybridtile/rational.hpp"

using namespace hybridtile;

TEST(Rational, ParsesFractionsAndIntegers) {
    EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
    EXPECT_EQ(parse_rational("6/8"), Rational(3, 4));
    EXPECT_EQ(parse_rational("-2"), Rational(-2));
    EXPECT_EQ(parse_rational("0"), Rational(0));
}

TEST(Rational, RejectsGarbage) {
    EXPECT_THROW(parse_rational(""), std::invalid_argument);
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("a/b"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
}

TEST(Rational, PrintsCanonically) {
    EXPECT_EQ(to_string(Rational(6, 8)), "3/4");
    EXPECT_EQ(to_string(Rational(4, 2)), "2");
    EXPECT_EQ(to_string(Integer(17920)), "17920");
}

TEST(Rational, PowersOfTwo) {
    EXPECT_EQ(pow2_int(10), Integer(1024));
    EXPECT_EQ(pow2(-3), Rational(1, 8));
    EXPECT_EQ(pow2(0), Rational(1));
    EXPECT_TRUE(is_integer(pow2(5)));
    EXPECT_FALSE(is_integer(pow2(-1)));
}

TEST(Rational, BeyondMachineWords) {
    Integer big = pow2_int(200);
    EXPECT_EQ(to_string(Rational(big) / Rational(pow2_int(199))), "2");
}
