#include <gtest/gtest.h>

#include "leaktight/error.hpp"
#include "leaktight/rational.hpp"

using leaktight::InvalidArgument;
using leaktight::parse_rational;
using leaktight::Rational;

TEST(Rational, ParsesFractionsInLowestTerms) {
  Rational r = parse_rational("6/8");
  EXPECT_EQ(r, Rational(3, 4));
  EXPECT_EQ(r.get_num(), 3);
  EXPECT_EQ(r.get_den(), 4);
  EXPECT_EQ(leaktight::to_string(r), "3/4");
}

TEST(Rational, ParsesIntegers) {
  EXPECT_EQ(parse_rational("1"), Rational(1));
  EXPECT_EQ(parse_rational("0"), Rational(0));
  EXPECT_EQ(leaktight::to_string(parse_rational("4/2")), "2");
}

TEST(Rational, ParsesBigNumbers) {
  Rational r = parse_rational("123456789012345678901234567890/246913578024691357802469135780");
  EXPECT_EQ(r, Rational(1, 2));
}

TEST(Rational, RejectsMalformedInput) {
  for (const char* bad : {"", "1/0", "a", "1/", "/2", "1/2/3", "1.5", "1/-2", " 1/2", "0x1"}) {
    EXPECT_THROW(parse_rational(bad), InvalidArgument) << bad;
  }
}

TEST(Rational, DenominatorBits) {
  EXPECT_EQ(leaktight::denominator_bits(Rational(1)), 1u);
  EXPECT_EQ(leaktight::denominator_bits(Rational(1, 4)), 3u);
  EXPECT_EQ(leaktight::denominator_bits(Rational(3, 1024)), 11u);
}
