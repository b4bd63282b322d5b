#include <gtest/gtest.h>

#include <stdexcept>

#include "boxmin/rational.hpp"

using boxmin::parse_rational;
using boxmin::rat;

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(parse_rational("63/64"), rat(63, 64));
  EXPECT_EQ(parse_rational("-3"), rat(-3));
  EXPECT_EQ(parse_rational("0.99"), rat(99, 100));
  EXPECT_EQ(parse_rational("-1.5e-3"), rat(-3, 2000));
  EXPECT_EQ(parse_rational("2.5E2"), rat(250));
}

TEST(Rational, LeadingZeroDigitsAreDecimalNotOctal) {
  EXPECT_EQ(parse_rational("0.0875"), rat(7, 80));
  EXPECT_EQ(parse_rational("0.089"), rat(89, 1000));
  EXPECT_EQ(parse_rational("017"), rat(17));
  EXPECT_EQ(parse_rational("0"), rat(0));
}

TEST(Rational, RejectsMalformedInput) {
  for (const char* bad : {"", "1/0", "abc", "1/", "/2", "1.2.3", "1e", "--1", "nan"}) {
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
  }
}

TEST(Rational, FormatsAndFloors) {
  EXPECT_EQ(boxmin::to_string(rat(95, 128)), "95/128");
  EXPECT_EQ(boxmin::to_string(rat(10, 2)), "5");
  EXPECT_EQ(boxmin::floor_of(rat(200)), 200);
  EXPECT_EQ(boxmin::floor_of(rat(-1, 2)), -1);
  EXPECT_EQ(boxmin::floor_of(rat(7, 2)), 3);
}
