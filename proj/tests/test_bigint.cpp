#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ivmc/bigint.hpp"

using ivmc::Big;

TEST_CASE("decimal round trip") {
  CHECK(Big(0).str() == "0");
  CHECK(Big(-7).str() == "-7");
  CHECK(Big::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");
  CHECK(Big::parse("-42").as_i64() == -42);
  Big two_to_100 = 1;
  for (int i = 0; i < 100; ++i) two_to_100 *= 2;
  CHECK(two_to_100.str() == "1267650600228229401496703205376");
  CHECK(Big::parse(two_to_100.str()) == two_to_100);
}

TEST_CASE("arithmetic and comparisons") {
  CHECK(Big(3) * Big(4) + Big(5) == Big(17));
  CHECK(Big(2) - Big(9) == Big(-7));
  CHECK(Big(10) > Big(9));
  CHECK(-Big(5) < Big(0));
  CHECK((Big(1000000007LL) * Big(1000000007LL)).str() == "1000000014000000049");
}

TEST_CASE("overflow is detected, not wrapped") {
  Big huge = 1;
  for (int i = 0; i < 126; ++i) huge *= 2;
  CHECK_THROWS_AS(huge * Big(4), ivmc::Error);
  CHECK_THROWS_AS(huge + huge, ivmc::Error);  // 2^127 overflows signed 128
  CHECK_NOTHROW(huge - huge);
}

TEST_CASE("narrowing guards") {
  CHECK(Big(123).fits_i64());
  Big big = Big::parse("98765432109876543210");
  CHECK(!big.fits_i64());
  CHECK_THROWS_AS(big.as_i64(), ivmc::Error);
}

TEST_CASE("parse rejects garbage") {
  CHECK_THROWS_AS(Big::parse(""), ivmc::Error);
  CHECK_THROWS_AS(Big::parse("-"), ivmc::Error);
  CHECK_THROWS_AS(Big::parse("12x3"), ivmc::Error);
}
