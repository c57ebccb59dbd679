#include "nu3/natural.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

namespace nu3 {
namespace {

TEST(Natural, ParsesUnboundedDecimal) {
  const Natural big = Natural::parse("123456789012345678901234567890");
  EXPECT_EQ(big.to_string(), "123456789012345678901234567890");
  EXPECT_FALSE(big.fits_u64());
  EXPECT_EQ(Natural::parse("0"), Natural(0));
  EXPECT_EQ(Natural::parse("007"), Natural(7));
}

TEST(Natural, RejectsMalformedInput) {
  for (const char* bad : {"", "-1", "+1", "1e5", "12 ", "abc", "0x10"}) {
    EXPECT_THROW(Natural::parse(bad), std::invalid_argument) << bad;
  }
}

TEST(Natural, NeverGoesNegative) {
  EXPECT_THROW(Natural(3) - Natural(4), std::domain_error);
  EXPECT_THROW(Natural(mpz_class(-1)), std::domain_error);
  EXPECT_EQ(Natural(4) - Natural(4), Natural(0));
}

TEST(Natural, ArithmeticPastWordSize) {
  const Natural two64 = Natural::pow(2, 64);
  EXPECT_EQ(two64.to_string(), "18446744073709551616");
  EXPECT_EQ(two64.bit_length(), 65U);
  EXPECT_THROW((void)two64.to_u64(), std::out_of_range);
  EXPECT_EQ((two64 - Natural(1)).to_u64(), 18446744073709551615ULL);
  EXPECT_EQ(Natural(1) << 64, two64);
  EXPECT_EQ(two64 / Natural(3), Natural::parse("6148914691236517205"));
  EXPECT_EQ(two64 % Natural(3), Natural(1));
  EXPECT_EQ(power(Natural(10), 30), Natural::parse("1000000000000000000000000000000"));
  EXPECT_THROW(two64 / Natural(0), std::domain_error);
}

TEST(Natural, OrderingAndParity) {
  EXPECT_LT(Natural(2), Natural::pow(10, 40));
  EXPECT_TRUE(Natural(0).is_even());
  EXPECT_FALSE(Natural::pow(3, 50).is_even());
  EXPECT_TRUE(Natural(0).is_zero());
}

}  // namespace
}  // namespace nu3
