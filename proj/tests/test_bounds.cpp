#include <gtest/gtest.h>

#include <stdexcept>

#include "boxmin/bounds.hpp"

using namespace boxmin;

TEST(Bounds, LedgerFromExplicitConstructions) {
  const auto L = bounds_ledger(known_nu_lowers());
  EXPECT_EQ(L.nc_lower, 5);
  EXPECT_FALSE(L.nc_upper.has_value());
  EXPECT_EQ(L.nc_upper_text(), "floor(2/(1-Delta(2)))");
  bool found = false;
  for (const auto& d : L.derivations) {
    if (d.from_dimension == 5 && d.to_dimension == 2) {
      EXPECT_EQ(d.value, rat(83, 128));
      found = true;
    }
    // Delta(M) >= 1 - M/N + (M/N) nu(N)
    const Rational MN = rat(d.to_dimension, d.from_dimension);
    EXPECT_EQ(d.value, 1 - MN + MN * known_nu_lowers().at(d.from_dimension));
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(L.record(2).delta_lower, rat(63, 64));
}

TEST(Bounds, UpperBoundOnDelta2) {
  const auto L = bounds_ledger(known_nu_lowers(), rat(99, 100));
  ASSERT_TRUE(L.nc_upper.has_value());
  EXPECT_EQ(*L.nc_upper, 200);
  EXPECT_EQ(L.nc_upper_text(), "200");
  const auto L2 = bounds_ledger(known_nu_lowers(), rat(199, 200));
  EXPECT_EQ(*L2.nc_upper, 400);
}

TEST(Bounds, RejectsInconsistentInput) {
  EXPECT_THROW(bounds_ledger(known_nu_lowers(), rat(1)), std::invalid_argument);
  EXPECT_THROW(bounds_ledger(known_nu_lowers(), rat(1, 2)), std::invalid_argument);  // below 63/64
  EXPECT_THROW(bounds_ledger({{2, rat(3, 2)}}), std::invalid_argument);
  EXPECT_THROW(bounds_ledger({{2, rat(-1, 2)}}), std::invalid_argument);
}
