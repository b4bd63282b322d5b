#include <gtest/gtest.h>

#include <stdexcept>

#include "boxmin/report.hpp"

using namespace boxmin;
namespace rp = boxmin::report;

TEST(Report, RationalJson) {
  const auto j = rp::rational_json(rat(63, 64));
  EXPECT_EQ(j["exact"], "63/64");
  EXPECT_DOUBLE_EQ(j["decimal"].get<double>(), 0.984375);
  EXPECT_EQ(rp::rational_from(j), rat(63, 64));
  EXPECT_THROW(rp::rational_from(rp::json::object()), std::invalid_argument);
}

TEST(Report, VerificationRoundTrip) {
  GridSpec g;
  g.points_per_axis = 11;
  g.exterior_samples = 500;
  const auto r = lowdim::verify_admissibility(lowdim::explicit_minorant(2), g);
  const auto text = rp::to_json(r).dump();
  const auto back = rp::verification_from(rp::json::parse(text));
  EXPECT_EQ(rp::to_json(back), rp::to_json(r));
  EXPECT_EQ(back.passed(), r.passed());
  EXPECT_EQ(back.interior_max, r.interior_max);
}

TEST(Report, PoissonRoundTrip) {
  const std::vector<double> t = {0.1, 0.2};
  const auto r = analysis::poisson_sum(functions::explicit_construction(2), t, 5);
  const auto back = rp::poisson_from(rp::json::parse(rp::to_json(r).dump()));
  EXPECT_EQ(rp::to_json(back), rp::to_json(r));
}

TEST(Report, BoundsRoundTrip) {
  const auto L = bounds_ledger(known_nu_lowers(), rat(99, 100));
  const auto back = rp::bounds_from(rp::json::parse(rp::to_json(L).dump()));
  EXPECT_EQ(rp::to_json(back), rp::to_json(L));
  EXPECT_EQ(*back.nc_upper, 200);
}

TEST(Report, SieveRoundTrip) {
  const auto pts = sieve::random_point_set(2, 6, 0.2, 3);
  const auto r = sieve::sieve_bounds(pts, functions::explicit_construction(2), 0.2);
  const auto back = rp::sieve_from(rp::json::parse(rp::to_json(r).dump()));
  EXPECT_EQ(rp::to_json(back), rp::to_json(r));
}

TEST(Report, Envelope) {
  const auto e = rp::envelope("bounds", rp::json{{"a", 1}});
  EXPECT_EQ(e["schema_version"], rp::schema_version);
  EXPECT_EQ(rp::open_envelope(e, "bounds")["a"], 1);
  EXPECT_THROW(rp::open_envelope(e, "sieve"), std::invalid_argument);
  auto wrong = e;
  wrong["schema_version"] = 99;
  EXPECT_THROW(rp::open_envelope(wrong, "bounds"), std::invalid_argument);
}
