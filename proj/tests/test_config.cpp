#include <gtest/gtest.h>

#include <stdexcept>

#include "boxmin/config.hpp"

using boxmin::Config;

TEST(Config, ParsesSectionsListsAndComments) {
  const auto c = Config::parse_string(R"(
# top level
threads = 4
name = "a # not a comment"
[lp]
interior_points_per_axis = 31   # trailing comment
exterior_shells = [1.0, 1.5, 3]
repair_with_reference = false
[verify]
seed = 9
)");
  EXPECT_EQ(c.integer("threads", 0), 4);
  EXPECT_EQ(*c.text("name"), "a # not a comment");
  EXPECT_EQ(c.numbers("lp.exterior_shells", {}), (std::vector<double>{1.0, 1.5, 3.0}));
  EXPECT_FALSE(c.flag("lp.repair_with_reference", true));
  EXPECT_EQ(c.number("missing", 2.5), 2.5);
  const auto s = boxmin::sampling_from(c);
  EXPECT_EQ(s.interior_points_per_axis, 31);
  EXPECT_FALSE(s.repair_with_reference);
  const auto g = boxmin::grid_from(c, boxmin::GridSpec{});
  EXPECT_EQ(g.seed, 9u);
  EXPECT_TRUE(c.unused().empty());
}

TEST(Config, ReportsUnusedKeys) {
  const auto c = Config::parse_string("[lp]\ntypo_key = 1\n");
  boxmin::sampling_from(c);
  EXPECT_EQ(c.unused(), (std::vector<std::string>{"lp.typo_key"}));
}

TEST(Config, Errors) {
  EXPECT_THROW(Config::parse_string("a = 1\na = 2\n"), std::invalid_argument);
  EXPECT_THROW(Config::parse_string("[lp\n"), std::invalid_argument);
  EXPECT_THROW(Config::parse_string("novalue\n"), std::invalid_argument);
  EXPECT_THROW(Config::parse_string("a = \"open\n"), std::invalid_argument);
  EXPECT_THROW(Config::parse_string("a = [1, 2\n"), std::invalid_argument);
  EXPECT_THROW(Config::parse_string("a =\n"), std::invalid_argument);
  const auto c = Config::parse_string("n = 1.5\nf = yes\nw = abc\n");
  EXPECT_THROW(c.integer("n", 0), std::invalid_argument);
  EXPECT_THROW(c.flag("f", false), std::invalid_argument);
  EXPECT_THROW(c.number("w", 0), std::invalid_argument);
  EXPECT_THROW(Config::load("/nonexistent/file.toml"), std::runtime_error);
  const auto bad = Config::parse_string("[lp]\nround_limit = -1\n");
  EXPECT_THROW(boxmin::sampling_from(bad), std::invalid_argument);
}
