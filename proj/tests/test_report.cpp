#include <gtest/gtest.h>

#include "cmfield/fieldspec.hpp"
#include "cmfield/report.hpp"

using namespace cmfield;

TEST(Report, HminusJson) {
  const auto k = field_from_spec("zeta:23");
  const auto j = to_json(minus_class_number(k), "zeta:23");
  EXPECT_EQ(j["field"], "zeta:23");
  EXPECT_EQ(j["conductor"], 23);
  EXPECT_EQ(j["degree"], 22);
  EXPECT_EQ(j["w"], 46);
  EXPECT_EQ(j["Q"], 1);
  EXPECT_EQ(j["h_minus"], "3");
  ASSERT_TRUE(j["factors"].is_array());
  EXPECT_EQ(j["factors"].size(), 2u);  // orders 2 and 22
  const auto back = Json::parse(j.dump());
  EXPECT_EQ(back, j);
}

TEST(Report, UnitIndexJson) {
  const auto k = field_from_spec("quad:-4*quad:40");
  const auto j = to_json(hasse_unit_index(k), k, "quad:-4*quad:40");
  EXPECT_EQ(j["Q"], 1);
  EXPECT_EQ(j["kappa"], 2);
  EXPECT_EQ(j["rule"], "biquadratic-pi-square-nonprincipal");
  EXPECT_EQ(j["essential_ramification"], false);
}

TEST(Report, CsvAndAlignedTables) {
  Table t{kHminusColumns, {{"zeta:3", "3", "2", "6", "1", "imaginary-quadratic", "1"}}};
  EXPECT_EQ(render_csv(t), "field,conductor,degree,w,Q,rule,h_minus\nzeta:3,3,2,6,1,imaginary-quadratic,1\n");
  Table q{{"a", "b"}, {{"x,y", "say \"hi\""}}};
  EXPECT_EQ(render_csv(q), "a,b\n\"x,y\",\"say \"\"hi\"\"\"\n");
  Table a{{"field", "h"}, {{"zeta:100", "1"}}};
  EXPECT_EQ(render_aligned(a), "field     h\nzeta:100  1\n");
  EXPECT_EQ(render_csv(Table{kHminusColumns, {}}), "field,conductor,degree,w,Q,rule,h_minus\n");
}

TEST(Report, CheckJson) {
  const auto r = check_masley(3, 3);
  const auto j = to_json(r);
  EXPECT_EQ(j["name"], "masley");
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(j["quantities"]["h_minus_K"], "1");
}
