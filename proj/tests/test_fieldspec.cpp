#include <gtest/gtest.h>

#include <random>

#include "cmfield/errors.hpp"
#include "cmfield/fieldspec.hpp"

using namespace cmfield;

namespace {

std::size_t error_offset(std::string_view text) {
  try {
    parse_field_spec(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  return std::string_view::npos;
}

}  // namespace

TEST(FieldSpec, Examples) {
  EXPECT_EQ(field_from_spec("zeta:20"), cyclotomic_field(20));
  EXPECT_EQ(field_from_spec("quad:-4*quad:40"), compositum(quadratic_field(-4), quadratic_field(40)));
  EXPECT_EQ(field_from_spec("chars:f=5:e=1"), cyclotomic_field(5));
  EXPECT_EQ(field_from_spec("chars:f=5:e=2"), quadratic_field(5));
  EXPECT_EQ(field_from_spec("chars:f=4:e=1+f=5:e=2"), compositum(quadratic_field(-4), quadratic_field(5)));
  EXPECT_EQ(field_from_spec("zeta:1"), rational_field());
}

TEST(FieldSpec, ErrorsCarryByteOffsets) {
  EXPECT_EQ(error_offset(""), 0u);
  EXPECT_EQ(error_offset("zet:5"), 0u);
  EXPECT_EQ(error_offset("zeta:"), 5u);
  EXPECT_EQ(error_offset("zeta:0"), 5u);
  EXPECT_EQ(error_offset("zeta:5x"), 6u);
  EXPECT_EQ(error_offset("quad:-1"), 5u);
  EXPECT_EQ(error_offset("quad:-4*"), 8u);
  EXPECT_EQ(error_offset("quad:-4*zeta:3*foo"), 15u);
  EXPECT_EQ(error_offset("chars:f=5:e=1+g=4"), 14u);
  EXPECT_EQ(error_offset("chars:f=8:e=1"), 13u);
  EXPECT_EQ(error_offset("zeta:99999999999999999999"), 5u);
}

TEST(FieldSpec, CanonicalRoundTrip) {
  for (const char* s : {"zeta:20", "quad:-4*quad:40", "chars:f=5:e=1", "chars:f=8:e=1,0+f=5:e=2", "zeta:3*quad:5*zeta:7"}) {
    const auto spec = parse_field_spec(s);
    EXPECT_EQ(to_string(spec), s);
    EXPECT_EQ(parse_field_spec(to_string(spec)), spec);
  }
  // Exponents are printed reduced.
  EXPECT_EQ(to_string(parse_field_spec("chars:f=5:e=5")), "chars:f=5:e=1");
}

TEST(FieldSpec, RandomSpecsRoundTripAndRebuild) {
  std::mt19937_64 rng(31);
  const std::vector<std::int64_t> discs{-3, -4, -7, -8, 5, 8, 12, 13, -20, 40};
  for (int i = 0; i < 200; ++i) {
    std::string text;
    const int atoms = 1 + static_cast<int>(rng() % 3);
    for (int j = 0; j < atoms; ++j) {
      if (j) text += "*";
      switch (rng() % 3) {
        case 0: text += "zeta:" + std::to_string(1 + rng() % 12); break;
        case 1: text += "quad:" + std::to_string(discs[rng() % discs.size()]); break;
        default: {
          const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 16);
          const auto all = all_characters(m);
          text += "chars:" + encode(all[rng() % all.size()]);
        }
      }
    }
    const auto spec = parse_field_spec(text);
    EXPECT_EQ(parse_field_spec(to_string(spec)), spec) << text;
    const auto k = build_field(spec);
    EXPECT_EQ(field_from_spec(spec_of(k)), k) << text;
  }
}

TEST(FieldSpec, SpecOf) {
  EXPECT_EQ(spec_of(cyclotomic_field(20)), "zeta:20");
  EXPECT_EQ(spec_of(quadratic_field(-23)), "quad:-23");
  EXPECT_EQ(spec_of(rational_field()), "zeta:1");
}
