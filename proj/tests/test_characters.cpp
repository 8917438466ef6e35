#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "cmfield/characters.hpp"
#include "cmfield/errors.hpp"

using namespace cmfield;

namespace {

// Smallest d | m with chi(a) = 1 for every unit a = 1 mod d.
std::int64_t brute_conductor(const DirichletCharacter& chi) {
  const std::int64_t m = chi.modulus();
  for (std::int64_t d : divisors(m)) {
    bool trivial = true;
    for (std::int64_t a = 1; a < m && trivial; a += d)
      if (std::gcd(a, m) == 1) trivial = *chi.exponent_at(a) == 0;
    if (trivial) return d;
  }
  return m;
}

}  // namespace

TEST(Characters, DlogTableInvertsGenerators) {
  for (std::int64_t m : {1, 2, 3, 4, 8, 9, 15, 16, 40, 63, 100}) {
    auto t = dlog_table(m);
    const auto& g = t->group();
    for (std::int64_t a = 0; a < m; ++a) {
      const auto* l = t->log(a);
      if (std::gcd(a, m) != 1) {
        EXPECT_EQ(l, nullptr);
        continue;
      }
      ASSERT_NE(l, nullptr);
      EXPECT_EQ(residue_from_exponents(g, std::span<const std::int64_t>(l, g.rank())), a % m);
    }
  }
}

TEST(Characters, GroupHasPhiElementsAndIsMultiplicative) {
  for (std::int64_t m = 1; m <= 60; ++m) {
    const auto all = all_characters(m);
    EXPECT_EQ(static_cast<std::int64_t>(all.size()), euler_phi(m));
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    for (const auto& chi : all) {
      for (std::int64_t a = 1; a < m; ++a)
        for (std::int64_t b = 1; b < m; ++b) {
          const auto x = chi.exponent_at(a), y = chi.exponent_at(b), z = chi.exponent_at(a * b);
          if (!x || !y) {
            EXPECT_FALSE(z);
            continue;
          }
          EXPECT_EQ(*z, (*x + *y) % chi.order());
        }
    }
  }
}

TEST(Characters, OrthogonalityOverTheGroup) {
  // sum_chi chi(a) = phi(m) if a = 1 mod m, else 0.
  for (std::int64_t m : {5, 8, 12, 15, 16, 21}) {
    const auto all = all_characters(m);
    std::int64_t e = 1;
    for (const auto& chi : all) e = std::lcm(e, chi.order());
    for (std::int64_t a = 1; a < m; ++a) {
      if (std::gcd(a, m) != 1) continue;
      CycNumber s(e);
      for (const auto& chi : all) s += lift(evaluate(chi, a), e);
      EXPECT_EQ(s, Rational(a == 1 ? euler_phi(m) : 0)) << m << " " << a;
    }
  }
}

TEST(Characters, ConductorAgainstDefinition) {
  for (std::int64_t m = 1; m <= 80; ++m)
    for (const auto& chi : all_characters(m)) EXPECT_EQ(conductor(chi), brute_conductor(chi)) << encode(chi);
}

TEST(Characters, ParityIsValueAtMinusOne) {
  for (std::int64_t m = 3; m <= 50; ++m)
    for (const auto& chi : all_characters(m)) {
      const auto v = evaluate(chi, m - 1);
      EXPECT_EQ(v, Rational(parity(chi)));
    }
}

TEST(Characters, ChangeModulusAgreesOnUnits) {
  for (std::int64_t m : {4, 5, 8, 12, 20}) {
    for (const auto& chi : all_characters(m)) {
      for (std::int64_t n : {2 * m, 3 * m, 5 * m}) {
        const auto up = change_modulus(chi, n);
        EXPECT_EQ(up.order(), chi.order());
        for (std::int64_t a = 1; a < n; ++a)
          if (std::gcd(a, n) == 1) EXPECT_EQ(*up.exponent_at(a), *chi.exponent_at(a));
        EXPECT_EQ(change_modulus(up, m), chi);
      }
      const auto prim = primitive(chi);
      EXPECT_EQ(prim.modulus(), conductor(chi));
      EXPECT_EQ(change_modulus(prim, m), chi);
    }
  }
}

TEST(Characters, GroupLaw) {
  const auto a = make_character(20, {1, 1});
  const auto b = make_character(20, {0, 3});
  const auto ab = char_mul(a, b);
  for (std::int64_t x = 1; x < 20; ++x) {
    if (std::gcd(x, std::int64_t{20}) != 1) continue;
    const auto lhs = evaluate(ab, x);
    const std::int64_t e = std::lcm(a.order(), b.order());
    EXPECT_EQ(lift(lhs, e), lift(evaluate(a, x), e) * lift(evaluate(b, x), e));
  }
  EXPECT_TRUE(char_mul(a, char_inverse(a)).is_principal());
  EXPECT_EQ(char_pow(a, a.order()), principal_character(20));
  // Different moduli multiply at the lcm.
  const auto c = char_mul(kronecker_character(-4), kronecker_character(5));
  EXPECT_EQ(c.modulus(), 20);
  EXPECT_EQ(conductor(c), 20);
}

TEST(Characters, KroneckerCharacterMatchesSymbol) {
  for (std::int64_t d = -200; d <= 200; ++d) {
    if (!is_fundamental_discriminant(d)) continue;
    const auto chi = kronecker_character(d);
    EXPECT_EQ(chi.modulus(), std::llabs(d));
    EXPECT_EQ(conductor(chi), std::llabs(d));
    EXPECT_EQ(chi.order(), 2);
    EXPECT_EQ(is_odd(chi), d < 0);
    for (std::int64_t a = 1; a < std::llabs(d); ++a) {
      const auto t = chi.exponent_at(a);
      const int k = kronecker(d, a);
      if (!t) {
        EXPECT_EQ(k, 0);
        continue;
      }
      EXPECT_EQ(*t == 0 ? 1 : -1, k) << d << " " << a;
    }
  }
  EXPECT_THROW(kronecker_character(-1), NotFundamentalDiscriminant);
  EXPECT_THROW(kronecker_character(12 * 9), NotFundamentalDiscriminant);
}

TEST(Characters, GaloisOrbits) {
  const auto all = all_characters(13);
  const auto orbits = galois_orbits(all);
  // One orbit per order d | 12.
  EXPECT_EQ(orbits.size(), divisors(12).size());
  std::size_t total = 0;
  for (const auto& o : orbits) {
    EXPECT_EQ(static_cast<std::int64_t>(o.size()), euler_phi(o.front().order()));
    total += o.size();
  }
  EXPECT_EQ(total, all.size());
  EXPECT_THROW(galois_orbits({make_character(5, {1})}), NotClosed);
}

TEST(Characters, EncodeDecodeRoundTrip) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 200);
    const auto all = all_characters(m);
    const auto& chi = all[rng() % all.size()];
    EXPECT_EQ(decode_character(encode(chi)), chi);
  }
  EXPECT_EQ(encode(make_character(8, {1, 3})), "f=8:e=1,1");
  EXPECT_EQ(encode(principal_character(2)), "f=2:e=");
}

TEST(Characters, DecodeErrorsCarryOffsets) {
  auto offset = [](std::string_view s) -> std::size_t {
    try {
      decode_character(s);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return 999;
  };
  EXPECT_EQ(offset("g=5:e=1"), 0u);
  EXPECT_EQ(offset("f=x:e=1"), 2u);
  EXPECT_EQ(offset("f=5;e=1"), 3u);
  EXPECT_EQ(offset("f=5:e=1,"), 8u);
  EXPECT_EQ(offset("f=8:e=1"), 7u);
  EXPECT_THROW(make_character(8, {1}), LengthMismatch);
}
