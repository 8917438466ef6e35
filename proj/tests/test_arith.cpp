#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "cmfield/arith.hpp"
#include "cmfield/errors.hpp"

using namespace cmfield;

namespace {

std::int64_t brute_phi(std::int64_t n) {
  std::int64_t c = 0;
  for (std::int64_t a = 1; a <= n; ++a) c += std::gcd(a, n) == 1;
  return c;
}

bool brute_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d < n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Legendre symbol by Euler's criterion.
int euler_legendre(std::int64_t a, std::int64_t p) {
  const std::int64_t r = powmod(mod(a, p), (p - 1) / 2, p);
  return r == 0 ? 0 : r == 1 ? 1 : -1;
}

std::int64_t brute_order(std::int64_t g, std::int64_t m) {
  std::int64_t x = g % m, k = 1;
  while (x != 1 % m) {
    x = x * g % m;
    ++k;
  }
  return k;
}

}  // namespace

TEST(Arith, FactorizeReassembles) {
  for (std::int64_t n = 1; n <= 3000; ++n) {
    std::int64_t prod = 1, last = 1;
    for (auto [p, e] : factorize(n)) {
      EXPECT_TRUE(brute_prime(p));
      EXPECT_GT(p, last);
      last = p;
      prod *= ipow(p, e);
    }
    EXPECT_EQ(prod, n);
  }
  EXPECT_THROW(factorize(0), PreconditionViolated);
}

TEST(Arith, PhiAndPrimalityAgainstBruteForce) {
  for (std::int64_t n = 1; n <= 500; ++n) {
    EXPECT_EQ(euler_phi(n), brute_phi(n)) << n;
    EXPECT_EQ(is_prime(n), brute_prime(n)) << n;
  }
}

TEST(Arith, Divisors) {
  EXPECT_EQ(divisors(12), (std::vector<std::int64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors(1), (std::vector<std::int64_t>{1}));
  for (std::int64_t n = 1; n <= 200; ++n) {
    std::int64_t c = 0;
    for (std::int64_t d = 1; d <= n; ++d) c += n % d == 0;
    EXPECT_EQ(static_cast<std::int64_t>(divisors(n).size()), c);
  }
}

TEST(Arith, ModularInverse) {
  EXPECT_EQ(invmod(3, 7), 5);
  EXPECT_THROW(invmod(4, 8), NotCoprime);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const std::int64_t m = 2 + static_cast<std::int64_t>(rng() % 10000);
    const std::int64_t a = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(m));
    if (std::gcd(a, m) != 1) continue;
    EXPECT_EQ(mod(a * invmod(a, m), m), 1 % m);
  }
}

TEST(Arith, KroneckerMatchesEulerCriterionAtOddPrimes) {
  for (std::int64_t p = 3; p < 200; ++p) {
    if (!brute_prime(p)) continue;
    for (std::int64_t a = -60; a <= 60; ++a) EXPECT_EQ(kronecker(a, p), euler_legendre(a, p)) << a << " " << p;
  }
}

TEST(Arith, KroneckerAtTwoAndMultiplicativity) {
  // (a/2) = 0 for even a, +1 for a = +-1 mod 8, -1 for a = +-3 mod 8.
  for (std::int64_t a = -50; a <= 50; ++a) {
    const int expect = a % 2 == 0 ? 0 : (mod(a, 8) == 1 || mod(a, 8) == 7) ? 1 : -1;
    EXPECT_EQ(kronecker(a, 2), expect) << a;
  }
  for (std::int64_t a : {-23, -20, 5, 12, 13}) {
    for (std::int64_t m = 1; m < 40; ++m)
      for (std::int64_t n = 1; n < 40; ++n) EXPECT_EQ(kronecker(a, m * n), kronecker(a, m) * kronecker(a, n));
  }
}

TEST(Arith, FundamentalDiscriminants) {
  const std::set<std::int64_t> small_neg{-3, -4, -7, -8, -11, -15, -19, -20, -23, -24};
  for (std::int64_t d = -24; d < 0; ++d) EXPECT_EQ(is_fundamental_discriminant(d), small_neg.contains(d)) << d;
  const std::set<std::int64_t> small_pos{5, 8, 12, 13, 17, 21, 24, 28, 29};
  for (std::int64_t d = 0; d <= 29; ++d) EXPECT_EQ(is_fundamental_discriminant(d), small_pos.contains(d)) << d;
  EXPECT_EQ(fundamental_discriminant_of(10), 40);
  EXPECT_EQ(fundamental_discriminant_of(-1), -4);
  EXPECT_EQ(fundamental_discriminant_of(-3), -3);
  EXPECT_EQ(fundamental_discriminant_of(18), 8);
}

TEST(Arith, UnitGroupGeneratorsAgainstBruteForce) {
  EXPECT_EQ(unit_group(8).generators, (std::vector<std::int64_t>{7, 5}));
  EXPECT_EQ(unit_group(4).generators, (std::vector<std::int64_t>{3}));
  EXPECT_TRUE(unit_group(2).generators.empty());
  EXPECT_TRUE(unit_group(1).generators.empty());
  for (std::int64_t m = 3; m <= 300; ++m) {
    const auto g = unit_group(m);
    EXPECT_EQ(g.group_order(), brute_phi(m)) << m;
    std::int64_t prod = 1;
    for (std::size_t i = 0; i < g.rank(); ++i) {
      EXPECT_EQ(brute_order(g.generators[i], m), g.orders[i]) << m;
      prod *= g.orders[i];
    }
    EXPECT_EQ(prod, brute_phi(m));
    // Products of generator powers hit every unit exactly once.
    std::set<std::int64_t> seen;
    std::vector<std::int64_t> e(g.rank(), 0);
    while (true) {
      seen.insert(residue_from_exponents(g, e));
      std::size_t i = 0;
      while (i < e.size() && ++e[i] == g.orders[i]) e[i++] = 0;
      if (i == e.size()) break;
    }
    EXPECT_EQ(static_cast<std::int64_t>(seen.size()), brute_phi(m)) << m;
  }
}

TEST(Arith, OddPrimePowerGeneratorIsSmallestPrimitiveRoot) {
  for (std::int64_t p = 3; p < 100; ++p) {
    if (!brute_prime(p)) continue;
    std::int64_t r = 2;
    while (brute_order(r, p) != p - 1) ++r;
    EXPECT_EQ(unit_group(p).generators.front(), r) << p;
  }
}
