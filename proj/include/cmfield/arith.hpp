#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cmfield {

using BigInt = mpz_class;
/// Exact rational; GMP keeps it canonical (lowest terms, positive denominator).
using Rational = mpq_class;

using PrimePower = std::pair<std::int64_t, int>;

/// Trial-division factorization, primes strictly increasing. factorize(1) is empty.
std::vector<PrimePower> factorize(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);  // ascending
bool is_prime(std::int64_t n);
bool is_squarefree(std::int64_t n);
std::int64_t mod(std::int64_t a, std::int64_t m);  // result in [0, m)
std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t m);
std::int64_t invmod(std::int64_t a, std::int64_t m);
std::int64_t lcm(std::int64_t a, std::int64_t b);
std::int64_t ipow(std::int64_t base, int exp);

/// Kronecker symbol (a / n) for any integer n.
int kronecker(std::int64_t a, std::int64_t n);

/// Discriminant of a quadratic field: D = 1 mod 4 squarefree, or D = 4m with
/// m = 2, 3 mod 4 squarefree. D = 1 is excluded.
bool is_fundamental_discriminant(std::int64_t d);

/// Fundamental discriminant of Q(sqrt(n)) for a non-square n != 0.
std::int64_t fundamental_discriminant_of(std::int64_t n);

BigInt to_bigint(std::int64_t v);
std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);
/// n/d in lowest terms. Throws DivisionByZero for d = 0.
Rational ratio(const BigInt& n, const BigInt& d);

/// Exact integer value if `v` has denominator 1.
bool is_integer(const Rational& v);

/// Canonical coordinates on (Z/mZ)*.
struct UnitGroupStructure {
  struct Component {
    std::int64_t prime;
    int exponent;
    std::int64_t prime_power;
    std::size_t first_generator;  // index into generators
    std::size_t generator_count;  // 0, 1 or 2
  };

  std::int64_t modulus = 1;
  std::vector<std::int64_t> generators;  // residues mod modulus
  std::vector<std::int64_t> orders;
  std::vector<Component> components;  // increasing prime order

  std::size_t rank() const { return generators.size(); }
  std::int64_t group_order() const;
  /// lcm of the generator orders.
  std::int64_t exponent() const;
};

/// Canonical generators: smallest primitive root for odd prime powers, 3 for 4,
/// (-1, 5) for 2^k with k >= 3, lifted by CRT and concatenated by prime.
UnitGroupStructure unit_group(std::int64_t m);

/// Product of generator powers, reduced mod the modulus.
std::int64_t residue_from_exponents(const UnitGroupStructure& g,
                                    std::span<const std::int64_t> exponents);

}  // namespace cmfield
