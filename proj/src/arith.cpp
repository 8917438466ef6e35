#include "cmfield/arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "cmfield/errors.hpp"

namespace cmfield {

std::vector<PrimePower> factorize(std::int64_t n) {
  if (n < 1) throw PreconditionViolated("factorize: n must be positive");
  std::vector<PrimePower> out;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::int64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

bool is_squarefree(std::int64_t n) {
  if (n == 0) return false;
  for (auto [p, e] : factorize(std::llabs(n)))
    if (e > 1) return false;
  return true;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  if (m == 1) return 0;
  __int128 result = 1;
  __int128 b = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = result * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

std::int64_t invmod(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, r = mod(a, m);
  while (r != 0) {
    const std::int64_t q = g / r;
    std::tie(g, r) = std::make_pair(r, g - q * r);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) throw NotCoprime("invmod: " + std::to_string(a) + " not invertible mod " + std::to_string(m));
  return mod(x, m);
}

std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

int kronecker(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  int twos = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++twos;
  }
  if (twos > 0) {
    if (a % 2 == 0) return 0;
    const std::int64_t a8 = mod(a, 8);
    if ((twos & 1) && (a8 == 3 || a8 == 5)) result = -result;
  }
  // Jacobi symbol (a / n) for odd positive n.
  std::int64_t x = mod(a, n);
  while (x != 0) {
    while (x % 2 == 0) {
      x /= 2;
      const std::int64_t n8 = n % 8;
      if (n8 == 3 || n8 == 5) result = -result;
    }
    std::swap(x, n);
    if (x % 4 == 3 && n % 4 == 3) result = -result;
    x %= n;
  }
  return n == 1 ? result : 0;
}

bool is_fundamental_discriminant(std::int64_t d) {
  if (d == 0 || d == 1) return false;
  const std::int64_t r = mod(d, 4);
  if (r == 1) return is_squarefree(d);
  if (r != 0) return false;
  const std::int64_t m = d / 4;
  const std::int64_t m4 = mod(m, 4);
  return (m4 == 2 || m4 == 3) && is_squarefree(m);
}

std::int64_t fundamental_discriminant_of(std::int64_t n) {
  if (n == 0) throw PreconditionViolated("fundamental_discriminant_of: zero");
  std::int64_t core = n < 0 ? -1 : 1;
  for (auto [p, e] : factorize(std::llabs(n)))
    if (e % 2 == 1) core *= p;
  if (core == 1) throw PreconditionViolated("fundamental_discriminant_of: square " + std::to_string(n));
  return mod(core, 4) == 1 ? core : 4 * core;
}

BigInt to_bigint(std::int64_t v) {
  BigInt r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

std::string to_string(const BigInt& v) { return v.get_str(); }
std::string to_string(const Rational& v) { return v.get_str(); }
Rational ratio(const BigInt& n, const BigInt& d) {
  if (d == 0) throw DivisionByZero("ratio: zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& v) { return v.get_den() == 1; }

std::int64_t UnitGroupStructure::group_order() const {
  std::int64_t r = 1;
  for (auto o : orders) r *= o;
  return r;
}

std::int64_t UnitGroupStructure::exponent() const {
  std::int64_t r = 1;
  for (auto o : orders) r = std::lcm(r, o);
  return r;
}

namespace {

std::int64_t smallest_primitive_root(std::int64_t p, std::int64_t pk) {
  const std::int64_t phi = pk / p * (p - 1);
  const auto fac = factorize(phi);
  for (std::int64_t g = 2; g < pk; ++g) {
    if (g % p == 0) continue;
    bool ok = true;
    for (auto [q, e] : fac) {
      if (powmod(g, phi / q, pk) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw InternalInconsistency("no primitive root mod " + std::to_string(pk));
}

// r = g mod q and r = 1 mod (m / q).
std::int64_t crt_lift(std::int64_t g, std::int64_t q, std::int64_t m) {
  const std::int64_t rest = m / q;
  if (rest == 1) return mod(g, m);
  const std::int64_t t = mod((g - 1) % q * invmod(rest % q, q), q);
  return mod(1 + rest * t, m);
}

}  // namespace

UnitGroupStructure unit_group(std::int64_t m) {
  if (m < 1) throw PreconditionViolated("unit_group: modulus must be positive");
  UnitGroupStructure g;
  g.modulus = m;
  for (auto [p, e] : factorize(m)) {
    const std::int64_t pk = ipow(p, e);
    UnitGroupStructure::Component c{p, e, pk, g.generators.size(), 0};
    if (p == 2) {
      if (e == 2) {
        g.generators.push_back(crt_lift(3, pk, m));
        g.orders.push_back(2);
      } else if (e >= 3) {
        g.generators.push_back(crt_lift(pk - 1, pk, m));
        g.orders.push_back(2);
        g.generators.push_back(crt_lift(5, pk, m));
        g.orders.push_back(pk / 4);
      }
    } else {
      g.generators.push_back(crt_lift(smallest_primitive_root(p, pk), pk, m));
      g.orders.push_back(pk / p * (p - 1));
    }
    c.generator_count = g.generators.size() - c.first_generator;
    g.components.push_back(c);
  }
  return g;
}

std::int64_t residue_from_exponents(const UnitGroupStructure& g,
                                    std::span<const std::int64_t> exponents) {
  if (exponents.size() != g.generators.size())
    throw LengthMismatch("residue_from_exponents: wrong number of exponents");
  std::int64_t r = 1 % g.modulus;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    r = static_cast<std::int64_t>(static_cast<__int128>(r) *
                                  powmod(g.generators[i], mod(exponents[i], g.orders[i]), g.modulus) %
                                  g.modulus);
  return r;
}

}  // namespace cmfield
