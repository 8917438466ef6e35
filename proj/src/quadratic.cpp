#include "cmfield/quadratic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <set>

#include "cmfield/arith.hpp"
#include "cmfield/errors.hpp"

namespace cmfield {

namespace {

std::int64_t isqrt(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

void require_fundamental(std::int64_t D) {
  if (!is_fundamental_discriminant(D))
    throw NotFundamentalDiscriminant(std::to_string(D) + " is not a fundamental discriminant");
}

// Bound on the number of rho steps in any cycle.
std::int64_t period_bound(std::int64_t D) {
  return 2 * (isqrt(D) + 1) * (static_cast<std::int64_t>(std::log2(static_cast<double>(D))) + 2) + 16;
}

std::int64_t solve_b(std::int64_t D, std::int64_t a) {
  for (std::int64_t b = 0; b < 2 * a; ++b)
    if (mod(b - D, 2) == 0 && mod(b * b - D, 4 * a) == 0) return b;
  throw InternalInconsistency("no square root of " + std::to_string(D) + " mod " + std::to_string(4 * a));
}

// b into (-a, a], same class mod 2a.
std::int64_t normalize_b(std::int64_t b, std::int64_t a) {
  std::int64_t r = mod(b, 2 * a);
  return r > a ? r - 2 * a : r;
}

}  // namespace

std::string to_string(const QuadForm& f) {
  return "(" + std::to_string(f.a) + "," + std::to_string(f.b) + "," + std::to_string(f.c) + ")";
}

std::string to_string(const QuadIdeal& i) {
  std::string s;
  if (i.content != 1) s += std::to_string(i.content) + "*";
  return s + "(" + std::to_string(i.a) + ",(" + std::to_string(i.b) + "+sqrt(" + std::to_string(i.D) + "))/2)";
}

std::string to_string(Splitting s) {
  switch (s) {
    case Splitting::split: return "split";
    case Splitting::inert: return "inert";
    case Splitting::ramified: return "ramified";
  }
  return "?";
}

QuadIdeal unit_ideal(std::int64_t D) { return QuadIdeal{D, 1, mod(D, 2), 1}; }

QuadForm form_of(const QuadIdeal& i) {
  if (mod(i.b * i.b - i.D, 4 * i.a) != 0)
    throw PreconditionViolated("invalid ideal " + to_string(i) + ": b^2 != D mod 4a");
  return QuadForm{i.a, i.b, (i.b * i.b - i.D) / (4 * i.a)};
}

QuadForm principal_form(std::int64_t D) {
  const std::int64_t b = mod(D, 2);
  if (D > 0) return reduce(QuadForm{1, b, (b * b - D) / 4});
  return QuadForm{1, b, (b * b - D) / 4};
}

bool is_reduced(const QuadForm& f) {
  const std::int64_t D = f.discriminant();
  if (D < 0) {
    if (f.a <= 0) return false;
    if (std::llabs(f.b) > f.a || f.a > f.c) return false;
    if ((std::llabs(f.b) == f.a || f.a == f.c) && f.b < 0) return false;
    return true;
  }
  const std::int64_t s = isqrt(D);
  const std::int64_t a2 = 2 * std::llabs(f.a);
  return f.b > 0 && f.b <= s && a2 + f.b >= s + 1 && a2 - f.b <= s;
}

QuadForm rho(const QuadForm& f) {
  const std::int64_t D = f.discriminant();
  if (D <= 0 || f.c == 0) throw PreconditionViolated("rho: needs an indefinite form with c != 0");
  const std::int64_t s = isqrt(D);
  const std::int64_t ac = std::llabs(f.c);
  std::int64_t b;
  if (ac > s) {
    b = normalize_b(-f.b, ac);  // (-|c|, |c|]
  } else {
    // Unique b = -f.b mod 2|c| in [s + 1 - 2|c|, s].
    const std::int64_t lo = s + 1 - 2 * ac;
    b = lo + mod(-f.b - lo, 2 * ac);
  }
  return QuadForm{f.c, b, (b * b - D) / (4 * f.c)};
}

QuadForm reduce(QuadForm f) {
  const std::int64_t D = f.discriminant();
  if (D < 0) {
    if (f.a < 0) throw PreconditionViolated("reduce: negative definite form");
    while (true) {
      const std::int64_t b = normalize_b(f.b, f.a);
      f = QuadForm{f.a, b, (b * b - D) / (4 * f.a)};
      if (f.a > f.c) {
        f = QuadForm{f.c, -f.b, f.a};
        continue;
      }
      if (f.a == f.c && f.b < 0) f.b = -f.b;
      return f;
    }
  }
  const std::int64_t bound = period_bound(D) + 64;
  for (std::int64_t step = 0; step < bound; ++step) {
    if (is_reduced(f)) return f;
    f = rho(f);
  }
  throw InternalInconsistency("reduce: indefinite reduction did not terminate for D=" + std::to_string(D));
}

std::vector<QuadForm> cycle_of(const QuadForm& reduced) {
  if (!is_reduced(reduced) || reduced.discriminant() <= 0)
    throw PreconditionViolated("cycle_of: needs a reduced indefinite form");
  const std::int64_t bound = 2 * period_bound(reduced.discriminant());
  std::vector<QuadForm> out{reduced};
  QuadForm f = rho(reduced);
  while (f != reduced) {
    out.push_back(f);
    if (static_cast<std::int64_t>(out.size()) > bound)
      throw InternalInconsistency("cycle_of: period bound exceeded for D=" + std::to_string(reduced.discriminant()));
    f = rho(f);
  }
  return out;
}

std::vector<QuadForm> reduced_forms(std::int64_t D) {
  require_fundamental(D);
  std::vector<QuadForm> out;
  if (D < 0) {
    for (std::int64_t a = 1; 3 * a * a <= -D; ++a)
      for (std::int64_t b = -a + 1; b <= a; ++b) {
        if (mod(b - D, 2) != 0 || mod(b * b - D, 4 * a) != 0) continue;
        const QuadForm f{a, b, (b * b - D) / (4 * a)};
        if (is_reduced(f)) out.push_back(f);
      }
  } else {
    const std::int64_t s = isqrt(D);
    for (std::int64_t b = 1; b <= s; ++b) {
      if (mod(b - D, 2) != 0) continue;
      const std::int64_t n = (D - b * b) / 4;  // = -ac
      for (std::int64_t d : divisors(n))
        for (std::int64_t a : {d, -d}) {
          const QuadForm f{a, b, -n / a};
          if (is_reduced(f)) out.push_back(f);
        }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t class_number(std::int64_t D, ClassGroupSense sense) {
  require_fundamental(D);
  const auto forms = reduced_forms(D);
  if (D < 0) return static_cast<std::int64_t>(forms.size());
  std::set<QuadForm> seen;
  std::int64_t cycles = 0;
  for (const auto& f : forms) {
    if (seen.contains(f)) continue;
    ++cycles;
    for (const auto& g : cycle_of(f)) seen.insert(g);
  }
  if (sense == ClassGroupSense::narrow || fundamental_unit_norm(D) == -1) return cycles;
  return cycles / 2;
}

std::int64_t continued_fraction_period(std::int64_t D) {
  require_fundamental(D);
  if (D < 0) throw PreconditionViolated("continued_fraction_period: D must be positive");
  const std::int64_t s = isqrt(D);
  std::int64_t p = mod(D, 2), q = 2;
  auto step = [&] {
    const std::int64_t a = (p + s) / q;
    p = a * q - p;
    q = (D - p * p) / q;
  };
  step();
  const std::int64_t p1 = p, q1 = q;
  const std::int64_t bound = period_bound(D);
  for (std::int64_t len = 1; len <= bound; ++len) {
    step();
    if (p == p1 && q == q1) return len;
  }
  throw InternalInconsistency("continued fraction period bound exceeded for D=" + std::to_string(D));
}

int fundamental_unit_norm(std::int64_t D) { return continued_fraction_period(D) % 2 == 0 ? 1 : -1; }

bool is_principal(const QuadIdeal& i) {
  require_fundamental(i.D);
  const QuadForm f = reduce(form_of(i));
  if (i.D < 0) return f == principal_form(i.D);
  for (const auto& g : cycle_of(f))
    if (std::llabs(g.a) == 1) return true;
  return false;
}

PrimeSplitting split_prime(std::int64_t D, std::int64_t p) {
  require_fundamental(D);
  if (!is_prime(p)) throw PreconditionViolated("split_prime: " + std::to_string(p) + " is not prime");
  const int k = kronecker(D, p);
  if (k == -1) return {Splitting::inert, std::nullopt};
  const QuadIdeal ideal{D, p, normalize_b(solve_b(D, p), p), 1};
  return {k == 0 ? Splitting::ramified : Splitting::split, ideal};
}

std::optional<QuadIdeal> ideal_sqrt_of_element(std::int64_t D, std::int64_t n) {
  require_fundamental(D);
  if (n == 0) throw PreconditionViolated("ideal_sqrt_of_element: n must be nonzero");
  std::int64_t content = 1, a = 1;
  for (auto [p, e] : factorize(std::llabs(n))) {
    if (kronecker(D, p) != 0) {
      // (p) or p p' appears with exponent e.
      if (e % 2 == 1) return std::nullopt;
      content *= ipow(p, e / 2);
    } else {
      // (p) = P^2, so P appears with exponent 2e and A gets P^e.
      content *= ipow(p, e / 2);
      if (e % 2 == 1) a *= p;
    }
  }
  return QuadIdeal{D, a, normalize_b(solve_b(D, a), a), content};
}

}  // namespace cmfield
