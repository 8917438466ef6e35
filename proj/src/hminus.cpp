#include "cmfield/hminus.hpp"

#include "cmfield/errors.hpp"

namespace cmfield {

CycNumber bernoulli_b1(const DirichletCharacter& chi) {
  if (chi.is_principal()) throw PrincipalCharacter("bernoulli_b1: principal character");
  if (!is_odd(chi)) throw EvenCharacter("bernoulli_b1: " + encode(chi) + " is even");
  const auto prim = primitive(chi);
  const std::int64_t f = prim.modulus();
  const std::int64_t n = prim.order();
  std::vector<BigInt> sums(static_cast<std::size_t>(n), 0);
  for (std::int64_t a = 1; a < f; ++a)
    if (auto t = prim.exponent_at(a)) sums[static_cast<std::size_t>(*t)] += a;
  return CycNumber::from_exponent_sums(n, std::move(sums), f);
}

namespace {

Rational orbit_norm(const DirichletCharacter& rep) {
  return absolute_norm(bernoulli_b1(rep) * Rational(-1, 2));
}

}  // namespace

MinusReport minus_class_number(const AbelianField& k, std::optional<int> q_override) {
  const auto verdict = hasse_unit_index(k, q_override);
  MinusReport r{k, verdict.Q, roots_of_unity_order(k), verdict, {}, 0};
  Rational total = Rational(r.Q) * r.w;
  for (const auto& orbit : galois_orbits(odd_characters(k))) {
    Rational norm = orbit_norm(orbit.front());
    total *= norm;
    r.orbit_factors.push_back({orbit.front(), norm});
  }
  if (!is_integer(total) || total <= 0)
    throw NonIntegralResult("h^- of " + describe(k) + " evaluated to " + to_string(total));
  r.h_minus = total.get_num();
  return r;
}

Rational minus_partial_product(const std::vector<DirichletCharacter>& s) {
  Rational total = 1;
  for (const auto& orbit : galois_orbits(s)) total *= orbit_norm(orbit.front());
  return total;
}

}  // namespace cmfield
