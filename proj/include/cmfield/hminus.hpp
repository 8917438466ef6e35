#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cmfield/characters.hpp"
#include "cmfield/fieldlat.hpp"
#include "cmfield/unitindex.hpp"

namespace cmfield {

/// B_{1,chi} = (1/f) sum_{1 <= a <= f} chi(a) a over the primitive character of
/// conductor f, as an element of Q(zeta_{ord chi}).
CycNumber bernoulli_b1(const DirichletCharacter& chi);

struct OrbitFactor {
  DirichletCharacter rep;
  Rational norm;  // product of -B_{1,chi}/2 over the Galois orbit of rep
};

struct MinusReport {
  AbelianField field;
  int Q = 1;
  std::int64_t w = 2;
  UnitIndexVerdict verdict;
  std::vector<OrbitFactor> orbit_factors;
  BigInt h_minus;
};

/// h^-(K) = Q w prod_{chi odd} (-B_{1,chi}/2), one orbit at a time.
/// Throws NotCM, Unsupported (without override) and NonIntegralResult.
MinusReport minus_class_number(const AbelianField& k, std::optional<int> q_override = std::nullopt);

/// prod_{chi in S} (-B_{1,chi}/2). S must be closed under chi -> chi^k.
Rational minus_partial_product(const std::vector<DirichletCharacter>& s);

}  // namespace cmfield
