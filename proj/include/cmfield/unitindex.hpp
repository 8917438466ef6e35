#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cmfield/fieldlat.hpp"

namespace cmfield {

/// Which criterion decided a unit index verdict.
enum class UnitIndexRule {
  user_override,
  imaginary_quadratic,          // E_K = W_K {+-1}
  cyclotomic_prime_power,       // Q(zeta_m), m a prime power: Q = 1
  cyclotomic_composite,         // Q(zeta_m), m composite: 1 - zeta_m is a unit, Q = 2
  prime_power_conductor,        // complex subfields of Q(zeta_{p^k}): Q = 1
  decomposable_one_imaginary,   // prime-power compositum, one imaginary factor: Q = 1
  decomposable_many_imaginary,  // prime-power compositum, >= 2 imaginary factors: Q = 2
  biquadratic_essentially_ramified,    // w = 2 mod 4, K/K+ essentially ramified
  biquadratic_square_principal,        // w = 2 mod 4, (alpha) = a^2, a principal
  biquadratic_square_nonprincipal,     // w = 2 mod 4, (alpha) = a^2, a not principal
  biquadratic_pi_not_square,           // w = 2^m mod 2^(m+1), pi_m O not an ideal square
  biquadratic_pi_square_principal,     // pi_m O = b^2, b principal
  biquadratic_pi_square_nonprincipal,  // pi_m O = b^2, b not principal
  odd_prime_ramified,           // K/K+ ramified above an odd prime: essentially ramified
  pi_not_square,                // w = 2^m mod 2^(m+1), pi_m O_K+ not an ideal square (ramification at 2)
  cyclic,                       // cyclic over Q: Q = 1
  norm_from_cyclotomic,         // N: W/W^2 onto from Q(zeta_f) with Q = 2 forces Q = 2
};

std::string rule_tag(UnitIndexRule rule);

struct UnitIndexVerdict {
  int Q = 1;
  std::optional<int> kappa_order;  // |kappa_{K/K+}|, nullopt when undecided
  UnitIndexRule rule = UnitIndexRule::user_override;
  std::optional<bool> essential_ramification;
  /// Degree of the field the rule was applied to (after the odd-part reduction).
  std::size_t decided_at_degree = 0;
};

/// Hasse's unit index Q(K) and |kappa_{K/K+}| for an abelian CM-field.
/// Reduces to the 2-primary subfield first, then tries the rules in order.
/// Throws NotCM, or Unsupported when no rule applies and no override is given.
UnitIndexVerdict hasse_unit_index(const AbelianField& k, std::optional<int> override_q = std::nullopt);

/// Every rule that matches, evaluated without early exit on both K and its
/// 2-primary subfield. Used to check that overlapping rules agree.
std::vector<UnitIndexVerdict> matching_rules(const AbelianField& k);

/// The biquadratic criterion alone (K/Q of type (2,2) with real quadratic K+),
/// including the w = 8 and w = 12 cyclotomic cases. nullopt if K is not such a field.
std::optional<UnitIndexVerdict> biquadratic_criterion(const AbelianField& k);

/// Odd quadratic discriminants d with K = K+(sqrt d), for biquadratic CM K.
std::vector<std::int64_t> odd_quadratic_discriminants(const AbelianField& k);

struct MartinetReport {
  std::int64_t p = 0;
  int q_k = 0;           // Q(Q(i, sqrt(2p)))
  int q_l = 0;           // Q(Q(i, sqrt 2, sqrt p))
  int norm_epsilon = 0;  // norm of the fundamental unit of Q(sqrt(2p))
  UnitIndexRule rule_k = UnitIndexRule::user_override;
  UnitIndexRule rule_l = UnitIndexRule::user_override;
  bool holds() const { return q_k == 2 && q_l == 1; }
};

/// p prime, p = 1 mod 8. Throws PreconditionViolated when N(eps_{2p}) = -1.
MartinetReport martinet_pair(std::int64_t p);

}  // namespace cmfield
