#include "cmfield/unitindex.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cmfield/cyclotomic.hpp"
#include "cmfield/errors.hpp"
#include "cmfield/quadratic.hpp"

namespace cmfield {

std::string rule_tag(UnitIndexRule rule) {
  switch (rule) {
    case UnitIndexRule::user_override: return "user-override";
    case UnitIndexRule::imaginary_quadratic: return "imaginary-quadratic";
    case UnitIndexRule::cyclotomic_prime_power: return "cyclotomic-prime-power";
    case UnitIndexRule::cyclotomic_composite: return "cyclotomic-composite";
    case UnitIndexRule::prime_power_conductor: return "prime-power-conductor";
    case UnitIndexRule::decomposable_one_imaginary: return "decomposable-one-imaginary";
    case UnitIndexRule::decomposable_many_imaginary: return "decomposable-many-imaginary";
    case UnitIndexRule::biquadratic_essentially_ramified: return "biquadratic-essentially-ramified";
    case UnitIndexRule::biquadratic_square_principal: return "biquadratic-square-principal";
    case UnitIndexRule::biquadratic_square_nonprincipal: return "biquadratic-square-nonprincipal";
    case UnitIndexRule::biquadratic_pi_not_square: return "biquadratic-pi-not-square";
    case UnitIndexRule::biquadratic_pi_square_principal: return "biquadratic-pi-square-principal";
    case UnitIndexRule::biquadratic_pi_square_nonprincipal: return "biquadratic-pi-square-nonprincipal";
    case UnitIndexRule::odd_prime_ramified: return "odd-prime-ramified";
    case UnitIndexRule::pi_not_square: return "pi-not-square";
    case UnitIndexRule::cyclic: return "cyclic";
    case UnitIndexRule::norm_from_cyclotomic: return "norm-from-cyclotomic";
  }
  return "unknown";
}

namespace {

using Verdict = UnitIndexVerdict;
using MaybeVerdict = std::optional<UnitIndexVerdict>;

Verdict make(int q, std::optional<int> kappa, UnitIndexRule rule, const AbelianField& k,
             std::optional<bool> essential = std::nullopt) {
  Verdict v;
  v.Q = q;
  v.kappa_order = kappa;
  v.rule = rule;
  v.essential_ramification = essential;
  v.decided_at_degree = k.degree();
  return v;
}

bool is_prime_power(std::int64_t n) { return n > 1 && factorize(n).size() == 1; }

// Size of the projection of X(K) onto the characters of the p-part of the conductor.
std::size_t ramification_index(const AbelianField& k, std::int64_t p) {
  const auto g = unit_group(k.conductor());
  for (const auto& c : g.components) {
    if (c.prime != p) continue;
    std::set<std::vector<std::int64_t>> images;
    for (const auto& chi : k.characters())
      images.emplace(chi.exponents().begin() + static_cast<std::ptrdiff_t>(c.first_generator),
                     chi.exponents().begin() + static_cast<std::ptrdiff_t>(c.first_generator + c.generator_count));
    return images.size();
  }
  return 1;
}

bool is_biquadratic(const AbelianField& k) { return k.degree() == 4 && character_exponent(k) == 2; }

MaybeVerdict rule_imaginary_quadratic(const AbelianField& k) {
  if (k.degree() != 2) return std::nullopt;
  return make(1, 1, UnitIndexRule::imaginary_quadratic, k);
}

MaybeVerdict rule_cyclotomic(const AbelianField& k) {
  const std::int64_t f = k.conductor();
  if (f <= 2 || static_cast<std::int64_t>(k.degree()) != euler_phi(f)) return std::nullopt;
  if (is_prime_power(f)) return make(1, 1, UnitIndexRule::cyclotomic_prime_power, k);
  return make(2, 1, UnitIndexRule::cyclotomic_composite, k);
}

MaybeVerdict rule_prime_power_conductor(const AbelianField& k) {
  if (!is_prime_power(k.conductor())) return std::nullopt;
  return make(1, 1, UnitIndexRule::prime_power_conductor, k);
}

MaybeVerdict rule_decomposable(const AbelianField& k) {
  auto parts = prime_power_decomposition(k);
  if (!parts || parts->size() < 2) return std::nullopt;
  const auto imaginary = std::count_if(parts->begin(), parts->end(), [](const auto& f) { return is_cm(f); });
  if (imaginary == 0) throw InternalInconsistency("CM field decomposed into real factors only");
  if (imaginary == 1) return make(1, 1, UnitIndexRule::decomposable_one_imaginary, k);
  return make(2, 1, UnitIndexRule::decomposable_many_imaginary, k);
}

MaybeVerdict rule_biquadratic(const AbelianField& k) {
  if (!is_biquadratic(k)) return std::nullopt;
  const std::int64_t w = roots_of_unity_order(k);
  if (w % 8 == 0 || w == 12 || w == 24) {
    // Only Q(zeta_8) and Q(zeta_12), which the cyclotomic rule decides first.
    if (static_cast<std::int64_t>(k.degree()) != euler_phi(k.conductor()))
      throw InternalInconsistency("biquadratic field with w=" + std::to_string(w) + " is not cyclotomic");
  }
  return biquadratic_criterion(k);
}

MaybeVerdict rule_odd_prime_ramified(const AbelianField& k) {
  const auto plus = maximal_real_subfield(k);
  for (auto [p, e] : factorize(k.conductor())) {
    if (p == 2) continue;
    if (ramification_index(k, p) != ramification_index(plus, p))
      return make(1, 1, UnitIndexRule::odd_prime_ramified, k, true);
  }
  return std::nullopt;
}

// pi_m generates the prime above 2 of Q(zeta_{2^m})+, where 2 has ramification
// index 2^(m-2); pi_m O_K+ is a square iff e_2(K+) / 2^(m-2) is even.
MaybeVerdict rule_pi_not_square(const AbelianField& k) {
  const std::int64_t w = roots_of_unity_order(k);
  if (w % 4 != 0) return std::nullopt;
  std::int64_t two_part = 1;
  while (w % (2 * two_part) == 0) two_part *= 2;
  const auto e = static_cast<std::int64_t>(ramification_index(maximal_real_subfield(k), 2));
  if (e != two_part / 4) return std::nullopt;
  return make(1, 1, UnitIndexRule::pi_not_square, k, false);
}

MaybeVerdict rule_cyclic(const AbelianField& k) {
  if (!is_cyclic(k)) return std::nullopt;
  return make(1, std::nullopt, UnitIndexRule::cyclic, k);
}

MaybeVerdict rule_norm_from_cyclotomic(const AbelianField& k) {
  const std::int64_t f = k.conductor();
  if (f <= 2 || is_prime_power(f)) return std::nullopt;
  // L = Q(zeta_f) has Q(L) = 2 and W_L = mu_n.
  const std::int64_t n = f % 2 == 0 ? f : 2 * f;
  const auto gens = generators_of(k);
  std::int64_t s = 0;  // N_{L/K}(zeta_n) = zeta_n^s
  for (std::int64_t a = 1; a < n; ++a) {
    if (std::gcd(a, n) != 1) continue;
    const bool fixes_k = std::all_of(gens.begin(), gens.end(), [&](const auto& chi) {
      auto t = chi.exponent_at(a);
      return t && *t == 0;
    });
    if (fixes_k) s = (s + a) % n;
  }
  const std::int64_t w = roots_of_unity_order(k);
  if (s * (w / 2) % n == 0) return std::nullopt;
  return make(2, 1, UnitIndexRule::norm_from_cyclotomic, k);
}

using RuleFn = MaybeVerdict (*)(const AbelianField&);
constexpr RuleFn kCascade[] = {
    rule_imaginary_quadratic, rule_cyclotomic,         rule_prime_power_conductor, rule_decomposable,
    rule_biquadratic,         rule_odd_prime_ramified, rule_pi_not_square,         rule_cyclic,
    rule_norm_from_cyclotomic,
};

MaybeVerdict first_match(const AbelianField& k) {
  for (auto rule : kCascade)
    if (auto v = rule(k)) return v;
  return std::nullopt;
}

}  // namespace

std::vector<std::int64_t> odd_quadratic_discriminants(const AbelianField& k) {
  if (!is_biquadratic(k)) throw PreconditionViolated("odd_quadratic_discriminants: field is not biquadratic");
  std::vector<std::int64_t> out;
  for (const auto& chi : odd_characters(k)) out.push_back(-conductor(chi));
  std::sort(out.begin(), out.end(), [](auto a, auto b) { return -a < -b; });
  return out;
}

std::optional<UnitIndexVerdict> biquadratic_criterion(const AbelianField& k) {
  if (!is_biquadratic(k) || !is_cm(k)) return std::nullopt;
  const auto plus = maximal_real_subfield(k);
  const std::int64_t D = quadratic_discriminant(plus);
  const std::int64_t w = roots_of_unity_order(k);

  if (w % 4 == 2) {
    const std::int64_t d1 = odd_quadratic_discriminants(k).front();
    const auto a = ideal_sqrt_of_element(D, d1);
    if (!a) return make(1, 1, UnitIndexRule::biquadratic_essentially_ramified, k, true);
    if (is_principal(*a)) return make(2, 1, UnitIndexRule::biquadratic_square_principal, k, false);
    return make(1, 2, UnitIndexRule::biquadratic_square_nonprincipal, k, false);
  }
  if (w % 8 == 4) {
    // pi_2 = 2: (2) is an ideal square in K+ exactly when 2 ramifies.
    const auto s = split_prime(D, 2);
    if (s.kind != Splitting::ramified) return make(1, 1, UnitIndexRule::biquadratic_pi_not_square, k, false);
    if (is_principal(*s.ideal)) return make(2, 1, UnitIndexRule::biquadratic_pi_square_principal, k, false);
    return make(1, 2, UnitIndexRule::biquadratic_pi_square_nonprincipal, k, false);
  }
  if (w % 16 == 8) {
    // K = Q(zeta_8), K+ = Q(sqrt 2), pi_3 = 2 + sqrt 2. Its norm to Q is the
    // square root of the norm from Q(zeta_8); a prime norm means (pi_3) is prime.
    const Rational full = absolute_norm(pi_element(3));
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), full.get_num().get_mpz_t());
    if (full.get_den() != 1 || root * root != full.get_num())
      throw InternalInconsistency("norm of pi_3 from Q(zeta_8) is not a square");
    if (root.fits_slong_p() && is_prime(root.get_si()))
      return make(1, 1, UnitIndexRule::biquadratic_pi_not_square, k, false);
    throw InternalInconsistency("pi_3 does not generate a prime ideal of Q(sqrt 2)");
  }
  throw InternalInconsistency("biquadratic CM field with w=" + std::to_string(w));
}

UnitIndexVerdict hasse_unit_index(const AbelianField& k, std::optional<int> override_q) {
  if (!is_cm(k)) throw NotCM(describe(k) + " is not a CM-field");
  if (override_q) {
    if (*override_q != 1 && *override_q != 2) throw PreconditionViolated("unit index override must be 1 or 2");
    return make(*override_q, *override_q == 2 ? std::optional<int>(1) : std::nullopt, UnitIndexRule::user_override, k);
  }
  const auto reduced = two_primary_subfield(k);
  auto v = first_match(reduced);
  if (!v) throw Unsupported("no unit index rule applies to " + describe(k) + " (2-primary part " + describe(reduced) + ")");
  if (reduced == k || v->Q == 2 || v->kappa_order == 2) return *v;
  // Q = 1 on the 2-primary part. A kappa of 1 there does not transfer to K by
  // itself, so take kappa from a rule that applies to K directly.
  v->kappa_order = std::nullopt;
  if (auto direct = first_match(k)) {
    if (direct->Q != v->Q)
      throw InternalInconsistency("unit index rules disagree on " + describe(k) + ": " + rule_tag(v->rule) + " vs " +
                                  rule_tag(direct->rule));
    v->kappa_order = direct->kappa_order;
  }
  return *v;
}

std::vector<UnitIndexVerdict> matching_rules(const AbelianField& k) {
  if (!is_cm(k)) throw NotCM(describe(k) + " is not a CM-field");
  std::vector<UnitIndexVerdict> out;
  const auto reduced = two_primary_subfield(k);
  for (const auto* f : {&reduced, &k}) {
    for (auto rule : kCascade)
      if (auto v = rule(*f)) out.push_back(*v);
    if (auto v = biquadratic_criterion(*f)) out.push_back(*v);
    if (reduced == k) break;
  }
  return out;
}

MartinetReport martinet_pair(std::int64_t p) {
  if (!is_prime(p) || p % 8 != 1) throw PreconditionViolated("martinet_pair: p must be a prime = 1 mod 8");
  MartinetReport r;
  r.p = p;
  r.norm_epsilon = fundamental_unit_norm(8 * p);
  if (r.norm_epsilon == -1)
    throw PreconditionViolated("fundamental unit of Q(sqrt(" + std::to_string(2 * p) + ")) has norm -1");
  const auto k = compositum(quadratic_field(-4), quadratic_field(8 * p));
  const auto l = compositum(cyclotomic_field(8), quadratic_field(p));
  const auto vk = hasse_unit_index(k);
  const auto vl = hasse_unit_index(l);
  r.q_k = vk.Q;
  r.q_l = vl.Q;
  r.rule_k = vk.rule;
  r.rule_l = vl.rule;
  return r;
}

}  // namespace cmfield
