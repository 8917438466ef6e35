#include <gtest/gtest.h>

#include <set>

#include "cmfield/errors.hpp"
#include "cmfield/quadratic.hpp"
#include "cmfield/unitindex.hpp"

using namespace cmfield;

namespace {

AbelianField biquad(std::int64_t d1, std::int64_t d2) { return compositum(quadratic_field(d1), quadratic_field(d2)); }

bool prime_power(std::int64_t m) { return factorize(m).size() == 1; }

std::vector<AbelianField> cm_subfields_up_to(std::int64_t bound) {
  std::vector<AbelianField> out;
  for (std::int64_t m = 3; m <= bound; ++m) {
    if (m % 4 == 2) continue;
    for (const auto& k : all_subfields(cyclotomic_field(m)))
      if (k.conductor() == m && is_cm(k)) out.push_back(k);
  }
  return out;
}

}  // namespace

TEST(UnitIndex, CyclotomicFields) {
  for (std::int64_t m = 3; m <= 100; ++m) {
    if (m % 4 == 2) continue;
    const auto v = hasse_unit_index(cyclotomic_field(m));
    EXPECT_EQ(v.Q, prime_power(m) ? 1 : 2) << m;
  }
  EXPECT_EQ(hasse_unit_index(cyclotomic_field(16)).rule, UnitIndexRule::cyclotomic_prime_power);
  EXPECT_EQ(hasse_unit_index(cyclotomic_field(15)).rule, UnitIndexRule::cyclotomic_composite);
}

TEST(UnitIndex, BiquadraticExamples) {
  const auto a = hasse_unit_index(biquad(-4, 136));
  EXPECT_EQ(a.Q, 2);
  EXPECT_EQ(a.kappa_order, 1);
  EXPECT_EQ(a.rule, UnitIndexRule::biquadratic_pi_square_principal);

  const auto b = hasse_unit_index(biquad(-4, 40));
  EXPECT_EQ(b.Q, 1);
  EXPECT_EQ(b.kappa_order, 2);
  EXPECT_EQ(b.rule, UnitIndexRule::biquadratic_pi_square_nonprincipal);

  const auto c = hasse_unit_index(biquad(8, -3));
  EXPECT_EQ(c.Q, 1);
  EXPECT_EQ(c.kappa_order, 1);
  const auto c5 = biquadratic_criterion(biquad(8, -3));
  ASSERT_TRUE(c5);
  EXPECT_EQ(c5->rule, UnitIndexRule::biquadratic_essentially_ramified);
  EXPECT_EQ(c5->Q, 1);
  EXPECT_EQ(c5->kappa_order, 1);

  const auto d = hasse_unit_index(biquad(-4, 5));
  EXPECT_EQ(d.Q, 1);
  EXPECT_EQ(d.rule, UnitIndexRule::decomposable_one_imaginary);
}

TEST(UnitIndex, BiquadraticCriterionOnCyclotomicQuartics) {
  const auto z8 = biquadratic_criterion(cyclotomic_field(8));
  ASSERT_TRUE(z8);
  EXPECT_EQ(z8->Q, 1);
  EXPECT_EQ(z8->rule, UnitIndexRule::biquadratic_pi_not_square);
  const auto z12 = biquadratic_criterion(cyclotomic_field(12));
  ASSERT_TRUE(z12);
  EXPECT_EQ(z12->Q, 2);
  EXPECT_EQ(z12->rule, UnitIndexRule::biquadratic_pi_square_principal);
  EXPECT_FALSE(biquadratic_criterion(cyclotomic_field(5)));
}

TEST(UnitIndex, EssentialRamificationDoesNotDependOnTheOddDiscriminant) {
  for (std::int64_t d1 = -3; d1 >= -60; --d1) {
    for (std::int64_t d2 = 5; d2 <= 60; ++d2) {
      if (!is_fundamental_discriminant(d1) || !is_fundamental_discriminant(d2)) continue;
      const auto k = biquad(d1, d2);
      if (k.degree() != 4 || roots_of_unity_order(k) % 4 != 2) continue;
      const std::int64_t D = quadratic_discriminant(maximal_real_subfield(k));
      const auto ds = odd_quadratic_discriminants(k);
      ASSERT_EQ(ds.size(), 2u);
      const auto a0 = ideal_sqrt_of_element(D, ds[0]);
      const auto a1 = ideal_sqrt_of_element(D, ds[1]);
      EXPECT_EQ(a0.has_value(), a1.has_value()) << d1 << " " << d2;
      if (a0 && a1) EXPECT_EQ(is_principal(*a0), is_principal(*a1)) << d1 << " " << d2;
    }
  }
}

TEST(UnitIndex, InvariantsOnAllCmSubfieldsUpToConductor60) {
  for (const auto& k : cm_subfields_up_to(60)) {
    const auto v = hasse_unit_index(k);
    if (v.Q == 2) EXPECT_EQ(v.kappa_order, 1) << describe(k);
    // Overlapping rules agree on Q.
    for (const auto& r : matching_rules(k)) EXPECT_EQ(r.Q, v.Q) << describe(k) << " " << rule_tag(r.rule);
    // The 2-primary reduction does not change Q.
    EXPECT_EQ(hasse_unit_index(two_primary_subfield(k)).Q, v.Q) << describe(k);
    if (v.rule == UnitIndexRule::decomposable_one_imaginary || v.rule == UnitIndexRule::decomposable_many_imaginary)
      EXPECT_EQ(v.kappa_order, 1);
  }
}

TEST(UnitIndex, BiquadraticRulesAgreeWithDecomposition) {
  // Q(sqrt d1, sqrt d2) with prime-power conductors: both the biquadratic
  // criterion and the decomposition rule apply.
  int both = 0;
  for (std::int64_t d1 : {-3, -4, -7, -8, -11, -19, -23}) {
    for (std::int64_t d2 : {5, 8, 13, 17, 29, 37, 41}) {
      const auto k = biquad(d1, d2);
      if (k.degree() != 4) continue;
      const auto crit = biquadratic_criterion(k);
      const auto v = hasse_unit_index(k);
      if (!crit) continue;
      EXPECT_EQ(crit->Q, v.Q) << d1 << " " << d2;
      ++both;
    }
  }
  EXPECT_GT(both, 20);
}

TEST(UnitIndex, OverrideAndErrors) {
  const auto v = hasse_unit_index(biquad(-4, 5), 2);
  EXPECT_EQ(v.Q, 2);
  EXPECT_EQ(v.rule, UnitIndexRule::user_override);
  EXPECT_THROW(hasse_unit_index(quadratic_field(5)), NotCM);
  EXPECT_THROW(hasse_unit_index(cyclotomic_field(5), 3), PreconditionViolated);
}

TEST(UnitIndex, MartinetPairs) {
  const auto r = martinet_pair(17);
  EXPECT_EQ(r.q_k, 2);
  EXPECT_EQ(r.q_l, 1);
  EXPECT_EQ(r.norm_epsilon, 1);
  EXPECT_EQ(r.rule_l, UnitIndexRule::decomposable_one_imaginary);
  EXPECT_THROW(martinet_pair(13), PreconditionViolated);
  for (std::int64_t p : {41, 73}) {
    if (fundamental_unit_norm(8 * p) == -1) {
      EXPECT_THROW(martinet_pair(p), PreconditionViolated);
    } else {
      EXPECT_TRUE(martinet_pair(p).holds()) << p;
    }
  }
}

TEST(UnitIndex, RuleTagsAreDistinct) {
  std::set<std::string> tags;
  for (int r = 0; r <= static_cast<int>(UnitIndexRule::norm_from_cyclotomic); ++r)
    tags.insert(rule_tag(static_cast<UnitIndexRule>(r)));
  EXPECT_EQ(tags.size(), static_cast<std::size_t>(UnitIndexRule::norm_from_cyclotomic) + 1);
}
