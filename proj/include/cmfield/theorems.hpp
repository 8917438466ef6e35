#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cmfield/fieldlat.hpp"

namespace cmfield {

enum class CheckVerdict { pass, fail, vacuous };
std::string to_string(CheckVerdict v);

struct CheckReport {
  std::string name;
  std::vector<std::string> inputs;  // field specs or parameters
  std::vector<std::pair<std::string, std::string>> quantities;
  CheckVerdict verdict = CheckVerdict::vacuous;
  std::string statement;

  bool failed() const { return verdict == CheckVerdict::fail; }
  void add(std::string key, std::string value) { quantities.emplace_back(std::move(key), std::move(value)); }
};

/// h^-(Q(zeta_m)) | h^-(Q(zeta_mn)).
CheckReport check_masley(std::int64_t m, std::int64_t n, std::size_t max_degree = kDefaultMaxDegree);

/// K in L, (L:K) odd: h^-(K) | h^-(L), and p | h^-(L) for each prime p | h^-(K)
/// not dividing (L:K). Throws NotSubfield, EvenIndex.
CheckReport check_odd_degree(const AbelianField& k, const AbelianField& l);

/// L = Q(sqrt d1, sqrt d2), d1 < 0:
///   h^-(L) = Q(L)/(Q1 Q2) * w_L/(w1 w2) * h(K1) h(K2)
/// over the two imaginary quadratic subfields K1, K2. Throws NotV4CM.
CheckReport check_v4(std::int64_t d1, std::int64_t d2);

/// 2 Q(L) w_L / (w1 w2) for the field of check_v4; asserted to lie in {1, 2, 4}.
Rational derived_kuroda_q(std::int64_t d1, std::int64_t d2);

/// L1, L2 CM with conductors powers of distinct primes, L = L1 L2:
///   h^-(L) = h^-(L1) h^-(L2) T1 T2, T1 = h^-(L1 L2+)/h^-(L1), T2 likewise,
/// with T1, T2 integral and T1 recomputed from the characters chi1^x chi2^y,
/// x odd, y even and nonzero. Throws NotPrimePowerConductors.
CheckReport check_metsankyla(const AbelianField& l1, const AbelianField& l2,
                             std::size_t max_degree = kDefaultMaxDegree);

/// Family 1: K = Q(sqrt(d1 d2)), L = Q(sqrt d1, sqrt d2) with d1 in {-4, -8, -q}, d2 > 0.
/// Family 2: K = Q(sqrt(-2m)), L = Q(i, sqrt(2m)), needs (2, sqrt(2m)) non-principal.
/// Pass iff h^-(K) does not divide h^-(L). Vacuous when the family's hypotheses fail.
CheckReport check_counterexample_family1(std::int64_t d1, std::int64_t d2);
CheckReport check_counterexample_family2(std::int64_t m);

/// Q(Q(i, sqrt 2p)) = 2 and Q(Q(i, sqrt 2, sqrt p)) = 1; vacuous when N(eps_2p) = -1.
CheckReport check_martinet(std::int64_t p);

struct SweepOptions {
  std::int64_t max = 0;
  unsigned threads = 1;
  std::size_t max_degree = kDefaultMaxDegree;
};

/// All m | M <= max, 3 <= m < M, m, M != 2 mod 4.
std::vector<CheckReport> masley_sweep(const SweepOptions& opt);
/// Coprime negative fundamental d1 > d2 with |d1 d2| <= max. Unsupported fields are vacuous.
std::vector<CheckReport> v4_sweep(const SweepOptions& opt);
/// CM subfields of Q(zeta_q) for prime powers q <= conductor_bound, pairs of
/// distinct primes with compositum degree <= opt.max.
std::vector<CheckReport> metsankyla_sweep(const SweepOptions& opt, std::int64_t conductor_bound = 32);
/// d1 = -4, odd fundamental 0 < d2 <= max with h(-4 d2) even.
std::vector<CheckReport> counterexample_sweep(const SweepOptions& opt);
/// Primes p = 1 mod 8 up to max.
std::vector<CheckReport> martinet_sweep(const SweepOptions& opt);
/// Q(sqrt -q) in Q(zeta_q) for primes q = 3 mod 4 up to max.
std::vector<CheckReport> odd_degree_sweep(const SweepOptions& opt);

}  // namespace cmfield
