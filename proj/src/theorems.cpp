#include "cmfield/theorems.hpp"

#include <algorithm>
#include <numeric>

#include "cmfield/errors.hpp"
#include "cmfield/fieldspec.hpp"
#include "cmfield/hminus.hpp"
#include "cmfield/parallel.hpp"
#include "cmfield/quadratic.hpp"
#include "cmfield/unitindex.hpp"

namespace cmfield {

std::string to_string(CheckVerdict v) {
  switch (v) {
    case CheckVerdict::pass: return "pass";
    case CheckVerdict::fail: return "fail";
    case CheckVerdict::vacuous: return "vacuous";
  }
  return "?";
}

namespace {

BigInt hminus(const AbelianField& k) { return minus_class_number(k).h_minus; }

bool divides(const BigInt& a, const BigInt& b) { return a != 0 && b % a == 0; }

CheckVerdict verdict_of(bool ok) { return ok ? CheckVerdict::pass : CheckVerdict::fail; }

std::string str(const BigInt& v) { return v.get_str(); }
std::string str(std::int64_t v) { return std::to_string(v); }

std::int64_t single_prime(std::int64_t n) {
  const auto f = factorize(n);
  return f.size() == 1 ? f.front().first : 0;
}

// chi restricted to the p-part (or, with keep = false, the prime-to-p part) of its modulus.
DirichletCharacter component(const DirichletCharacter& chi, std::int64_t p, bool keep) {
  std::vector<std::int64_t> e(chi.exponents());
  for (const auto& c : chi.group().components)
    if ((c.prime == p) != keep)
      for (std::size_t j = c.first_generator; j < c.first_generator + c.generator_count; ++j) e[j] = 0;
  return make_character(chi.modulus(), std::move(e));
}

struct V4Data {
  AbelianField l;
  std::int64_t D1, D2;  // the two imaginary quadratic subfields
};

V4Data v4_field(std::int64_t d1, std::int64_t d2) {
  if (d1 >= 0 || !is_fundamental_discriminant(d1) || !is_fundamental_discriminant(d2) || d1 == d2)
    throw NotV4CM("need distinct fundamental discriminants with d1 < 0, got " + str(d1) + ", " + str(d2));
  auto l = compositum(quadratic_field(d1), quadratic_field(d2));
  if (l.degree() != 4) throw NotV4CM("Q(sqrt d1, sqrt d2) is not biquadratic");
  const auto odd = odd_characters(l);
  if (odd.size() != 2) throw NotV4CM("field does not have two imaginary quadratic subfields");
  std::int64_t a = -conductor(odd[0]), b = -conductor(odd[1]);
  if (b == d1) std::swap(a, b);
  return {l, a, b};
}

std::int64_t quadratic_w(std::int64_t d) { return d == -4 ? 4 : d == -3 ? 6 : 2; }

}  // namespace

CheckReport check_masley(std::int64_t m, std::int64_t n, std::size_t max_degree) {
  if (m < 1 || n < 1) throw PreconditionViolated("check_masley: m and n must be positive");
  CheckReport r;
  r.name = "masley";
  r.inputs = {"zeta:" + str(m), "zeta:" + str(m * n)};
  r.statement = "h-(Q(zeta_m)) | h-(Q(zeta_mn))";
  const auto k = cyclotomic_field(m, max_degree);
  const auto l = cyclotomic_field(m * n, max_degree);
  if (!is_cm(k)) {
    r.verdict = CheckVerdict::vacuous;
    r.add("reason", describe(k) + " is not CM");
    return r;
  }
  const BigInt hk = hminus(k), hl = hminus(l);
  r.add("h_minus_K", str(hk));
  r.add("h_minus_L", str(hl));
  r.verdict = verdict_of(divides(hk, hl));
  return r;
}

CheckReport check_odd_degree(const AbelianField& k, const AbelianField& l) {
  if (!is_subfield(k, l)) throw NotSubfield(describe(k) + " is not contained in " + describe(l));
  const std::size_t index = l.degree() / k.degree();
  if (index % 2 == 0) throw EvenIndex("(L:K) = " + std::to_string(index) + " is even");
  CheckReport r;
  r.name = "odd-degree";
  r.inputs = {spec_of(k), spec_of(l)};
  r.statement = "(L:K) odd implies h-(K) | h-(L), and p | h-(L) for p | h-(K), p not dividing (L:K)";
  const BigInt hk = hminus(k), hl = hminus(l);
  r.add("index", std::to_string(index));
  r.add("h_minus_K", str(hk));
  r.add("h_minus_L", str(hl));
  bool ok = divides(hk, hl);
  std::string checked;
  BigInt rest = hk;
  for (unsigned long p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    if (index % p == 0) continue;
    checked += (checked.empty() ? "" : ",") + std::to_string(p);
    ok = ok && hl % p == 0;
  }
  r.add("primes_checked", checked);
  r.verdict = verdict_of(ok);
  return r;
}

CheckReport check_v4(std::int64_t d1, std::int64_t d2) {
  const auto v = v4_field(d1, d2);
  CheckReport r;
  r.name = "v4";
  r.inputs = {"quad:" + str(d1), "quad:" + str(d2)};
  r.statement = "h-(L) = Q(L)/(Q1 Q2) * w_L/(w1 w2) * h-(K1) h-(K2)";
  const auto report = minus_class_number(v.l);
  const std::int64_t w1 = quadratic_w(v.D1), w2 = quadratic_w(v.D2);
  const std::int64_t h1 = class_number(v.D1), h2 = class_number(v.D2);
  const Rational rhs = ratio(report.Q * report.w, w1 * w2) * h1 * h2;
  r.add("K1", "quad:" + str(v.D1));
  r.add("K2", "quad:" + str(v.D2));
  r.add("Q_L", std::to_string(report.Q));
  r.add("unit_index_rule", rule_tag(report.verdict.rule));
  r.add("w_L", str(report.w));
  r.add("w1", str(w1));
  r.add("w2", str(w2));
  r.add("h1", str(h1));
  r.add("h2", str(h2));
  r.add("lhs", str(report.h_minus));
  r.add("rhs", to_string(rhs));
  r.verdict = verdict_of(Rational(report.h_minus) == rhs);
  return r;
}

Rational derived_kuroda_q(std::int64_t d1, std::int64_t d2) {
  const auto v = v4_field(d1, d2);
  const auto verdict = hasse_unit_index(v.l);
  const Rational q = ratio(2 * verdict.Q * roots_of_unity_order(v.l), quadratic_w(v.D1) * quadratic_w(v.D2));
  if (q != 1 && q != 2 && q != 4) throw InternalInconsistency("derived unit index " + to_string(q) + " not in {1,2,4}");
  return q;
}

CheckReport check_metsankyla(const AbelianField& l1, const AbelianField& l2, std::size_t max_degree) {
  const std::int64_t p = single_prime(l1.conductor()), q = single_prime(l2.conductor());
  if (p == 0 || q == 0 || p == q)
    throw NotPrimePowerConductors("conductors " + str(l1.conductor()) + " and " + str(l2.conductor()) +
                                  " are not powers of distinct primes");
  if (!is_cm(l1) || !is_cm(l2)) throw NotCM("check_metsankyla: both fields must be CM");
  CheckReport r;
  r.name = "metsankyla";
  r.inputs = {spec_of(l1), spec_of(l2)};
  r.statement = "h-(L1 L2) = h-(L1) h-(L2) T1 T2 with T1 = h-(L1 L2+)/h-(L1), T2 = h-(L2 L1+)/h-(L2) integral";
  const auto l = compositum(l1, l2, max_degree);
  const auto m1 = compositum(l1, maximal_real_subfield(l2), max_degree);
  const auto m2 = compositum(l2, maximal_real_subfield(l1), max_degree);
  const auto rl = minus_class_number(l), r1 = minus_class_number(l1), r2 = minus_class_number(l2);
  const auto rm1 = minus_class_number(m1), rm2 = minus_class_number(m2);
  const Rational t1 = Rational(rm1.h_minus) / r1.h_minus;
  const Rational t2 = Rational(rm2.h_minus) / r2.h_minus;

  // T_i from the characters odd on L_i and even, nontrivial on the other factor.
  auto partial = [&](std::int64_t own) {
    std::vector<DirichletCharacter> x;
    for (const auto& chi : odd_characters(l)) {
      const auto a = component(chi, own, true), b = component(chi, own, false);
      if (is_odd(a) && !is_odd(b) && !b.is_principal()) x.push_back(chi);
    }
    return std::pair{minus_partial_product(x), x.size()};
  };
  const auto [x1, n1] = partial(p);
  const auto [x2, n2] = partial(q);
  const Rational t1_chars = ratio(rm1.Q * rm1.w, r1.Q * r1.w) * x1;
  const Rational t2_chars = ratio(rm2.Q * rm2.w, r2.Q * r2.w) * x2;

  r.add("degree_L", std::to_string(l.degree()));
  r.add("h_minus_L", str(rl.h_minus));
  r.add("h_minus_L1", str(r1.h_minus));
  r.add("h_minus_L2", str(r2.h_minus));
  r.add("h_minus_L1L2+", str(rm1.h_minus));
  r.add("h_minus_L2L1+", str(rm2.h_minus));
  r.add("T1", to_string(t1));
  r.add("T2", to_string(t2));
  r.add("X1_size", std::to_string(n1));
  r.add("X2_size", std::to_string(n2));
  r.add("T1_from_characters", to_string(t1_chars));
  r.add("T2_from_characters", to_string(t2_chars));
  const bool ok = is_integer(t1) && is_integer(t2) && Rational(rl.h_minus) == r1.h_minus * r2.h_minus * t1 * t2 &&
                  t1 == t1_chars && t2 == t2_chars;
  r.verdict = verdict_of(ok);
  return r;
}

CheckReport check_counterexample_family1(std::int64_t d1, std::int64_t d2) {
  CheckReport r;
  r.name = "counterexample-1";
  r.inputs = {"quad:" + str(d1), "quad:" + str(d2)};
  r.statement = "h-(Q(sqrt(d1 d2))) does not divide h-(Q(sqrt d1, sqrt d2))";
  const bool prime_disc = d1 == -4 || d1 == -8 || (d1 < 0 && mod(d1, 4) == 1 && is_prime(-d1));
  if (!prime_disc) throw PreconditionViolated("family 1 needs d1 in {-4, -8, -q}, got " + str(d1));
  if (d2 <= 0 || !is_fundamental_discriminant(d2) || std::gcd(d1, d2) != 1)
    throw PreconditionViolated("family 1 needs d2 > 0 fundamental and coprime to d1, got " + str(d2));
  const auto k = quadratic_field(d1 * d2);
  const auto l = compositum(quadratic_field(d1), quadratic_field(d2));
  const BigInt hk = hminus(k), hl = hminus(l);
  r.add("K", "quad:" + str(d1 * d2));
  r.add("h_minus_K", str(hk));
  r.add("h_minus_L", str(hl));
  r.verdict = verdict_of(!divides(hk, hl));
  return r;
}

CheckReport check_counterexample_family2(std::int64_t m) {
  CheckReport r;
  r.name = "counterexample-2";
  r.inputs = {"m=" + str(m)};
  r.statement = "h-(Q(sqrt(-2m))) does not divide h-(Q(i, sqrt(2m))) when (2, sqrt(2m)) is not principal";
  if (m < 1) throw PreconditionViolated("family 2 needs m >= 1");
  const std::int64_t d2 = 8 * m;
  if (!is_fundamental_discriminant(d2)) {
    r.verdict = CheckVerdict::vacuous;
    r.add("reason", str(d2) + " is not a fundamental discriminant");
    return r;
  }
  const auto b = split_prime(d2, 2).ideal;
  const bool principal = is_principal(*b);
  r.add("ideal", to_string(*b));
  r.add("ideal_principal", principal ? "true" : "false");
  if (principal) {
    r.verdict = CheckVerdict::vacuous;
    r.add("reason", "(2, sqrt(2m)) is principal");
    return r;
  }
  const auto k = quadratic_field(-d2);
  const auto l = compositum(quadratic_field(-4), quadratic_field(d2));
  const BigInt hk = hminus(k), hl = hminus(l);
  r.add("K", "quad:" + str(-d2));
  r.add("h_minus_K", str(hk));
  r.add("h_minus_L", str(hl));
  r.verdict = verdict_of(!divides(hk, hl));
  return r;
}

CheckReport check_martinet(std::int64_t p) {
  CheckReport r;
  r.name = "martinet";
  r.inputs = {"p=" + str(p)};
  r.statement = "Q(Q(i, sqrt 2p)) = 2 and Q(Q(i, sqrt 2, sqrt p)) = 1 when N(eps_2p) = +1";
  if (!is_prime(p) || p % 8 != 1) throw PreconditionViolated("martinet: p must be a prime = 1 mod 8");
  const int n = fundamental_unit_norm(8 * p);
  r.add("norm_epsilon", std::to_string(n));
  if (n == -1) {
    r.verdict = CheckVerdict::vacuous;
    return r;
  }
  const auto m = martinet_pair(p);
  r.add("Q_K", std::to_string(m.q_k));
  r.add("Q_L", std::to_string(m.q_l));
  r.add("rule_K", rule_tag(m.rule_k));
  r.add("rule_L", rule_tag(m.rule_l));
  r.verdict = verdict_of(m.holds());
  return r;
}

namespace {

CheckReport vacuous_report(std::string name, std::vector<std::string> inputs, const std::exception& e) {
  CheckReport r;
  r.name = std::move(name);
  r.inputs = std::move(inputs);
  r.verdict = CheckVerdict::vacuous;
  r.add("reason", e.what());
  return r;
}

}  // namespace

std::vector<CheckReport> masley_sweep(const SweepOptions& opt) {
  std::vector<std::int64_t> ms;
  for (std::int64_t m = 3; m <= opt.max; ++m)
    if (m % 4 != 2) ms.push_back(m);
  const auto h = parallel_map(ms, [&](std::int64_t m) { return hminus(cyclotomic_field(m, opt.max_degree)); },
                              opt.threads);
  std::vector<CheckReport> out;
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      if (ms[j] % ms[i] != 0) continue;
      CheckReport r;
      r.name = "masley";
      r.inputs = {"zeta:" + str(ms[i]), "zeta:" + str(ms[j])};
      r.statement = "h-(Q(zeta_m)) | h-(Q(zeta_mn))";
      r.add("h_minus_K", str(h[i]));
      r.add("h_minus_L", str(h[j]));
      r.verdict = verdict_of(divides(h[i], h[j]));
      out.push_back(std::move(r));
    }
  return out;
}

std::vector<CheckReport> v4_sweep(const SweepOptions& opt) {
  std::vector<std::int64_t> discs;
  for (std::int64_t d = -3; d >= -opt.max; --d)
    if (is_fundamental_discriminant(d)) discs.push_back(d);
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::size_t i = 0; i < discs.size(); ++i)
    for (std::size_t j = i + 1; j < discs.size(); ++j)
      if (discs[i] * discs[j] <= opt.max && std::gcd(discs[i], discs[j]) == 1) pairs.emplace_back(discs[i], discs[j]);
  return parallel_map(pairs, [](const auto& pr) {
    try {
      return check_v4(pr.first, pr.second);
    } catch (const Unsupported& e) {
      return vacuous_report("v4", {"quad:" + str(pr.first), "quad:" + str(pr.second)}, e);
    }
  }, opt.threads);
}

std::vector<CheckReport> metsankyla_sweep(const SweepOptions& opt, std::int64_t conductor_bound) {
  struct Entry {
    std::int64_t prime;
    AbelianField field;
  };
  std::vector<Entry> fields;
  for (std::int64_t q = 3; q <= conductor_bound; ++q) {
    const std::int64_t p = single_prime(q);
    if (p == 0 || q == 2) continue;
    for (const auto& k : all_subfields(cyclotomic_field(q, opt.max_degree)))
      if (k.conductor() == q && is_cm(k)) fields.push_back({p, k});
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < fields.size(); ++i)
    for (std::size_t j = i + 1; j < fields.size(); ++j) {
      if (fields[i].prime == fields[j].prime) continue;
      if (fields[i].field.degree() * fields[j].field.degree() > static_cast<std::size_t>(opt.max)) continue;
      pairs.emplace_back(i, j);
    }
  return parallel_map(pairs, [&](const auto& pr) {
    return check_metsankyla(fields[pr.first].field, fields[pr.second].field, opt.max_degree);
  }, opt.threads);
}

std::vector<CheckReport> counterexample_sweep(const SweepOptions& opt) {
  std::vector<std::int64_t> d2s;
  for (std::int64_t d = 5; d <= opt.max; ++d)
    if (d % 2 == 1 && is_fundamental_discriminant(d) && class_number(-4 * d) % 2 == 0) d2s.push_back(d);
  return parallel_map(d2s, [](std::int64_t d) { return check_counterexample_family1(-4, d); }, opt.threads);
}

std::vector<CheckReport> martinet_sweep(const SweepOptions& opt) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 17; p <= opt.max; p += 8)
    if (is_prime(p)) ps.push_back(p);
  return parallel_map(ps, check_martinet, opt.threads);
}

std::vector<CheckReport> odd_degree_sweep(const SweepOptions& opt) {
  std::vector<std::int64_t> qs;
  for (std::int64_t q = 3; q <= opt.max; q += 4)
    if (is_prime(q)) qs.push_back(q);
  return parallel_map(qs, [&](std::int64_t q) {
    return check_odd_degree(quadratic_field(-q), cyclotomic_field(q, opt.max_degree));
  }, opt.threads);
}

}  // namespace cmfield
