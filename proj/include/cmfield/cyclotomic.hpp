#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cmfield/arith.hpp"

namespace cmfield {

/// Integer coefficients of the e-th cyclotomic polynomial, constant term first.
/// Computed by exact division of x^e - 1 by Phi_d for the proper divisors d.
std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t e);

/// Shared per-level data: Phi_e and its degree. Obtained through
/// cyclotomic_context(), which builds each level once.
struct CycContext {
  std::int64_t level;
  std::int64_t degree;                  // phi(level)
  std::vector<std::int64_t> phi_coeffs;  // monic, length degree + 1
  std::vector<std::pair<std::size_t, std::int64_t>> phi_terms;  // nonzero lower terms
};

std::shared_ptr<const CycContext> cyclotomic_context(std::int64_t e);

/// Element of Q(zeta_e) in the power basis 1, zeta, ..., zeta^(phi(e)-1),
/// stored as integer numerators over one positive common denominator.
class CycNumber {
 public:
  /// Zero at level e.
  explicit CycNumber(std::int64_t level);
  CycNumber(std::int64_t level, const Rational& constant);
  /// From rational coordinates (length phi(level)).
  CycNumber(std::int64_t level, const std::vector<Rational>& coords);

  static CycNumber zeta(std::int64_t level);
  /// zeta_e^k for any integer k.
  static CycNumber zeta_power(std::int64_t level, std::int64_t k);
  /// Sum of c_j * zeta^j over j in [0, level); reduced mod Phi_e.
  static CycNumber from_exponent_sums(std::int64_t level, std::vector<BigInt> sums, BigInt den = 1);

  std::int64_t level() const { return ctx_->level; }
  std::int64_t degree() const { return ctx_->degree; }
  Rational coeff(std::size_t i) const;
  std::vector<Rational> coeffs() const;
  const std::vector<BigInt>& numerators() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const;
  std::optional<Rational> as_rational() const;

  CycNumber operator-() const;
  CycNumber& operator+=(const CycNumber& o);
  CycNumber& operator-=(const CycNumber& o);
  CycNumber& operator*=(const CycNumber& o);
  CycNumber& operator/=(const CycNumber& o);
  CycNumber& operator*=(const Rational& r);

  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(CycNumber a, const CycNumber& b) { return a *= b; }
  friend CycNumber operator/(CycNumber a, const CycNumber& b) { return a /= b; }
  friend CycNumber operator*(CycNumber a, const Rational& r) { return a *= r; }
  friend CycNumber operator*(const Rational& r, CycNumber a) { return a *= r; }

  friend bool operator==(const CycNumber& a, const CycNumber& b);
  friend bool operator==(const CycNumber& a, const Rational& r);

  std::string to_string() const;

 private:
  CycNumber(std::shared_ptr<const CycContext> ctx, std::vector<BigInt> num, BigInt den);
  void normalize();
  void require_same_level(const CycNumber& o, const char* op) const;

  std::shared_ptr<const CycContext> ctx_;
  std::vector<BigInt> num_;
  BigInt den_;

  friend CycNumber galois_apply(std::int64_t k, const CycNumber& x);
  friend CycNumber lift(const CycNumber& x, std::int64_t new_level);
};

enum class CycOp { add, sub, mul, div };
CycNumber cyc_arith(const CycNumber& a, const CycNumber& b, CycOp op);

/// sigma_k : zeta -> zeta^k. Throws NotCoprime unless gcd(k, e) = 1.
CycNumber galois_apply(std::int64_t k, const CycNumber& x);

/// Image under Q(zeta_e) -> Q(zeta_E), e | E.
CycNumber lift(const CycNumber& x, std::int64_t new_level);

/// Product of all conjugates; certified rational.
Rational absolute_norm(const CycNumber& x);

/// 2 + zeta + zeta^-1 at level 2^m.
CycNumber pi_element(int m);

}  // namespace cmfield
