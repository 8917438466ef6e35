#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cmfield/arith.hpp"
#include "cmfield/cyclotomic.hpp"

namespace cmfield {

/// Discrete logarithms on (Z/mZ)* w.r.t. the canonical generators.
/// Built once per modulus by walking all exponent vectors; read-only after.
class DlogTable {
 public:
  explicit DlogTable(std::int64_t m);

  const UnitGroupStructure& group() const { return group_; }
  std::int64_t modulus() const { return group_.modulus; }
  /// Exponent vector of a, or nullptr when gcd(a, m) > 1.
  const std::int64_t* log(std::int64_t a) const;

 private:
  UnitGroupStructure group_;
  std::vector<std::int64_t> logs_;  // modulus * rank, flat
  std::vector<bool> unit_;
};

std::shared_ptr<const DlogTable> dlog_table(std::int64_t m);

class DirichletCharacter {
 public:
  std::int64_t modulus() const { return table_->modulus(); }
  const std::vector<std::int64_t>& exponents() const { return exponents_; }
  std::int64_t order() const { return order_; }
  const UnitGroupStructure& group() const { return table_->group(); }

  /// chi(a) = zeta_order^t; nullopt when gcd(a, m) > 1.
  std::optional<std::int64_t> exponent_at(std::int64_t a) const;
  bool is_principal() const { return order_ == 1; }

  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.modulus() == b.modulus() && a.exponents_ == b.exponents_;
  }
  friend auto operator<=>(const DirichletCharacter& a, const DirichletCharacter& b) {
    if (auto c = a.modulus() <=> b.modulus(); c != 0) return c;
    return a.exponents_ <=> b.exponents_;
  }

 private:
  DirichletCharacter(std::shared_ptr<const DlogTable> table, std::vector<std::int64_t> exponents);

  std::shared_ptr<const DlogTable> table_;
  std::vector<std::int64_t> exponents_;
  std::int64_t order_ = 1;
  std::int64_t group_exponent_ = 1;

  friend DirichletCharacter make_character(std::int64_t m, std::vector<std::int64_t> exponents);
};

/// Exponents are reduced mod the generator orders; LengthMismatch on wrong arity.
DirichletCharacter make_character(std::int64_t m, std::vector<std::int64_t> exponents);
DirichletCharacter principal_character(std::int64_t m);
/// All characters mod m, sorted.
std::vector<DirichletCharacter> all_characters(std::int64_t m);

CycNumber evaluate(const DirichletCharacter& chi, std::int64_t a);
std::int64_t conductor(const DirichletCharacter& chi);
/// chi(-1).
int parity(const DirichletCharacter& chi);
inline bool is_odd(const DirichletCharacter& chi) { return parity(chi) == -1; }

/// Same character viewed mod n. Requires m | n, or conductor(chi) | n.
DirichletCharacter change_modulus(const DirichletCharacter& chi, std::int64_t n);
/// The primitive character inducing chi (modulus = conductor).
DirichletCharacter primitive(const DirichletCharacter& chi);

DirichletCharacter char_mul(const DirichletCharacter& a, const DirichletCharacter& b);
DirichletCharacter char_pow(const DirichletCharacter& chi, std::int64_t k);
DirichletCharacter char_inverse(const DirichletCharacter& chi);

/// Kronecker character (d / .) of a fundamental discriminant, at modulus |d|.
DirichletCharacter kronecker_character(std::int64_t d);

/// Orbits of chi -> chi^k, gcd(k, ord chi) = 1. Throws NotClosed if S is not
/// closed under this action. Orbits are listed by their smallest member.
std::vector<std::vector<DirichletCharacter>> galois_orbits(const std::vector<DirichletCharacter>& s);

/// "f=<m>:e=<e1,...,ek>"
std::string encode(const DirichletCharacter& chi);
DirichletCharacter decode_character(std::string_view text);

}  // namespace cmfield
