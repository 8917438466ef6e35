#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cmfield/characters.hpp"

namespace cmfield {

inline constexpr std::size_t kDefaultMaxDegree = 256;

/// An abelian number field, given extensionally by its character group X(K).
/// Every member is stored at modulus = conductor(K), sorted, so two equal
/// fields have identical representations.
class AbelianField {
 public:
  std::int64_t conductor() const { return conductor_; }
  std::size_t degree() const { return chars_.size(); }
  const std::vector<DirichletCharacter>& characters() const { return chars_; }

  /// Whether chi (at any modulus) belongs to X(K).
  bool contains(const DirichletCharacter& chi) const;

  friend bool operator==(const AbelianField& a, const AbelianField& b) {
    return a.conductor_ == b.conductor_ && a.chars_ == b.chars_;
  }

 private:
  AbelianField(std::int64_t conductor, std::vector<DirichletCharacter> chars)
      : conductor_(conductor), chars_(std::move(chars)) {}

  std::int64_t conductor_;
  std::vector<DirichletCharacter> chars_;

  friend AbelianField field_from_generators(const std::vector<DirichletCharacter>&, std::size_t);
};

/// Closure of the generators under the group law. DegreeBoundExceeded past max_degree.
AbelianField field_from_generators(const std::vector<DirichletCharacter>& gens,
                                   std::size_t max_degree = kDefaultMaxDegree);
AbelianField rational_field();
/// Q(zeta_m), with m = 2 mod 4 normalized to m/2.
AbelianField cyclotomic_field(std::int64_t m, std::size_t max_degree = kDefaultMaxDegree);
/// Q(sqrt d) for a fundamental discriminant d.
AbelianField quadratic_field(std::int64_t d);

/// Small generating set, greedily picked in sorted order.
std::vector<DirichletCharacter> generators_of(const AbelianField& k);

std::vector<DirichletCharacter> odd_characters(const AbelianField& k);
bool is_cm(const AbelianField& k);
AbelianField maximal_real_subfield(const AbelianField& k);
/// Order of the group of roots of unity in K (always even).
std::int64_t roots_of_unity_order(const AbelianField& k);

AbelianField compositum(const AbelianField& a, const AbelianField& b,
                        std::size_t max_degree = kDefaultMaxDegree);
AbelianField intersection(const AbelianField& a, const AbelianField& b);
bool is_subfield(const AbelianField& k, const AbelianField& l);

/// Fields of the projections of X(K) onto the prime-power parts of the
/// conductor, when X(K) is their direct product; nullopt otherwise.
std::optional<std::vector<AbelianField>> prime_power_decomposition(const AbelianField& k);

/// Field of the 2-Sylow subgroup of X(K).
AbelianField two_primary_subfield(const AbelianField& k);

/// Whether X(K) is cyclic.
bool is_cyclic(const AbelianField& k);
/// lcm of character orders.
std::int64_t character_exponent(const AbelianField& k);

/// Every subfield of K (subgroups of X(K)), sorted by degree then conductor.
std::vector<AbelianField> all_subfields(const AbelianField& k);

/// Kronecker discriminant of a quadratic field (degree 2 only).
std::int64_t quadratic_discriminant(const AbelianField& k);

/// Short human-readable description, e.g. "Q(zeta_20)" or "Q(sqrt(-23))".
std::string describe(const AbelianField& k);

}  // namespace cmfield
