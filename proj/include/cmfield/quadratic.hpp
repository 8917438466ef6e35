#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cmfield {

/// Binary quadratic form a x^2 + b xy + c y^2.
struct QuadForm {
  std::int64_t a = 0, b = 0, c = 0;

  std::int64_t discriminant() const { return b * b - 4 * a * c; }
  friend bool operator==(const QuadForm&, const QuadForm&) = default;
  friend auto operator<=>(const QuadForm&, const QuadForm&) = default;
};

/// content * (a Z + (b + sqrt D)/2 Z), with b^2 = D mod 4a.
/// The primitive part (a, b) corresponds to the form (a, b, (b^2 - D)/4a).
struct QuadIdeal {
  std::int64_t D = 0;
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t content = 1;

  std::int64_t norm() const { return a * content * content; }
  friend bool operator==(const QuadIdeal&, const QuadIdeal&) = default;
};

std::string to_string(const QuadForm& f);
std::string to_string(const QuadIdeal& i);

/// Unit ideal of the maximal order of discriminant D.
QuadIdeal unit_ideal(std::int64_t D);
QuadForm form_of(const QuadIdeal& i);
QuadForm principal_form(std::int64_t D);

bool is_reduced(const QuadForm& f);
/// Reduced representative of the proper class of f.
QuadForm reduce(QuadForm f);
/// One reduction step for indefinite forms: (a,b,c) -> (c, b', .), b' = -b mod 2c.
QuadForm rho(const QuadForm& f);
/// The rho-cycle of a reduced indefinite form, starting at f.
std::vector<QuadForm> cycle_of(const QuadForm& reduced);
/// All reduced forms of discriminant D (sorted).
std::vector<QuadForm> reduced_forms(std::int64_t D);

enum class ClassGroupSense { wide, narrow };
std::int64_t class_number(std::int64_t D, ClassGroupSense sense = ClassGroupSense::wide);

/// Norm of the fundamental unit of Q(sqrt D), D > 0, from the period of the
/// continued fraction of (D mod 2 + sqrt D)/2.
int fundamental_unit_norm(std::int64_t D);
/// Length of that period.
std::int64_t continued_fraction_period(std::int64_t D);

bool is_principal(const QuadIdeal& i);

enum class Splitting { split, inert, ramified };
struct PrimeSplitting {
  Splitting kind;
  std::optional<QuadIdeal> ideal;  // a prime above p unless inert
};
PrimeSplitting split_prime(std::int64_t D, std::int64_t p);
std::string to_string(Splitting s);

/// If (n) = A^2 in the maximal order, the ideal A; nullopt when some prime
/// ideal divides n to an odd power.
std::optional<QuadIdeal> ideal_sqrt_of_element(std::int64_t D, std::int64_t n);

}  // namespace cmfield
