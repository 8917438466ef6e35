#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cmfield/characters.hpp"
#include "cmfield/fieldlat.hpp"

namespace cmfield {

/// Parsed field description.
///
///   spec  := atom ('*' atom)*
///   atom  := 'zeta:' m | 'quad:' d | 'chars:' char ('+' char)*
///   char  := 'f=' m ':e=' e1 ',' e2 ...
struct FieldSpec {
  enum class Kind { zeta, quad, chars, compositum };
  Kind kind = Kind::zeta;
  std::int64_t n = 0;                        // m for zeta, d for quad
  std::vector<DirichletCharacter> chars;     // chars
  std::vector<FieldSpec> parts;              // compositum, at least two atoms

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Throws ParseError with the byte offset of the first offending character.
FieldSpec parse_field_spec(std::string_view text);
std::string to_string(const FieldSpec& spec);

AbelianField build_field(const FieldSpec& spec, std::size_t max_degree = kDefaultMaxDegree);
inline AbelianField field_from_spec(std::string_view text, std::size_t max_degree = kDefaultMaxDegree) {
  return build_field(parse_field_spec(text), max_degree);
}

/// A spec that builds exactly k: "zeta:m" for cyclotomic fields, "quad:d" for
/// quadratic ones, otherwise "chars:" with a generating set.
std::string spec_of(const AbelianField& k);

}  // namespace cmfield
