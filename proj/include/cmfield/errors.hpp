#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cmfield {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CMFIELD_DEFINE_ERROR(Name)          \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

CMFIELD_DEFINE_ERROR(DivisionByZero);
CMFIELD_DEFINE_ERROR(NotCoprime);
CMFIELD_DEFINE_ERROR(LengthMismatch);
CMFIELD_DEFINE_ERROR(NotClosed);
CMFIELD_DEFINE_ERROR(DegreeBoundExceeded);
CMFIELD_DEFINE_ERROR(NotFundamentalDiscriminant);
CMFIELD_DEFINE_ERROR(EvenCharacter);
CMFIELD_DEFINE_ERROR(PrincipalCharacter);
CMFIELD_DEFINE_ERROR(PreconditionViolated);
CMFIELD_DEFINE_ERROR(NotSubfield);
CMFIELD_DEFINE_ERROR(EvenIndex);
CMFIELD_DEFINE_ERROR(NotPrimePowerConductors);
CMFIELD_DEFINE_ERROR(NotV4CM);
CMFIELD_DEFINE_ERROR(NotCM);

/// The unit index rule engine has no rule for the field.
CMFIELD_DEFINE_ERROR(Unsupported);
using UnsupportedUnitIndex = Unsupported;

/// Raised when an exact computation produced something the mathematics
/// forbids (non-rational norm, non-integral class number, runaway period).
/// Always a bug; callers should not try to recover.
CMFIELD_DEFINE_ERROR(InternalInconsistency);
CMFIELD_DEFINE_ERROR(NonIntegralResult);

#undef CMFIELD_DEFINE_ERROR

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::string expected)
      : Error("parse error at offset " + std::to_string(offset) + ": expected " + expected),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

}  // namespace cmfield
