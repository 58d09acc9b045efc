#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gwa {

  enum class ErrorCode {
    // group construction and validation
    NotClosed,
    NoIdentityAtZero,
    NotAssociative,
    MissingInverse,
    OrderTooLarge,
    InvalidArgument,
    TwistNotHomomorphism,
    TwistNotAutomorphism,
    NotNormalSubgroup,
    // catalog
    UnknownId,
    UnsupportedHeavy,
    // groups with action
    DimensionMismatch,
    NotAGwa,
    NotIntoAut,
    IndexOutOfRange,
    // ideals
    SeedOutsideAmbient,
    NotAnIdeal,
    InducedActionIllDefined,
    // morphisms and classification
    LengthMismatch,
    MixedUnderlyingGroups,
    // survey and I/O
    IoError,
    ParseError,
    InvariantViolation,
  };

  std::string_view to_string(ErrorCode code);

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          code_(code) {}

    ErrorCode code() const noexcept {
      return code_;
    }

   private:
    ErrorCode code_;
  };

}  // namespace gwa
