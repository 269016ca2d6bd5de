#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nsgr {

enum class ErrorCode {
  InvalidSemigroup,
  InvalidBase,
  NotInPolyhedron,
  CapExceeded,
  Overflow,
  AmbientMismatch,
  PreconditionViolated,
  InvalidAutomorphism,
  CorruptCatalog,
  NotCoprime,
  NotMember,
  RepresentationNotFound,
  InvalidInput,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidSemigroup: return "InvalidSemigroup";
    case ErrorCode::InvalidBase: return "InvalidBase";
    case ErrorCode::NotInPolyhedron: return "NotInPolyhedron";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InvalidAutomorphism: return "InvalidAutomorphism";
    case ErrorCode::CorruptCatalog: return "CorruptCatalog";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::RepresentationNotFound: return "RepresentationNotFound";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// CLI maps them onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nsgr
