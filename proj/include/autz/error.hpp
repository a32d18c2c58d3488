#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace autz {

enum class Errc {
  ClosureExceedsCap,
  InvalidPermutation,
  NotLatinSquare,
  NoIdentityAtZero,
  NotAssociative,
  IndexOutOfRange,
  ActionNotAutomorphism,
  ActionNotHomomorphism,
  NotNilpotent,
  NotPrimePower,
  NotNormal,
  NotAbelian,
  PrimeMismatch,
  EnumerationCapExceeded,
  NotCentral,
  NotContained,
  CenterNotCyclic,
  AbelianGroup,
  EmptyAlpha,
  CoclassOutOfRange,
  ClassTooSmall,
  OrderOutOfRange,
  UnknownBuiltin,
  BadParameters,
  ParseError,
  InvalidManifest,
};

inline std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::ClosureExceedsCap: return "ClosureExceedsCap";
    case Errc::InvalidPermutation: return "InvalidPermutation";
    case Errc::NotLatinSquare: return "NotLatinSquare";
    case Errc::NoIdentityAtZero: return "NoIdentityAtZero";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ActionNotAutomorphism: return "ActionNotAutomorphism";
    case Errc::ActionNotHomomorphism: return "ActionNotHomomorphism";
    case Errc::NotNilpotent: return "NotNilpotent";
    case Errc::NotPrimePower: return "NotPrimePower";
    case Errc::NotNormal: return "NotNormal";
    case Errc::NotAbelian: return "NotAbelian";
    case Errc::PrimeMismatch: return "PrimeMismatch";
    case Errc::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case Errc::NotCentral: return "NotCentral";
    case Errc::NotContained: return "NotContained";
    case Errc::CenterNotCyclic: return "CenterNotCyclic";
    case Errc::AbelianGroup: return "AbelianGroup";
    case Errc::EmptyAlpha: return "EmptyAlpha";
    case Errc::CoclassOutOfRange: return "CoclassOutOfRange";
    case Errc::ClassTooSmall: return "ClassTooSmall";
    case Errc::OrderOutOfRange: return "OrderOutOfRange";
    case Errc::UnknownBuiltin: return "UnknownBuiltin";
    case Errc::BadParameters: return "BadParameters";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidManifest: return "InvalidManifest";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// message names the offending index, triple or field where there is one.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), detail_(what) {}

  Errc code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace autz
