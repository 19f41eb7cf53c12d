#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mton {

enum class ErrorCode {
  NotAPartition,
  Crossing,
  EmptyKeep,
  InvalidBlockRef,
  RootHasNoParent,
  DigitOutOfRange,
  RankOutOfRange,
  NotPairPartition,
  AreaRequiresPairPartition,
  NotFirstKind,
  NotSecondKind,
  VerificationFailed,
  SizeBoundExceeded,
  InsufficientSeed,
  NegativeExponent,
  ZeroPolynomial,
  OutOfValidity,
  InsufficientCumulants,
  InsufficientMoments,
  NotMinimizable,
  ParseError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::Crossing: return "Crossing";
    case ErrorCode::EmptyKeep: return "EmptyKeep";
    case ErrorCode::InvalidBlockRef: return "InvalidBlockRef";
    case ErrorCode::RootHasNoParent: return "RootHasNoParent";
    case ErrorCode::DigitOutOfRange: return "DigitOutOfRange";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::NotPairPartition: return "NotPairPartition";
    case ErrorCode::AreaRequiresPairPartition: return "AreaRequiresPairPartition";
    case ErrorCode::NotFirstKind: return "NotFirstKind";
    case ErrorCode::NotSecondKind: return "NotSecondKind";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::SizeBoundExceeded: return "SizeBoundExceeded";
    case ErrorCode::InsufficientSeed: return "InsufficientSeed";
    case ErrorCode::NegativeExponent: return "NegativeExponent";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::OutOfValidity: return "OutOfValidity";
    case ErrorCode::InsufficientCumulants: return "InsufficientCumulants";
    case ErrorCode::InsufficientMoments: return "InsufficientMoments";
    case ErrorCode::NotMinimizable: return "NotMinimizable";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mton
