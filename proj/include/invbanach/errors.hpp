#ifndef INVBANACH_ERRORS_HPP
#define INVBANACH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace invbanach {

enum class ErrorCode {
  InvalidPermutation,
  CapExceeded,
  DimensionMismatch,
  ZeroVector,
  NonPolyhedral,
  UnsupportedDual,
  UnsupportedDomain,
  PointInsideBody,
  BodyNotInvariant,
  PointNotInvariant,
  MarginInfeasible,
  OriginNotInterior,
  NotUnitVector,
  NormNotInvariant,
  SetNotInvariant,
  NotInvariant,
  WrongDomainKind,
  NoConvergence,
  NoEligibleLambda,
  DeltaInfeasible,
  CertInvalid,
  BadEps,
  PreconditionFailed,
  NoBlockBeyondCutoff,
  NoWitness,
  BadWeights,
  BadSpec,
  BlockTooBig,
  SchemaError,
  IoError,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NonPolyhedral: return "NonPolyhedral";
    case ErrorCode::UnsupportedDual: return "UnsupportedDual";
    case ErrorCode::UnsupportedDomain: return "UnsupportedDomain";
    case ErrorCode::PointInsideBody: return "PointInsideBody";
    case ErrorCode::BodyNotInvariant: return "BodyNotInvariant";
    case ErrorCode::PointNotInvariant: return "PointNotInvariant";
    case ErrorCode::MarginInfeasible: return "MarginInfeasible";
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::NotUnitVector: return "NotUnitVector";
    case ErrorCode::NormNotInvariant: return "NormNotInvariant";
    case ErrorCode::SetNotInvariant: return "SetNotInvariant";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::WrongDomainKind: return "WrongDomainKind";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NoEligibleLambda: return "NoEligibleLambda";
    case ErrorCode::DeltaInfeasible: return "DeltaInfeasible";
    case ErrorCode::CertInvalid: return "CertInvalid";
    case ErrorCode::BadEps: return "BadEps";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NoBlockBeyondCutoff: return "NoBlockBeyondCutoff";
    case ErrorCode::NoWitness: return "NoWitness";
    case ErrorCode::BadWeights: return "BadWeights";
    case ErrorCode::BadSpec: return "BadSpec";
    case ErrorCode::BlockTooBig: return "BlockTooBig";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

/// Library-wide exception type carrying a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace invbanach

#endif  // INVBANACH_ERRORS_HPP
