#include "ptdirac/error.hpp"

namespace ptdirac {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::UnsupportedLedger: return "UnsupportedLedger";
    case ErrorCode::NoTurningPoint: return "NoTurningPoint";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::NegativeRadicand: return "NegativeRadicand";
    case ErrorCode::OutsideExistenceDomain: return "OutsideExistenceDomain";
    case ErrorCode::MeshMismatch: return "MeshMismatch";
    case ErrorCode::EigensolveFailure: return "EigensolveFailure";
    case ErrorCode::GapCollapse: return "GapCollapse";
    case ErrorCode::CFLViolation: return "CFLViolation";
    case ErrorCode::NonDecayingField: return "NonDecayingField";
  }
  return "Unknown";
}

bool is_domain_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParamOutOfRange:
    case ErrorCode::GridTooCoarse:
    case ErrorCode::UnsupportedLedger:
    case ErrorCode::OutsideExistenceDomain:
    case ErrorCode::MeshMismatch:
    case ErrorCode::GapCollapse:
    case ErrorCode::CFLViolation:
    case ErrorCode::NoTurningPoint:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace ptdirac
