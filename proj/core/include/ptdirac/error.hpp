#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ptdirac {

enum class ErrorCode {
  ParamOutOfRange,
  GridTooCoarse,
  UnsupportedLedger,
  NoTurningPoint,
  QuadratureFailure,
  NegativeRadicand,
  OutsideExistenceDomain,
  MeshMismatch,
  EigensolveFailure,
  GapCollapse,
  CFLViolation,
  NonDecayingField,
};

std::string_view to_string(ErrorCode code);

// Domain errors are violated preconditions; the rest are numerical failures.
bool is_domain_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

inline void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace ptdirac
