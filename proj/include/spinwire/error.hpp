#pragma once

#include <stdexcept>
#include <string>

namespace spinwire {

enum class ErrorCode {
  kInvalidDimension,
  kInvalidParameter,
  kUnsupportedFamily,
  kUnsupportedModel,
  kDegenerateGeometry,
  kIndexOutOfRange,
  kInvalidConfiguration,
  kArity,
  kChainTooShort,
  kInvalidOrder,
  kAliasing,
  kSize,
  kDimensionMismatch,
  kParse,
};

const char* to_string(ErrorCode code);

// All library failures are reported through this exception; `code()` lets
// callers (and the CLI) distinguish the failure class without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spinwire
