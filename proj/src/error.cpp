#include "spinwire/error.hpp"

namespace spinwire {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidDimension: return "invalid dimension";
    case ErrorCode::kInvalidParameter: return "invalid parameter";
    case ErrorCode::kUnsupportedFamily: return "unsupported family";
    case ErrorCode::kUnsupportedModel: return "unsupported model";
    case ErrorCode::kDegenerateGeometry: return "degenerate geometry";
    case ErrorCode::kIndexOutOfRange: return "index out of range";
    case ErrorCode::kInvalidConfiguration: return "invalid configuration";
    case ErrorCode::kArity: return "arity mismatch";
    case ErrorCode::kChainTooShort: return "chain too short";
    case ErrorCode::kInvalidOrder: return "invalid order";
    case ErrorCode::kAliasing: return "aliasing";
    case ErrorCode::kSize: return "size";
    case ErrorCode::kDimensionMismatch: return "dimension mismatch";
    case ErrorCode::kParse: return "parse";
  }
  return "unknown";
}

}  // namespace spinwire
