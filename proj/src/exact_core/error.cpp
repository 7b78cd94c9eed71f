#include "pibeta/error.hpp"

namespace pibeta {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::zero_denominator: return "zero denominator";
    case ErrorCode::division_by_zero: return "division by zero";
    case ErrorCode::domain: return "argument out of domain";
    case ErrorCode::internal_consistency: return "internal consistency failure";
    case ErrorCode::precision: return "insufficient precision";
    case ErrorCode::parse: return "parse error";
    case ErrorCode::usage: return "usage error";
  }
  return "unknown error";
}

}  // namespace pibeta
