#include "hz/error.hpp"

namespace hz {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kDomainError:
      return "DOMAIN_ERROR";
    case ErrorCode::kPoleAtOne:
      return "POLE_AT_ONE";
    case ErrorCode::kNearPole:
      return "NEAR_POLE";
    case ErrorCode::kNonconvergence:
      return "NONCONVERGENCE";
    case ErrorCode::kSingularJet:
      return "SINGULAR_JET";
    case ErrorCode::kOrderMismatch:
      return "ORDER_MISMATCH";
    case ErrorCode::kInvalidArgument:
      return "INVALID_ARGUMENT";
    case ErrorCode::kNonFinite:
      return "NON_FINITE";
  }
  return "UNKNOWN";
}

}  // namespace hz
