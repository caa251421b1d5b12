#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hz {

enum class ErrorCode {
  kDomainError,      // head-sum base n + alpha vanishes, excluded alpha
  kPoleAtOne,        // evaluation exactly at s = 1
  kNearPole,         // |s - 1| below the guard radius; use the regularized form
  kNonconvergence,   // term cap reached with terms above tolerance
  kSingularJet,      // reciprocal of a jet with zero leading coefficient
  kOrderMismatch,    // arithmetic on jets of different order
  kInvalidArgument,  // precondition on parameters violated
  kNonFinite,        // NaN or infinity produced or supplied
};

/// Stable upper-case identifier used in CLI output ("POLE_AT_ONE", ...).
std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hz
