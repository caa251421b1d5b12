#pragma once

// Derivative identities of zeta(s, alpha) as operations, each checkable
// against a central finite difference in alpha.

#include <optional>
#include <string>
#include <string_view>

#include "hz/hurwitz.hpp"

namespace hz {

enum class Identity {
  kInterchange,    // d/dalpha d^r/ds^r == d^r/ds^r d/dalpha
  kRecurrence,     // d/dalpha zeta^(r)(s) == -r zeta^(r-1)(s+1) - s zeta^(r)(s+1)
  kAtZero,         // d/dalpha zeta^(r)(0) == -r! gamma_{r-1}(alpha)
  kAtOne,          // d/dalpha of the regular part at s = 1
  kGammaDeriv,     // d/dalpha gamma_r(alpha)
  kMixedPartials,  // d^m/dalpha^m d^r/ds^r == d^r/ds^r d^m/dalpha^m
};

std::string_view to_string(Identity id) noexcept;
/// Lower-case CLI names: interchange, recurrence, at_zero, at_one,
/// gamma_deriv, mixed.
std::optional<Identity> parse_identity(std::string_view name) noexcept;

struct IdentityReport {
  Complex lhs;
  Complex rhs;
  double abs_residual = 0.0;
  double rel_residual = 0.0;  // abs_residual / max(1, |lhs|, |rhs|)
  std::string method_notes;
};

struct IdentityQuery {
  Identity id = Identity::kRecurrence;
  Complex s0;
  Complex alpha;
  int r = 0;
  int m = 1;  // alpha-derivative order, used by kMixedPartials
  double h = 1e-4;
};

/// -r zeta^(r-1)(s0+1, alpha) - s0 zeta^(r)(s0+1, alpha). At s0 = 0 (where
/// the second piece is 0 * pole) the entire jet of -s zeta(s+1, alpha) is used.
Complex dalpha_of_sderiv(Complex s0, Complex alpha, int r, const SeriesParams& p = {});

/// -r! gamma_{r-1}(alpha), with gamma_{-1}(alpha) = 1.
Complex dalpha_sderiv_at_zero(Complex alpha, int r, const SeriesParams& p = {});

/// Same quantity as the r-th derivative at s = 0 of -s zeta(s + 1, alpha),
/// read off the regularized jet without going through gamma_r(alpha).
Complex dalpha_sderiv_at_zero_regularized(Complex alpha, int r, const SeriesParams& p = {});

/// Finite-difference lhs vs closed-form rhs. Evaluation errors are rethrown
/// with the failing side named in the message.
IdentityReport verify_identity(const IdentityQuery& q, const SeriesParams& p = {});

/// Pass threshold on rel_residual for each identity.
double identity_tolerance(Identity id) noexcept;

}  // namespace hz
