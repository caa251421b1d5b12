#pragma once

// Generalized Stieltjes constants gamma_r(alpha):
//   zeta(s, alpha) = 1/(s - 1) + sum_{r>=0} gamma_r(alpha) (s - 1)^r.

#include <vector>

#include "hz/hurwitz.hpp"

namespace hz {

struct LaurentExpansion {
  Complex pole_coeff;
  std::vector<Complex> gammas;  // gamma_0(alpha) .. gamma_R(alpha)
  Complex alpha;
  int order = 0;
  double err_estimate = 0.0;
  int k_used = 0;
  int terms_used = 0;
};

inline constexpr int kMaxLaurentOrder = 12;

/// gamma_r(alpha) = gamma_r + [zeta(s, alpha) - zeta(s)] Taylor coefficient r
/// at s = 1; the difference is entire, so nothing near the pole is subtracted.
LaurentExpansion generalized_stieltjes(Complex alpha, int R, const SeriesParams& p = {});

/// Taylor coefficients 0..R+1 of s zeta(s + 1, alpha) at s = 0. Coefficient 0
/// is 1 and coefficient r >= 1 is gamma_{r-1}(alpha).
std::vector<Complex> generating_series_at_zero(Complex alpha, int R,
                                               const SeriesParams& p = {});

/// d/dalpha gamma_r(alpha) = -zeta^(r-1)(2, alpha)/(r-1)! - zeta^(r)(2, alpha)/r!,
/// and -zeta(2, alpha) for r = 0.
Complex dgamma_dalpha(Complex alpha, int r, const SeriesParams& p = {});

}  // namespace hz
