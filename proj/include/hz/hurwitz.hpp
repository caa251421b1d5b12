#pragma once

// Hurwitz zeta zeta(s, alpha) and its s-derivatives for complex s and alpha
// via the k-shifted power series in alpha:
//
//   zeta(s, alpha) = sum_{0<=n<k} (n + alpha)^-s + zeta_k(s)
//                    + sum_{n>=1} c_{n,k}(s) (-alpha)^n / n!,
//   c_{n,k}(s)     = s (s+1) ... (s+n-1) zeta_k(s+n),       |alpha| < k.
//
// Every c_{n,k} is evaluated as [s (s+1) ... (s+n-2)] * B_k(s+n) with the
// entire factor B_k(w) = (w - 1) zeta_k(w), so the removable singularities at
// s = 1 - n never reach floating point.

#include <optional>

#include "hz/complexjet.hpp"
#include "hz/zetacore.hpp"

namespace hz {

struct SeriesParams {
  // nullopt starts at choose_k(alpha) and raises k (up to 64) until
  // (1 - |alpha|/k)^-|s0| <= 1e3, bounding cancellation in the alpha-series.
  std::optional<int> k;
  int max_terms = 400;
  double tol = 1e-12;
  EulerMaclaurinParams em;

  void validate() const;
};

struct EvalResult {
  Jet value;
  double err_estimate = 0.0;
  int k_used = 0;
  int terms_used = 0;
};

/// Smallest k with |alpha| / k <= 2/3.
int choose_k(Complex alpha);

/// Jet of order r of zeta(., alpha) at s0.
EvalResult hurwitz_jet(Complex s0, Complex alpha, int r, const SeriesParams& p = {});

/// d^m/dalpha^m of the r-jet: (-1)^m (s)_m zeta(s + m, alpha) as a jet in s.
EvalResult hurwitz_alpha_derivative(Complex s0, Complex alpha, int m, int r,
                                    const SeriesParams& p = {});

/// Jet of the entire function (w - 1) zeta(w, alpha) at w0 (valid at w0 = 1).
EvalResult hurwitz_regularized_jet(Complex w0, Complex alpha, int r,
                                   const SeriesParams& p = {});

/// Jet of the entire function zeta(s, alpha) - zeta(s) at s0 (valid at s0 = 1).
EvalResult hurwitz_difference_jet(Complex s0, Complex alpha, int r,
                                  const SeriesParams& p = {});

/// A-priori majorant zeta(sigma) (1 - |alpha|/k)^-|s0| of the alpha-series
/// tail. Requires |alpha| < k and Re s0 > 1.
double convergence_bound(Complex s0, Complex alpha, int k);

/// sum_{n>=1} |b_{n,k}(s0)| |alpha|^n with b_{n,k} = (-1)^n c_{n,k} / n!,
/// summed until terms fall below 1e-17 of the total. Requires Re s0 > 1.
double absolute_tail_sum(Complex s0, Complex alpha, int k);

}  // namespace hz
