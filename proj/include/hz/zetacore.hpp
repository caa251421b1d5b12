#pragma once

// Riemann zeta and its Dirichlet tails as jets, continued to the whole plane
// by Euler-Maclaurin summation with the pole term kept explicit.

#include <vector>

#include "hz/complexjet.hpp"

namespace hz {

/// Euler-Maclaurin policy. cutoff == 0 selects max(16, ceil(2|s0| + 2*order)).
struct EulerMaclaurinParams {
  int cutoff = 0;
  int bernoulli_depth = 10;

  void validate() const;
  /// Concrete cutoff for an evaluation at s0 with the given jet order.
  int resolved_cutoff(Complex s0, int order) const;
};

/// A jet together with an a-posteriori error estimate (max-norm).
struct JetEstimate {
  Jet jet;
  double err_estimate = 0.0;
};

inline constexpr double kNearPoleRadius = 1e-8;

/// Jet of zeta(s) at s0. s0 == 1 raises kPoleAtOne, |s0 - 1| < 1e-8 kNearPole.
JetEstimate riemann_zeta_jet(Complex s0, int order, const EulerMaclaurinParams& p = {});

/// Jet of zeta_k(s) = zeta(s) - sum_{1<=n<=k-1} n^-s at s0. Summed directly
/// from n = k, so tails with large Re s0 keep full relative accuracy.
JetEstimate zeta_tail_jet(Complex s0, int k, int order, const EulerMaclaurinParams& p = {});

/// Jet of the entire function (w - 1) * zeta_k(w) at w0, valid at w0 = 1.
JetEstimate regularized_tail_jet(Complex w0, int k, int order,
                                 const EulerMaclaurinParams& p = {});

struct StieltjesTable {
  std::vector<Complex> gammas;  // gamma_0 .. gamma_R
};

/// Classical Stieltjes constants read off (w - 1) zeta(w) at w = 1. 0 <= R <= 20.
/// The cutoff is independent of R, so a longer table extends a shorter one
/// bit for bit.
StieltjesTable stieltjes_constants(int R, const EulerMaclaurinParams& p = {});

/// B_{2j} / (2j)! for 1 <= j <= 15.
double bernoulli_over_factorial(int j);

namespace detail {

// The same tails before narrowing to binary64, for callers that keep
// summing in extended precision.
struct ExtJetEstimate {
  ExtJet jet;
  long double err_estimate = 0.0L;
};

ExtJetEstimate zeta_tail_ext(Complex s0, int k, int order, const EulerMaclaurinParams& p);
ExtJetEstimate regularized_tail_ext(Complex w0, int k, int order,
                                    const EulerMaclaurinParams& p);

}  // namespace detail

}  // namespace hz
