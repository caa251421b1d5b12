#pragma once

// Independent reference implementations for tests and `verify`. Nothing here
// calls into zetacore, hurwitz, stieltjes or identities; only jet arithmetic
// is shared.

#include <vector>

#include "hz/complexjet.hpp"

namespace hz::oracle {

/// Exact-rational Bernoulli number B_n (B_1 = -1/2), 0 <= n <= 32.
double bernoulli_number(int n);

class BernoulliPoly {
 public:
  /// B_n(x) = sum_j C(n, j) B_j x^(n-j), 0 <= n <= 32.
  explicit BernoulliPoly(int degree);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  /// Ascending powers: coeffs()[i] multiplies x^i.
  const std::vector<double>& coeffs() const noexcept { return coeffs_; }
  Complex operator()(Complex x) const;

 private:
  std::vector<double> coeffs_;
};

Complex bernoulli_poly_eval(int n, Complex x);

struct OracleParams {
  int cutoff = 0;  // 0 selects 6 + ceil(|s0| + |alpha| + r)
  int bernoulli_depth = 12;
};

struct OracleJet {
  Jet jet;
  double err_estimate = 0.0;
};

/// Euler-Maclaurin applied to sum_{n>=0} (n + alpha)^-s directly, as a jet
/// of order r in s.
OracleJet hurwitz_em_oracle(Complex s0, Complex alpha, int r, const OracleParams& p = {});

/// Partial sum sum_{n<N} (n + alpha)^-s plus the integral and half-term tail
/// corrections at N. Slow; Re s > 1 only.
Complex direct_hurwitz_sum(Complex s, Complex alpha, long n_terms);

Complex digamma(Complex alpha);
Complex trigamma(Complex alpha);
Complex loggamma(Complex alpha);

/// Euler-Mascheroni constant from H_N - log N with Euler-Maclaurin corrections.
double euler_mascheroni();
/// gamma_1 from sum_{j<=N} log j / j - log^2 N / 2 with Euler-Maclaurin corrections.
double stieltjes_gamma1();

}  // namespace hz::oracle
