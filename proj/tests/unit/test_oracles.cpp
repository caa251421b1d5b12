#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hz/error.hpp"
#include "hz/oracles.hpp"
#include "support.hpp"

using hz::Complex;
namespace oracle = hz::oracle;
namespace frozen = hz::test::frozen;

TEST_CASE("hurwitz_em_oracle examples") {
  CHECK(std::abs(oracle::hurwitz_em_oracle(2.0, 1.0, 0).jet[0] - frozen::kZeta2) < 1e-13);
  const double x = 0.3;
  const double b3 = x * x * x - 1.5 * x * x + 0.5 * x;
  CHECK(std::abs(oracle::hurwitz_em_oracle(-2.0, 0.3, 0).jet[0] + b3 / 3.0) < 1e-13);

  const oracle::OracleJet base = oracle::hurwitz_em_oracle({0.5, 3.0}, 1.7, 1);
  oracle::OracleParams doubled;
  doubled.cutoff = 2 * (6 + static_cast<int>(std::ceil(std::abs(Complex{0.5, 3.0}) + 1.7 + 1)));
  const oracle::OracleJet fine = oracle::hurwitz_em_oracle({0.5, 3.0}, 1.7, 1, doubled);
  for (int j = 0; j <= 1; ++j) {
    CHECK(std::abs(base.jet[j] - fine.jet[j]) <= base.err_estimate + 1e-15);
    CHECK(hz::test::rel_err(base.jet[j], frozen::kJetHalf3iAlpha17[j]) < 1e-13);
  }
}

TEST_CASE("oracle errors") {
  CHECK_THROWS_AS(oracle::hurwitz_em_oracle(1.0, 0.5, 0), hz::Error);
  CHECK_THROWS_AS(oracle::hurwitz_em_oracle(2.0, -3.0, 0), hz::Error);
}

TEST_CASE("bernoulli polynomials") {
  CHECK(std::abs(oracle::bernoulli_poly_eval(1, 0.3) + 0.2) < 1e-16);
  CHECK(std::abs(oracle::bernoulli_poly_eval(2, 0.0) - 1.0 / 6.0) < 1e-16);
  CHECK(oracle::bernoulli_poly_eval(4, 1.0) == oracle::bernoulli_poly_eval(4, 0.0));
  CHECK_THROWS_AS(oracle::BernoulliPoly(33), hz::Error);
  CHECK_THROWS_AS(oracle::bernoulli_number(-1), hz::Error);

  CHECK(oracle::BernoulliPoly(0).coeffs() == std::vector<double>{1.0});
  for (int n = 1; n <= 20; ++n) {
    const std::vector<double> hi = oracle::BernoulliPoly(n).coeffs();
    const std::vector<double> lo = oracle::BernoulliPoly(n - 1).coeffs();
    // B_n' = n B_{n-1}
    for (int i = 1; i <= n; ++i) {
      CHECK(std::abs(i * hi[i] - n * lo[i - 1]) <= 1e-12 * std::max(1.0, std::abs(n * lo[i - 1])));
    }
    // integral over [0, 1] vanishes
    double integral = 0.0;
    for (int i = 0; i <= n; ++i) integral += hi[i] / (i + 1);
    CHECK(std::abs(integral) < 1e-12 * std::max(1.0, std::abs(oracle::bernoulli_number(n))));
  }
}

TEST_CASE("gamma-family oracles") {
  const double gamma = oracle::euler_mascheroni();
  CHECK(std::abs(gamma - frozen::kClassicalGamma[0]) < 1e-15);
  CHECK(std::abs(oracle::stieltjes_gamma1() - frozen::kClassicalGamma[1]) < 1e-15);
  CHECK(std::abs(oracle::digamma(1.0) + gamma) < 1e-14);
  CHECK(std::abs(oracle::digamma({2.0, 1.0}) - frozen::kDigamma2PlusI) < 1e-14);
  CHECK(std::abs(oracle::trigamma(0.5) - frozen::kTrigammaHalf) < 1e-13);
  CHECK(std::abs(oracle::loggamma(0.5) - 0.5 * std::log(std::numbers::pi)) < 1e-14);
  CHECK(std::abs(oracle::loggamma(0.5) - frozen::kLogGammaHalf) < 1e-14);
  CHECK(std::abs(oracle::loggamma(1.0)) < 1e-14);
  CHECK(std::abs(oracle::loggamma({2.0, 1.0}) - frozen::kLogGamma2PlusI) < 1e-14);
  CHECK_THROWS_AS(oracle::digamma(-2.0), hz::Error);
  CHECK_THROWS_AS(oracle::loggamma(0.0), hz::Error);
}

TEST_CASE("direct summation") {
  CHECK(std::abs(oracle::direct_hurwitz_sum(2.0, 0.5, 100000) - frozen::kZeta2Half) < 1e-10);
  CHECK_THROWS_AS(oracle::direct_hurwitz_sum(0.5, 0.5, 10), hz::Error);
}

TEST_CASE("oracle closed forms at nonpositive integers") {
  for (Complex a : {Complex{0.3}, Complex{0.5}, Complex{1.0}, Complex{1.7}, Complex{2.0, 1.0}}) {
    for (int n = 0; n <= 6; ++n) {
      const Complex expected = -oracle::bernoulli_poly_eval(n + 1, a) / (n + 1.0);
      CHECK(std::abs(oracle::hurwitz_em_oracle(-n, a, 0).jet[0] - expected) < 1e-10);
    }
    const Complex lerch = oracle::loggamma(a) - 0.5 * std::log(2.0 * std::numbers::pi);
    CHECK(std::abs(oracle::hurwitz_em_oracle(0.0, a, 1).jet[1] - lerch) < 1e-9);
  }
}
