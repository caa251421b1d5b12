#pragma once

// Shared fixtures: the random acceptance grid, relative-error helpers and
// reference values frozen from a 40-digit mpmath run
// (tests/oracle/freeze_values.py).

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "hz/complexjet.hpp"

namespace hz::test {

struct GridPoint {
  Complex s;
  Complex alpha;
};

// 50 points: sigma in [-4, 4], |t| <= 10, alpha uniform in the disc of
// radius 6, at least 0.05 away from {0, -1, ..., -6}.
inline std::vector<GridPoint> random_grid(std::size_t count = 50,
                                          std::uint64_t seed = 20261015) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<GridPoint> out;
  while (out.size() < count) {
    const Complex s{-4.0 + 8.0 * u(rng), -10.0 + 20.0 * u(rng)};
    const double radius = 6.0 * std::sqrt(u(rng));
    const double theta = 2.0 * std::numbers::pi * u(rng);
    const Complex alpha = std::polar(radius, theta);
    bool near_excluded = false;
    for (int n = 0; n <= 6; ++n) near_excluded |= std::abs(alpha + double(n)) < 0.05;
    if (!near_excluded) out.push_back({s, alpha});
  }
  return out;
}

// |a - b| / (1 + |b|)
inline double rel_err(Complex a, Complex b) { return std::abs(a - b) / (1.0 + std::abs(b)); }

// |a - b| / max(1, |a|, |b|)
inline double rel_residual(Complex a, Complex b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

inline double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

namespace frozen {

inline constexpr double kZeta2 = 1.6449340668482264;
inline constexpr double kTail3At4 = 0.019823233711138192;  // sum_{m>=3} m^-4
inline constexpr double kZeta2Half = 4.9348022005446793;
inline constexpr double kMinus2Zeta3At07 = -6.4349928741909237;

inline const std::vector<Complex> kJetS3Alpha2p2i = {
    {-0.019512177026824763, -0.078283737979348502},
    {-0.042478402112800631, 0.1278457495722322},
    {0.08518619593618948, -0.081114240638113665}};

inline const std::vector<Complex> kRiemannJetHalf3i = {
    {0.53273667097423288, -0.078896513425833383},
    {0.19175988409272137, -0.073135728865928932},
    {0.005966902072203994, 0.028383796750419155},
    {-0.0089264513104835053, 0.0087826290342466062}};

inline const std::vector<Complex> kJetHalf3iAlpha17 = {
    {-0.3164608196360338, -0.33323819351341694},
    {0.11222320530313171, 0.0040918993690401425}};

inline const std::vector<Complex> kJetMinus3p2iAlpha03p04i = {
    {0.19331199471950476, -0.67625423212122927},
    {-0.8024346144300156, -0.53986853529259595},
    {-0.50233389209773858, 0.35357670973812349}};

inline const std::vector<Complex> kJet2p10iAlpha45m3i = {
    {-1.7222333325219903e-5, 3.0785246965979427e-5},
    {4.8921929798098526e-6, -6.1306890527131611e-5}};

// d^2/dalpha^2 of the order-1 jet at s0 = -0.5, alpha = 1.3.
inline const std::vector<Complex> kSecondAlphaDerivJet = {-0.53798886923946933,
                                                          1.0087768472118341};

// Classical normalization: zeta(s) = 1/(s-1) + sum (-1)^r gamma_r/r! (s-1)^r.
inline const std::vector<double> kClassicalGamma = {
    0.57721566490153286,   -0.072815845483676725, -0.0096903631928723185,
    0.0020538344203033459, 0.0023253700654673001, 0.0007933238173010627};

inline constexpr double kGamma0Half = 1.9635100260214235;
inline constexpr double kGamma0Two = -0.42278433509846714;
inline constexpr double kClassicalGamma1Half = -1.3534596808049415;
inline constexpr Complex kGamma0TwoPlusI{-0.59465032062247698, -0.57667404746858117};

inline constexpr double kBoundS2A05K1 = 6.5797362673929057;
inline constexpr double kBoundS4A12K2 = 42.278251316841326;

inline constexpr double kRecurrenceS2A05R1 = -18.971868574481316;  // -zeta(3,.5) - 2 zeta'(3,.5)
inline constexpr double kAtOneA1R1 = -0.70738581253238268;         // -zeta(2) - zeta'(2)

inline constexpr Complex kDigamma2PlusI{0.59465032062247698, 0.57667404746858117};
inline constexpr double kLogGammaHalf = 0.57236494292470009;
inline constexpr Complex kLogGamma2PlusI{-0.30434960902188368, 0.48375784292991511};
inline constexpr double kTrigammaHalf = 4.9348022005446793;

}  // namespace frozen

}  // namespace hz::test
