#include "hz/oracles.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hz/error.hpp"

namespace hz::oracle {

namespace {

// B_0 .. B_32 as exact rationals (odd indices above 1 vanish).
constexpr std::array<std::array<double, 2>, 33> kBernoulli = {{
    {1.0, 1.0},
    {-1.0, 2.0},
    {1.0, 6.0},
    {0.0, 1.0},
    {-1.0, 30.0},
    {0.0, 1.0},
    {1.0, 42.0},
    {0.0, 1.0},
    {-1.0, 30.0},
    {0.0, 1.0},
    {5.0, 66.0},
    {0.0, 1.0},
    {-691.0, 2730.0},
    {0.0, 1.0},
    {7.0, 6.0},
    {0.0, 1.0},
    {-3617.0, 510.0},
    {0.0, 1.0},
    {43867.0, 798.0},
    {0.0, 1.0},
    {-174611.0, 330.0},
    {0.0, 1.0},
    {854513.0, 138.0},
    {0.0, 1.0},
    {-236364091.0, 2730.0},
    {0.0, 1.0},
    {8553103.0, 6.0},
    {0.0, 1.0},
    {-23749461029.0, 870.0},
    {0.0, 1.0},
    {8615841276005.0, 14322.0},
    {0.0, 1.0},
    {-7709321041217.0, 510.0},
}};

long double bernoulli_ld(int n) {
  return static_cast<long double>(kBernoulli[n][0]) / kBernoulli[n][1];
}

double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

void reject_nonpositive_integer(Complex z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real())) {
    throw Error(ErrorCode::kDomainError, "argument is a nonpositive integer");
  }
}

// Lifts z by the recurrence until Re z >= kLift, calling step(z + j) for
// each shift j; returns the lifted point.
constexpr double kLift = 10.0;

template <typename Step>
Complex lift(Complex z, Step&& step) {
  while (z.real() < kLift) {
    step(z);
    z += 1.0;
  }
  return z;
}

}  // namespace

double bernoulli_number(int n) {
  if (n < 0 || n > 32) {
    throw Error(ErrorCode::kInvalidArgument,
                "Bernoulli index out of range: " + std::to_string(n));
  }
  return kBernoulli[n][0] / kBernoulli[n][1];
}

BernoulliPoly::BernoulliPoly(int degree) {
  if (degree < 0 || degree > 32) {
    throw Error(ErrorCode::kInvalidArgument,
                "Bernoulli polynomial degree out of range: " + std::to_string(degree));
  }
  coeffs_.assign(static_cast<std::size_t>(degree) + 1, 0.0);
  for (int j = 0; j <= degree; ++j) {
    coeffs_[degree - j] = binomial(degree, j) * bernoulli_number(j);
  }
}

Complex BernoulliPoly::operator()(Complex x) const {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Complex bernoulli_poly_eval(int n, Complex x) { return BernoulliPoly(n)(x); }

OracleJet hurwitz_em_oracle(Complex s0, Complex alpha, int r, const OracleParams& p) {
  require_finite(s0, "s");
  require_finite(alpha, "alpha");
  if (r < 0) throw Error(ErrorCode::kInvalidArgument, "r must be >= 0");
  if (s0 == Complex{1.0, 0.0}) throw Error(ErrorCode::kPoleAtOne, "pole at s = 1");
  if (p.bernoulli_depth < 1 || p.bernoulli_depth > 16) {
    throw Error(ErrorCode::kInvalidArgument, "oracle depth must be in [1, 16]");
  }
  const int cutoff =
      p.cutoff != 0
          ? p.cutoff
          : 6 + static_cast<int>(std::ceil(std::abs(s0) + std::abs(alpha) + r));
  if (!(cutoff + alpha.real() > 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "oracle cutoff too small for alpha");
  }

  using X = ExtComplex;
  const X la(alpha.real(), alpha.imag());
  const ExtJet s = ExtJet::variable(X(s0.real(), s0.imag()), r);
  ExtJetAccumulator total(r);
  for (int n = 0; n < cutoff; ++n) {
    const X base = la + static_cast<long double>(n);
    if (std::abs(base) < 1e-12L) {
      throw Error(ErrorCode::kDomainError, "alpha + n vanishes for n = " + std::to_string(n));
    }
    total.add(jet_pow_negs(base, s));
  }

  const X x = la + static_cast<long double>(cutoff);
  const ExtJet x_pow = jet_pow_negs(x, s);
  // integral of (t + alpha)^-s over [cutoff, inf) and the half endpoint term
  total.add(x * x_pow * jet_reciprocal(s + X{-1.0L}));
  total.add(X{0.5L} * x_pow);

  long double last = 0.0L;
  for (int j = 1; j <= p.bernoulli_depth; ++j) {
    // B_2j/(2j)! * s (s+1) ... (s+2j-2) * x^-(s+2j-1)
    ExtJet rising = s;
    long double fact = 2.0L;
    for (int i = 1; i <= 2 * j - 2; ++i) rising *= s + X{static_cast<long double>(i)};
    for (int i = 3; i <= 2 * j; ++i) fact *= i;
    const ExtJet shifted = s + X{2.0L * j - 1.0L};
    const ExtJet term = rising * jet_pow_negs(x, shifted) * X{bernoulli_ld(2 * j) / fact};
    total.add(term);
    last = term.norm();
  }
  return {jet_cast<double>(total.result()), static_cast<double>(last)};
}

Complex direct_hurwitz_sum(Complex s, Complex alpha, long n_terms) {
  if (!(s.real() > 1.0)) throw Error(ErrorCode::kInvalidArgument, "direct sum needs Re s > 1");
  using LComplex = std::complex<long double>;
  const LComplex ls(s.real(), s.imag());
  const LComplex la(alpha.real(), alpha.imag());
  LComplex acc{};
  LComplex comp{};
  for (long n = 0; n < n_terms; ++n) {
    const LComplex term = std::exp(-ls * std::log(la + static_cast<long double>(n)));
    const LComplex y = term - comp;
    const LComplex t = acc + y;
    comp = (t - acc) - y;
    acc = t;
  }
  const LComplex x = la + static_cast<long double>(n_terms);
  const LComplex x_pow = std::exp(-ls * std::log(x));
  acc += x * x_pow / (ls - 1.0L) + 0.5L * x_pow;
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

Complex digamma(Complex alpha) {
  reject_nonpositive_integer(alpha);
  Complex shift{};
  const Complex z = lift(alpha, [&](Complex w) { shift += 1.0 / w; });
  // psi(z) ~ log z - 1/(2z) - sum B_2k / (2k z^2k)
  const Complex z2 = 1.0 / (z * z);
  Complex series{};
  Complex power = z2;
  for (int k = 1; k <= 10; ++k) {
    series += bernoulli_number(2 * k) / (2.0 * k) * power;
    power *= z2;
  }
  return std::log(z) - 0.5 / z - series - shift;
}

Complex trigamma(Complex alpha) {
  reject_nonpositive_integer(alpha);
  Complex shift{};
  const Complex z = lift(alpha, [&](Complex w) { shift += 1.0 / (w * w); });
  // psi'(z) ~ 1/z + 1/(2z^2) + sum B_2k / z^(2k+1)
  const Complex z2 = 1.0 / (z * z);
  Complex series{};
  Complex power = z2 / z;
  for (int k = 1; k <= 10; ++k) {
    series += bernoulli_number(2 * k) * power;
    power *= z2;
  }
  return 1.0 / z + 0.5 * z2 + series + shift;
}

Complex loggamma(Complex alpha) {
  reject_nonpositive_integer(alpha);
  Complex shift{};
  const Complex z = lift(alpha, [&](Complex w) { shift += std::log(w); });
  // Stirling: (z - 1/2) log z - z + log(2 pi)/2 + sum B_2k / (2k (2k-1) z^(2k-1))
  const Complex z2 = 1.0 / (z * z);
  Complex series{};
  Complex power = 1.0 / z;
  for (int k = 1; k <= 10; ++k) {
    series += bernoulli_number(2 * k) / (2.0 * k * (2.0 * k - 1.0)) * power;
    power *= z2;
  }
  const double half_log_two_pi = 0.5 * std::log(2.0 * std::numbers::pi);
  return (z - 0.5) * std::log(z) - z + half_log_two_pi + series - shift;
}

namespace {
constexpr int kConstantsN = 64;
constexpr int kConstantsDepth = 8;
}  // namespace

double euler_mascheroni() {
  const long double n = kConstantsN;
  long double harmonic = 0.0L;
  for (int j = kConstantsN; j >= 1; --j) harmonic += 1.0L / j;
  long double value = harmonic - std::log(n) - 0.5L / n;
  long double power = n * n;
  for (int i = 1; i <= kConstantsDepth; ++i) {
    value += bernoulli_ld(2 * i) / (2.0L * i * power);
    power *= n * n;
  }
  return static_cast<double>(value);
}

double stieltjes_gamma1() {
  const long double n = kConstantsN;
  const long double log_n = std::log(n);
  long double sum = 0.0L;
  for (int j = kConstantsN; j >= 2; --j) sum += std::log(static_cast<long double>(j)) / j;
  long double value = sum - 0.5L * log_n * log_n - 0.5L * log_n / n;
  // f(x) = log x / x: f^(2i-1)(N) = -(2i-1)! (log N - H_{2i-1}) / N^{2i}
  long double harmonic = 0.0L;
  long double power = n * n;
  int h_upto = 0;
  for (int i = 1; i <= kConstantsDepth; ++i) {
    while (h_upto < 2 * i - 1) harmonic += 1.0L / ++h_upto;
    value += bernoulli_ld(2 * i) * (log_n - harmonic) / (2.0L * i * power);
    power *= n * n;
  }
  return static_cast<double>(value);
}

}  // namespace hz::oracle
