#include "hz/hurwitz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hz/error.hpp"

namespace hz {

namespace {

constexpr double kHeadBaseEpsilon = 1e-12;
constexpr int kQuietTermsToStop = 3;

constexpr double kMaxSeriesGrowth = 1e3;
constexpr int kMaxAutoK = 64;

// Starts at choose_k and raises k until the majorant growth
// (1 - |alpha|/k)^-|s0| is at most kMaxSeriesGrowth.
int auto_k(Complex s0, Complex alpha) {
  const double a = std::abs(alpha);
  const double limit = std::log(kMaxSeriesGrowth) / std::max(std::abs(s0), 1e-300);
  int k = choose_k(alpha);
  while (k < kMaxAutoK && -std::log1p(-a / k) > limit) ++k;
  return k;
}

int resolve_k(Complex s0, Complex alpha, const SeriesParams& p) {
  if (!p.k) return auto_k(s0, alpha);
  const int k = *p.k;
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  if (!(std::abs(alpha) < k)) {
    throw Error(ErrorCode::kInvalidArgument,
                "series in alpha needs |alpha| < k (k = " + std::to_string(k) + ")");
  }
  return k;
}

// First n at which the term ratio |s0 + n| |alpha| / (k (n + 1)) drops below
// one; terms before it may still be growing.
int first_decaying_index(Complex s0, double beta, int cap) {
  int n = 1;
  while (n < cap && std::abs(s0 + static_cast<double>(n)) * beta >= n + 1.0) ++n;
  return n;
}

ExtComplex widen(Complex z) { return {z.real(), z.imag()}; }

// sum_{0<=n<k} (n + alpha)^-s along s_jet.
ExtJet head_sum(Complex alpha, int k, const ExtJet& s) {
  ExtJetAccumulator acc(s.order());
  for (int n = 0; n < k; ++n) {
    const ExtComplex base = widen(alpha) + static_cast<long double>(n);
    if (std::abs(base) < kHeadBaseEpsilon) {
      throw Error(ErrorCode::kDomainError,
                  "alpha + " + std::to_string(n) +
                      " vanishes; alpha in {0, -1, -2, ...} is excluded");
    }
    acc.add(jet_pow_negs(base, s));
  }
  return acc.result();
}

// sum_{1<=n<k} n^-s along s_jet.
ExtJet integer_head_sum(int k, const ExtJet& s) {
  ExtJetAccumulator acc(s.order());
  for (int n = 1; n < k; ++n) {
    acc.add(jet_pow_negs(ExtComplex{static_cast<long double>(n), 0.0L}, s));
  }
  return acc.result();
}

struct SeriesSum {
  ExtJet sum;
  long double err = 0.0L;
  int terms = 0;
};

// sum_{n>=1} a_n(s) B_k(s + n) with a_n = (-alpha)^n / n! * s (s+1) ... (s+n-2).
// `rest` is the remainder of the quantity being assembled; the running norm
// used for the stopping rule is that of rest + partial sum.
SeriesSum alpha_series(Complex s0, Complex alpha, int k, int r, const SeriesParams& p,
                       const ExtJet& rest) {
  const ExtJet s = ExtJet::variable(widen(s0), r);
  const ExtComplex minus_alpha = -widen(alpha);
  const double beta = std::abs(alpha) / k;
  const int min_terms = first_decaying_index(s0, beta, p.max_terms);

  ExtJetAccumulator acc(r);
  acc.add(rest);
  ExtJetAccumulator tail(r);
  ExtJet a = ExtJet::constant(minus_alpha, r);
  long double err = 0.0L;
  int quiet = 0;
  for (int n = 1; n <= p.max_terms; ++n) {
    const Complex w0 = s0 + static_cast<double>(n);
    const detail::ExtJetEstimate reg = detail::regularized_tail_ext(w0, k, r, p.em);
    const ExtJet term = a * reg.jet;
    acc.add(term);
    tail.add(term);
    err += a.norm() * reg.err_estimate;

    const long double term_norm = term.norm();
    const long double running = acc.result().norm();
    quiet = term_norm <= p.tol * running ? quiet + 1 : 0;
    if (quiet >= kQuietTermsToStop && n >= min_terms) {
      return {tail.result(), err + term_norm, n};
    }
    // a_{n+1} = a_n (-alpha) (s + n - 1) / (n + 1)
    a *= (s + ExtComplex{n - 1.0L, 0.0L}) * (minus_alpha / (n + 1.0L));
  }
  throw Error(ErrorCode::kNonconvergence,
              "alpha-series did not reach tol " + std::to_string(p.tol) + " within " +
                  std::to_string(p.max_terms) + " terms");
}

EvalResult finish(const ExtJet& value, long double err, int k, int terms) {
  Jet narrowed = jet_cast<double>(value);
  const double total =
      static_cast<double>(err) + std::numeric_limits<double>::epsilon() * narrowed.norm();
  return {std::move(narrowed), total, k, terms};
}

void validate_inputs(Complex s0, Complex alpha, int r, const SeriesParams& p) {
  p.validate();
  require_finite(s0, "s");
  require_finite(alpha, "alpha");
  if (r < 0) throw Error(ErrorCode::kInvalidArgument, "derivative order r must be >= 0");
}

}  // namespace

void SeriesParams::validate() const {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw Error(ErrorCode::kInvalidArgument, "tol must be positive");
  }
  if (max_terms < 8) throw Error(ErrorCode::kInvalidArgument, "max_terms must be >= 8");
  em.validate();
}

int choose_k(Complex alpha) {
  return std::max(1, static_cast<int>(std::floor(1.5 * std::abs(alpha))) + 1);
}

EvalResult hurwitz_jet(Complex s0, Complex alpha, int r, const SeriesParams& p) {
  validate_inputs(s0, alpha, r, p);
  const int k = resolve_k(s0, alpha, p);
  const ExtJet s = ExtJet::variable(widen(s0), r);
  const ExtJet head = head_sum(alpha, k, s);
  const detail::ExtJetEstimate tail0 = detail::zeta_tail_ext(s0, k, r, p.em);
  const ExtJet rest = head + tail0.jet;
  const SeriesSum series = alpha_series(s0, alpha, k, r, p, rest);
  return finish(rest + series.sum, tail0.err_estimate + series.err, k, series.terms);
}

EvalResult hurwitz_regularized_jet(Complex w0, Complex alpha, int r,
                                   const SeriesParams& p) {
  validate_inputs(w0, alpha, r, p);
  const int k = resolve_k(w0, alpha, p);
  const ExtJet w = ExtJet::variable(widen(w0), r);
  const ExtJet w_minus_one = w + ExtComplex{-1.0L, 0.0L};
  const ExtJet head = head_sum(alpha, k, w);
  const detail::ExtJetEstimate reg0 = detail::regularized_tail_ext(w0, k, r, p.em);
  const ExtJet rest = w_minus_one * head + reg0.jet;
  const long double scale = std::max(1.0L, std::abs(widen(w0) - 1.0L));
  const SeriesSum series = alpha_series(w0, alpha, k, r, p, rest);
  return finish(rest + w_minus_one * series.sum, reg0.err_estimate + scale * series.err, k,
                series.terms);
}

EvalResult hurwitz_difference_jet(Complex s0, Complex alpha, int r,
                                  const SeriesParams& p) {
  validate_inputs(s0, alpha, r, p);
  const int k = resolve_k(s0, alpha, p);
  const ExtJet s = ExtJet::variable(widen(s0), r);
  const ExtJet rest = head_sum(alpha, k, s) - integer_head_sum(k, s);
  const SeriesSum series = alpha_series(s0, alpha, k, r, p, rest);
  return finish(rest + series.sum, series.err, k, series.terms);
}

EvalResult hurwitz_alpha_derivative(Complex s0, Complex alpha, int m, int r,
                                    const SeriesParams& p) {
  if (m < 0) throw Error(ErrorCode::kInvalidArgument, "alpha-derivative order must be >= 0");
  validate_inputs(s0, alpha, r, p);
  const Complex shifted = s0 + static_cast<double>(m);
  if (shifted == Complex{1.0, 0.0}) {
    throw Error(ErrorCode::kPoleAtOne,
                "s0 + m == 1 places zeta(s + m, alpha) on its pole");
  }
  EvalResult inner = hurwitz_jet(shifted, alpha, r, p);
  if (m == 0) return inner;

  const Jet s = Jet::variable(s0, r);
  Jet rising = Jet::constant(m % 2 == 0 ? 1.0 : -1.0, r);
  for (int j = 0; j < m; ++j) rising *= s + Complex{static_cast<double>(j), 0.0};
  inner.err_estimate *= std::max(1.0, rising.norm());
  inner.value = rising * inner.value;
  return inner;
}

double convergence_bound(Complex s0, Complex alpha, int k) {
  require_finite(s0, "s");
  require_finite(alpha, "alpha");
  if (k < 1 || !(std::abs(alpha) < k)) {
    throw Error(ErrorCode::kInvalidArgument, "convergence bound needs |alpha| < k");
  }
  if (!(s0.real() > 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "convergence bound needs Re s0 > 1");
  }
  const double zeta_sigma = riemann_zeta_jet(Complex{s0.real(), 0.0}, 0).jet.value().real();
  return zeta_sigma * std::pow(1.0 - std::abs(alpha) / k, -std::abs(s0));
}

double absolute_tail_sum(Complex s0, Complex alpha, int k) {
  require_finite(s0, "s");
  require_finite(alpha, "alpha");
  if (k < 1 || !(std::abs(alpha) < k)) {
    throw Error(ErrorCode::kInvalidArgument, "tail sum needs |alpha| < k");
  }
  if (!(s0.real() > 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tail sum needs Re s0 > 1");
  }
  constexpr int kCap = 20000;
  const double a = std::abs(alpha);
  const int min_terms = first_decaying_index(s0, a / k, kCap);
  double coef = std::abs(s0) * a;  // |(s)_n| |alpha|^n / n! at n = 1
  double total = 0.0;
  for (int n = 1; n < kCap; ++n) {
    const Complex w = s0 + static_cast<double>(n);
    const double term = coef * std::abs(zeta_tail_jet(w, k, 0).jet.value());
    total += term;
    if (n >= min_terms && term <= 1e-17 * total) break;
    coef *= std::abs(w) * a / (n + 1.0);
  }
  return total;
}

}  // namespace hz
