#include "hz/zetacore.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "hz/error.hpp"

namespace hz {

namespace {

struct Rational {
  long double num;
  long double den;
};

// B_2 .. B_30.
constexpr std::array<Rational, 15> kBernoulliEven = {{
    {1.0L, 6.0L},
    {-1.0L, 30.0L},
    {1.0L, 42.0L},
    {-1.0L, 30.0L},
    {5.0L, 66.0L},
    {-691.0L, 2730.0L},
    {7.0L, 6.0L},
    {-3617.0L, 510.0L},
    {43867.0L, 798.0L},
    {-174611.0L, 330.0L},
    {854513.0L, 138.0L},
    {-236364091.0L, 2730.0L},
    {8553103.0L, 6.0L},
    {-23749461029.0L, 870.0L},
    {8615841276005.0L, 14322.0L},
}};

constexpr std::array<long double, 15> make_bernoulli_over_factorial() {
  std::array<long double, 15> out{};
  long double fact = 1.0L;
  for (int j = 1; j <= 15; ++j) {
    fact *= (2.0L * j - 1.0L) * (2.0L * j);
    out[j - 1] = kBernoulliEven[j - 1].num / kBernoulliEven[j - 1].den / fact;
  }
  return out;
}

constexpr std::array<long double, 15> kBernoulliOverFactorial = make_bernoulli_over_factorial();

// Stieltjes tables use one cutoff for every R <= 20 (the auto rule at order 21).
constexpr int kStieltjesCutoff = 48;

void require_not_pole(Complex s0) {
  if (s0 == Complex{1.0, 0.0}) {
    throw Error(ErrorCode::kPoleAtOne, "zeta has a pole at s = 1");
  }
  if (std::abs(s0 - 1.0) < kNearPoleRadius) {
    throw Error(ErrorCode::kNearPole,
                "s within 1e-8 of the pole at 1; use the regularized form");
  }
}

// sum_{n >= start} n^-w continued by Euler-Maclaurin at cutoff M >= start.
// With `regularized` the whole expression is multiplied by (w - 1), and the
// integral term M^(1-w)/(w-1) becomes the entire M^(1-w). The direct sum and
// the M^(1-w) term cancel to many digits when Re w < 0, so the kernel runs
// in extended precision.
detail::ExtJetEstimate dirichlet_tail(Complex w0, int start, int order, int cutoff,
                                      int depth, bool regularized) {
  using X = ExtComplex;
  const ExtJet w = ExtJet::variable(X(w0.real(), w0.imag()), order);
  const ExtJet w_minus_one = w + X{-1.0L};
  const int m = std::max(cutoff, start);
  const long double mf = m;

  ExtJetAccumulator sum(order);
  long double magnitude = 0.0L;  // sum of term norms, for the rounding estimate
  for (int n = start; n < m; ++n) {
    const ExtJet term = jet_pow_negs(X(static_cast<long double>(n)), w);
    magnitude += term.norm();
    sum.add(term);
  }

  const ExtJet m_pow = jet_pow_negs(X(mf), w);  // M^-w
  sum.add(m_pow * X{0.5L});
  magnitude += m_pow.norm();

  // sum_j B_2j/(2j)! (w)_{2j-1} M^(-w-2j+1)
  ExtJet rising = w;
  ExtJet scaled = m_pow * X{1.0L / mf};
  const X inv_m2{1.0L / (mf * mf)};
  long double last = 0.0L;
  for (int j = 1; j <= depth; ++j) {
    const ExtJet term = rising * scaled * X{kBernoulliOverFactorial[j - 1]};
    sum.add(term);
    last = term.norm();
    rising *= (w + X{2.0L * j - 1.0L}) * (w + X{2.0L * j});
    scaled *= inv_m2;
  }

  const ExtJet pole_part = m_pow * X{mf};  // M^(1-w)
  ExtJet out(order);
  if (regularized) {
    const long double scale = std::max(1.0L, w_minus_one.norm());
    out = w_minus_one * sum.result() + pole_part;
    last *= scale;
    magnitude = magnitude * scale + pole_part.norm();
  } else {
    const ExtJet pole_term = pole_part * jet_reciprocal(w_minus_one);
    out = sum.result() + pole_term;
    magnitude += pole_term.norm();
  }
  // Truncation (last correction), extended-precision rounding across the
  // summed terms, and the final narrowing to binary64.
  // exp(-w log n) loses about |w| log n ulps.
  const long double growth = 4.0L + std::abs(w.value()) * std::log(mf);
  const long double rounding = growth * std::numeric_limits<long double>::epsilon() * magnitude;
  return {std::move(out), last + rounding};
}

JetEstimate narrow(const detail::ExtJetEstimate& e) {
  Jet jet = jet_cast<double>(e.jet);
  const double err = static_cast<double>(e.err_estimate) +
                     std::numeric_limits<double>::epsilon() * jet.norm();
  return {std::move(jet), err};
}

}  // namespace

void EulerMaclaurinParams::validate() const {
  if (cutoff != 0 && cutoff < 2) {
    throw Error(ErrorCode::kInvalidArgument, "Euler-Maclaurin cutoff must be >= 2");
  }
  if (bernoulli_depth < 1 || bernoulli_depth > 15) {
    throw Error(ErrorCode::kInvalidArgument, "bernoulli_depth must be in [1, 15]");
  }
}

int EulerMaclaurinParams::resolved_cutoff(Complex s0, int order) const {
  if (cutoff != 0) return cutoff;
  const double want = std::ceil(2.0 * std::abs(s0) + 2.0 * order);
  return std::max(16, static_cast<int>(want));
}

double bernoulli_over_factorial(int j) {
  if (j < 1 || j > 15) throw Error(ErrorCode::kInvalidArgument, "index out of range");
  return static_cast<double>(kBernoulliOverFactorial[j - 1]);
}

JetEstimate riemann_zeta_jet(Complex s0, int order, const EulerMaclaurinParams& p) {
  return zeta_tail_jet(s0, 1, order, p);
}

JetEstimate zeta_tail_jet(Complex s0, int k, int order, const EulerMaclaurinParams& p) {
  return narrow(detail::zeta_tail_ext(s0, k, order, p));
}

JetEstimate regularized_tail_jet(Complex w0, int k, int order,
                                 const EulerMaclaurinParams& p) {
  return narrow(detail::regularized_tail_ext(w0, k, order, p));
}

namespace detail {

ExtJetEstimate zeta_tail_ext(Complex s0, int k, int order, const EulerMaclaurinParams& p) {
  p.validate();
  require_finite(s0, "s");
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  require_not_pole(s0);
  return dirichlet_tail(s0, k, order, p.resolved_cutoff(s0, order), p.bernoulli_depth,
                        false);
}

ExtJetEstimate regularized_tail_ext(Complex w0, int k, int order,
                                    const EulerMaclaurinParams& p) {
  p.validate();
  require_finite(w0, "w");
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  return dirichlet_tail(w0, k, order, p.resolved_cutoff(w0, order), p.bernoulli_depth,
                        true);
}

}  // namespace detail

StieltjesTable stieltjes_constants(int R, const EulerMaclaurinParams& p) {
  if (R < 0 || R > 20) {
    throw Error(ErrorCode::kInvalidArgument,
                "Stieltjes order must be in [0, 20], got " + std::to_string(R));
  }
  p.validate();
  const int cutoff = p.cutoff != 0 ? p.cutoff : kStieltjesCutoff;
  const JetEstimate reg =
      narrow(dirichlet_tail(Complex{1.0, 0.0}, 1, R + 1, cutoff, p.bernoulli_depth, true));
  StieltjesTable table;
  for (int r = 0; r <= R; ++r) table.gammas.push_back(reg.jet[r + 1]);
  return table;
}

}  // namespace hz
