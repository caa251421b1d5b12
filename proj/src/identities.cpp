#include "hz/identities.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "hz/error.hpp"
#include "hz/stieltjes.hpp"

namespace hz {

namespace {

constexpr double kIdentityTolerance = 1e-5;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

// r-th raw s-derivative of zeta(s, alpha) at s0.
Complex sderiv(Complex s0, Complex alpha, int r, const SeriesParams& p) {
  return hurwitz_jet(s0, alpha, r, p).value.derivative(r);
}

// Central difference of order m along the real alpha direction:
// sum_i (-1)^i C(m, i) f(alpha + (m/2 - i) h) / h^m.
Complex central_difference(const std::function<Complex(Complex)>& f, Complex alpha, int m,
                           double h) {
  Complex acc{};
  for (int i = 0; i <= m; ++i) {
    const double offset = (0.5 * m - i) * h;
    const double sign = i % 2 == 0 ? 1.0 : -1.0;
    acc += sign * binomial(m, i) * f(alpha + offset);
  }
  return acc / std::pow(h, m);
}

template <typename F>
Complex on_side(const char* side, F&& eval) {
  try {
    return eval();
  } catch (const Error& e) {
    throw Error(e.code(), std::string(side) + ": " + e.what());
  }
}

}  // namespace

std::string_view to_string(Identity id) noexcept {
  switch (id) {
    case Identity::kInterchange:
      return "interchange";
    case Identity::kRecurrence:
      return "recurrence";
    case Identity::kAtZero:
      return "at_zero";
    case Identity::kAtOne:
      return "at_one";
    case Identity::kGammaDeriv:
      return "gamma_deriv";
    case Identity::kMixedPartials:
      return "mixed";
  }
  return "unknown";
}

std::optional<Identity> parse_identity(std::string_view name) noexcept {
  constexpr std::array kAll = {Identity::kInterchange, Identity::kRecurrence,
                               Identity::kAtZero,      Identity::kAtOne,
                               Identity::kGammaDeriv,  Identity::kMixedPartials};
  for (Identity id : kAll) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

double identity_tolerance(Identity) noexcept { return kIdentityTolerance; }

Complex dalpha_of_sderiv(Complex s0, Complex alpha, int r, const SeriesParams& p) {
  if (r < 0) throw Error(ErrorCode::kInvalidArgument, "r must be >= 0");
  const Complex shifted = s0 + 1.0;
  if (std::abs(s0) < kNearPoleRadius) {
    // d^r/ds^r of -s zeta(s + 1, alpha) = -(w - 1) zeta(w, alpha), w = s + 1.
    return -hurwitz_regularized_jet(shifted, alpha, r, p).value.derivative(r);
  }
  const Jet jet = hurwitz_jet(shifted, alpha, r, p).value;
  const Complex top = jet.derivative(r);
  if (r == 0) return -s0 * top;
  return -static_cast<double>(r) * jet.derivative(r - 1) - s0 * top;
}

Complex dalpha_sderiv_at_zero(Complex alpha, int r, const SeriesParams& p) {
  if (r < 0) throw Error(ErrorCode::kInvalidArgument, "r must be >= 0");
  if (r == 0) {
    // gamma_{-1}(alpha) = 1; still reject excluded alpha.
    hurwitz_difference_jet(Complex{1.0, 0.0}, alpha, 0, p);
    return -1.0;
  }
  const LaurentExpansion laurent = generalized_stieltjes(alpha, r - 1, p);
  return -factorial(r) * laurent.gammas[r - 1];
}

Complex dalpha_sderiv_at_zero_regularized(Complex alpha, int r, const SeriesParams& p) {
  if (r < 0) throw Error(ErrorCode::kInvalidArgument, "r must be >= 0");
  return -hurwitz_regularized_jet(Complex{1.0, 0.0}, alpha, r, p).value.derivative(r);
}

IdentityReport verify_identity(const IdentityQuery& q, const SeriesParams& p) {
  if (!(q.h > 0.0)) throw Error(ErrorCode::kInvalidArgument, "finite-difference step must be > 0");
  if (q.r < 0) throw Error(ErrorCode::kInvalidArgument, "r must be >= 0");
  const int r = q.r;
  IdentityReport rep;

  // Orders m >= 2 take one Richardson step on (h, h/2); the plain O(h^2)
  // stencil at h = 1e-3 is not accurate enough near small alpha.
  auto fd_sderiv = [&](Complex s0, int m) {
    auto f = [&](Complex a) { return sderiv(s0, a, r, p); };
    const Complex coarse = central_difference(f, q.alpha, m, q.h);
    if (m == 1) return coarse;
    const Complex fine = central_difference(f, q.alpha, m, 0.5 * q.h);
    return (4.0 * fine - coarse) / 3.0;
  };

  switch (q.id) {
    case Identity::kInterchange:
      rep.lhs = on_side("lhs", [&] { return fd_sderiv(q.s0, 1); });
      rep.rhs = on_side("rhs", [&] {
        return hurwitz_alpha_derivative(q.s0, q.alpha, 1, r, p).value.derivative(r);
      });
      rep.method_notes = "lhs: central difference in alpha of zeta^(r)(s0, .); "
                         "rhs: d^r/ds^r of -s zeta(s+1, alpha)";
      break;
    case Identity::kRecurrence:
      rep.lhs = on_side("lhs", [&] { return fd_sderiv(q.s0, 1); });
      rep.rhs = on_side("rhs", [&] { return dalpha_of_sderiv(q.s0, q.alpha, r, p); });
      rep.method_notes = "lhs: central difference in alpha of zeta^(r)(s0, .); "
                         "rhs: -r zeta^(r-1)(s0+1, alpha) - s0 zeta^(r)(s0+1, alpha)";
      break;
    case Identity::kAtZero:
      rep.lhs = on_side("lhs", [&] { return fd_sderiv(Complex{}, 1); });
      rep.rhs = on_side("rhs", [&] { return dalpha_sderiv_at_zero(q.alpha, r, p); });
      rep.method_notes = "lhs: central difference in alpha of zeta^(r)(0, .); "
                         "rhs: -r! gamma_{r-1}(alpha)";
      break;
    case Identity::kAtOne:
      rep.lhs = on_side("lhs", [&] {
        return factorial(r) *
               central_difference(
                   [&](Complex a) { return generalized_stieltjes(a, r, p).gammas[r]; },
                   q.alpha, 1, q.h);
      });
      rep.rhs = on_side("rhs", [&] { return dalpha_of_sderiv(Complex{1.0, 0.0}, q.alpha, r, p); });
      rep.method_notes = "lhs: r! times central difference in alpha of gamma_r(alpha); "
                         "rhs: -r zeta^(r-1)(2, alpha) - zeta^(r)(2, alpha)";
      break;
    case Identity::kGammaDeriv:
      rep.lhs = on_side("lhs", [&] {
        return central_difference(
            [&](Complex a) { return generalized_stieltjes(a, r, p).gammas[r]; }, q.alpha, 1,
            q.h);
      });
      rep.rhs = on_side("rhs", [&] { return dgamma_dalpha(q.alpha, r, p); });
      rep.method_notes = "lhs: central difference in alpha of gamma_r(alpha); "
                         "rhs: closed form via zeta^(r)(2, alpha)";
      break;
    case Identity::kMixedPartials:
      if (q.m < 1) throw Error(ErrorCode::kInvalidArgument, "mixed partials need m >= 1");
      rep.lhs = on_side("lhs", [&] { return fd_sderiv(q.s0, q.m); });
      rep.rhs = on_side("rhs", [&] {
        return hurwitz_alpha_derivative(q.s0, q.alpha, q.m, r, p).value.derivative(r);
      });
      rep.method_notes = "lhs: order-m central difference in alpha of zeta^(r)(s0, .), "
                         "Richardson-extrapolated over h and h/2; "
                         "rhs: d^r/ds^r of (-1)^m (s)_m zeta(s+m, alpha)";
      break;
  }
  rep.abs_residual = std::abs(rep.lhs - rep.rhs);
  rep.rel_residual =
      rep.abs_residual / std::max({1.0, std::abs(rep.lhs), std::abs(rep.rhs)});
  return rep;
}

}  // namespace hz
