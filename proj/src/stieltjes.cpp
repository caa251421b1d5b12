#include "hz/stieltjes.hpp"

#include <string>

#include "hz/error.hpp"

namespace hz {

namespace {

void require_laurent_order(int R) {
  if (R < 0 || R > kMaxLaurentOrder) {
    throw Error(ErrorCode::kInvalidArgument,
                "Laurent order must be in [0, " + std::to_string(kMaxLaurentOrder) +
                    "], got " + std::to_string(R));
  }
}

}  // namespace

LaurentExpansion generalized_stieltjes(Complex alpha, int R, const SeriesParams& p) {
  require_laurent_order(R);
  const Complex one{1.0, 0.0};
  const EvalResult diff = hurwitz_difference_jet(one, alpha, R, p);
  const StieltjesTable classical = stieltjes_constants(R, p.em);
  // (w - 1) zeta(w, alpha) at w = 1; its constant term is the pole residue.
  const EvalResult residue = hurwitz_regularized_jet(one, alpha, 0, p);

  LaurentExpansion out;
  out.pole_coeff = residue.value.value();
  out.alpha = alpha;
  out.order = R;
  out.err_estimate = diff.err_estimate;
  out.k_used = diff.k_used;
  out.terms_used = diff.terms_used;
  out.gammas.reserve(static_cast<std::size_t>(R) + 1);
  for (int r = 0; r <= R; ++r) out.gammas.push_back(classical.gammas[r] + diff.value[r]);
  return out;
}

std::vector<Complex> generating_series_at_zero(Complex alpha, int R, const SeriesParams& p) {
  require_laurent_order(R);
  // s zeta(s + 1, alpha) is (w - 1) zeta(w, alpha) at w = s + 1.
  const EvalResult reg = hurwitz_regularized_jet(Complex{1.0, 0.0}, alpha, R + 1, p);
  const auto c = reg.value.coeffs();
  return {c.begin(), c.end()};
}

Complex dgamma_dalpha(Complex alpha, int r, const SeriesParams& p) {
  if (r < 0) throw Error(ErrorCode::kInvalidArgument, "r must be >= 0");
  const EvalResult at_two = hurwitz_jet(Complex{2.0, 0.0}, alpha, r, p);
  // Jet coefficients already carry the 1/r! normalization.
  if (r == 0) return -at_two.value[0];
  return -at_two.value[r - 1] - at_two.value[r];
}

}  // namespace hz
