#pragma once

// Complex scalars and truncated Taylor series ("jets") in one formal
// variable. A jet of order R at s0 stores f(s0), f'(s0), f''(s0)/2!, ...,
// f^(R)(s0)/R!; arithmetic on jets propagates all R derivatives at once.
//
// The public API works in binary64 (Jet). ExtJet carries the same arithmetic
// in x87 extended precision for the summation kernels whose terms cancel
// heavily; results are narrowed back to Jet before they leave those kernels.

#include <cmath>
#include <complex>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hz/error.hpp"

namespace hz {

using Complex = std::complex<double>;
using ExtComplex = std::complex<long double>;

template <typename Real>
bool is_finite(std::complex<Real> z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Throws Error(kNonFinite) naming `what` if either component is NaN or inf.
template <typename Real>
std::complex<Real> require_finite(std::complex<Real> z, const char* what) {
  if (!is_finite(z)) throw Error(ErrorCode::kNonFinite, std::string("non-finite ") + what);
  return z;
}

/// Principal-branch complex logarithm; base 0 is a domain error.
template <typename Real>
std::complex<Real> principal_log(std::complex<Real> z) {
  if (z == std::complex<Real>{}) throw Error(ErrorCode::kDomainError, "logarithm of zero");
  return std::log(z);
}

template <typename Real>
class BasicJet {
 public:
  using Scalar = std::complex<Real>;

  /// Zero jet of the given order.
  explicit BasicJet(int order = 0) {
    if (order < 0) throw Error(ErrorCode::kInvalidArgument, "jet order must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Scalar{});
  }

  explicit BasicJet(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "jet needs at least one coefficient");
    }
    check_finite();
  }

  BasicJet(std::initializer_list<Scalar> coeffs) : BasicJet(std::vector<Scalar>(coeffs)) {}

  static BasicJet constant(Scalar c, int order) {
    BasicJet out(order);
    out.coeffs_[0] = require_finite(c, "jet constant");
    return out;
  }

  /// Jet of the identity function at s0: [s0, 1, 0, ..., 0].
  static BasicJet variable(Scalar s0, int order) {
    BasicJet out = constant(s0, order);
    if (order >= 1) out.coeffs_[1] = Real{1};
    return out;
  }

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Scalar> coeffs() const noexcept { return coeffs_; }
  Scalar operator[](int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
  Scalar value() const noexcept { return coeffs_.front(); }

  /// Raw derivative f^(j)(s0) = j! * coeffs[j].
  Scalar derivative(int j) const {
    Real fact = 1;
    for (int i = 2; i <= j; ++i) fact *= static_cast<Real>(i);
    return (*this)[j] * fact;
  }

  /// Max-modulus over coefficients.
  Real norm() const noexcept {
    Real m = 0;
    for (const Scalar& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
  }

  BasicJet& operator+=(const BasicJet& other) {
    require_same_order(other);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
    check_finite();
    return *this;
  }

  BasicJet& operator-=(const BasicJet& other) {
    require_same_order(other);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= other.coeffs_[j];
    check_finite();
    return *this;
  }

  BasicJet& operator*=(const BasicJet& other) { return *this = *this * other; }

  BasicJet& operator*=(Scalar c) {
    for (Scalar& x : coeffs_) x *= c;
    check_finite();
    return *this;
  }

  BasicJet& operator+=(Scalar c) {
    coeffs_[0] += c;
    check_finite();
    return *this;
  }

  friend BasicJet operator+(BasicJet a, const BasicJet& b) { return a += b; }
  friend BasicJet operator-(BasicJet a, const BasicJet& b) { return a -= b; }
  friend BasicJet operator*(BasicJet a, Scalar c) { return a *= c; }
  friend BasicJet operator*(Scalar c, BasicJet a) { return a *= c; }
  friend BasicJet operator+(BasicJet a, Scalar c) { return a += c; }
  friend BasicJet operator-(BasicJet a) { return a *= Scalar{-1}; }

  /// Truncated Cauchy product.
  friend BasicJet operator*(const BasicJet& a, const BasicJet& b) {
    a.require_same_order(b);
    const int order = a.order();
    std::vector<Scalar> out(static_cast<std::size_t>(order) + 1);
    for (int j = 0; j <= order; ++j) {
      Scalar acc{};
      for (int i = 0; i <= j; ++i) acc += a.coeffs_[i] * b.coeffs_[j - i];
      out[j] = acc;
    }
    return BasicJet(std::move(out));
  }

  friend bool operator==(const BasicJet&, const BasicJet&) = default;

 private:
  void check_finite() const {
    for (const Scalar& c : coeffs_) require_finite(c, "jet coefficient");
  }

  void require_same_order(const BasicJet& other) const {
    if (order() != other.order()) {
      throw Error(ErrorCode::kOrderMismatch, "jet order mismatch: " +
                                                 std::to_string(order()) + " vs " +
                                                 std::to_string(other.order()));
    }
  }

  std::vector<Scalar> coeffs_;
};

using Jet = BasicJet<double>;
using ExtJet = BasicJet<long double>;

template <typename To, typename From>
BasicJet<To> jet_cast(const BasicJet<From>& a) {
  std::vector<std::complex<To>> out;
  out.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) {
    out.emplace_back(static_cast<To>(c.real()), static_cast<To>(c.imag()));
  }
  return BasicJet<To>(std::move(out));
}

inline Jet jet_variable(Complex s0, int order) { return Jet::variable(s0, order); }
inline Jet jet_add(const Jet& a, const Jet& b) { return a + b; }
inline Jet jet_mul(const Jet& a, const Jet& b) { return a * b; }

/// Truncated Taylor reciprocal; leading coefficient 0 raises kSingularJet.
template <typename Real>
BasicJet<Real> jet_reciprocal(const BasicJet<Real>& a) {
  using Scalar = std::complex<Real>;
  const Scalar lead = a[0];
  if (lead == Scalar{}) {
    throw Error(ErrorCode::kSingularJet, "reciprocal of jet with zero leading coefficient");
  }
  const int order = a.order();
  std::vector<Scalar> out(static_cast<std::size_t>(order) + 1);
  out[0] = Real{1} / lead;
  for (int j = 1; j <= order; ++j) {
    Scalar acc{};
    for (int i = 1; i <= j; ++i) acc += a[i] * out[j - i];
    out[j] = -acc / lead;
  }
  return BasicJet<Real>(std::move(out));
}

namespace detail {

// exp of a jet whose constant term exp(a[0]) is supplied by the caller.
// b = exp(a) satisfies b' = a' b, so j b_j = sum_{i=1..j} i a_i b_{j-i}.
template <typename Real>
BasicJet<Real> jet_exp_with_lead(const BasicJet<Real>& a, std::complex<Real> lead) {
  using Scalar = std::complex<Real>;
  const int order = a.order();
  std::vector<Scalar> out(static_cast<std::size_t>(order) + 1);
  out[0] = lead;
  for (int j = 1; j <= order; ++j) {
    Scalar acc{};
    for (int i = 1; i <= j; ++i) acc += static_cast<Real>(i) * a[i] * out[j - i];
    out[j] = acc / static_cast<Real>(j);
  }
  return BasicJet<Real>(std::move(out));
}

}  // namespace detail

template <typename Real>
BasicJet<Real> jet_exp(const BasicJet<Real>& a) {
  return detail::jet_exp_with_lead(a, std::exp(a[0]));
}

/// Jet of w -> base^(-w) along s_jet, principal branch:
/// exp(-Log(base) * s_jet). base == 0 raises kDomainError.
template <typename Real>
BasicJet<Real> jet_pow_negs(std::complex<Real> base, const BasicJet<Real>& s_jet) {
  if (base == std::complex<Real>{}) {
    throw Error(ErrorCode::kDomainError, "base^(-s) with base 0");
  }
  require_finite(base, "power base");
  // |s log base| reaches a few dozen on desk-scale arguments, so the exponent
  // of the constant term is formed in extended precision.
  const ExtComplex log_ext = std::log(ExtComplex(base.real(), base.imag()));
  const auto s0 = s_jet[0];
  const ExtComplex lead = std::exp(-log_ext * ExtComplex(s0.real(), s0.imag()));
  return detail::jet_exp_with_lead(
      s_jet * (-principal_log(base)),
      std::complex<Real>(static_cast<Real>(lead.real()), static_cast<Real>(lead.imag())));
}

inline Jet jet_pow_negs(Complex base, const Jet& s_jet) {
  return jet_pow_negs<double>(base, s_jet);
}

/// Neumaier-compensated accumulator over complex values.
template <typename Real>
class BasicCompensatedSum {
 public:
  using Scalar = std::complex<Real>;

  void add(Scalar x) noexcept {
    Real re = sum_.real(), im = sum_.imag();
    Real cre = comp_.real(), cim = comp_.imag();
    two_sum(re, x.real(), cre);
    two_sum(im, x.imag(), cim);
    sum_ = {re, im};
    comp_ = {cre, cim};
  }

  Scalar result() const noexcept { return sum_ + comp_; }

 private:
  static void two_sum(Real& sum, Real b, Real& comp) noexcept {
    const Real s = sum + b;
    if (std::abs(sum) >= std::abs(b)) {
      comp += (sum - s) + b;
    } else {
      comp += (b - s) + sum;
    }
    sum = s;
  }

  Scalar sum_{};
  Scalar comp_{};
};

using CompensatedSum = BasicCompensatedSum<double>;

/// Coefficientwise compensated accumulation of jets of a fixed order.
template <typename Real>
class BasicJetAccumulator {
 public:
  explicit BasicJetAccumulator(int order) {
    if (order < 0) throw Error(ErrorCode::kInvalidArgument, "jet order must be >= 0");
    parts_.resize(static_cast<std::size_t>(order) + 1);
  }

  void add(const BasicJet<Real>& term) {
    if (term.order() != order()) {
      throw Error(ErrorCode::kOrderMismatch, "accumulator order mismatch");
    }
    for (int j = 0; j <= order(); ++j) parts_[j].add(term[j]);
  }

  BasicJet<Real> result() const {
    std::vector<std::complex<Real>> out;
    out.reserve(parts_.size());
    for (const auto& p : parts_) out.push_back(p.result());
    return BasicJet<Real>(std::move(out));
  }

  int order() const noexcept { return static_cast<int>(parts_.size()) - 1; }

 private:
  std::vector<BasicCompensatedSum<Real>> parts_;
};

using JetAccumulator = BasicJetAccumulator<double>;
using ExtJetAccumulator = BasicJetAccumulator<long double>;

}  // namespace hz
