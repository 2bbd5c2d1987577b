#pragma once

#include <map>
#include <string>
#include <vector>

#include "hurwitz/pole_form.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

/// The one global sign choice of the recursion: the kernel is
///   K(z', z) = prefactor * (integral from sigma(z) to z of B(z', .)) / ((y(z) - y(sigma(z))) dx(z)).
/// Flipping the prefactor multiplies W_k^(g) by (-1)^k.
struct SignConvention {
  Rational kernel_prefactor;
  std::string name;

  /// +1/2: reproduces the Burnside oracle on the Lambert curve.
  static SignConvention standard();
  /// -1/2 with W_1^(0) = -y dx, as the kernel is usually printed; off by (-1)^k against the oracle.
  static SignConvention printed();

  bool operator==(const SignConvention&) const = default;
};

/// A genus-0 spectral curve expanded around its single simple branch point z*,
/// in the local coordinate zeta = z - z*.
class LocalCurve {
 public:
  /// Builds the involution and kernel denominator from x and y expanded at the branch point.
  /// x_local must have a vanishing zeta^1 and a nonzero zeta^2 coefficient.
  static LocalCurve from_expansions(Rational branch, Series x_local, Series y_local, int order,
                                    SignConvention sign = SignConvention::standard(),
                                    std::string descriptor = "custom");

  const Rational& branch() const { return branch_; }
  const Series& x_local() const { return x_local_; }
  const Series& y_local() const { return y_local_; }
  /// Deck involution: z* + sigma(zeta) is the other sheet over x(z* + zeta).
  const Series& sigma() const { return sigma_; }
  /// (y(zeta) - y(sigma(zeta))) * x'(zeta).
  const Series& omega_local() const { return omega_local_; }
  int order() const { return order_; }
  const SignConvention& sign() const { return sign_; }

  /// Stable identifier of everything that changes recursion output (curve, sign, order).
  std::string fingerprint() const;

 private:
  LocalCurve() = default;

  Rational branch_;
  Series x_local_;
  Series y_local_;
  Series sigma_;
  Series omega_local_;
  int order_ = 0;
  SignConvention sign_;
  std::string descriptor_;
};

/// x(z) = -z + ln z, y(z) = z (t = 1), expanded at the branch point z* = 1.
/// Requires order >= 8.
LocalCurve make_lambert_curve(int order, SignConvention sign = SignConvention::standard());

/// The unique sigma(zeta) = -zeta + O(zeta^2) with x(sigma(zeta)) = x(zeta), known below `order`.
/// Solved through the odd coordinate s with x - x(z*) = c s^2: sigma = s^{-1}(-s(zeta)).
/// Throws std::domain_error when the branch point is not simple.
Series deck_involution(const Series& x_local, int order);

/// B(z0, z* + zeta) = sum_{m >= 0} (m + 1) zeta^m dz0 dzeta / (z0 - z*)^{m+2};
/// entry m is the arity-1 form (m + 1) dz0 / (z0 - z*)^{m+2}.
std::vector<PoleForm> bergman_expansion(int order);

/// Recursion kernel, expanded in zeta with z' kept in the pole basis:
///   K(z', z* + zeta) = sum_{p >= 2} kappa_p(zeta) dz' / (z' - z*)^p   (times 1/dzeta).
class RecursionKernel {
 public:
  explicit RecursionKernel(const LocalCurve& curve);

  /// zeta^{p-1} - sigma^{p-1}: the zeta-series multiplying 1/(z'-z*)^p in 1/(z'-z) - 1/(z'-sigma(z)).
  Series numerator(int p) const;
  /// The kernel coefficient of dz'/(z' - z*)^p; zero for p = 1.
  const Series& kappa(int p);
  /// Smallest zeta exponent over all pole orders.
  int min_exponent();

 private:
  const LocalCurve* curve_;
  Series inverse_omega_;
  std::map<int, Series> kappa_;
};

}  // namespace hurwitz
