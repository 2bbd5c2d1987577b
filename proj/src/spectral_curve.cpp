#include "hurwitz/spectral_curve.hpp"

#include <algorithm>
#include <stdexcept>

namespace hurwitz {

SignConvention SignConvention::standard() { return {Rational(1, 2), "standard"}; }

SignConvention SignConvention::printed() { return {Rational(-1, 2), "printed"}; }

Series deck_involution(const Series& x_local, int order) {
  const Series shifted = x_local - Series::constant(x_local.coeff(0));
  if (shifted.trunc_order() <= 2) throw TruncationError("deck_involution: x_local is too short to locate the branch");
  if (shifted.coeff(1) != 0) throw std::domain_error("deck_involution: dx does not vanish at the expansion point");
  const Rational c2 = shifted.coeff(2);
  if (c2 == 0) throw std::domain_error("deck_involution: branch point is not simple (zeta^2 coefficient vanishes)");

  // x - x(z*) = c2 zeta^2 u(zeta) with u(0) = 1; the odd coordinate s = zeta sqrt(u) satisfies
  // x - x(z*) = c2 s^2, so the other sheet is s -> -s.
  const Series u_minus_one = (Rational(1) / c2) * shifted.shifted(-2) - Series::constant(1);
  const Series sqrt_u = exp(Rational(1, 2) * log1p(u_minus_one, order), order);
  const Series s = mul(Series::monomial(1, 1), sqrt_u, order);
  const Series sigma = compose(reversion(s, order), -s, order).truncated(order);
  if (sigma.trunc_order() < order) {
    throw TruncationError("deck_involution: x_local determines sigma only below order " +
                          std::to_string(sigma.trunc_order()));
  }
  return sigma;
}

LocalCurve LocalCurve::from_expansions(Rational branch, Series x_local, Series y_local, int order,
                                       SignConvention sign, std::string descriptor) {
  LocalCurve c;
  c.branch_ = std::move(branch);
  c.x_local_ = std::move(x_local);
  c.y_local_ = std::move(y_local);
  c.order_ = order;
  c.sign_ = std::move(sign);
  c.descriptor_ = std::move(descriptor);
  c.sigma_ = deck_involution(c.x_local_, order);
  const Series y_at_sigma = compose(c.y_local_, c.sigma_, order);
  c.omega_local_ = mul(c.y_local_.truncated(order + 1) - y_at_sigma, derivative(c.x_local_), order + 1);
  return c;
}

std::string LocalCurve::fingerprint() const {
  return descriptor_ + "|branch=" + to_string(branch_) + "|kernel=" + to_string(sign_.kernel_prefactor) +
         "|order=" + std::to_string(order_);
}

LocalCurve make_lambert_curve(int order, SignConvention sign) {
  if (order < 8) throw std::invalid_argument("make_lambert_curve: order must be at least 8");
  // x(1 + zeta) = -(1 + zeta) + ln(1 + zeta), known one order further than sigma needs.
  const Series x_local = log1p(Series::monomial(1, 1), order + 1) - Series::from_coefficients(0, {1, 1});
  const Series y_local = Series::from_coefficients(0, {1, 1});
  return LocalCurve::from_expansions(1, x_local, y_local, order, std::move(sign), "lambert:x=-z+ln(z),y=z,t=1");
}

std::vector<PoleForm> bergman_expansion(int order) {
  std::vector<PoleForm> out;
  out.reserve(static_cast<std::size_t>(std::max(order, 0)));
  for (int m = 0; m < order; ++m) {
    PoleForm f(1);
    f.add({m + 2}, m + 1);
    out.push_back(std::move(f));
  }
  return out;
}

RecursionKernel::RecursionKernel(const LocalCurve& curve) : curve_(&curve) {
  const Series& omega = curve.omega_local();
  if (omega.is_zero() || omega.min_exponent() != 2) {
    throw std::domain_error("recursion_kernel: (y - y o sigma) dx must vanish to exactly second order");
  }
  inverse_omega_ = invert_unit(omega);
}

Series RecursionKernel::numerator(int p) const {
  if (p < 1) throw std::invalid_argument("recursion_kernel: pole order must be >= 1");
  if (p == 1) return Series::zero(curve_->sigma().trunc_order());
  return Series::monomial(1, p - 1) - power(curve_->sigma(), p - 1);
}

const Series& RecursionKernel::kappa(int p) {
  auto it = kappa_.find(p);
  if (it != kappa_.end()) return it->second;
  Series k = curve_->sign().kernel_prefactor * mul(numerator(p), inverse_omega_);
  return kappa_.emplace(p, std::move(k)).first->second;
}

int RecursionKernel::min_exponent() {
  // kappa_p starts at zeta^{p-3} or later.
  int m = Series::kExact;
  for (int p = 2; p <= 4; ++p) m = std::min(m, kappa(p).min_exponent());
  return m;
}

}  // namespace hurwitz
