#pragma once

#include <map>
#include <utility>

#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Weighted count of possibly disconnected n-sheeted covers with one branch
/// point of profile mu and b simple branch points:
///   Cov*(mu, b) = sum_{lambda |- n} (dim lambda / n!)^2 f_lambda(C_mu) f_lambda(C_2)^b.
Rational cov_disconnected(const Partition& mu, int b);

/// Truncated generating function in (t, g_s, p_1, p_2, ...).
///
/// A monomial t^{|mu|} g_s^e p_mu is keyed by (mu, e). The simple-branch-point
/// count b = e + |mu| + length(mu) is additive under multiplication, and terms
/// with |mu| > n_max or b > b_max are dropped.
class PSeriesZ {
 public:
  using Key = std::pair<Partition, int>;

  PSeriesZ(int n_max, int b_max);

  /// Z = sum_{mu, b} t^|mu| g_s^{b - |mu| - l(mu)} p_mu Cov*(mu, b) / b!.
  static PSeriesZ disconnected_covers(int n_max, int b_max);

  int n_max() const { return n_max_; }
  int b_max() const { return b_max_; }
  const std::map<Key, Rational>& terms() const { return terms_; }

  /// Coefficient of t^{|mu|} g_s^e p_mu.
  Rational coeff(const Partition& mu, int gs_exponent) const;
  /// Adds c to a coefficient; silently drops monomials outside the bounds.
  void add_term(const Partition& mu, int gs_exponent, const Rational& c);

  PSeriesZ operator+(const PSeriesZ& other) const;
  PSeriesZ operator*(const PSeriesZ& other) const;
  PSeriesZ scaled(const Rational& s) const;

  /// t-adic logarithm; the t^0 part must be exactly 1.
  PSeriesZ log() const;
  /// t-adic exponential; the t^0 part must vanish.
  PSeriesZ exp() const;

  bool operator==(const PSeriesZ& other) const = default;

 private:
  static int simple_branch_points(const Partition& mu, int gs_exponent) {
    return gs_exponent + mu.size() + mu.length();
  }
  bool in_bounds(const Partition& mu, int gs_exponent) const;
  /// Splits off the t^0 part.
  std::pair<Rational, PSeriesZ> split_constant() const;

  int n_max_;
  int b_max_;
  std::map<Key, Rational> terms_;
};

/// Connected simple Hurwitz numbers from F = ln Z:
///   H_{g,mu} = b! [t^{|mu|} g_s^{2g-2} p_mu] F,  b = 2g - 2 + |mu| + length(mu).
class HurwitzOracle {
 public:
  HurwitzOracle(int n_max, int b_max);
  /// Bounds large enough for every H_{g,mu} with g <= g_max and |mu| <= n_max.
  static HurwitzOracle for_range(int g_max, int n_max);

  int n_max() const { return z_.n_max(); }
  int b_max() const { return z_.b_max(); }
  const PSeriesZ& z() const { return z_; }
  const PSeriesZ& f() const { return f_; }

  /// Throws std::invalid_argument when b < 0 and std::out_of_range beyond the bounds.
  Rational hurwitz(int g, const Partition& mu) const;

 private:
  PSeriesZ z_;
  PSeriesZ f_;
};

/// b = 2g - 2 + |mu| + length(mu).
int simple_branch_count(int g, const Partition& mu);

}  // namespace hurwitz
