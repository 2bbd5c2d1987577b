#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Thrown when a coefficient is requested at or beyond the truncation order.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Truncated formal Laurent series in one variable over exact rationals.
///
/// A series stores the coefficients for exponents in [min_exponent, trunc_order);
/// everything at trunc_order and above is unknown. Trailing zeros are implicit,
/// the coefficient at min_exponent is nonzero, and the identically-zero series
/// has min_exponent == trunc_order.
///
/// trunc_order == kExact marks a series that is known exactly (a Laurent
/// polynomial). Operations whose exact result would be infinite take an
/// explicit order cap and reject kExact.
class Series {
 public:
  static constexpr int kExact = 1 << 28;

  /// The exact zero.
  Series() = default;

  static Series zero(int trunc_order = kExact);
  static Series constant(const Rational& c, int trunc_order = kExact);
  static Series monomial(const Rational& c, int exponent, int trunc_order = kExact);
  /// coeffs[i] is the coefficient at exponent min_exponent + i.
  static Series from_coefficients(int min_exponent, std::vector<Rational> coeffs, int trunc_order = kExact);

  int min_exponent() const { return min_; }
  int trunc_order() const { return trunc_; }
  bool is_exact() const { return trunc_ >= kExact; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Stored coefficients, starting at min_exponent().
  std::span<const Rational> coefficients() const { return coeffs_; }
  /// One past the largest exponent with a stored (possibly nonzero) coefficient.
  int stored_end() const { return min_ + static_cast<int>(coeffs_.size()); }

  /// Coefficient at exponent n; throws TruncationError if n >= trunc_order.
  Rational coeff(int n) const;

  /// Drops everything at exponent >= order.
  Series truncated(int order) const;
  /// Multiplies by w^k.
  Series shifted(int k) const;

  Series operator-() const;
  Series& operator+=(const Series& other);
  Series& operator-=(const Series& other);
  Series& operator*=(const Rational& scalar);

  bool operator==(const Series& other) const = default;

  /// Human-readable form, e.g. "1 - 1/2*w^2 + O(w^5)".
  std::string to_string(std::string_view var = "w") const;

 private:
  Series(int min, std::vector<Rational> coeffs, int trunc);
  void normalize();

  int min_ = kExact;
  std::vector<Rational> coeffs_;
  int trunc_ = kExact;
};

Series add(const Series& a, const Series& b);
Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator*(const Rational& s, const Series& a);

/// Cauchy product; keeps only fully determined coefficients, further capped at `order`.
Series mul(const Series& a, const Series& b, int order = Series::kExact);
Series operator*(const Series& a, const Series& b);

/// Multiplicative inverse of a nonzero Laurent series.
Series invert_unit(const Series& a, int order = Series::kExact);

/// a^n for any integer n (negative powers go through invert_unit).
Series power(const Series& a, int n, int order = Series::kExact);

/// outer(inner(w)); inner must have no constant term.
Series compose(const Series& outer, const Series& inner, int order = Series::kExact);

/// Compositional inverse b with a(b(w)) = w; a must be w*(unit).
Series reversion(const Series& a, int order = Series::kExact);

/// log(1 + a) for a without constant term.
Series log1p(const Series& a, int order = Series::kExact);

/// exp(a) for a without constant term.
Series exp(const Series& a, int order = Series::kExact);

/// Coefficient at exponent -1.
Rational residue(const Series& a);
/// Coefficient at exponent n of a*b without forming the product; throws TruncationError if undetermined.
Rational product_coeff(const Series& a, const Series& b, int n);
Rational coeff(const Series& a, int n);
Series derivative(const Series& a);
/// Formal antiderivative with zero constant term; rejects a nonzero w^-1 term.
Series integral(const Series& a);

/// True when a and b agree at every exponent both of them determine.
bool agrees(const Series& a, const Series& b);

}  // namespace hurwitz
