#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hurwitz/burnside.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

/// y = 1 + zeta(xi) where xi^2 / 2 = zeta - ln(1 + zeta), the branch of xi ~ zeta; below xi^order.
Series y_of_xi(int order);

/// t_2, t_3, ..., t_max.
class TimesSequence {
 public:
  TimesSequence() = default;
  explicit TimesSequence(std::vector<Rational> from_t2) : values_(std::move(from_t2)) {}

  int max_index() const { return static_cast<int>(values_.size()) + 1; }
  /// t_m for 2 <= m <= max_index().
  const Rational& t(int m) const;
  const std::vector<Rational>& values() const { return values_; }
  bool operator==(const TimesSequence&) const = default;

  /// Two-column table "m t_m" with t_m as "num/den".
  std::string to_table() const;

 private:
  std::vector<Rational> values_;
};

/// Reads the times off y = 1 - 2 xi + sum_{m >= 1} t_{m+2} xi^m; t_2 = 0. Returns t_2 .. t_{order+1}.
TimesSequence times_from_curve(int order);

/// t_2 = 0, t_3 = 3, t_4 = 1/3 and t_{m+1} = t_m / m - 1/2 sum_{l=2}^{m-2} t_{l+2} t_{m+2-l}.
TimesSequence times_by_recursion(int t_max);

/// f(z) = sum_{m >= 1} (2m+1)!/m! t_{2m+3} / (2 - t_3) z^m and g(z) = -ln(1 - f(z)), below z^order.
Series f_series(int order);
Series g_series(int order);

struct ElsvCheck {
  std::string name;
  int g;
  Partition mu;
  Rational predicted;
  Rational oracle;
  bool equal;
};

struct ElsvReport {
  /// Solved psi and lambda_1 integrals on the one-pointed genus-1 moduli space.
  Rational psi;
  Rational lambda1;
  std::vector<ElsvCheck> checks;

  bool passed() const;
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

/// Genus-1, one-part ELSV:  H_{1,(d)} = (d+1)! d^d / d! (d <psi> - <lambda_1>).
Rational elsv_genus1_one_part(int d, const Rational& psi, const Rational& lambda1);

/// Solves the unknown intersection numbers from the smallest oracle values and predicts the rest.
ElsvReport elsv_consistency(const HurwitzOracle& oracle);
ElsvReport elsv_consistency();

}  // namespace hurwitz
