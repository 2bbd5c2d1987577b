#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hurwitz/burnside.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/series.hpp"
#include "hurwitz/topological_recursion.hpp"

namespace hurwitz {

/// L(v) = sum m^{m-1} v^m / m!, the inverse of v = z e^{-z}, below v^order.
Series lambert_series(int order);

/// (-1)^a z / (1 - z)^{a+1} composed with z = L(v), below v^order: one variable's share of
/// W / dx at x = ln v for the pole dz / (z - 1)^a.
Series pole_factor_series(int a, int order);

/// Memoized pole_factor_series coefficients for v^1 .. v^n_max.
class PoleFactorTable {
 public:
  explicit PoleFactorTable(int n_max) : n_max_(n_max) {}
  int n_max() const { return n_max_; }
  /// coefficients of v^0 .. v^n_max
  const std::vector<Rational>& factor(int a);

 private:
  int n_max_;
  std::map<int, std::vector<Rational>> table_;
};

/// Multivariate expansion of H^(g)(v_1, ..., v_k), kept for exponent tuples of total degree <= n_max.
class HSeries {
 public:
  using Exponents = std::vector<int>;

  HSeries(int arity, int n_max) : arity_(arity), n_max_(n_max) {}
  int arity() const { return arity_; }
  int n_max() const { return n_max_; }
  const std::map<Exponents, Rational>& coefficients() const { return coeffs_; }

  /// 0 for any tuple containing a zero exponent; std::out_of_range beyond n_max.
  Rational coeff(const Exponents& e) const;
  void add(const Exponents& e, const Rational& c);

  bool is_symmetric() const;
  /// No stored tuple has an exponent below 1.
  bool vanishes_on_zero_exponents() const;

 private:
  int arity_;
  int n_max_;
  std::map<Exponents, Rational> coeffs_;
};

/// Substitutes z_i = L(v_i) into W_k^(g) / prod dx(z_i); exponents >= 1 with total <= n_max.
HSeries h_series(TopologicalRecursion& tr, int g, int k, int n_max);
HSeries h_series(TopologicalRecursion& tr, int g, int k, PoleFactorTable& factors);
/// Convenience overload on a fresh Lambert engine at the default order.
HSeries h_series(int g, int k, int n_max);

/// H_{g,mu} = coeff(mu) (2g-2+|mu|+l)! / (prod mu_i prod_r m_r!).
Rational extract_hurwitz(const HSeries& hs, int g, const Partition& mu);
/// Same, read off at an arbitrary ordering of the parts.
Rational extract_hurwitz_at(const HSeries& hs, int g, const std::vector<int>& exponents);

struct BmRow {
  int g;
  Partition mu;
  Rational recursion;
  Rational oracle;
  bool equal;
};

struct BmReport {
  int g_max = 0;
  int n_max = 0;
  std::vector<BmRow> rows;
  /// Index into rows of the first disagreement.
  std::optional<std::size_t> first_mismatch;

  bool passed() const { return !first_mismatch.has_value(); }
  /// [{"g":..., "mu":[...], "recursion":"num/den", "oracle":"num/den", "equal":true}, ...]
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

/// The stable (g, mu) pairs 2g - 2 + l(mu) > 0 with g <= g_max and |mu| <= n_max, in
/// order of g, then |mu|, then partitions_of order.
std::vector<std::pair<int, Partition>> stable_range(int g_max, int n_max);

/// Compares recursion and oracle on stable_range(g_max, n_max).
BmReport verify_bm(TopologicalRecursion& tr, const HurwitzOracle& oracle, int g_max, int n_max);
/// Builds a Lambert engine (default order for the range) and an oracle.
BmReport verify_bm(int g_max, int n_max, SignConvention sign = SignConvention::standard());

/// Truncation order sufficient for every W_k^(g) that verify_bm(g_max, n_max) touches.
int required_order(int g_max, int n_max);

}  // namespace hurwitz
