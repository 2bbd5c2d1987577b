#pragma once

#include <map>
#include <vector>

#include <json.hpp>

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Multi-index (a_1, ..., a_k) of pole orders.
using PoleIndex = std::vector<int>;

/// A k-form  sum_a c_a prod_i dz_i / (z_i - z*)^{a_i}  with poles only at the branch point.
/// Terms are kept sorted lexicographically by multi-index and zero coefficients are never stored.
class PoleForm {
 public:
  explicit PoleForm(int arity = 0) : arity_(arity) {}

  int arity() const { return arity_; }
  const std::map<PoleIndex, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const PoleIndex& a) const;
  /// Adds c to the coefficient of a; throws std::invalid_argument on a wrong arity or a pole order < 1.
  void add(const PoleIndex& a, const Rational& c);

  int max_pole_order() const;

  /// The form with variables relabelled: new index position i takes old position perm[i].
  PoleForm permuted(const std::vector<int>& perm) const;
  /// Every permutation of every multi-index carries the same coefficient.
  bool is_symmetric() const;
  /// The per-variable residue at the branch point vanishes: no term has a pole of order 1.
  bool is_residue_free() const;

  bool operator==(const PoleForm&) const = default;

  /// {"g":..., "k":..., "terms":[{"a":[...], "c":"num/den"}, ...]}
  nlohmann::ordered_json to_json(int g) const;
  /// Inverse of to_json; returns the genus through `g` when given.
  static PoleForm from_json(const nlohmann::ordered_json& j, int* g = nullptr);

 private:
  int arity_;
  std::map<PoleIndex, Rational> terms_;
};

}  // namespace hurwitz
