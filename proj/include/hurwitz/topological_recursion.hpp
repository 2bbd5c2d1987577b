#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hurwitz/pole_form.hpp"
#include "hurwitz/series.hpp"
#include "hurwitz/spectral_curve.hpp"

namespace hurwitz {

/// The curve's truncation order cannot determine a requested W_k^(g).
class InsufficientOrderError : public TruncationError {
 public:
  using TruncationError::TruncationError;
};

/// Topological recursion on a genus-0 curve with one simple branch point.
///
/// Every W_k^(g) with 2g - 2 + k > 0 is a PoleForm at the branch point. Inside the
/// residue, a pole dz/(z - z*)^a placed at z* + zeta contributes zeta^{-a}, and placed
/// on the other sheet z* + sigma(zeta) contributes sigma' sigma^{-a}. The recursion then
/// reduces to the table of scalar residues
///   R(a, b)_p = Res_zeta kappa_p(zeta) zeta^{-a} sigma'(zeta) sigma(zeta)^{-b},
/// where negative a or b encode the Bergman kernel's regular expansion in the other
/// variable. Results are exact; the truncation order only decides whether a residue
/// is computable, and an undeterminable one raises InsufficientOrderError.
///
/// Not thread-safe while filling; concurrent reads of finished entries are fine.
class TopologicalRecursion {
 public:
  explicit TopologicalRecursion(LocalCurve curve);
  TopologicalRecursion(const TopologicalRecursion&) = delete;
  TopologicalRecursion& operator=(const TopologicalRecursion&) = delete;

  const LocalCurve& curve() const { return curve_; }
  RecursionKernel& kernel() { return kernel_; }

  /// W_k^(g). Throws std::invalid_argument outside the stable range 2g - 2 + k > 0.
  const PoleForm& w(int g, int k);
  /// F_g = 1/(2 - 2g) Res W_1^(g) Phi with dPhi = y dx and Phi(z*) = phi_at_branch. Requires g >= 2.
  Rational f_g(int g, const Rational& phi_at_branch = 0);

  /// sigma'(zeta) sigma(zeta)^{-b}: the pole dz/(z - z*)^b pulled back to the other sheet.
  const Series& other_sheet_pole(int b);
  /// R(a, b)_p for p = 0 .. a + b + 2 (entries below 2 are zero).
  const std::vector<Rational>& elementary_residue(int a, int b);
  /// B(z* + zeta, z* + sigma(zeta)) / dzeta^2 = sigma' / (zeta - sigma)^2.
  const Series& bergman_on_involution();

  const std::map<std::pair<int, int>, PoleForm>& memo() const { return memo_; }
  bool has(int g, int k) const { return memo_.count({g, k}) != 0; }
  /// Seeds the memo table (e.g. from a cache file). An existing entry is left untouched.
  void preload(int g, int k, PoleForm form);

  /// Default truncation order for W_k^(g): 2(3g - 3 + k) + 8.
  static int default_order(int g, int k) { return 2 * (3 * g - 3 + k) + 8; }
  static bool is_stable(int g, int k) { return g >= 0 && k >= 1 && 2 * g - 2 + k > 0; }

 private:
  PoleForm compute(int g, int k);

  LocalCurve curve_;
  RecursionKernel kernel_;
  std::map<std::pair<int, int>, PoleForm> memo_;
  std::map<int, Series> other_sheet_;
  std::map<std::pair<int, int>, std::vector<Rational>> residues_;
  Series bergman_involution_;
  bool have_bergman_involution_ = false;
};

}  // namespace hurwitz
