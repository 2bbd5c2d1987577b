#include <doctest.h>

#include "hurwitz/spectral_curve.hpp"
#include "hurwitz/topological_recursion.hpp"

using namespace hurwitz;

namespace {

const Series zeta = Series::monomial(1, 1);

/// W + sigma^* W in one variable, grouped by the remaining indices, has no polar part.
bool odd_under_involution(TopologicalRecursion& tr, const PoleForm& form, int var) {
  std::map<PoleIndex, Series> sums;
  for (const auto& [a, c] : form.terms()) {
    PoleIndex rest = a;
    rest.erase(rest.begin() + var);
    const Series term = c * (Series::monomial(1, -a[static_cast<std::size_t>(var)]) +
                             tr.other_sheet_pole(a[static_cast<std::size_t>(var)]));
    auto [it, fresh] = sums.try_emplace(rest, term);
    if (!fresh) it->second += term;
  }
  for (const auto& [rest, s] : sums) {
    for (int e = s.min_exponent(); e < 0; ++e) {
      if (s.coeff(e) != 0) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("Lambert curve data") {
  const LocalCurve c = make_lambert_curve(12);
  CHECK(c.branch() == 1);
  CHECK(c.x_local().coeff(0) == -1);
  CHECK(c.x_local().coeff(1) == 0);
  CHECK(c.x_local().coeff(2) == Rational(-1, 2));
  CHECK(c.x_local().coeff(3) == Rational(1, 3));
  CHECK(c.x_local().coeff(4) == Rational(-1, 4));
  CHECK(c.y_local() == Series::from_coefficients(0, {1, 1}));
  CHECK(c.y_local().is_exact());
  CHECK_THROWS_AS(make_lambert_curve(7), std::invalid_argument);
}

TEST_CASE("deck involution") {
  const Series quad = Series::monomial(Rational(-1, 2), 2);
  CHECK(deck_involution(quad, 10) == (-zeta).truncated(10));

  const LocalCurve c = make_lambert_curve(16);
  const Series& s = c.sigma();
  CHECK(s.coeff(1) == -1);
  CHECK(s.coeff(2) == Rational(2, 3));
  CHECK(s.trunc_order() == 16);
  CHECK(agrees(compose(s, s, 16), zeta));
  CHECK(agrees(compose(c.x_local(), s, 16), c.x_local()));

  CHECK_THROWS_AS(deck_involution(Series::monomial(1, 3), 10), std::domain_error);
  CHECK_THROWS_AS(deck_involution(Series::from_coefficients(0, {0, 1, 1}), 10), std::domain_error);
  CHECK_THROWS_AS(deck_involution(Series::from_coefficients(0, {0, 0, 1}, 3), 10), TruncationError);
}

TEST_CASE("Bergman expansion") {
  const auto b = bergman_expansion(3);
  REQUIRE(b.size() == 3);
  CHECK(b[0].coeff({2}) == 1);
  CHECK(b[1].coeff({3}) == 2);
  CHECK(b[2].coeff({4}) == 3);
  CHECK(b[2].size() == 1);
}

TEST_CASE("recursion kernel") {
  const LocalCurve c = make_lambert_curve(14);
  CHECK(c.omega_local().min_exponent() == 2);
  CHECK(c.omega_local().coeff(2) == -2);
  RecursionKernel k(c);
  for (int p = 2; p <= 8; ++p) {
    CHECK(k.numerator(p).min_exponent() >= 1);
    // odd p: the zeta^{p-1} terms cancel in the numerator
    CHECK(k.kappa(p).min_exponent() == (p % 2 == 0 ? p - 3 : p - 2));
  }
  CHECK(k.numerator(1).is_zero());
  CHECK(k.min_exponent() == -1);
  // leading term: 1/2 * 2 zeta / (-2 zeta^2)
  CHECK(k.kappa(2).coeff(-1) == Rational(-1, 2));

  const Series pure = Series::constant(-1) + Series::monomial(Rational(-1, 2), 2);
  const LocalCurve flat = LocalCurve::from_expansions(0, pure, Series::constant(1), 10);
  CHECK_THROWS_AS(RecursionKernel{flat}, std::domain_error);
}

TEST_CASE("stable range") {
  TopologicalRecursion tr(make_lambert_curve(12));
  CHECK_THROWS_AS(tr.w(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(tr.w(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(tr.w(-1, 4), std::invalid_argument);
  CHECK_NOTHROW(tr.w(0, 3));
  CHECK(TopologicalRecursion::default_order(2, 6) == 26);
}

TEST_CASE("small correlators") {
  TopologicalRecursion tr(make_lambert_curve(16));
  const PoleForm& w03 = tr.w(0, 3);
  CHECK(w03.size() == 1);
  CHECK(w03.coeff({2, 2, 2}) == 1);

  const PoleForm& w11 = tr.w(1, 1);
  CHECK(w11.max_pole_order() == 4);
  CHECK(w11.coeff({1}) == 0);
  CHECK(w11.coeff({2}) == Rational(-1, 24));
  CHECK(w11.coeff({3}) == Rational(1, 12));
  CHECK(w11.coeff({4}) == Rational(1, 8));

  const PoleForm& w04 = tr.w(0, 4);
  CHECK(w04.coeff({2, 2, 2, 3}) == 2);
  CHECK(w04.coeff({4, 2, 2, 2}) == 3);
  CHECK(w04.max_pole_order() == 4);
}

TEST_CASE("printed sign flips odd arity") {
  TopologicalRecursion standard(make_lambert_curve(18));
  TopologicalRecursion printed(make_lambert_curve(18, SignConvention::printed()));
  for (auto [g, k] : {std::pair{0, 3}, {0, 4}, {1, 1}, {1, 2}, {1, 3}, {2, 1}}) {
    PoleForm expected(k);
    for (const auto& [a, c] : standard.w(g, k).terms()) expected.add(a, k % 2 == 0 ? c : -c);
    CHECK(printed.w(g, k) == expected);
  }
  CHECK(standard.curve().fingerprint() != printed.curve().fingerprint());
}

TEST_CASE("single poles under the involution") {
  TopologicalRecursion tr(make_lambert_curve(14));
  // dz/(z-1)^2 is odd up to a regular term; dz/(z-1)^3 is not
  const Series even = Series::monomial(1, -2) + tr.other_sheet_pole(2);
  CHECK(even.min_exponent() >= 0);
  const Series odd = Series::monomial(1, -3) + tr.other_sheet_pole(3);
  CHECK(odd.min_exponent() < 0);
}

TEST_CASE("structural invariants") {
  const int order = TopologicalRecursion::default_order(2, 4);
  TopologicalRecursion tr(make_lambert_curve(order));
  for (int g = 0; g <= 2; ++g) {
    for (int k = 1; k <= 5; ++k) {
      if (!TopologicalRecursion::is_stable(g, k) || (g == 2 && k > 4)) continue;
      CAPTURE(g);
      CAPTURE(k);
      const PoleForm& w = tr.w(g, k);
      CHECK(w.is_symmetric());
      CHECK(w.is_residue_free());
      CHECK(odd_under_involution(tr, w, 0));
      CHECK(odd_under_involution(tr, w, k - 1));
    }
  }
}

TEST_CASE("determinism and order robustness") {
  const int order = TopologicalRecursion::default_order(2, 3);
  TopologicalRecursion a(make_lambert_curve(order));
  TopologicalRecursion b(make_lambert_curve(order));
  TopologicalRecursion wider(make_lambert_curve(order + 4));
  CHECK(a.w(2, 3) == b.w(2, 3));
  for (const auto& [gk, form] : a.memo()) {
    CAPTURE(gk.first);
    CAPTURE(gk.second);
    CHECK(wider.w(gk.first, gk.second) == form);
  }
  // too small an order is reported, not silently truncated
  TopologicalRecursion tight(make_lambert_curve(8));
  CHECK_THROWS_AS(tight.w(2, 3), InsufficientOrderError);
}

TEST_CASE("preload") {
  TopologicalRecursion tr(make_lambert_curve(12));
  PoleForm fake(3);
  fake.add({2, 2, 2}, 7);
  tr.preload(0, 3, fake);
  CHECK(tr.has(0, 3));
  CHECK(tr.w(0, 3).coeff({2, 2, 2}) == 7);
  CHECK_THROWS_AS(tr.preload(0, 2, PoleForm(2)), std::invalid_argument);
  CHECK_THROWS_AS(tr.preload(1, 2, PoleForm(3)), std::invalid_argument);
}

TEST_CASE("F_g") {
  TopologicalRecursion tr(make_lambert_curve(TopologicalRecursion::default_order(3, 1)));
  CHECK_THROWS_AS(tr.f_g(1), std::invalid_argument);
  const Rational f2 = tr.f_g(2);
  CHECK(f2 == tr.f_g(2, 7));
  CHECK(f2 == tr.f_g(2, Rational(-3, 5)));
  CHECK(f2 == 0);  // snapshot
  CHECK(tr.f_g(3) == tr.f_g(3, 7));
}

TEST_CASE("PoleForm JSON") {
  TopologicalRecursion tr(make_lambert_curve(12));
  const auto j = tr.w(1, 1).to_json(1);
  CHECK(j.dump() == R"({"g":1,"k":1,"terms":[{"a":[2],"c":"-1/24"},{"a":[3],"c":"1/12"},{"a":[4],"c":"1/8"}]})");
  int g = -1;
  CHECK(PoleForm::from_json(j, &g) == tr.w(1, 1));
  CHECK(g == 1);
  PoleForm bad(2);
  CHECK_THROWS_AS(bad.add({1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(bad.add({0, 2}, 1), std::invalid_argument);
}
