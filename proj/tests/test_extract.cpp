#include <doctest.h>

#include "hurwitz/hurwitz_extract.hpp"

using namespace hurwitz;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
}  // namespace

TEST_CASE("lambert series") {
  const Series l = lambert_series(13);
  CHECK(l.coeff(0) == 0);
  CHECK(l.coeff(1) == 1);
  CHECK(l.coeff(2) == 1);
  CHECK(l.coeff(3) == Rational(3, 2));
  for (int m = 1; m <= 12; ++m) {
    CHECK(l.coeff(m) == pow(Rational(m), static_cast<unsigned>(m - 1)) / Rational(factorial(static_cast<unsigned>(m))));
  }
  // z e^{-z} = v after substitution
  const Series back = mul(l, exp(-l, 13), 13);
  CHECK(agrees(back, Series::monomial(1, 1)));
  CHECK_THROWS_AS(lambert_series(0), std::invalid_argument);
}

TEST_CASE("pole factors") {
  const Series f1 = pole_factor_series(1, 6);
  CHECK(f1.coeff(0) == 0);
  CHECK(f1.coeff(1) == -1);
  for (int a = 1; a <= 8; ++a) CHECK(pole_factor_series(a, 5).coeff(0) == 0);

  // brute force: expand -z/(1-z)^2 = -sum n z^n and substitute z = v + v^2 + 3/2 v^3 by hand
  const Series z = Series::from_coefficients(1, {1, 1, Rational(3, 2)}, 4);
  Series brute = Series::zero(4);
  for (int n = 1; n <= 3; ++n) brute += Rational(-n) * power(z, n, 4);
  CHECK(agrees(f1, brute));

  const Series f2 = pole_factor_series(2, 4);
  CHECK(f2.coeff(1) == 1);
  CHECK(f2.coeff(2) == 4);
  CHECK(f2.trunc_order() == 4);
}

TEST_CASE("HSeries invariants") {
  TopologicalRecursion tr(make_lambert_curve(required_order(2, 6)));
  for (auto [g, k] : {std::pair{0, 3}, {0, 4}, {1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}}) {
    CAPTURE(g);
    CAPTURE(k);
    const HSeries hs = h_series(tr, g, k, 6);
    CHECK(hs.is_symmetric());
    CHECK(hs.vanishes_on_zero_exponents());
    std::vector<int> with_zero(static_cast<std::size_t>(k), 1);
    with_zero.back() = 0;
    CHECK(hs.coeff(with_zero) == 0);
  }
  const HSeries h11 = h_series(tr, 1, 1, 6);
  CHECK(h11.coeff({1}) == 0);
  CHECK_THROWS_AS(h11.coeff({7}), std::out_of_range);
}

TEST_CASE("extraction against the oracle") {
  TopologicalRecursion tr(make_lambert_curve(required_order(2, 5)));
  const HurwitzOracle oracle = HurwitzOracle::for_range(2, 5);
  CHECK(extract_hurwitz(h_series(tr, 1, 1, 5), 1, P({1})) == 0);
  CHECK(extract_hurwitz(h_series(tr, 1, 1, 5), 1, P({2})) == Rational(1, 2));
  const HSeries h03 = h_series(tr, 0, 3, 5);
  CHECK(extract_hurwitz(h03, 0, P({1, 1, 1})) == oracle.hurwitz(0, P({1, 1, 1})));
  CHECK(extract_hurwitz(h03, 0, P({2, 1, 1})) == oracle.hurwitz(0, P({2, 1, 1})));
  CHECK_THROWS_AS(extract_hurwitz(h03, 0, P({2, 1})), std::invalid_argument);
  CHECK_THROWS_AS(extract_hurwitz(h03, 0, P({4, 1, 1})), std::out_of_range);
}

TEST_CASE("normalization with repeated parts") {
  TopologicalRecursion tr(make_lambert_curve(required_order(2, 6)));
  const HurwitzOracle oracle = HurwitzOracle::for_range(2, 6);
  const HSeries h12 = h_series(tr, 1, 2, 6);
  CHECK(extract_hurwitz(h12, 1, P({1, 1})) == oracle.hurwitz(1, P({1, 1})));
  CHECK(extract_hurwitz(h12, 1, P({2, 2})) == oracle.hurwitz(1, P({2, 2})));
  CHECK(extract_hurwitz_at(h12, 1, {1, 3}) == extract_hurwitz_at(h12, 1, {3, 1}));
  const HSeries h13 = h_series(tr, 1, 3, 6);
  const Rational a = extract_hurwitz_at(h13, 1, {2, 1, 1});
  CHECK(a == extract_hurwitz_at(h13, 1, {1, 2, 1}));
  CHECK(a == extract_hurwitz_at(h13, 1, {1, 1, 2}));
  CHECK(a == oracle.hurwitz(1, P({2, 1, 1})));
  const HSeries h22 = h_series(tr, 2, 2, 6);
  CHECK(extract_hurwitz(h22, 2, P({3, 3})) == oracle.hurwitz(2, P({3, 3})));
}

TEST_CASE("verify_bm") {
  const BmReport r = verify_bm(1, 3);
  CHECK(r.passed());
  CHECK(r.rows.size() == 7);
  CHECK(r.rows.front().mu == P({1, 1, 1}));

  const BmReport empty = verify_bm(0, 2);
  CHECK(empty.passed());
  CHECK(empty.rows.empty());

  const BmReport bad = verify_bm(1, 3, SignConvention::printed());
  REQUIRE_FALSE(bad.passed());
  CHECK(*bad.first_mismatch == 0);
  CHECK(bad.rows[0].g == 0);
  CHECK(bad.rows[0].mu == P({1, 1, 1}));
  CHECK(bad.rows[0].recursion == -4);

  const auto j = r.to_json();
  CHECK(j[0].dump() == R"({"g":0,"mu":[1,1,1],"recursion":"4/1","oracle":"4/1","equal":true})");
  CHECK(r.to_text().find("7 cases, all equal") != std::string::npos);
  CHECK(bad.to_text().find("first mismatch: g=0 mu=(1,1,1)") != std::string::npos);
}
