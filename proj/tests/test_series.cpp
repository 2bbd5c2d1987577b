#include <doctest.h>

#include <random>

#include "hurwitz/series.hpp"

using namespace hurwitz;

namespace {

Series w() { return Series::monomial(1, 1); }

Series poly(int min, std::vector<Rational> c, int trunc = Series::kExact) {
  return Series::from_coefficients(min, std::move(c), trunc);
}

Series random_series(std::mt19937& rng, int min, int len, int trunc) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  std::vector<Rational> c;
  for (int i = 0; i < len; ++i) c.emplace_back(num(rng), den(rng));
  if (c.front() == 0) c.front() = 1;
  for (auto& x : c) x.canonicalize();
  return poly(min, std::move(c), trunc);
}

}  // namespace

TEST_CASE("rational formatting") {
  CHECK(to_string(Rational(6) / 4) == "3/2");
  CHECK(to_string(Rational(3)) == "3/1");
  CHECK(to_string(Rational(-1, 270)) == "-1/270");
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(factorial(5) == 120);
}

TEST_CASE("add") {
  CHECK(poly(0, {1, 1}) + poly(0, {-1, 1}) == Rational(2) * w());
  const Series a = poly(-2, {1, 0, 3}, 5);
  CHECK(a + Series::zero() == a);
  const Series l = Series::monomial(1, -1) + w();
  CHECK(l.min_exponent() == -1);
  CHECK(l.coeff(-1) == 1);
  CHECK(l.coeff(0) == 0);
  CHECK(l.coeff(1) == 1);
  CHECK((poly(0, {1}, 3) + poly(0, {1}, 5)).trunc_order() == 3);
}

TEST_CASE("mul") {
  CHECK(poly(0, {1, 1}) * poly(0, {1, -1}) == poly(0, {1, 0, -1}));
  CHECK(Series::monomial(1, -1) * w() == Series::constant(1));
  const Series geometric = poly(0, {1, 1, 1, 1, 1, 1}, 6);
  const Series prod = geometric * poly(0, {1, -1});
  CHECK(prod.trunc_order() == 6);
  CHECK(agrees(prod, Series::constant(1)));
  // truncation bookkeeping: O(w^4) times w^-1 knows only up to w^3
  CHECK(mul(poly(0, {1, 2}, 4), poly(-1, {1})).trunc_order() == 3);
}

TEST_CASE("invert_unit") {
  const Series inv = invert_unit(poly(0, {1, -1}), 8);
  for (int n = 0; n < 8; ++n) CHECK(inv.coeff(n) == 1);
  CHECK_THROWS_AS(inv.coeff(8), TruncationError);
  CHECK(invert_unit(Series::constant(2)) == Series::constant(Rational(1, 2)));
  const Series inv2 = invert_unit(poly(1, {1, 1}), 6);
  CHECK(inv2.min_exponent() == -1);
  for (int n = -1; n < 6; ++n) CHECK(inv2.coeff(n) == (n % 2 == 0 ? -1 : 1));
  CHECK_THROWS(invert_unit(Series::zero(5), 5));
}

TEST_CASE("compose") {
  const Series geom = invert_unit(poly(0, {1, -1}), 10);
  CHECK(compose(geom, w(), 10) == geom);
  const Series e = exp(w(), 10);
  const Series l = log1p(w(), 10);
  CHECK(agrees(compose(e, l, 10), poly(0, {1, 1})));
  CHECK_THROWS(compose(e, poly(0, {1, 1}), 10));
  // negative outer powers go through invert_unit of the inner series
  const Series c = compose(Series::monomial(1, -1), poly(1, {1, 1}), 6);
  CHECK(agrees(c, invert_unit(poly(1, {1, 1}), 6)));
}

TEST_CASE("reversion") {
  const Series r = reversion(poly(1, {1, -1}), 6);
  CHECK(r.coeff(1) == 1);
  CHECK(r.coeff(2) == 1);
  CHECK(r.coeff(3) == 2);
  CHECK(r.coeff(4) == 5);
  CHECK(r.coeff(5) == 14);
  CHECK(agrees(compose(poly(1, {1, -1}), r, 6), w()));
  CHECK(reversion(w(), 8).truncated(8) == w().truncated(8));
  const Series lam = reversion(mul(w(), exp(-w(), 10), 10), 10);
  CHECK(lam.coeff(3) == Rational(3, 2));
  CHECK(lam.coeff(4) == Rational(8, 3));
  CHECK_THROWS(reversion(poly(0, {1, 1}), 5));
  CHECK_THROWS(reversion(poly(2, {1}), 5));
}

TEST_CASE("log1p and exp") {
  CHECK(log1p(Series::zero(), 5).is_zero());
  const Series l = log1p(w(), 6);
  CHECK(l.coeff(1) == 1);
  CHECK(l.coeff(2) == Rational(-1, 2));
  CHECK(l.coeff(3) == Rational(1, 3));
  CHECK(l.coeff(5) == Rational(1, 5));
  CHECK(exp(Series::zero(), 5) == Series::constant(1, 5));
  const Series e = exp(w(), 6);
  CHECK(e.coeff(2) == Rational(1, 2));
  CHECK(e.coeff(5) == Rational(1, 120));
  CHECK_THROWS(log1p(poly(0, {1, 1}), 5));
  CHECK_THROWS(exp(poly(0, {1, 1}), 5));
}

TEST_CASE("residue, coeff, derivative") {
  CHECK(residue(Series::monomial(1, -1)) == 1);
  CHECK(residue(poly(-2, {1, 3, 5})) == 3);
  CHECK(residue(poly(0, {4, 1}, 9)) == 0);
  CHECK_THROWS_AS(residue(poly(0, {1}, -2)), TruncationError);
  CHECK(coeff(poly(0, {1, 2}), 1) == 2);
  CHECK(derivative(Series::monomial(1, 2)) == Rational(2) * w());
  CHECK(derivative(Series::monomial(1, -1)) == Series::monomial(-1, -2));
  CHECK_THROWS(integral(Series::monomial(1, -1)));
}

TEST_CASE("properties on random series") {
  std::mt19937 rng(20240611);
  const int n = 12;
  for (int trial = 0; trial < 20; ++trial) {
    const Series a = random_series(rng, -1, 6, n);
    const Series b = random_series(rng, 0, 7, n);
    const Series c = random_series(rng, 1, 5, n + 2);
    CHECK(mul(a, b) == mul(b, a));
    CHECK(agrees(mul(mul(a, b), c), mul(a, mul(b, c))));
    CHECK(mul(mul(a, b), c).trunc_order() == mul(a, mul(b, c)).trunc_order());
    CHECK(mul(a, b + c) == mul(a, b) + mul(a, c));
    CHECK(residue(derivative(a)) == 0);

    const Series u = random_series(rng, 1, 6, n);
    const Series r = reversion(u, n);
    CHECK(agrees(compose(u, r, n), w()));
    CHECK(agrees(reversion(r, n), u));
    CHECK(agrees(exp(log1p(u, n), n), Series::constant(1) + u));
    CHECK(agrees(log1p(exp(u, n) - Series::constant(1), n), u));
    CHECK(mul(u, c, n) == mul(u, c, n));  // determinism
  }
}
