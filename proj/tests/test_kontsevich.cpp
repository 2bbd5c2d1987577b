#include <doctest.h>

#include "hurwitz/kontsevich.hpp"

using namespace hurwitz;

TEST_CASE("y(xi)") {
  const Series y = y_of_xi(8);
  const std::vector<Rational> expected{1, 1, Rational(1, 3), Rational(1, 36), Rational(-1, 270), Rational(1, 6 * 720)};
  for (int m = 0; m < 6; ++m) CHECK(y.coeff(m) == expected[static_cast<std::size_t>(m)]);
  // xi^2 / 2 = zeta - ln(1 + zeta) at zeta = y - 1
  const Series zeta = y - Series::constant(1);
  CHECK(agrees(zeta - log1p(zeta, 8), Series::monomial(Rational(1, 2), 2)));
  CHECK_THROWS_AS(y_of_xi(5), std::invalid_argument);
}

TEST_CASE("times") {
  const TimesSequence c = times_from_curve(8);
  CHECK(c.t(2) == 0);
  CHECK(c.t(3) == 3);
  CHECK(c.t(4) == Rational(1, 3));
  CHECK(c.t(5) == Rational(1, 36));
  CHECK(c.t(6) == Rational(-1, 270));
  CHECK_THROWS_AS(c.t(1), std::out_of_range);

  const TimesSequence r = times_by_recursion(20);
  CHECK(r.max_index() == 20);
  CHECK(r.t(5) == Rational(1, 36));
  CHECK(r.t(6) == Rational(-1, 270));
  CHECK(times_from_curve(19) == r);
  CHECK(r.to_table().rfind("2    0/1\n3    3/1\n", 0) == 0);
  CHECK_THROWS_AS(times_by_recursion(4), std::invalid_argument);
}

TEST_CASE("g series") {
  const Series g = g_series(12);
  CHECK(g.coeff(0) == 0);
  CHECK(g.coeff(1) == Rational(-1, 6));
  CHECK(g.coeff(3) == Rational(1, 45));
  CHECK(g.coeff(5) == Rational(-8, 315));
  CHECK(g.coeff(7) == Rational(8, 105));
  for (int m = 0; m < 12; m += 2) CHECK(g.coeff(m) == 0);
  CHECK(f_series(4).coeff(1) == Rational(-1, 6));
}

TEST_CASE("ELSV consistency") {
  CHECK(elsv_genus1_one_part(3, Rational(1, 24), Rational(1, 24)) == 9);
  const ElsvReport r = elsv_consistency();
  CHECK(r.psi == Rational(1, 24));
  CHECK(r.lambda1 == Rational(1, 24));
  CHECK(r.passed());
  bool saw_h13 = false;
  for (const auto& c : r.checks) {
    if (c.g == 1 && c.mu == Partition({3})) {
      saw_h13 = true;
      CHECK(c.predicted == 9);
      CHECK(c.oracle == 9);
    }
  }
  CHECK(saw_h13);
  CHECK(r.to_json()["passed"] == true);
}
