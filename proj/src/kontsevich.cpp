#include "hurwitz/kontsevich.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace hurwitz {

Series y_of_xi(int order) {
  if (order < 6) throw std::invalid_argument("y_of_xi: order must be >= 6");
  const Series zeta = Series::monomial(1, 1);
  // xi = zeta sqrt(u), u = 2 (zeta - ln(1 + zeta)) / zeta^2 = 1 - 2/3 zeta + ...
  const Series u = Rational(2) * (zeta - log1p(zeta, order + 2)).shifted(-2);
  const Series sqrt_u = exp(Rational(1, 2) * log1p(u - Series::constant(1), order), order);
  const Series xi_of_zeta = mul(zeta, sqrt_u, order);
  return Series::constant(1) + reversion(xi_of_zeta, order);
}

const Rational& TimesSequence::t(int m) const {
  if (m < 2 || m > max_index()) throw std::out_of_range("TimesSequence: index " + std::to_string(m) + " out of range");
  return values_[static_cast<std::size_t>(m - 2)];
}

std::string TimesSequence::to_table() const {
  std::ostringstream os;
  for (int m = 2; m <= max_index(); ++m) os << std::left << std::setw(4) << m << ' ' << to_string(t(m)) << '\n';
  return os.str();
}

TimesSequence times_from_curve(int order) {
  if (order < 4) throw std::invalid_argument("times_from_curve: order must be >= 4");
  const Series y = y_of_xi(std::max(order, 6));
  std::vector<Rational> t{0, y.coeff(1) + 2};
  for (int m = 2; m < order; ++m) t.push_back(y.coeff(m));
  return TimesSequence(std::move(t));
}

TimesSequence times_by_recursion(int t_max) {
  if (t_max < 5) throw std::invalid_argument("times_by_recursion: t_max must be >= 5");
  std::vector<Rational> t(static_cast<std::size_t>(t_max + 1));
  t[2] = 0;
  t[3] = 3;
  t[4] = Rational(1, 3);
  for (int m = 4; m + 1 <= t_max; ++m) {
    Rational s;
    for (int l = 2; l <= m - 2; ++l) s += t[static_cast<std::size_t>(l + 2)] * t[static_cast<std::size_t>(m + 2 - l)];
    t[static_cast<std::size_t>(m + 1)] = t[static_cast<std::size_t>(m)] / m - s / 2;
  }
  return TimesSequence(std::vector<Rational>(t.begin() + 2, t.end()));
}

Series f_series(int order) {
  if (order < 1) throw std::invalid_argument("f_series: order must be >= 1");
  const TimesSequence times = times_from_curve(2 * order + 2);
  const Rational denom = 2 - times.t(3);
  std::vector<Rational> c{0};
  for (int m = 1; m < order; ++m) {
    const Rational w = Rational(factorial(static_cast<unsigned>(2 * m + 1))) / Rational(factorial(static_cast<unsigned>(m)));
    c.push_back(w * times.t(2 * m + 3) / denom);
  }
  return Series::from_coefficients(0, std::move(c), order);
}

Series g_series(int order) {
  if (order < 8) throw std::invalid_argument("g_series: order must be >= 8");
  const Series f = f_series(order);
  if (f.coeff(0) != 0) throw std::domain_error("g_series: f has a constant term");
  return -log1p(-f, order);
}

Rational elsv_genus1_one_part(int d, const Rational& psi, const Rational& lambda1) {
  const Rational weight = Rational(factorial(static_cast<unsigned>(d + 1))) * pow(Rational(d), static_cast<unsigned>(d)) /
                          Rational(factorial(static_cast<unsigned>(d)));
  return weight * (Rational(d) * psi - lambda1);
}

namespace {

/// b!/|Aut mu| prod mu_i^mu_i / mu_i!
Rational elsv_prefactor(int g, const Partition& mu) {
  Rational r = Rational(factorial(static_cast<unsigned>(simple_branch_count(g, mu)))) / Rational(mu.automorphisms());
  for (int p : mu.parts()) {
    r *= pow(Rational(p), static_cast<unsigned>(p)) / Rational(factorial(static_cast<unsigned>(p)));
  }
  return r;
}

/// Genus-0 Hodge-free integral of 1 / prod (1 - mu_i psi_i), up to the unknown per-length constant.
Rational genus0_shape(const Partition& mu) {
  switch (mu.length()) {
    case 1: return Rational(1, mu[0] * mu[0]);
    case 2: return Rational(1, mu.size());
    case 3: return 1;
    case 4: return mu.size();
    default: throw std::invalid_argument("genus0_shape: length must be <= 4");
  }
}

}  // namespace

bool ElsvReport::passed() const {
  if (psi != Rational(1, 24) || lambda1 != Rational(1, 24)) return false;
  for (const ElsvCheck& c : checks) {
    if (!c.equal) return false;
  }
  return !checks.empty();
}

ElsvReport elsv_consistency(const HurwitzOracle& oracle) {
  ElsvReport report;
  const Rational h1 = oracle.hurwitz(1, Partition({1}));
  const Rational h2 = oracle.hurwitz(1, Partition({2}));
  // h1 = 2 (psi - lambda1), h2 = 12 (2 psi - lambda1)
  report.psi = h2 / 12 - h1 / 2;
  report.lambda1 = report.psi - h1 / 2;

  const int n_max = oracle.n_max();
  for (int d = 1; d <= n_max; ++d) {
    const Partition mu({d});
    const Rational predicted = elsv_genus1_one_part(d, report.psi, report.lambda1);
    const Rational actual = oracle.hurwitz(1, mu);
    report.checks.push_back({"genus1-one-part", 1, mu, predicted, actual, predicted == actual});
  }

  // Genus 0: per length, one unknown fixed by mu = (1, ..., 1), then predicted elsewhere.
  for (int len = 1; len <= 4 && len <= n_max; ++len) {
    const Partition base(std::vector<int>(static_cast<std::size_t>(len), 1));
    const Rational unknown = oracle.hurwitz(0, base) / (elsv_prefactor(0, base) * genus0_shape(base));
    for (int n = len; n <= n_max; ++n) {
      for (const Partition& mu : partitions_of(n)) {
        if (mu.length() != len) continue;
        const Rational predicted = elsv_prefactor(0, mu) * genus0_shape(mu) * unknown;
        const Rational actual = oracle.hurwitz(0, mu);
        report.checks.push_back({"genus0-length" + std::to_string(len), 0, mu, predicted, actual, predicted == actual});
      }
    }
  }
  return report;
}

ElsvReport elsv_consistency() { return elsv_consistency(HurwitzOracle::for_range(1, 5)); }

nlohmann::ordered_json ElsvReport::to_json() const {
  nlohmann::ordered_json out;
  out["psi"] = to_string(psi);
  out["lambda1"] = to_string(lambda1);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const ElsvCheck& c : checks) {
    nlohmann::ordered_json row;
    row["check"] = c.name;
    row["g"] = c.g;
    row["mu"] = c.mu.parts();
    row["elsv"] = to_string(c.predicted);
    row["oracle"] = to_string(c.oracle);
    row["equal"] = c.equal;
    rows.push_back(std::move(row));
  }
  out["checks"] = std::move(rows);
  out["passed"] = passed();
  return out;
}

std::string ElsvReport::to_text() const {
  std::ostringstream os;
  os << "<psi>_{1,1} = " << to_string(psi) << ", <lambda_1>_{1,1} = " << to_string(lambda1) << '\n';
  for (const ElsvCheck& c : checks) {
    os << std::left << std::setw(16) << c.name << " g=" << c.g << ' ' << std::setw(10) << c.mu.to_string() << " elsv="
       << std::setw(10) << to_string(c.predicted) << " oracle=" << std::setw(10) << to_string(c.oracle) << ' '
       << (c.equal ? "yes" : "NO") << '\n';
  }
  return os.str();
}

}  // namespace hurwitz
